#include "doctest.h"

#include <set>

#include "bisetcalc/cache.hpp"
#include "bisetcalc/catalog.hpp"
#include "bisetcalc/character.hpp"
#include "bisetcalc/oracles.hpp"

using namespace bisetcalc;

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(catalog_group("C1"))->num_classes() == 1);
  // abelian groups split into singletons
  auto c12 = conjugacy_classes(catalog_group("C12"));
  CHECK(c12->num_classes() == 12);
  for (int s : c12->size) CHECK(s == 1);
  // S3: sizes 1, 3, 2 in canonical order
  auto s3 = conjugacy_classes(catalog_group("S3"));
  REQUIRE(s3->num_classes() == 3);
  CHECK(s3->size[0] == 1);
  CHECK(s3->size[1] == 3);
  CHECK(s3->size[2] == 2);
  // S4: 5 classes
  CHECK(conjugacy_classes(catalog_group("S4"))->num_classes() == 5);
}

TEST_CASE("character table of C2") {
  auto table = character_table(catalog_group("C2"));
  REQUIRE(table->irreducibles.size() == 2);
  const auto& triv = table->irreducibles[0];
  const auto& sgn = table->irreducibles[1];
  CHECK(triv.values[0] == Cyclotomic(Rational(1)));
  CHECK(triv.values[1] == Cyclotomic(Rational(1)));
  CHECK(sgn.values[0] == Cyclotomic(Rational(1)));
  CHECK(sgn.values[1] == Cyclotomic(Rational(-1)));
}

TEST_CASE("character table degrees") {
  auto degrees = [](const GroupPtr& g) {
    std::multiset<long> d;
    for (const auto& chi : character_table(g)->irreducibles)
      d.insert(chi.degree().get_num().get_si());
    return d;
  };
  CHECK(degrees(catalog_group("S3")) == std::multiset<long>{1, 1, 2});
  CHECK(degrees(catalog_group("S4")) == std::multiset<long>{1, 1, 2, 3, 3});
  CHECK(degrees(catalog_group("Q8")) == std::multiset<long>{1, 1, 1, 1, 2});
  CHECK(degrees(catalog_group("A5")) == std::multiset<long>{1, 3, 3, 4, 5});
  CHECK(degrees(catalog_group("A4")) == std::multiset<long>{1, 1, 1, 3});
  CHECK(degrees(catalog_group("S5")) == std::multiset<long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("table sanity for assorted groups") {
  for (const char* name : {"C6", "S3", "D8", "Q8", "A4", "C12", "E2^2", "E3^2"}) {
    auto table = character_table(catalog_group(name));
    Rational sum(0);
    for (const auto& chi : table->irreducibles) sum += chi.degree() * chi.degree();
    CHECK(sum == Rational(table->group->order()));
    // trivial character is first among the linear ones
    CHECK(table->irreducibles[0].is_trivial());
  }
}

TEST_CASE("tables agree with the brute-force oracle") {
  for (const char* name : {"C6", "S3", "D8", "Q8", "A4", "C12", "S4", "E3^2"}) {
    auto g = catalog_group(name);
    auto table = character_table(g);
    auto brute = oracle::brute_force_character_table(g);
    REQUIRE(table->irreducibles.size() == brute.size());
    for (size_t i = 0; i < brute.size(); ++i) {
      REQUIRE(table->irreducibles[i].values.size() == brute[i].values.size());
      for (size_t c = 0; c < brute[i].values.size(); ++c)
        CHECK(table->irreducibles[i].values[c] == brute[i].values[c]);
    }
  }
}

TEST_CASE("inner products") {
  auto table = character_table(catalog_group("S3"));
  for (size_t i = 0; i < table->irreducibles.size(); ++i)
    for (size_t j = 0; j < table->irreducibles.size(); ++j) {
      Cyclotomic ip = inner_product(table->irreducibles[i], table->irreducibles[j]);
      CHECK(ip == Cyclotomic(Rational(i == j ? 1 : 0)));
    }
  // regular character decomposes with multiplicities chi(1)
  auto g = catalog_group("S3");
  Character reg;
  reg.group = g;
  reg.classes = table->classes;
  for (int c = 0; c < table->classes->num_classes(); ++c)
    reg.values.push_back(Cyclotomic(
        Rational(table->classes->rep[c] == g->identity() ? g->order() : 0)));
  for (const auto& chi : table->irreducibles)
    CHECK(inner_product(reg, chi) == Cyclotomic(chi.degree()));
}

TEST_CASE("induction") {
  auto s3 = catalog_group("S3");
  auto subs = subgroups_cached(s3);
  // Ind_H^H chi = chi
  {
    auto whole = realize_subgroup(subs.back());
    auto table = character_table(whole.group);
    for (const auto& chi : table->irreducibles) {
      Character ind = induce_character(chi, whole);
      for (int c = 0; c < ind.classes->num_classes(); ++c)
        CHECK(ind.values[c] == chi.at_element(whole.embed.apply(ind.classes->rep[c])));
    }
  }
  // Ind_1^G triv is the regular character
  {
    auto triv_sub = realize_subgroup(subs.front());
    Character ind = induce_character(trivial_character(triv_sub.group), triv_sub);
    for (int c = 0; c < ind.classes->num_classes(); ++c) {
      long expect = ind.classes->rep[c] == s3->identity() ? s3->order() : 0;
      CHECK(ind.values[c] == Cyclotomic(Rational(expect)));
    }
  }
  // Ind_{A3}^{S3} triv = triv + sgn
  {
    Subgroup a3;
    for (const auto& s : subs)
      if (s.order() == 3) a3 = s;
    auto ra3 = realize_subgroup(a3);
    Character ind = induce_character(trivial_character(ra3.group), ra3);
    auto table = character_table(s3);
    CHECK(multiplicity(ind, table->irreducibles[0]) == 1);  // trivial
    CHECK(multiplicity(ind, table->irreducibles[1]) == 1);  // sign
    CHECK(multiplicity(ind, table->irreducibles[2]) == 0);  // 2-dimensional
  }
}

TEST_CASE("Frobenius reciprocity") {
  auto g = catalog_group("S4");
  auto gt = character_table(g);
  for (const auto& s : subgroups_cached(g)) {
    if (s.order() != 4 && s.order() != 6) continue;
    auto rs = realize_subgroup(s);
    auto st = character_table(rs.group);
    for (const auto& chi : st->irreducibles)
      for (const auto& psi : gt->irreducibles) {
        Character ind = induce_character(chi, rs);
        Character res = restrict_character(psi, rs);
        CHECK(inner_product(ind, psi) == inner_product(chi, res));
      }
  }
}

TEST_CASE("rational irreducibles") {
  CHECK(rational_irreducibles(catalog_group("C1")).size() == 1);
  // C3: trivial plus the summed pair of faithful linear characters
  {
    auto rats = rational_irreducibles(catalog_group("C3"));
    REQUIRE(rats.size() == 2);
    CHECK(rats[0].is_trivial());
    CHECK(rats[1].values[0] == Cyclotomic(Rational(2)));
    CHECK(rats[1].values[1] == Cyclotomic(Rational(-1)));
  }
  for (int p : {5, 7}) {
    CHECK(rational_irreducibles(catalog_group("C" + std::to_string(p))).size() == 2);
  }
  // all values integral
  for (const char* name : {"C12", "S4", "Q8"}) {
    for (const auto& chi : rational_irreducibles(catalog_group(name)))
      for (const auto& v : chi.values) {
        CHECK(v.is_rational());
        Rational r = v.as_rational();
        r.canonicalize();
        CHECK(r.get_den() == 1);
      }
  }
}

TEST_CASE("artin quotient dimension") {
  // trivial group: no proper subgroups, one-dimensional space
  {
    auto q = artin_quotient_dim(catalog_group("C1"));
    CHECK(q.dimension == 1);
    CHECK(q.out_action_trivial);
  }
  for (const char* name : {"C2", "C3", "C4", "C5", "C6", "C12"}) {
    auto q = artin_quotient_dim(catalog_group(name));
    CHECK(q.dimension == 1);
    CHECK(q.out_action_trivial);
  }
  for (const char* name : {"S3", "D8", "Q8", "A4", "E2^2", "E3^2"}) {
    CHECK(artin_quotient_dim(catalog_group(name)).dimension == 0);
  }
}

TEST_CASE("codef dimension agrees with the artin quotient") {
  for (const char* name :
       {"C1", "C2", "C3", "C4", "C5", "C6", "C12", "S3", "D8", "Q8", "A4"}) {
    auto g = catalog_group(name);
    CHECK(codef_krq_dim(g) == artin_quotient_dim(g).dimension);
  }
  CHECK(codef_krq_dim(catalog_group("C6")) == 1);
  CHECK(codef_krq_dim(catalog_group("S3")) == 0);
  CHECK(codef_krq_dim(catalog_group("C5")) == 1);
}

TEST_CASE("simple pairs") {
  CHECK(simple_pairs(catalog_group("C1")).size() == 1);
  // C2: Out(1) and Out(C2) are both trivial
  CHECK(simple_pairs(catalog_group("C2")).size() == 2);
  // C3: Out(C3) has order 2
  {
    auto pairs = simple_pairs(catalog_group("C3"));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].class_index == 0);
    CHECK(pairs[1].class_index == 1);
    CHECK(pairs[2].class_index == 1);
  }
}

TEST_CASE("transport along an isomorphism preserves irreducibility") {
  auto c3 = catalog_group("C3");
  auto a3 = catalog_group("A3");
  auto isos = isomorphisms(c3, a3);
  REQUIRE_FALSE(isos.empty());
  auto table = character_table(c3);
  for (const auto& chi : table->irreducibles) {
    Character moved = transport_character(chi, isos.front());
    CHECK(inner_product(moved, moved) == Cyclotomic(Rational(1)));
  }
}

TEST_CASE("character table disk cache round trip") {
  TableCache::set_directory(".bisetcalc-cache-test");
  auto g = catalog_group("D8");
  auto first = character_table(g);
  TableCache::store(*first);
  auto loaded = TableCache::load(g);
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->irreducibles.size() == first->irreducibles.size());
  for (size_t i = 0; i < first->irreducibles.size(); ++i)
    for (size_t c = 0; c < first->irreducibles[i].values.size(); ++c)
      CHECK(loaded->irreducibles[i].values[c] == first->irreducibles[i].values[c]);
  TableCache::set_directory("");
}
