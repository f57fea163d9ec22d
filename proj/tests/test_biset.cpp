#include "doctest.h"

#include "bisetcalc/biset.hpp"
#include "bisetcalc/catalog.hpp"
#include "bisetcalc/oracles.hpp"

using namespace bisetcalc;

TEST_CASE("X(1,H) is a single point") {
  auto one = catalog_group("C1");
  for (const char* name : {"C1", "C2", "C5", "S3", "D8", "A4"}) {
    auto X = build_X(one, catalog_group(name));
    CHECK(X.size() == 1);
  }
}

TEST_CASE("X is empty when K is not a quotient of R") {
  CHECK(build_X(catalog_group("C3"), catalog_group("S3")).size() == 0);
  CHECK(build_X(catalog_group("C4"), catalog_group("E2^2")).size() == 0);
  CHECK(build_X(catalog_group("S3"), catalog_group("C6")).size() == 0);
}

TEST_CASE("|X(Cp, E2)| = (p+1)(p-1)") {
  for (int p : {2, 3}) {
    auto X = build_X(catalog_group("C" + std::to_string(p)),
                     elementary_abelian_rank2(p));
    CHECK(X.size() == (p + 1) * (p - 1));
    CHECK(static_cast<int>(X.kernels.size()) == p + 1);
  }
}

TEST_CASE("X(Cp, Cp) is the regular Out(Cp) biset") {
  for (int p : {3, 5, 7}) {
    auto cp = catalog_group("C" + std::to_string(p));
    auto X = build_X(cp, cp);
    CHECK(X.size() == p - 1);
    CHECK(X.outK->out->order() == p - 1);
  }
}

TEST_CASE("biset action axioms hold") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {"C2", "C12"}, {"C2", "E2^2"}, {"C3", "E3^2"}, {"C2", "D8"}, {"S3", "S4"}};
  for (const auto& [kn, rn] : cases) {
    auto X = build_X(catalog_group(kn), catalog_group(rn));
    const auto& outK = X.outK->out;
    const auto& outR = X.outR->out;
    // identities act trivially
    for (int x = 0; x < X.size(); ++x) {
      CHECK(X.left_action[outK->identity()][x] == x);
      CHECK(X.right_action[x][outR->identity()] == x);
    }
    // composition and commutation
    for (int u = 0; u < outK->order(); ++u)
      for (int v = 0; v < outK->order(); ++v)
        for (int x = 0; x < X.size(); ++x)
          CHECK(X.left_action[outK->mul(u, v)][x] ==
                X.left_action[u][X.left_action[v][x]]);
    for (int w = 0; w < outR->order(); ++w)
      for (int v = 0; v < outR->order(); ++v)
        for (int x = 0; x < X.size(); ++x)
          CHECK(X.right_action[X.right_action[x][w]][v] ==
                X.right_action[x][outR->mul(w, v)]);
    for (int u = 0; u < outK->order(); ++u)
      for (int w = 0; w < outR->order(); ++w)
        for (int x = 0; x < X.size(); ++x)
          CHECK(X.right_action[X.left_action[u][x]][w] ==
                X.left_action[u][X.right_action[x][w]]);
  }
}

TEST_CASE("tensor character base cases") {
  // single point, both actions trivial, V trivial -> the trivial character
  {
    auto one = catalog_group("C1");
    auto X = build_X(one, catalog_group("S3"));
    REQUIRE(X.size() == 1);
    Character triv = trivial_character(X.outR->out);
    Character t = tensor_character(X, triv);
    CHECK(t.values.size() == 1);
    CHECK(t.values[0] == Cyclotomic(Rational(1)));
  }
  // X(1,H) with nontrivial irreducible V -> the zero character
  {
    auto one = catalog_group("C1");
    auto h = catalog_group("C3");
    auto X = build_X(one, h);
    auto table = character_table(X.outR->out);
    REQUIRE(table->irreducibles.size() == 2);
    Character t = tensor_character(X, table->irreducibles[1]);
    CHECK(t.values[0].is_zero());
  }
}

TEST_CASE("tensor character dimension formula") {
  auto X = build_X(catalog_group("C2"), catalog_group("C12"));
  auto table = character_table(X.outR->out);
  const auto& outR = X.outR->out;
  for (const auto& V : table->irreducibles) {
    Character t = tensor_character(X, V);
    // dimension by right fixed points
    Cyclotomic dim;
    for (int w = 0; w < outR->order(); ++w) {
      long fixed = 0;
      for (int x = 0; x < X.size(); ++x)
        if (X.right_action[x][w] == x) ++fixed;
      dim += V.values[V.classes->class_of[w]].scaled(Rational(fixed));
    }
    dim = dim.scaled(Rational(1, outR->order()));
    CHECK(t.values[0] == dim);
    // non-negative integrality of the dimension
    Rational d = dim.as_rational();
    d.canonicalize();
    CHECK(d.get_den() == 1);
    CHECK(d >= 0);
  }
}

TEST_CASE("tensor character agrees with the relation-quotient oracle") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {"C1", "C3"}, {"C2", "C4"}, {"C2", "E2^2"}, {"C3", "E3^2"},
      {"C2", "D8"}, {"C2", "S3"}, {"S3", "S4"},   {"E2^2", "D8"}};
  for (const auto& [kn, rn] : cases) {
    auto X = build_X(catalog_group(kn), catalog_group(rn));
    auto table = character_table(X.outR->out);
    for (const auto& V : table->irreducibles) {
      if (X.size() * V.degree().get_num().get_si() > 64) continue;
      Character fast = tensor_character(X, V);
      Character slow = oracle::tensor_module_character(X, V);
      REQUIRE(fast.values.size() == slow.values.size());
      for (size_t c = 0; c < fast.values.size(); ++c)
        CHECK(fast.values[c] == slow.values[c]);
    }
  }
}

TEST_CASE("ind_rho_nabla at K = H recovers V when H tops the lattice") {
  // G = H = S3: the only subquotient isomorphic to S3 is (S3, 1)
  auto g = catalog_group("S3");
  auto index = build_pair_index(g);
  int class_h = index.classes.num_classes() - 1;
  const auto& table = index.out_tables[class_h];
  for (size_t v = 0; v < table->irreducibles.size(); ++v) {
    AtomicModule atom{class_h, table->irreducibles[v]};
    Character val = ind_rho_nabla(index, atom, class_h);
    for (size_t c = 0; c < val.values.size(); ++c)
      CHECK(val.values[c] == table->irreducibles[v].values[c]);
  }
}

TEST_CASE("ind_rho_nabla of a nontrivial simple-group module vanishes at 1") {
  auto g = catalog_group("A5");
  auto index = build_pair_index(g);
  int class_h = index.classes.num_classes() - 1;
  REQUIRE(index.classes.reps[class_h]->order() == 60);
  const auto& table = index.out_tables[class_h];  // Out(A5) = C2
  REQUIRE(table->irreducibles.size() == 2);
  AtomicModule nontrivial{class_h, table->irreducibles[1]};
  Character at_one = ind_rho_nabla(index, nontrivial, 0);
  for (const auto& v : at_one.values) CHECK(v.is_zero());
  AtomicModule triv{class_h, table->irreducibles[0]};
  Character at_one_triv = ind_rho_nabla(index, triv, 0);
  CHECK(at_one_triv.values[0] == Cyclotomic(Rational(1)));
}

TEST_CASE("ind_rho_nabla over E2 sums the 2p+2 order-p subquotients") {
  for (int p : {2, 3}) {
    auto g = elementary_abelian_rank2(p);
    auto index = build_pair_index(g);
    REQUIRE(index.classes.num_classes() == 3);
    AtomicModule atom{1, trivial_character(index.outs[1]->out)};
    Character val = ind_rho_nabla(index, atom, 1);
    CHECK(val.values[0] == Cyclotomic(Rational(2 * p + 2)));
  }
}

TEST_CASE("chosen-iso independence of induced multiplicities") {
  auto g = catalog_group("C12");
  auto index = build_pair_index(g);
  // alternative transports: the last isomorphism instead of the first
  std::vector<GroupHom> alt;
  for (size_t i = 0; i < index.classes.sqs.size(); ++i) {
    auto isos = isomorphisms(index.classes.sqs[i].group,
                             index.classes.reps[index.classes.class_of[i]]);
    REQUIRE_FALSE(isos.empty());
    alt.push_back(isos.back());
  }
  for (int h = 0; h < index.classes.num_classes(); ++h) {
    const auto& table = index.out_tables[h];
    for (const auto& V : table->irreducibles) {
      AtomicModule atom{h, V};
      for (int k = 0; k < index.classes.num_classes(); ++k) {
        Character a = ind_rho_nabla(index, atom, k);
        Character b = ind_rho_nabla_with_transport(index, atom, k, alt);
        const auto& ktable = index.out_tables[k];
        for (const auto& W : ktable->irreducibles)
          CHECK(multiplicity(a, W) == multiplicity(b, W));
      }
    }
  }
}
