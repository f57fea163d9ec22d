#include "doctest.h"

#include <set>

#include "bisetcalc/catalog.hpp"
#include "bisetcalc/subquotient.hpp"

using namespace bisetcalc;

TEST_CASE("subquotient counts") {
  CHECK(subquotients(catalog_group("C1")).size() == 1);
  for (int p : {2, 3, 5}) {
    auto sqs = subquotients(catalog_group("C" + std::to_string(p)));
    CHECK(sqs.size() == 3);  // (1,1), (C_p,1), (C_p,C_p)
  }
  // S3 by hand: 6 trivial-quotient pairs, 4 of order 2, 1 of order 3, 1 of order 6
  CHECK(subquotients(catalog_group("S3")).size() == 12);
}

TEST_CASE("E2 has 2p+2 subquotients of order p") {
  for (int p : {2, 3, 5}) {
    auto sqs = subquotients(elementary_abelian_rank2(p));
    int order_p = 0, as_subgroup = 0, as_quotient = 0;
    for (const auto& sq : sqs) {
      if (sq.group->order() != p) continue;
      ++order_p;
      if (sq.ker.order() == 1) ++as_subgroup;
      if (sq.sub.order() == p * p) ++as_quotient;
    }
    CHECK(order_p == 2 * p + 2);
    CHECK(as_subgroup == p + 1);
    CHECK(as_quotient == p + 1);
  }
}

TEST_CASE("subquotient structure invariants") {
  for (const char* name : {"S3", "D8", "A4"}) {
    auto g = catalog_group(name);
    for (const auto& sq : subquotients(g)) {
      CHECK(sq.group->order() * sq.ker.order() == sq.sub.order());
      CHECK(sq.proj.is_valid());
      CHECK(sq.embed.is_valid());
      // projection is surjective with kernel of the right size
      int hits = 0;
      std::vector<char> hit(sq.group->order(), 0);
      for (int x = 0; x < sq.sub_group->order(); ++x)
        if (!hit[sq.proj.apply(x)]) { hit[sq.proj.apply(x)] = 1; ++hits; }
      CHECK(hits == sq.group->order());
    }
  }
}

TEST_CASE("iso class index of the trivial group") {
  auto idx = iso_class_index(catalog_group("C1"));
  CHECK(idx.num_classes() == 1);
  CHECK(idx.reps[0]->order() == 1);
}

TEST_CASE("iso classes of S3 are 1, C2, C3, S3") {
  auto idx = iso_class_index(catalog_group("S3"));
  REQUIRE(idx.num_classes() == 4);
  CHECK(idx.reps[0]->order() == 1);
  CHECK(idx.reps[1]->order() == 2);
  CHECK(idx.reps[2]->order() == 3);
  CHECK(idx.reps[3]->order() == 6);
  CHECK(describe_group(idx.reps[3]) == "S3");
  // member counts enumerated by hand
  CHECK(idx.class_members(0).size() == 6);
  CHECK(idx.class_members(1).size() == 4);
  CHECK(idx.class_members(2).size() == 1);
  CHECK(idx.class_members(3).size() == 1);
}

TEST_CASE("iso classes of E2 are 1, Cp, E2") {
  for (int p : {2, 3}) {
    auto idx = iso_class_index(elementary_abelian_rank2(p));
    REQUIRE(idx.num_classes() == 3);
    CHECK(idx.reps[0]->order() == 1);
    CHECK(idx.reps[1]->order() == p);
    CHECK(idx.reps[2]->order() == p * p);
    CHECK(idx.class_members(1).size() == static_cast<size_t>(2 * p + 2));
  }
}

TEST_CASE("iso class index is a partition with non-isomorphic representatives") {
  for (const char* name : {"S3", "D8", "A4", "C12"}) {
    auto idx = iso_class_index(catalog_group(name));
    // partition
    for (int c : idx.class_of) {
      CHECK(c >= 0);
      CHECK(c < idx.num_classes());
    }
    // weakly increasing sizes, H_0 trivial, H_n = G
    CHECK(idx.reps.front()->order() == 1);
    CHECK(idx.reps.back()->order() == idx.parent->order());
    for (int i = 1; i < idx.num_classes(); ++i)
      CHECK(idx.reps[i - 1]->order() <= idx.reps[i]->order());
    // pairwise non-isomorphic
    for (int i = 0; i < idx.num_classes(); ++i)
      for (int j = i + 1; j < idx.num_classes(); ++j)
        CHECK(isomorphisms(idx.reps[i], idx.reps[j]).empty());
    // chosen transports are honest isomorphisms onto the representative
    for (size_t i = 0; i < idx.sqs.size(); ++i) {
      const auto& iso = idx.chosen_iso[i];
      CHECK(iso.is_valid());
      CHECK(iso.is_bijective());
      CHECK(iso.target->order() == idx.reps[idx.class_of[i]]->order());
    }
  }
}

TEST_CASE("quotients_iso_to") {
  auto s3 = catalog_group("S3");
  auto c3 = catalog_group("C3");
  auto c2 = catalog_group("C2");
  // R = K: only the trivial kernel
  {
    auto ns = quotients_iso_to(s3, s3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].order() == 1);
  }
  // S3 has no normal subgroup of order 2
  CHECK(quotients_iso_to(s3, c3).empty());
  // S3 -> C2 via A3
  {
    auto ns = quotients_iso_to(s3, c2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].order() == 3);
  }
  // E2 -> Cp: all p+1 subgroups of order p
  for (int p : {2, 3, 5}) {
    auto e2 = elementary_abelian_rank2(p);
    auto cp = catalog_group("C" + std::to_string(p));
    CHECK(quotients_iso_to(e2, cp).size() == static_cast<size_t>(p + 1));
  }
}

TEST_CASE("quotients_iso_to is consistent with the subquotient list") {
  auto g = catalog_group("D8");
  auto idx = iso_class_index(g);
  for (const auto& rep : idx.reps) {
    bool has_full_subquotient = false;
    for (size_t i = 0; i < idx.sqs.size(); ++i)
      if (idx.sqs[i].sub.is_whole_group() &&
          idx.reps[idx.class_of[i]]->order() == rep->order() &&
          !isomorphisms(idx.sqs[i].group, rep).empty())
        has_full_subquotient = true;
    CHECK(has_full_subquotient == !quotients_iso_to(g, rep).empty());
  }
}
