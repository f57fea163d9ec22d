#include "doctest.h"

#include "bisetcalc/catalog.hpp"
#include "bisetcalc/decomposition.hpp"

using namespace bisetcalc;

namespace {

int class_of_order(const PairIndex& index, int order) {
  for (int i = 0; i < index.classes.num_classes(); ++i)
    if (index.classes.reps[i]->order() == order) return i;
  return -1;
}

}  // namespace

TEST_CASE("burnside multiplicity") {
  for (int p : {2, 3, 5}) {
    auto cp = catalog_group("C" + std::to_string(p));
    auto table = character_table(out_group_cached(cp)->out);
    CHECK(burnside_multiplicity(cp, table->irreducibles[0]).value == 1);
    for (size_t v = 1; v < table->irreducibles.size(); ++v)
      CHECK(burnside_multiplicity(cp, table->irreducibles[v]).value == 0);
  }
  {
    auto e2 = catalog_group("E2^2");
    auto table = character_table(out_group_cached(e2)->out);
    CHECK(burnside_multiplicity(e2, table->irreducibles[0]).value == 0);
  }
}

TEST_CASE("bound entry promotions") {
  auto index = build_pair_index(catalog_group("C5"));
  // pairs: (1,triv), (C5,triv), (C5,...) over Out(C5) = C4
  REQUIRE(index.num_pairs() == 5);
  int diag = index.pair_of(1, 0);
  // diagonal: exact one / zero
  CHECK(bound_entry(index, diag, diag).value == 1);
  CHECK(bound_entry(index, diag, diag).status == EntryStatus::exact);
  CHECK(bound_entry(index, diag, index.pair_of(1, 1)).value == 0);
  // K not a quotient of H: trivial row vs C5 column
  auto e = bound_entry(index, index.pair_of(0, 0), diag);
  CHECK(e.value == 0);
  CHECK(e.provenance == Provenance::not_a_quotient);
  // genuine bound: (C5,triv) row at (1,triv)
  auto b = bound_entry(index, diag, index.pair_of(0, 0));
  CHECK(b.status == EntryStatus::upper_bound);
  CHECK(b.value == 1);
}

TEST_CASE("cyclic rows for prime order") {
  for (int p : {2, 3, 5}) {
    auto index = build_pair_index(catalog_group("C" + std::to_string(p)));
    int cp = class_of_order(index, p);
    const auto& table = index.out_tables[cp];
    // trivial module: diagonal plus the Burnside summand
    {
      auto row = cyclic_row(index, cp, 0);
      CHECK(row[index.pair_of(cp, 0)].value == 1);
      CHECK(row[index.pair_of(0, 0)].value == 1);
      for (int col = 0; col < index.num_pairs(); ++col) {
        if (col == index.pair_of(cp, 0) || col == index.pair_of(0, 0)) continue;
        CHECK(row[col].value == 0);
      }
    }
    // nontrivial modules: the diagonal only
    for (size_t v = 1; v < table->irreducibles.size(); ++v) {
      auto row = cyclic_row(index, cp, static_cast<int>(v));
      for (int col = 0; col < index.num_pairs(); ++col)
        CHECK(row[col].value ==
              (col == index.pair_of(cp, static_cast<int>(v)) ? 1 : 0));
    }
  }
}

TEST_CASE("cyclic row of the trivial class") {
  auto index = build_pair_index(catalog_group("C4"));
  auto row = cyclic_row(index, 0, 0);
  CHECK(row[index.pair_of(0, 0)].value == 1);
  for (int col = 1; col < index.num_pairs(); ++col) CHECK(row[col].value == 0);
}

TEST_CASE("cyclic rows cross-check against the burnside lemma") {
  auto g = catalog_group("C12");
  auto index = build_pair_index(g);
  for (int cls = 0; cls < index.classes.num_classes(); ++cls) {
    REQUIRE(index.classes.reps[cls]->is_cyclic());
    const auto& table = index.out_tables[cls];
    for (size_t v = 0; v < table->irreducibles.size(); ++v) {
      auto row = cyclic_row(index, cls, static_cast<int>(v));
      auto mb = burnside_multiplicity(index.classes.reps[cls],
                                      table->irreducibles[v]);
      CHECK(row[index.pair_of(0, 0)].value == mb.value);
    }
  }
}

TEST_CASE("simple group rows") {
  // C5 as a simple group: both routes agree entry by entry
  {
    auto index = build_pair_index(catalog_group("C5"));
    int cp = class_of_order(index, 5);
    for (size_t v = 0; v < index.out_tables[cp]->irreducibles.size(); ++v) {
      auto a = cyclic_row(index, cp, static_cast<int>(v));
      auto b = simple_group_row(index, cp, static_cast<int>(v));
      for (int col = 0; col < index.num_pairs(); ++col)
        CHECK(a[col].value == b[col].value);
    }
  }
  // A5 inside itself: no Burnside term for either module of Out(A5) = C2
  {
    auto index = build_pair_index(catalog_group("A5"));
    int a5 = class_of_order(index, 60);
    REQUIRE(index.out_tables[a5]->irreducibles.size() == 2);
    for (int v = 0; v < 2; ++v) {
      auto row = simple_group_row(index, a5, v);
      for (int col = 0; col < index.num_pairs(); ++col)
        CHECK(row[col].value == (col == index.pair_of(a5, v) ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(
      simple_group_row(build_pair_index(catalog_group("C4")), 1, 0),
      std::invalid_argument);
}

TEST_CASE("e2 report") {
  for (int p : {2, 3, 5}) {
    auto rep = e2_report(p);
    CHECK(rep.detC == rep.detC_closed_form);
    CHECK(rep.kernel_dim == p + 1);
    CHECK(rep.invariant_dim == 1);
    CHECK(rep.n_Cp1 == 1);
    CHECK(static_cast<int>(rep.basis_labels.size()) == 2 * p + 2);
  }
  // explicit determinant values from the closed form
  CHECK(e2_report(2).detC == Rational(-2));
  CHECK(e2_report(3).detC == Rational(-48));
  CHECK(e2_report(5).detC == Rational(-20480));
  CHECK_THROWS(e2_report(4));
  CHECK_THROWS(e2_report(17));
}

TEST_CASE("krq decomposition") {
  {
    auto entries = krq_decomposition(catalog_group("C1"));
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].class_index == 0);
  }
  for (int p : {3, 5}) {
    auto entries = krq_decomposition(catalog_group("C" + std::to_string(p)));
    CHECK(entries.size() == 2);
  }
  {
    auto g = catalog_group("S3");
    auto idx = iso_class_index(g);
    auto entries = krq_decomposition(g);
    REQUIRE(entries.size() == 3);  // 1, C2, C3 but not S3
    for (const auto& e : entries) {
      CHECK(idx.reps[e.class_index]->is_cyclic());
      CHECK(e.evidence.dimension == 1);
      CHECK(e.evidence.out_action_trivial);
    }
  }
}

TEST_CASE("n matrix for prime cyclic groups") {
  auto m = n_matrix(catalog_group("C3"));
  // pairs: (1,triv), (C3,triv), (C3,sgn)
  REQUIRE(m.index.num_pairs() == 3);
  CHECK(m.entries[0][0].value == 1);
  CHECK(m.entries[1][0].value == 1);  // Burnside summand of (C3,triv)
  CHECK(m.entries[1][1].value == 1);
  CHECK(m.entries[2][0].value == 0);
  CHECK(m.entries[2][2].value == 1);
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col) {
      CHECK(m.entries[row][col].status == EntryStatus::exact);
      if (col > row) CHECK(m.entries[row][col].value == 0);
    }
}

TEST_CASE("n matrix of the trivial group") {
  auto m = n_matrix(catalog_group("C1"));
  REQUIRE(m.index.num_pairs() == 1);
  CHECK(m.entries[0][0].value == 1);
  CHECK(m.entries[0][0].provenance == Provenance::trivial_group);
}

TEST_CASE("n matrix structural invariants for assorted groups") {
  for (const char* name : {"C6", "S3", "D8", "Q8"}) {
    auto m = n_matrix(catalog_group(name));
    const int n = m.index.num_pairs();
    for (int row = 0; row < n; ++row) {
      CHECK(m.entries[row][row].value == 1);
      CHECK(m.entries[row][row].status == EntryStatus::exact);
      for (int col = 0; col < n; ++col) {
        if (m.index.pairs[col].class_index > m.index.pairs[row].class_index)
          CHECK(m.entries[row][col].value == 0);
        if (m.entries[row][col].provenance == Provenance::not_a_quotient)
          CHECK(m.entries[row][col].value == 0);
      }
    }
  }
}

TEST_CASE("bound dominance: exact entries never exceed the recomputed bound") {
  for (const char* name : {"C6", "S3", "D8"}) {
    auto m = n_matrix(catalog_group(name));
    const int n = m.index.num_pairs();
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        if (m.entries[row][col].status != EntryStatus::exact) continue;
        auto b = bound_entry(m.index, row, col);
        CHECK(m.entries[row][col].value <= b.value);
      }
  }
}

TEST_CASE("e2 rows of the E2 matrix") {
  for (int p : {2, 3}) {
    auto m = n_matrix(elementary_abelian_rank2(p));
    int e2 = class_of_order(m.index, p * p);
    int cp = class_of_order(m.index, p);
    int row = m.index.pair_of(e2, 0);
    REQUIRE(m.index.pair_character(row).is_trivial());
    // (E2,triv) row: diagonal 1, (Cp,triv) exact 1, (1,triv) exact 0
    CHECK(m.entries[row][row].value == 1);
    const auto& cp_entry = m.entries[row][m.index.pair_of(cp, 0)];
    CHECK(cp_entry.value == 1);
    CHECK(cp_entry.status == EntryStatus::exact);
    CHECK(cp_entry.provenance == Provenance::e2_computation);
    const auto& burn = m.entries[row][m.index.pair_of(0, 0)];
    CHECK(burn.value == 0);
    CHECK(burn.provenance == Provenance::burnside_lemma);
    // nontrivial W columns stay bounds
    for (size_t w = 1; w < m.index.out_tables[cp]->irreducibles.size(); ++w) {
      const auto& e = m.entries[row][m.index.pair_of(cp, static_cast<int>(w))];
      CHECK(e.status == EntryStatus::upper_bound);
      CHECK(e.provenance == Provenance::nabla_bound);
    }
    // p-group annotation present
    CHECK_FALSE(m.row_annotations[row].empty());
  }
}

TEST_CASE("decompose induced") {
  // (1,triv): the Burnside functor alone
  {
    auto index = build_pair_index(catalog_group("S3"));
    auto rec = decompose_induced(index, 0);
    CHECK(rec.fully_determined);
    CHECK(rec.text == "P_{1,triv}");
  }
  // (C5,triv) inside C5
  {
    auto index = build_pair_index(catalog_group("C5"));
    auto rec = decompose_induced(index, index.pair_of(1, 0));
    CHECK(rec.fully_determined);
    CHECK(rec.text == "P_{1,triv} + P_{C5,triv}");
  }
  // (E2,triv) inside E2: exact head plus possibly-zero bounded tail
  {
    auto index = build_pair_index(catalog_group("E2^2"));
    int e2 = -1;
    for (int i = 0; i < index.classes.num_classes(); ++i)
      if (index.classes.reps[i]->order() == 4) e2 = i;
    auto rec = decompose_induced(index, index.pair_of(e2, 0));
    CHECK(rec.text.find("P_{E2^2,triv}") != std::string::npos);
    CHECK(rec.text.find("P_{C2,triv}") != std::string::npos);
  }
}

TEST_CASE("provenance names are stable") {
  CHECK(std::string(provenance_name(Provenance::nabla_bound)) == "nabla_bound");
  CHECK(std::string(provenance_name(Provenance::e2_computation)) ==
        "e2_computation");
}
