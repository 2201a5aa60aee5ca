#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "virtstring/based_matrix.hpp"
#include "virtstring/error.hpp"
#include "virtstring/paper_check.hpp"

using namespace virtstring;

namespace {

std::vector<int> shuffled_order(int size, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin() + 1, order.end(), rng);
  return order;
}

}  // namespace

TEST_CASE("T(M) matches the printed matrix") {
  const BasedMatrix m = based_matrix(make_example_M());
  CHECK(m == printed_T_M());
  CHECK(m.rows() == std::vector<std::vector<int>>{{0, -2, -1, 0, 1, 2},
                                                  {2, 0, 0, 0, 1, 3},
                                                  {1, 0, 0, 0, 0, 1},
                                                  {0, 0, 0, 0, 0, 0},
                                                  {-1, -1, 0, 0, 0, 0},
                                                  {-2, -3, -1, 0, 0, 0}});
  CHECK(m.label(0).name() == "s");
  CHECK(m.label(3).name() == "C");
}

TEST_CASE("matrices of diagrams are skew-symmetric") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const BasedMatrix m = based_matrix(random_diagram(static_cast<int>(rng() % 8), rng));
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) CHECK(m(i, j) == -m(j, i));
  }
}

TEST_CASE("constructor validation") {
  const std::vector<Label> l{Label::base(), Label::arrow(0)};
  CHECK_THROWS_AS(BasedMatrix(l, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(BasedMatrix(l, {{1, 0}, {0, -1}}), InvalidArgument);
  CHECK_THROWS_AS(BasedMatrix(l, std::vector<std::vector<int>>{{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BasedMatrix({Label::arrow(0), Label::base()}, {{0, 1}, {-1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(BasedMatrix({Label::base(), Label::arrow(0), Label::arrow(0)}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                  InvalidArgument);
  CHECK_THROWS_AS(extend_core(extend_core(printed_T_M(), 3), 3), InvalidArgument);
  CHECK(BasedMatrix().size() == 1);
}

TEST_CASE("element classes") {
  const BasedMatrix m = printed_T_M();
  // C is an isolated arrow of M: b(C, h) = 0 everywhere, so it is annihilating.
  CHECK(is_annihilating(m, 3));
  CHECK_FALSE(is_core(m, 3));
  CHECK_FALSE(is_annihilating(m, 1));
  const ElementClass c = classify(m);
  CHECK(c.annihilating[3]);
  CHECK_FALSE(c.has_self_complementary());
  CHECK_FALSE(c.s_annihilating_like);

  const BasedMatrix core = extend_core(m);
  CHECK(is_core(core, core.size() - 1));
  const BasedMatrix ann = extend_annihilating(m);
  CHECK(is_annihilating(ann, ann.size() - 1));
  const std::vector<int> row{0, 1, -1, 0, 2, 0};
  const BasedMatrix comp = extend_complementary(m, row);
  CHECK(are_complementary(comp, comp.size() - 2, comp.size() - 1));
}

TEST_CASE("deletions undo extensions") {
  const BasedMatrix prim = printed_T_bullet_M();
  REQUIRE(is_primitive(prim));
  const CanonicalKey key = canonical_form(prim);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    BasedMatrix m = prim;
    for (int step = 0; step < 4; ++step) {
      const int tag = 2 * step;
      switch (rng() % 3) {
        case 0: m = extend_annihilating(m, tag); break;
        case 1: m = extend_core(m, tag); break;
        default: {
          std::vector<int> row(static_cast<std::size_t>(m.size()));
          for (int h = 1; h < m.size(); ++h) row[static_cast<std::size_t>(h)] = static_cast<int>(rng() % 5) - 2;
          m = extend_complementary(m, row, tag);
        }
      }
    }
    CHECK_FALSE(is_primitive(m));
    CHECK(canonical_form(reduce_to_primitive(m).primitive) == key);
    CHECK(canonical_form(reduce_to_primitive(m, rng).primitive) == key);
  }
}

TEST_CASE("primitive matrix of M") {
  const Reduction r = reduce_to_primitive(based_matrix(make_example_M()));
  CHECK(r.primitive.size() == 5);
  CHECK(r.steps.size() == 1);
  REQUIRE(r.steps[0].removed.size() == 1);
  CHECK(r.steps[0].removed[0] == Label::arrow(2));
  CHECK(r.primitive == printed_T_bullet_M());
  CHECK(canonical_form(r.primitive) == canonical_form(printed_T_bullet_M()));
  CHECK(rho(make_example_M()) == 4);
}

TEST_CASE("rho of small strings") {
  CHECK(rho(GaussDiagram{}) == 0);
  CHECK(rho(parse_diagram("T0 H0")) == 0);
  CHECK(rho(parse_diagram("T0 T1 H0 H1")) == 0);
  CHECK(rho(make_alpha_pq(1, 1)) == 0);
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    CHECK(is_primitive(based_matrix(make_alpha_pq(p, q))));
    CHECK(rho(make_alpha_pq(p, q)) == p + q);
  }
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const BasedMatrix m = based_matrix(random_diagram(static_cast<int>(rng() % 7), rng));
    const BasedMatrix p = m.permuted(shuffled_order(m.size(), rng));
    CHECK(canonical_form(m) == canonical_form(p));
    CHECK(homologous(m, p));
    const std::vector<int> order = canonical_order(m);
    CHECK(order[0] == 0);
    CHECK(canonical_form(m.permuted(order)) == canonical_form(m));
  }
  // Same spectrum of rows, different matrices.
  const std::vector<Label> l{Label::base(), Label::arrow(0), Label::arrow(1)};
  const BasedMatrix a(l, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  const BasedMatrix b(l, {{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("randomized reduction orders agree") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const BasedMatrix m = based_matrix(random_diagram(static_cast<int>(rng() % 7), rng));
    const CanonicalKey ref = canonical_form(reduce_to_primitive(m).primitive);
    for (int k = 0; k < 3; ++k) CHECK(canonical_form(reduce_to_primitive(m, rng).primitive) == ref);
  }
}

TEST_CASE("canonicalizer size cap") {
  BasedMatrix m = printed_T_M();
  for (int k = 0; k < 10; ++k) m = extend_core(m, k);
  CHECK(m.size() == 16);
  CHECK_THROWS_AS(canonical_form(m), TooLarge);
  CHECK_NOTHROW(canonical_form(m, 15));
}

TEST_CASE("available deletions order") {
  const BasedMatrix m = extend_core(extend_annihilating(printed_T_bullet_M(), 0), 1);
  const auto dels = available_deletions(m);
  REQUIRE(dels.size() >= 2);
  CHECK(dels[0].kind == Deletion::Kind::Annihilating);
  CHECK(apply_deletion(m, dels[0]).size() == m.size() - 1);
}
