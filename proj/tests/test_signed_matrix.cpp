#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "virtstring/error.hpp"
#include "virtstring/moves.hpp"
#include "virtstring/paper_check.hpp"
#include "virtstring/signed_matrix.hpp"

using namespace virtstring;

TEST_CASE("signed matrices of M") {
  const GaussDiagram M = make_example_M();
  const SignedBasedMatrix a = signed_matrix(SignedDiagram(M, 0, Sign::Plus));
  CHECK(a == printed_T_M_plus_A());
  CHECK(a.base == printed_T_M());
  CHECK(a.d == 1);
  CHECK_FALSE(is_primitive_signed(a));

  const SignedBasedMatrix red = reduce_signed(a);
  CHECK(is_primitive_signed(red));
  CHECK(red.sign == Sign::Plus);
  CHECK(red.base.size() == 5);
  CHECK(signed_canonical_form(red) == signed_canonical_form(printed_T_bullet_M_plus_A()));
  CHECK(d_moves(red).empty());
  CHECK(primitive_orbit(red).size() == 1);

  const SignedBasedMatrix c = signed_matrix(SignedDiagram(M, 2, Sign::Plus));
  CHECK(c == printed_T_M_plus_C());
  CHECK(is_primitive_signed(c));
  const SignedClass cls = signed_classify(c);
  CHECK(cls.d_annihilating_like);
  CHECK(cls.d_ordinary_annihilating());
  const auto next = d_moves(c);
  REQUIRE(next.size() == 1);
  CHECK(next[0] == move_d12(c));
  CHECK(next[0].sign == Sign::Minus);
  CHECK(signed_classify(next[0]).d_core_like);
  CHECK(primitive_orbit(c).size() == 2);

  const SignedBasedMatrix c_minus = signed_matrix(SignedDiagram(M, 2, Sign::Minus));
  CHECK_FALSE(signed_homology_equivalent(c, c_minus));
  CHECK(signed_homology_equivalent(c, next[0]));
  CHECK(signed_class_key(c) == signed_class_key(next[0]));
  CHECK(signed_class_key(c) != signed_class_key(c_minus));
}

TEST_CASE("standard primitive") {
  const SignedBasedMatrix c = printed_T_M_plus_C();
  const SignedBasedMatrix std_c = standard_primitive(c);
  CHECK(std_c.sign == Sign::Plus);
  CHECK(signed_homology_equivalent(std_c, c));
  CHECK(signed_classify(std_c).d_ordinary_annihilating());
  CHECK_THROWS_AS(standard_primitive(printed_T_M_plus_A()), InvalidArgument);
}

TEST_CASE("constructor and move preconditions") {
  CHECK_THROWS_AS(SignedBasedMatrix(printed_T_M(), 0, Sign::Plus), InvalidArgument);
  CHECK_THROWS_AS(SignedBasedMatrix(printed_T_M(), 6, Sign::Plus), InvalidArgument);
  CHECK_THROWS_AS(d_moves(printed_T_M_plus_A()), InvalidArgument);
  CHECK_THROWS_AS(move_d12(printed_T_M_plus_A()), InvalidArgument);
  CHECK_THROWS_AS(move_d21(printed_T_M_plus_C()), InvalidArgument);
  CHECK_THROWS_AS(move_d33(printed_T_M_plus_C()), InvalidArgument);
  CHECK_THROWS_AS(move_n(printed_T_M_plus_C(), 1), InvalidArgument);

  const SignedBasedMatrix c = printed_T_M_plus_C();
  CHECK(switch_sign(switch_sign(c)) == c);
  CHECK(switch_sign(c).sign == Sign::Minus);
}

TEST_CASE("D''12 and D''21 are inverse") {
  const SignedBasedMatrix c = printed_T_M_plus_C();
  const SignedBasedMatrix core = move_d12(c);
  const SignedBasedMatrix back = move_d21(core);
  CHECK(back == c);
}

TEST_CASE("self-complementary distinguished element") {
  // d with 2 b(d, h) = b(s, h): with s annihilating-like any zero row qualifies.
  const std::vector<Label> l{Label::base(), Label::arrow(0), Label::arrow(1)};
  const BasedMatrix b(l, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const SignedBasedMatrix m(b, 1, Sign::Plus);
  CHECK(signed_classify(m).d_self_complementary);
  const SignedBasedMatrix flipped = move_d33(m);
  CHECK(flipped.sign == Sign::Minus);
  CHECK(flipped.base == m.base);
}

TEST_CASE("signed canonical form fixes s and d") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const GaussDiagram g = random_diagram(n, rng);
    const int d = static_cast<int>(rng() % static_cast<unsigned>(n));
    const SignedBasedMatrix m = signed_matrix(SignedDiagram(g, d, trial % 2 ? Sign::Plus : Sign::Minus));
    std::vector<int> order(static_cast<std::size_t>(m.base.size()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    const int new_d = static_cast<int>(std::find(order.begin(), order.end(), m.d) - order.begin());
    const SignedBasedMatrix p(m.base.permuted(order), new_d, m.sign);
    CHECK(signed_canonical_form(p) == signed_canonical_form(m));
    CHECK(signed_canonical_form(switch_sign(m)) != signed_canonical_form(m));
  }
}

TEST_CASE("primitive orbits have at most two members") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const GaussDiagram g = random_diagram(n, rng);
    const SignedBasedMatrix m = signed_matrix(SignedDiagram(g, static_cast<int>(rng() % static_cast<unsigned>(n)), Sign::Plus));
    const SignedBasedMatrix p = reduce_signed(m);
    REQUIRE(is_primitive_signed(p));
    const auto orbit = primitive_orbit(p);
    CHECK(orbit.size() >= 1);
    CHECK(orbit.size() <= 2);
    for (const SignedBasedMatrix& q : orbit) {
      CHECK(is_primitive_signed(q));
      CHECK(signed_class_key(q) == signed_class_key(m));
    }
  }
}

TEST_CASE("signed homotopy moves preserve the signed homology class") {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    GaussDiagram g = random_diagram(n, rng);
    if (trial % 3 == 0) g = plant_type3(g, rng);
    const SignedDiagram s(g, static_cast<int>(rng() % static_cast<unsigned>(g.arrow_count())), Sign::Plus);
    const auto moves = applicable_signed_moves(s);
    if (moves.empty()) continue;
    const SignedDiagram t = apply_signed_move(s, moves[rng() % moves.size()]);
    CHECK(signed_class_key(signed_matrix(s)) == signed_class_key(signed_matrix(t)));
    ++checked;
  }
  CHECK(checked > 300);
}
