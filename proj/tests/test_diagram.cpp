#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "virtstring/based_matrix.hpp"
#include "virtstring/diagram.hpp"
#include "virtstring/error.hpp"

using namespace virtstring;

namespace {

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("parse and serialize round trip") {
  const std::string text = "H0 H1 H2 T0 H3 T1 H4 T2 T3 T4";
  const GaussDiagram g = parse_diagram(text);
  CHECK(g.arrow_count() == 5);
  CHECK(g.slot_count() == 10);
  CHECK(serialize_diagram(g) == text);
  CHECK(parse_diagram("  T0\tH0 \n") == parse_diagram("T0 H0"));
  CHECK(parse_diagram("").empty());
  CHECK(serialize_diagram(GaussDiagram{}).empty());
}

TEST_CASE("malformed arrow lists are rejected") {
  CHECK_THROWS_AS(parse_diagram("T0"), ParseError);
  CHECK_THROWS_AS(parse_diagram("T0 T0"), ParseError);
  CHECK_THROWS_AS(parse_diagram("T0 H0 T2 H2"), ParseError);  // ids not contiguous
  CHECK_THROWS_AS(parse_diagram("X0 H0"), ParseError);
  CHECK_THROWS_AS(parse_diagram("T0 Ha"), ParseError);
  CHECK_THROWS_AS(parse_diagram("T-1 H-1"), ParseError);
  CHECK_THROWS_AS(parse_diagram("T0 H0 T1 T1"), ParseError);
}

TEST_CASE("slot geometry") {
  const GaussDiagram g = parse_diagram("T0 T1 H0 H1");
  CHECK(g.tail_slot(0) == 0);
  CHECK(g.head_slot(0) == 2);
  CHECK(g.tail_slot(1) == 1);
  CHECK(g.head_slot(1) == 3);
  CHECK(g.inside_arc(0, 2, 1));
  CHECK_FALSE(g.inside_arc(0, 2, 3));
  CHECK(g.inside_arc(2, 0, 3));
  CHECK_FALSE(g.inside_arc(0, 2, 0));
  CHECK(g.adjacent(3, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.wrap(-1) == 3);
  CHECK(g.wrap(5) == 1);
}

TEST_CASE("canonical key ignores basepoint and arrow names") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    const GaussDiagram g = random_diagram(n, rng);
    const int k = n == 0 ? 0 : static_cast<int>(rng() % static_cast<unsigned>(2 * n));
    const GaussDiagram h = relabel(rotate(g, k), random_permutation(n, rng));
    CHECK(canonical_key(g) == canonical_key(h));
    const GaussDiagram c = canonical_diagram(g);
    CHECK(canonical_key(c) == canonical_key(g));
    CHECK(canonical_diagram(c) == c);
  }
}

TEST_CASE("canonical key separates distinct strings") {
  // The one-arrow strings coincide; a crossed pair differs from a nested pair.
  CHECK(canonical_key(parse_diagram("T0 H0")) == canonical_key(parse_diagram("H0 T0")));
  CHECK(canonical_key(parse_diagram("T0 T1 H0 H1")) != canonical_key(parse_diagram("T0 T1 H1 H0")));
  CHECK(canonical_key(parse_diagram("T0 T1 H0 H1")) != canonical_key(parse_diagram("T0 H1 T1 H0")));
}

TEST_CASE("reverse_slots is an involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussDiagram g = random_diagram(static_cast<int>(rng() % 6), rng);
    CHECK(reverse_slots(reverse_slots(g)) == g);
  }
}

TEST_CASE("restriction and arcs") {
  const GaussDiagram M = make_example_M();
  const GaussDiagram r = restrict_to(M, std::vector<int>{1, 3});
  CHECK(r.arrow_count() == 2);
  CHECK(serialize_diagram(r) == "H0 H1 T0 T1");

  // Everything strictly between the tail and head of A in M.
  const GaussDiagram inner = sub_diagram_in_arc(M, M.tail_slot(0), M.head_slot(0));
  CHECK(inner.arrow_count() == 2);  // B and D
  CHECK(sub_diagram_in_arc(M, 0, 1).empty());
}

TEST_CASE("signed diagrams") {
  const GaussDiagram g = parse_diagram("T0 H0 T1 H1");
  CHECK(is_semi_trivial(SignedDiagram(g, 0, Sign::Plus)));
  CHECK(is_semi_trivial(SignedDiagram(parse_diagram("T0 T1 H1 H0"), 1, Sign::Minus)));
  CHECK_FALSE(is_semi_trivial(SignedDiagram(parse_diagram("T0 T1 H0 H1"), 0, Sign::Plus)));
  CHECK_THROWS(SignedDiagram(g, 2, Sign::Plus));

  const GaussDiagram M = make_example_M();
  const SignedDiagram a(M, 0, Sign::Plus);
  CHECK(canonical_key_signed(a) != canonical_key_signed(SignedDiagram(M, 0, Sign::Minus)));
  CHECK(canonical_key_signed(a) != canonical_key_signed(SignedDiagram(M, 1, Sign::Plus)));
  const SignedDiagram c = canonical_signed_diagram(a);
  CHECK(c.d == 0);
  CHECK(c.sign == Sign::Plus);
  CHECK(canonical_key_signed(c) == canonical_key_signed(a));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const GaussDiagram h = random_diagram(n, rng);
    const int d = static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto perm = random_permutation(n, rng);
    const SignedDiagram x(h, d, Sign::Minus);
    const SignedDiagram y(relabel(rotate(h, 1), perm), perm[static_cast<std::size_t>(d)], Sign::Minus);
    CHECK(canonical_key_signed(x) == canonical_key_signed(y));
  }
}

TEST_CASE("built-in examples") {
  const GaussDiagram M = make_example_M();
  CHECK(M.arrow_count() == 5);
  CHECK(arrow_name(0) == "A");
  CHECK(arrow_name(4) == "E");
  CHECK(arrow_name(26) == "e26");

  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}, {4, 1}}) {
    const GaussDiagram a = make_alpha_pq(p, q);
    CHECK(a.arrow_count() == p + q);
    const BasedMatrix m = based_matrix(a);
    for (int i = 1; i <= p; ++i) CHECK(m(i, 0) == q);
    for (int j = 1; j <= q; ++j) CHECK(m(p + j, 0) == -p);
  }
  CHECK_THROWS_AS(make_alpha_pq(0, 2), InvalidArgument);
}

TEST_CASE("random diagrams are valid") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 8; ++n) {
    const GaussDiagram g = random_diagram(n, rng);
    CHECK(g.arrow_count() == n);
    CHECK(parse_diagram(serialize_diagram(g)) == g);
  }
}
