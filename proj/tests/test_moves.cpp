#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "virtstring/based_matrix.hpp"
#include "virtstring/error.hpp"
#include "virtstring/moves.hpp"
#include "virtstring/paper_check.hpp"

using namespace virtstring;

namespace {

int arrow_delta(MoveKind k) {
  switch (k) {
    case MoveKind::T1Add: return 1;
    case MoveKind::T2Add: return 2;
    case MoveKind::T1Remove: return -1;
    case MoveKind::T2Remove: return -2;
    default: return 0;
  }
}

bool reaches(const GaussDiagram& from, const CanonicalKey& target, KindSet kinds) {
  for (const Move& m : applicable_moves(from, kinds))
    if (canonical_key(apply_move(from, m)) == target) return true;
  return false;
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (MoveKind k : {MoveKind::T1Add, MoveKind::T1Remove, MoveKind::T2Add, MoveKind::T2Remove, MoveKind::T3a,
                     MoveKind::T3b, MoveKind::SST2, MoveKind::SST3a, MoveKind::SST3b})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("T4"), ParseError);
  CHECK(status_name(SearchStatus::NoWithinBounds) == "no_within_bounds");
}

TEST_CASE("move enumeration on the empty string") {
  const auto moves = applicable_moves(GaussDiagram{});
  // Two Type 1 forms at the single gap, and the Type 2 blocks at that gap.
  CHECK(std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == MoveKind::T1Add; }) == 2);
  CHECK(std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == MoveKind::T2Add; }) == 8);
  for (const Move& m : moves) CHECK(apply_move(GaussDiagram{}, m).arrow_count() == arrow_delta(m.kind));
}

TEST_CASE("reductions on small strings") {
  const GaussDiagram loop = parse_diagram("T0 H0");
  const auto moves = applicable_moves(loop, kReducingKinds);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].kind == MoveKind::T1Remove);
  CHECK(apply_move(loop, moves[0]).empty());

  // Tail of 0 next to head of 1 and head of 0 next to tail of 1.
  const GaussDiagram bigon = parse_diagram("T0 H1 H0 T1");
  bool found = false;
  for (const Move& m : applicable_moves(bigon, kReducingKinds))
    if (m.kind == MoveKind::T2Remove) {
      found = true;
      CHECK(apply_move(bigon, m).empty());
    }
  CHECK(found);
  CHECK(applicable_moves(make_example_M(), kReducingKinds).empty());
}

TEST_CASE("applied moves are legal and change the arrow count as expected") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    GaussDiagram g = random_diagram(static_cast<int>(rng() % 5), rng);
    if (trial % 3 == 0) g = plant_type3(g, rng);
    for (const Move& m : applicable_moves(g)) {
      CHECK(is_applicable(g, m));
      std::vector<int> id_map;
      const GaussDiagram h = apply_move(g, m, &id_map);
      CHECK(h.arrow_count() == g.arrow_count() + arrow_delta(m.kind));
      CHECK(static_cast<int>(id_map.size()) == g.arrow_count());
      const int dropped = static_cast<int>(std::count(id_map.begin(), id_map.end(), -1));
      CHECK(dropped == std::max(0, -arrow_delta(m.kind)));
    }
  }
}

TEST_CASE("every move has an inverse move") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    GaussDiagram g = random_diagram(static_cast<int>(rng() % 4), rng);
    if (trial % 2 == 0) g = plant_type3(g, rng);
    const CanonicalKey key = canonical_key(g);
    for (const Move& m : applicable_moves(g)) {
      const GaussDiagram h = apply_move(g, m);
      switch (m.kind) {
        case MoveKind::T1Add: CHECK(reaches(h, key, kind_bit(MoveKind::T1Remove))); break;
        case MoveKind::T2Add: CHECK(reaches(h, key, kind_bit(MoveKind::T2Remove))); break;
        case MoveKind::T1Remove: CHECK(reaches(h, key, kind_bit(MoveKind::T1Add))); break;
        case MoveKind::T2Remove: CHECK(reaches(h, key, kind_bit(MoveKind::T2Add))); break;
        default: CHECK(reaches(h, key, kType3Kinds)); break;
      }
    }
  }
}

TEST_CASE("ordinary moves preserve the primitive matrix") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    GaussDiagram g = random_diagram(1 + static_cast<int>(rng() % 5), rng);
    if (trial % 4 == 0) g = plant_type3(g, rng);
    const Move m = random_move(g, rng);
    const GaussDiagram h = apply_move(g, m);
    CHECK(canonical_form(reduce_to_primitive(based_matrix(g)).primitive) ==
          canonical_form(reduce_to_primitive(based_matrix(h)).primitive));
    if (m.kind == MoveKind::T3a || m.kind == MoveKind::T3b) {
      // Type 3 leaves the based matrix itself unchanged up to isomorphism.
      CHECK(canonical_form(based_matrix(g)) == canonical_form(based_matrix(h)));
    }
  }
}

TEST_CASE("illegal moves are rejected") {
  const GaussDiagram M = make_example_M();
  Move bad;
  bad.kind = MoveKind::T1Remove;
  bad.arrows = {0, -1};
  CHECK_FALSE(is_applicable(M, bad));
  CHECK_THROWS_AS(apply_move(M, bad), InvalidArgument);
  Move t3;
  t3.kind = MoveKind::T3a;
  t3.slots = {0, 2, 4};
  CHECK_THROWS_AS(apply_move(M, t3), InvalidArgument);
  Move gap;
  gap.kind = MoveKind::T1Add;
  gap.slots = {99, -1, -1};
  CHECK_THROWS_AS(apply_move(M, gap), InvalidArgument);
}

TEST_CASE("planted Type 3 configurations are found") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const GaussDiagram g = plant_type3(random_diagram(static_cast<int>(rng() % 4), rng), rng);
    CHECK_FALSE(applicable_moves(g, kType3Kinds).empty());
  }
}

TEST_CASE("Type 3 orbit of M") {
  const OrbitCertificate c = type3_orbit(make_example_M());
  CHECK(c.orbit_size == 1);
  CHECK(c.irreducible);
  CHECK_FALSE(c.witness.has_value());
  CHECK(c.start_key == canonical_key(make_example_M()));
  CHECK(type3_orbit_keys(make_example_M()).size() == 1);
}

TEST_CASE("orbits of reducible strings carry a witness") {
  std::mt19937_64 seeded(1);
  const GaussDiagram g = plant_type3(parse_diagram("T0 H0"), seeded);
  const OrbitCertificate c = type3_orbit(g);
  CHECK(c.orbit_size >= 2);
  CHECK_FALSE(c.irreducible);
  REQUIRE(c.witness.has_value());
  CHECK(is_applicable(c.witness->member, c.witness->move));
  CHECK_THROWS_AS(type3_orbit(g, 1), BudgetExceeded);

  const auto keys = type3_orbit_keys(g);
  CHECK(keys.size() == c.orbit_size);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  // Every orbit member has the same orbit.
  for (const CanonicalKey& k : keys) CHECK(std::binary_search(keys.begin(), keys.end(), k));
}

TEST_CASE("bounded homotopy search finds scrambled copies") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const GaussDiagram g = random_diagram(static_cast<int>(rng() % 4), rng);
    GaussDiagram h = g;
    for (int step = 0; step < 2; ++step) h = apply_move(h, random_move(h, rng));
    const int cap = std::max(g.arrow_count(), h.arrow_count()) + 2;
    const SearchResult r = homotopic_bounded(g, h, cap, 200'000);
    REQUIRE(r.status == SearchStatus::Yes);
    CHECK(canonical_key(replay_path(g, r.path)) == canonical_key(h));
    CHECK(r.max_arrows == cap);
  }
}

TEST_CASE("M is not homotopic to the empty string within n+2 arrows") {
  const SearchResult r = homotopic_bounded(make_example_M(), GaussDiagram{});
  CHECK(r.status == SearchStatus::NoWithinBounds);
  CHECK(r.max_arrows == 7);
  const SearchResult tight = homotopic_bounded(make_example_M(), GaussDiagram{}, 7, 5);
  CHECK(tight.status == SearchStatus::BudgetExceeded);
  CHECK_THROWS_AS(homotopic_bounded(make_example_M(), GaussDiagram{}, 3), InvalidArgument);
}

TEST_CASE("descent to the empty string") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    GaussDiagram g;
    for (int step = 0; step < 3; ++step) g = apply_move(g, random_move(g, rng, kind_bit(MoveKind::T1Add) | kind_bit(MoveKind::T2Add) | kType3Kinds));
    const SearchResult r = descend_to_empty(g, 100'000);
    if (r.status == SearchStatus::Yes) CHECK(replay_path(g, r.path).empty());
  }
  CHECK(descend_to_empty(parse_diagram("T0 H1 H0 T1"), 100).status == SearchStatus::Yes);
  CHECK(descend_to_empty(make_example_M(), 100'000).status != SearchStatus::Yes);
}

TEST_CASE("signed moves keep track of the distinguished arrow") {
  std::mt19937_64 rng(37);
  int sst2 = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const GaussDiagram g = random_diagram(n, rng);
    const SignedDiagram s(g, static_cast<int>(rng() % static_cast<unsigned>(n)), Sign::Plus);
    for (const Move& m : applicable_signed_moves(s)) {
      const SignedDiagram t = apply_signed_move(s, m);
      CHECK(t.base.arrow_count() == n + arrow_delta(m.kind));
      if (m.kind == MoveKind::SST2) {
        // No arrow disappears; d moves to its partner and the sign flips.
        ++sst2;
        CHECK(t.sign == Sign::Minus);
        CHECK(canonical_key(t.base) == canonical_key(s.base));
      } else {
        CHECK(t.sign == Sign::Plus);
      }
      if (m.kind == MoveKind::T1Remove || m.kind == MoveKind::T2Remove)
        CHECK(std::find(m.arrows.begin(), m.arrows.end(), s.d) == m.arrows.end());
    }
  }
  CHECK(sst2 > 0);
}

TEST_CASE("signed search") {
  const GaussDiagram base = parse_diagram("T0 T1 H0 H1");
  const SignedDiagram s(base, 0, Sign::Plus);
  SignedDiagram t = s;
  std::mt19937_64 rng(41);
  for (int step = 0; step < 2; ++step) {
    const auto moves = applicable_signed_moves(t);
    t = apply_signed_move(t, moves[rng() % moves.size()]);
  }
  const SearchResult r = homotopic_signed_bounded(s, t, std::max(s.base.arrow_count(), t.base.arrow_count()) + 2,
                                                  200'000);
  REQUIRE(r.status == SearchStatus::Yes);
  CHECK(canonical_key_signed(replay_signed_path(s, r.path)) == canonical_key_signed(t));
}
