#include "virtstring/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "virtstring/error.hpp"

namespace virtstring {

namespace {

constexpr std::array<std::string_view, 9> kKindNames{"T1Add", "T1Remove", "T2Add", "T2Remove", "T3a",
                                                     "T3b",   "SST2",     "SST3a", "SST3b"};

bool has(KindSet set, MoveKind k) { return (set & kind_bit(k)) != 0; }

int gap_count(const GaussDiagram& g) { return std::max(g.slot_count(), 1); }

struct Block {
  int gap;
  std::array<Endpoint, 2> ends;
};

// Inserts the blocks before the slots named by their gaps. Blocks sharing a gap
// keep their listed order.
GaussDiagram insert_blocks(const GaussDiagram& g, std::vector<Block> blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.gap < b.gap; });
  std::vector<Endpoint> out;
  out.reserve(static_cast<std::size_t>(g.slot_count()) + 2 * blocks.size());
  std::size_t next = 0;
  for (int i = 0; i <= g.slot_count(); ++i) {
    while (next < blocks.size() && blocks[next].gap == i) {
      out.push_back(blocks[next].ends[0]);
      out.push_back(blocks[next].ends[1]);
      ++next;
    }
    if (i < g.slot_count()) out.push_back(g.at(i));
  }
  return GaussDiagram(std::move(out));
}

GaussDiagram remove_arrows(const GaussDiagram& g, std::vector<int> gone, std::vector<int>* id_map) {
  std::vector<int> map(static_cast<std::size_t>(g.arrow_count()));
  int next = 0;
  for (int a = 0; a < g.arrow_count(); ++a)
    map[static_cast<std::size_t>(a)] = std::find(gone.begin(), gone.end(), a) != gone.end() ? -1 : next++;
  std::vector<Endpoint> out;
  for (const Endpoint& e : g.slots()) {
    const int id = map[static_cast<std::size_t>(e.arrow)];
    if (id >= 0) out.push_back({id, e.role});
  }
  if (id_map) *id_map = std::move(map);
  return GaussDiagram(std::move(out));
}

bool t1_removable(const GaussDiagram& g, int a) { return g.adjacent(g.tail_slot(a), g.head_slot(a)); }

bool t2_pair(const GaussDiagram& g, int e, int f) {
  return e != f && g.adjacent(g.tail_slot(e), g.head_slot(f)) && g.adjacent(g.head_slot(e), g.tail_slot(f));
}

struct Type3Match {
  MoveKind kind;
  int form;
};

// Pattern of three adjacent slot pairs starting at the given slots, if they form
// the left- or right-hand side of a Type 3a or 3b move.
std::optional<Type3Match> type3_pattern(const GaussDiagram& g, const std::array<int, 3>& first) {
  const int size = g.slot_count();
  if (size < 6) return std::nullopt;
  std::array<int, 6> s{};
  for (int k = 0; k < 3; ++k) {
    s[static_cast<std::size_t>(2 * k)] = g.wrap(first[static_cast<std::size_t>(k)]);
    s[static_cast<std::size_t>(2 * k + 1)] = g.wrap(first[static_cast<std::size_t>(k)] + 1);
  }
  std::array<int, 6> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  auto arrow = [&](int t, int h) {
    const Endpoint& et = g.at(t);
    const Endpoint& eh = g.at(h);
    return et.role == Role::Tail && eh.role == Role::Head && et.arrow == eh.arrow;
  };
  std::array<int, 3> p{0, 1, 2};
  do {
    const int a0 = s[static_cast<std::size_t>(2 * p[0])], a1 = s[static_cast<std::size_t>(2 * p[0] + 1)];
    const int b0 = s[static_cast<std::size_t>(2 * p[1])], b1 = s[static_cast<std::size_t>(2 * p[1] + 1)];
    const int c0 = s[static_cast<std::size_t>(2 * p[2])], c1 = s[static_cast<std::size_t>(2 * p[2] + 1)];
    if (arrow(a1, b0) && arrow(b1, c0) && arrow(c1, a0)) return Type3Match{MoveKind::T3a, 0};
    if (arrow(a0, b1) && arrow(b0, c1) && arrow(c0, a1)) return Type3Match{MoveKind::T3a, 1};
    if (arrow(a0, b0) && arrow(a1, c0) && arrow(b1, c1)) return Type3Match{MoveKind::T3b, 0};
    if (arrow(a1, b1) && arrow(a0, c1) && arrow(b0, c0)) return Type3Match{MoveKind::T3b, 1};
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::array<int, 3> type3_arrows(const GaussDiagram& g, const std::array<int, 3>& first) {
  std::vector<int> ids;
  for (int f : first) {
    ids.push_back(g.at(g.wrap(f)).arrow);
    ids.push_back(g.at(g.wrap(f + 1)).arrow);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return {ids[0], ids[1], ids[2]};
}

void append_type3(const GaussDiagram& g, KindSet kinds, std::vector<Move>& out) {
  const int size = g.slot_count();
  if (size < 6) return;
  auto mixed = [&](int i) { return g.at(i).arrow != g.at(g.wrap(i + 1)).arrow; };
  for (int i = 0; i < size; ++i) {
    if (!mixed(i)) continue;
    for (int j = i + 2; j < size; ++j) {
      if (!mixed(j)) continue;
      for (int k = j + 2; k < size; ++k) {
        if (!mixed(k) || g.wrap(k + 1) == i) continue;
        const std::array<int, 3> first{i, j, k};
        const auto match = type3_pattern(g, first);
        if (!match || !has(kinds, match->kind)) continue;
        out.push_back({match->kind, {i, j, k}, {-1, -1}, match->form});
      }
    }
  }
}

MoveKind signed_type3(MoveKind k) { return k == MoveKind::T3a ? MoveKind::SST3a : MoveKind::SST3b; }
MoveKind plain_type3(MoveKind k) { return k == MoveKind::SST3a ? MoveKind::T3a : MoveKind::T3b; }

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(std::string("move not applicable: ") + what);
}

bool arrow_ok(const GaussDiagram& g, int a) { return a >= 0 && a < g.arrow_count(); }

void check_type3(const GaussDiagram& g, const Move& m, MoveKind plain) {
  for (int f : m.slots) require(f >= 0 && f < g.slot_count(), "slot out of range");
  const auto match = type3_pattern(g, m.slots);
  require(match && match->kind == plain && match->form == m.form, "no Type 3 configuration at these slots");
}

GaussDiagram swap_pairs(const GaussDiagram& g, const std::array<int, 3>& first) {
  std::vector<Endpoint> out(g.slots().begin(), g.slots().end());
  for (int f : first) std::swap(out[static_cast<std::size_t>(g.wrap(f))], out[static_cast<std::size_t>(g.wrap(f + 1))]);
  return GaussDiagram(std::move(out));
}

std::vector<int> identity_map(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return map;
}

// Key of a diagram already in canonical form: its slots encoded directly.
std::string encode(const GaussDiagram& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.slot_count()));
  for (const Endpoint& e : g.slots()) out.push_back(static_cast<char>((e.arrow << 1) | static_cast<int>(e.role)));
  return out;
}

// --- bounded search over a state space ------------------------------------

struct PlainSpace {
  using State = GaussDiagram;
  KindSet kinds = kOrdinaryKinds;
  int cap = 0;

  static State canon(const State& s) { return canonical_diagram(s); }
  static std::string key_of_canon(const State& s) { return encode(s); }
  static std::string key(const State& s) { return canonical_key(s).bytes; }
  static int arrows(const State& s) { return s.arrow_count(); }
  std::vector<Move> moves(const State& s) const {
    KindSet k = kinds;
    if (s.arrow_count() + 1 > cap) k &= static_cast<KindSet>(~kind_bit(MoveKind::T1Add));
    if (s.arrow_count() + 2 > cap) k &= static_cast<KindSet>(~kind_bit(MoveKind::T2Add));
    return applicable_moves(s, k);
  }
  static State apply(const State& s, const Move& m) { return apply_move(s, m); }
};

struct SignedSpace {
  using State = SignedDiagram;
  KindSet kinds = kOrdinaryKinds | kSignedOnlyKinds;
  int cap = 0;

  static State canon(const State& s) { return canonical_signed_diagram(s); }
  static std::string key_of_canon(const State& s) { return std::string(1, sign_char(s.sign)) + encode(s.base); }
  static std::string key(const State& s) { return canonical_key_signed(s).bytes; }
  static int arrows(const State& s) { return s.base.arrow_count(); }
  std::vector<Move> moves(const State& s) const {
    KindSet k = kinds;
    if (s.base.arrow_count() + 1 > cap) k &= static_cast<KindSet>(~kind_bit(MoveKind::T1Add));
    if (s.base.arrow_count() + 2 > cap) k &= static_cast<KindSet>(~kind_bit(MoveKind::T2Add));
    return applicable_signed_moves(s, k);
  }
  static State apply(const State& s, const Move& m) { return apply_signed_move(s, m); }
};

template <class Space>
struct Node {
  typename Space::State rep;
  std::string parent;
  Move move;
  bool root = false;
};

template <class Space>
using Side = std::map<std::string, Node<Space>>;

// Move on canonical rep `from` leading to a state with key `to`.
template <class Space>
Move find_edge(const Space& space, const typename Space::State& from, const std::string& to) {
  for (const Move& m : space.moves(from))
    if (Space::key(Space::apply(from, m)) == to) return m;
  throw Error("search: lost an edge while rebuilding a path");
}

template <class Space>
SearchResult bidirectional(const Space& space, const typename Space::State& g, const typename Space::State& h,
                           std::size_t max_states) {
  SearchResult result;
  result.max_arrows = space.cap;
  result.max_states = max_states;

  std::array<Side<Space>, 2> side;
  std::array<std::vector<std::string>, 2> frontier;
  const typename Space::State roots[2] = {Space::canon(g), Space::canon(h)};
  for (int s = 0; s < 2; ++s) {
    const std::string k = Space::key_of_canon(roots[s]);
    side[static_cast<std::size_t>(s)].emplace(k, Node<Space>{roots[s], {}, {}, true});
    frontier[static_cast<std::size_t>(s)].push_back(k);
  }
  std::optional<std::string> meet;
  if (frontier[0][0] == frontier[1][0]) meet = frontier[0][0];

  while (!meet) {
    if (frontier[0].empty() || frontier[1].empty()) {
      result.status = SearchStatus::NoWithinBounds;
      result.states = side[0].size() + side[1].size();
      return result;
    }
    const std::size_t s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    for (const std::string& k : frontier[s]) {
      const typename Space::State rep = side[s].at(k).rep;
      for (const Move& m : space.moves(rep)) {
        typename Space::State child = Space::canon(Space::apply(rep, m));
        std::string ck = Space::key_of_canon(child);
        if (side[s].contains(ck)) continue;
        side[s].emplace(ck, Node<Space>{std::move(child), k, m, false});
        if (side[1 - s].contains(ck)) {
          meet = ck;
          break;
        }
        if (side[0].size() + side[1].size() > max_states) {
          result.status = SearchStatus::BudgetExceeded;
          result.states = side[0].size() + side[1].size();
          return result;
        }
        next.push_back(std::move(ck));
      }
      if (meet) break;
    }
    std::sort(next.begin(), next.end());
    frontier[s] = std::move(next);
  }

  std::vector<Move> forward;
  for (std::string k = *meet; !side[0].at(k).root; k = side[0].at(k).parent) forward.push_back(side[0].at(k).move);
  std::reverse(forward.begin(), forward.end());
  for (std::string k = *meet; !side[1].at(k).root;) {
    const std::string parent = side[1].at(k).parent;
    forward.push_back(find_edge(space, side[1].at(k).rep, parent));
    k = parent;
  }
  result.status = SearchStatus::Yes;
  result.path = std::move(forward);
  result.states = side[0].size() + side[1].size();
  return result;
}

}  // namespace

std::string_view kind_name(MoveKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

MoveKind parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<MoveKind>(i);
  throw ParseError("unknown move kind '" + std::string(name) + "'");
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Yes: return "yes";
    case SearchStatus::NoWithinBounds: return "no_within_bounds";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

std::vector<Move> applicable_moves(const GaussDiagram& g, KindSet kinds) {
  std::vector<Move> out;
  const int n = g.arrow_count();
  if (has(kinds, MoveKind::T1Add))
    for (int gap = 0; gap < gap_count(g); ++gap)
      for (int form = 0; form < 2; ++form) out.push_back({MoveKind::T1Add, {gap, -1, -1}, {-1, -1}, form});
  if (has(kinds, MoveKind::T1Remove))
    for (int a = 0; a < n; ++a)
      if (t1_removable(g, a)) out.push_back({MoveKind::T1Remove, {-1, -1, -1}, {a, -1}, 0});
  if (has(kinds, MoveKind::T2Add))
    for (int g1 = 0; g1 < gap_count(g); ++g1)
      for (int g2 = 0; g2 < gap_count(g); ++g2)
        for (int form = 0; form < (g1 == g2 ? 8 : 4); ++form)
          out.push_back({MoveKind::T2Add, {g1, g2, -1}, {-1, -1}, form});
  if (has(kinds, MoveKind::T2Remove))
    for (int e = 0; e < n; ++e)
      for (int f = e + 1; f < n; ++f)
        if (t2_pair(g, e, f)) out.push_back({MoveKind::T2Remove, {-1, -1, -1}, {e, f}, 0});
  if (kinds & kType3Kinds) append_type3(g, kinds, out);
  return out;
}

bool is_applicable(const GaussDiagram& g, const Move& m) {
  try {
    apply_move(g, m);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

GaussDiagram apply_move(const GaussDiagram& g, const Move& m, std::vector<int>* id_map) {
  const int n = g.arrow_count();
  if (id_map) *id_map = identity_map(n);
  switch (m.kind) {
    case MoveKind::T1Add: {
      require(m.slots[0] >= 0 && m.slots[0] < gap_count(g) && (m.form == 0 || m.form == 1), "bad T1Add site");
      const Endpoint t{n, Role::Tail}, h{n, Role::Head};
      return insert_blocks(g, {{m.slots[0], m.form == 0 ? std::array{t, h} : std::array{h, t}}});
    }
    case MoveKind::T1Remove:
      require(arrow_ok(g, m.arrows[0]) && t1_removable(g, m.arrows[0]), "arrow endpoints not adjacent");
      return remove_arrows(g, {m.arrows[0]}, id_map);
    case MoveKind::T2Add: {
      const int g1 = m.slots[0], g2 = m.slots[1];
      require(g1 >= 0 && g1 < gap_count(g) && g2 >= 0 && g2 < gap_count(g), "bad T2Add gaps");
      require(m.form >= 0 && m.form < (g1 == g2 ? 8 : 4), "bad T2Add form");
      const Endpoint te{n, Role::Tail}, he{n, Role::Head}, tf{n + 1, Role::Tail}, hf{n + 1, Role::Head};
      Block b1{g1, (m.form & 1) ? std::array{hf, te} : std::array{te, hf}};
      Block b2{g2, (m.form & 2) ? std::array{tf, he} : std::array{he, tf}};
      if (m.form & 4) return insert_blocks(g, {b2, b1});
      return insert_blocks(g, {b1, b2});
    }
    case MoveKind::T2Remove:
      require(arrow_ok(g, m.arrows[0]) && arrow_ok(g, m.arrows[1]) && m.arrows[0] < m.arrows[1], "bad T2Remove ids");
      require(t2_pair(g, m.arrows[0], m.arrows[1]), "arrows do not form a Type 2 pair");
      return remove_arrows(g, {m.arrows[0], m.arrows[1]}, id_map);
    case MoveKind::T3a:
    case MoveKind::T3b:
      check_type3(g, m, m.kind);
      return swap_pairs(g, m.slots);
    case MoveKind::SST2:
    case MoveKind::SST3a:
    case MoveKind::SST3b:
      throw InvalidArgument("signed singular move applied to an ordinary diagram");
  }
  throw InvalidArgument("unknown move kind");
}

std::vector<Move> applicable_signed_moves(const SignedDiagram& g, KindSet kinds) {
  const GaussDiagram& b = g.base;
  KindSet plain = kinds & kOrdinaryKinds;
  if (has(kinds, MoveKind::SST3a)) plain |= kind_bit(MoveKind::T3a);
  if (has(kinds, MoveKind::SST3b)) plain |= kind_bit(MoveKind::T3b);
  if (has(kinds, MoveKind::SST2)) plain |= kind_bit(MoveKind::T2Remove);

  std::vector<Move> out;
  std::vector<Move> sst2;
  for (Move m : applicable_moves(b, plain)) {
    switch (m.kind) {
      case MoveKind::T1Remove:
        if (m.arrows[0] != g.d && has(kinds, MoveKind::T1Remove)) out.push_back(m);
        break;
      case MoveKind::T2Remove:
        if (m.arrows[0] == g.d || m.arrows[1] == g.d) {
          if (has(kinds, MoveKind::SST2)) {
            const int partner = m.arrows[0] == g.d ? m.arrows[1] : m.arrows[0];
            sst2.push_back({MoveKind::SST2, {-1, -1, -1}, {g.d, partner}, 0});
          }
        } else if (has(kinds, MoveKind::T2Remove)) {
          out.push_back(m);
        }
        break;
      case MoveKind::T3a:
      case MoveKind::T3b: {
        const auto ids = type3_arrows(b, m.slots);
        const bool touches = std::find(ids.begin(), ids.end(), g.d) != ids.end();
        if (touches) {
          m.kind = signed_type3(m.kind);
          if (has(kinds, m.kind)) out.push_back(m);
        } else if (has(kinds, m.kind)) {
          out.push_back(m);
        }
        break;
      }
      default:
        out.push_back(m);
    }
  }
  out.insert(out.end(), sst2.begin(), sst2.end());
  return out;
}

SignedDiagram apply_signed_move(const SignedDiagram& g, const Move& m) {
  const GaussDiagram& b = g.base;
  switch (m.kind) {
    case MoveKind::SST2:
      require(m.arrows[0] == g.d && arrow_ok(b, m.arrows[1]) && t2_pair(b, m.arrows[0], m.arrows[1]),
              "SST2 needs the distinguished arrow and its Type 2 partner");
      return SignedDiagram(b, m.arrows[1], flip(g.sign));
    case MoveKind::SST3a:
    case MoveKind::SST3b: {
      check_type3(b, m, plain_type3(m.kind));
      const auto ids = type3_arrows(b, m.slots);
      require(std::find(ids.begin(), ids.end(), g.d) != ids.end(), "signed Type 3 move must involve d");
      return SignedDiagram(swap_pairs(b, m.slots), g.d, g.sign);
    }
    case MoveKind::T1Remove:
      require(m.arrows[0] != g.d, "ordinary move may not remove the distinguished arrow");
      break;
    case MoveKind::T2Remove:
      require(m.arrows[0] != g.d && m.arrows[1] != g.d, "ordinary move may not remove the distinguished arrow");
      break;
    case MoveKind::T3a:
    case MoveKind::T3b: {
      check_type3(b, m, m.kind);
      const auto ids = type3_arrows(b, m.slots);
      require(std::find(ids.begin(), ids.end(), g.d) == ids.end(), "ordinary Type 3 move may not involve d");
      break;
    }
    default:
      break;
  }
  std::vector<int> map;
  GaussDiagram moved = apply_move(b, m, &map);
  return SignedDiagram(std::move(moved), map[static_cast<std::size_t>(g.d)], g.sign);
}

std::vector<CanonicalKey> type3_orbit_keys(const GaussDiagram& g, std::size_t max_states) {
  if (max_states == 0) throw BudgetExceeded("Type 3 orbit: zero state budget");
  std::map<std::string, GaussDiagram> seen;
  std::vector<std::string> frontier{encode(canonical_diagram(g))};
  seen.emplace(frontier[0], canonical_diagram(g));
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& k : frontier) {
      const GaussDiagram rep = seen.at(k);
      for (const Move& m : applicable_moves(rep, kType3Kinds)) {
        GaussDiagram child = canonical_diagram(apply_move(rep, m));
        std::string ck = encode(child);
        if (seen.contains(ck)) continue;
        seen.emplace(ck, std::move(child));
        if (seen.size() > max_states) throw BudgetExceeded("Type 3 orbit exceeds " + std::to_string(max_states) + " states");
        next.push_back(std::move(ck));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<CanonicalKey> out;
  for (const auto& [k, rep] : seen) out.push_back({k});
  return out;
}

OrbitCertificate type3_orbit(const GaussDiagram& g, std::size_t max_states) {
  if (max_states == 0) throw BudgetExceeded("Type 3 orbit: zero state budget");
  OrbitCertificate cert;
  cert.start_key = canonical_key(g);
  cert.max_states = max_states;

  std::map<std::string, GaussDiagram> seen;
  const GaussDiagram root = canonical_diagram(g);
  std::vector<std::string> frontier{encode(root)};
  seen.emplace(frontier[0], root);
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& k : frontier) {
      const GaussDiagram rep = seen.at(k);
      if (!cert.witness) {
        const std::vector<Move> red = applicable_moves(rep, kReducingKinds);
        if (!red.empty()) cert.witness = OrbitWitness{rep, red.front()};
      }
      for (const Move& m : applicable_moves(rep, kType3Kinds)) {
        GaussDiagram child = canonical_diagram(apply_move(rep, m));
        std::string ck = encode(child);
        if (seen.contains(ck)) continue;
        seen.emplace(ck, std::move(child));
        if (seen.size() > max_states) throw BudgetExceeded("Type 3 orbit exceeds " + std::to_string(max_states) + " states");
        next.push_back(std::move(ck));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  cert.orbit_size = seen.size();
  cert.irreducible = !cert.witness.has_value();
  return cert;
}

SearchResult homotopic_bounded(const GaussDiagram& g, const GaussDiagram& h, int max_arrows, std::size_t max_states) {
  PlainSpace space;
  space.cap = max_arrows >= 0 ? max_arrows : std::max(g.arrow_count(), h.arrow_count()) + 2;
  if (space.cap < std::max(g.arrow_count(), h.arrow_count()))
    throw InvalidArgument("max_arrows is below the arrow count of an input");
  return bidirectional(space, g, h, max_states);
}

SearchResult homotopic_signed_bounded(const SignedDiagram& g, const SignedDiagram& h, int max_arrows,
                                      std::size_t max_states) {
  SignedSpace space;
  space.cap = max_arrows >= 0 ? max_arrows : std::max(g.base.arrow_count(), h.base.arrow_count()) + 2;
  if (space.cap < std::max(g.base.arrow_count(), h.base.arrow_count()))
    throw InvalidArgument("max_arrows is below the arrow count of an input");
  return bidirectional(space, g, h, max_states);
}

SearchResult descend_to_empty(const GaussDiagram& g, std::size_t max_states) {
  SearchResult result;
  result.max_arrows = g.arrow_count();
  result.max_states = max_states;
  const KindSet kinds = kType3Kinds | kReducingKinds;

  std::map<std::string, Node<PlainSpace>> seen;
  const GaussDiagram root = canonical_diagram(g);
  std::vector<std::string> frontier{encode(root)};
  seen.emplace(frontier[0], Node<PlainSpace>{root, {}, {}, true});
  std::optional<std::string> found;
  if (root.empty()) found = frontier[0];
  while (!found && !frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& k : frontier) {
      const GaussDiagram rep = seen.at(k).rep;
      for (const Move& m : applicable_moves(rep, kinds)) {
        GaussDiagram child = canonical_diagram(apply_move(rep, m));
        std::string ck = encode(child);
        if (seen.contains(ck)) continue;
        const bool done = child.empty();
        seen.emplace(ck, Node<PlainSpace>{std::move(child), k, m, false});
        if (done) {
          found = ck;
          break;
        }
        if (seen.size() > max_states) {
          result.status = SearchStatus::BudgetExceeded;
          result.states = seen.size();
          return result;
        }
        next.push_back(std::move(ck));
      }
      if (found) break;
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  result.states = seen.size();
  if (!found) {
    result.status = SearchStatus::NoWithinBounds;
    return result;
  }
  for (std::string k = *found; !seen.at(k).root; k = seen.at(k).parent) result.path.push_back(seen.at(k).move);
  std::reverse(result.path.begin(), result.path.end());
  result.status = SearchStatus::Yes;
  return result;
}

GaussDiagram replay_path(const GaussDiagram& start, const std::vector<Move>& path) {
  GaussDiagram cur = canonical_diagram(start);
  for (const Move& m : path) cur = canonical_diagram(apply_move(cur, m));
  return cur;
}

SignedDiagram replay_signed_path(const SignedDiagram& start, const std::vector<Move>& path) {
  SignedDiagram cur = canonical_signed_diagram(start);
  for (const Move& m : path) cur = canonical_signed_diagram(apply_signed_move(cur, m));
  return cur;
}

}  // namespace virtstring
