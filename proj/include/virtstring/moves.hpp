#pragma once

// Homotopy moves on (signed singular) Gauss diagrams and bounded searches
// over them.
//
// Site addressing is relative to the diagram instance a move is applied to:
//   T1Add      slots[0] = gap (insert before that slot), form 0 = [T,H], 1 = [H,T]
//   T1Remove   arrows[0] = arrow whose endpoints are adjacent
//   T2Add      slots[0..1] = gaps of the two blocks; new arrows e = n, e' = n+1.
//              Block 1 holds {Te, He'}, block 2 holds {He, Te'}. form bit 0 reverses
//              block 1, bit 1 reverses block 2, bit 2 puts block 2 first when both
//              gaps coincide.
//   T2Remove   arrows[0] < arrows[1], paired as tail/head blocks
//   T3a, T3b   slots[0..2] = first slots of three adjacent slot pairs, ascending;
//              form 0 = forward pattern, 1 = inverse. Applying swaps each pair.
//   SST2       arrows[0] = distinguished arrow, arrows[1] = its Type 2 partner
//   SST3a/b    as T3a/T3b with the distinguished arrow among the three
//
// Gaps range over 0..2n-1 (just 0 for the empty diagram).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "virtstring/diagram.hpp"

namespace virtstring {

enum class MoveKind : std::uint8_t { T1Add, T1Remove, T2Add, T2Remove, T3a, T3b, SST2, SST3a, SST3b };

std::string_view kind_name(MoveKind k);
/// Inverse of kind_name; throws ParseError.
MoveKind parse_kind(std::string_view name);

/// Bit set of move kinds.
using KindSet = std::uint16_t;
constexpr KindSet kind_bit(MoveKind k) { return static_cast<KindSet>(1u << static_cast<unsigned>(k)); }
constexpr KindSet kType3Kinds = kind_bit(MoveKind::T3a) | kind_bit(MoveKind::T3b);
constexpr KindSet kReducingKinds = kind_bit(MoveKind::T1Remove) | kind_bit(MoveKind::T2Remove);
constexpr KindSet kOrdinaryKinds = kind_bit(MoveKind::T1Add) | kind_bit(MoveKind::T2Add) | kReducingKinds | kType3Kinds;
constexpr KindSet kSignedOnlyKinds =
    kind_bit(MoveKind::SST2) | kind_bit(MoveKind::SST3a) | kind_bit(MoveKind::SST3b);

struct Move {
  MoveKind kind = MoveKind::T1Add;
  std::array<int, 3> slots{-1, -1, -1};
  std::array<int, 2> arrows{-1, -1};
  int form = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Every legal application of the requested kinds, in a fixed order.
/// Signed-only kinds are ignored here.
std::vector<Move> applicable_moves(const GaussDiagram& g, KindSet kinds = kOrdinaryKinds);

bool is_applicable(const GaussDiagram& g, const Move& m);

/// Throws InvalidArgument when the move does not apply. `id_map`, if given,
/// receives old arrow id -> new id (-1 for removed arrows).
GaussDiagram apply_move(const GaussDiagram& g, const Move& m, std::vector<int>* id_map = nullptr);

/// Ordinary moves that leave d alone plus SST2/SST3a/SST3b.
std::vector<Move> applicable_signed_moves(const SignedDiagram& g, KindSet kinds = kOrdinaryKinds | kSignedOnlyKinds);

SignedDiagram apply_signed_move(const SignedDiagram& g, const Move& m);

struct OrbitWitness {
  GaussDiagram member;
  Move move;
};

struct OrbitCertificate {
  CanonicalKey start_key;
  std::size_t orbit_size = 0;
  bool irreducible = false;
  std::optional<OrbitWitness> witness;  // first reducible member in search order
  std::size_t max_states = 0;
};

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

/// Closure of {g} under T3a and T3b. Throws BudgetExceeded when the orbit has
/// more than max_states members.
OrbitCertificate type3_orbit(const GaussDiagram& g, std::size_t max_states = kDefaultMaxStates);

/// All canonical keys of the Type 3 orbit, sorted.
std::vector<CanonicalKey> type3_orbit_keys(const GaussDiagram& g, std::size_t max_states = kDefaultMaxStates);

enum class SearchStatus : std::uint8_t { Yes, NoWithinBounds, BudgetExceeded };

std::string_view status_name(SearchStatus s);

/// Result of a bounded search. A Yes path acts on canonical representatives:
/// move i applies to canonical_diagram of the diagram produced by move i-1
/// (starting from the canonical form of the source).
struct SearchResult {
  SearchStatus status = SearchStatus::NoWithinBounds;
  std::vector<Move> path;
  std::size_t states = 0;
  int max_arrows = 0;
  std::size_t max_states = 0;
};

/// max_arrows < 0 means max(n(g), n(h)) + 2.
SearchResult homotopic_bounded(const GaussDiagram& g, const GaussDiagram& h, int max_arrows = -1,
                               std::size_t max_states = kDefaultMaxStates);

SearchResult homotopic_signed_bounded(const SignedDiagram& g, const SignedDiagram& h, int max_arrows = -1,
                                      std::size_t max_states = kDefaultMaxStates);

/// Searches for a path to the empty diagram using only Type 3 moves and
/// removals. Yes proves g trivial; the other statuses prove nothing.
SearchResult descend_to_empty(const GaussDiagram& g, std::size_t max_states);

/// Replays a search path, returning the final (canonical) diagram.
GaussDiagram replay_path(const GaussDiagram& start, const std::vector<Move>& path);
SignedDiagram replay_signed_path(const SignedDiagram& start, const std::vector<Move>& path);

}  // namespace virtstring
