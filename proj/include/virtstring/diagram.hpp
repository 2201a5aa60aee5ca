#pragma once

// Gauss diagrams of virtual strings and signed singular virtual strings.
//
// A diagram is stored as the cyclic sequence of its 2n arrow endpoints read
// counterclockwise around the core circle. Slot 2n-1 is adjacent to slot 0.
// The starting slot carries no meaning; comparisons that should ignore it go
// through canonical_key().

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace virtstring {

enum class Role : std::uint8_t { Tail = 0, Head = 1 };

struct Endpoint {
  int arrow = 0;
  Role role = Role::Tail;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Byte string that orders lexicographically. Used as the identity of a
/// diagram or matrix up to the relevant notion of isomorphism.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  std::string hex() const;
};

class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Validates that every arrow id 0..n-1 occurs once as Tail and once as Head.
  explicit GaussDiagram(std::vector<Endpoint> slots);

  int arrow_count() const { return static_cast<int>(ends_.size()); }
  int slot_count() const { return static_cast<int>(slots_.size()); }
  bool empty() const { return slots_.empty(); }

  std::span<const Endpoint> slots() const { return slots_; }
  const Endpoint& at(int slot) const { return slots_[static_cast<std::size_t>(slot)]; }

  int tail_slot(int arrow) const { return ends_[static_cast<std::size_t>(arrow)][0]; }
  int head_slot(int arrow) const { return ends_[static_cast<std::size_t>(arrow)][1]; }

  /// Slot index reduced modulo the slot count.
  int wrap(int slot) const;

  /// True when `slot` lies strictly inside the counterclockwise arc from `from` to `to`.
  bool inside_arc(int from, int to, int slot) const;

  /// True when the two slots are cyclically adjacent.
  bool adjacent(int a, int b) const;

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) { return a.slots_ == b.slots_; }

 private:
  std::vector<Endpoint> slots_;
  std::vector<std::array<int, 2>> ends_;  // per arrow: {tail slot, head slot}
};

struct SignedDiagram {
  GaussDiagram base;
  int d = 0;
  Sign sign = Sign::Plus;

  SignedDiagram() = default;
  SignedDiagram(GaussDiagram g, int distinguished, Sign s);

  friend bool operator==(const SignedDiagram&, const SignedDiagram&) = default;
};

GaussDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const GaussDiagram& g);

/// Circle rotated so that old slot k becomes slot 0.
GaussDiagram rotate(const GaussDiagram& g, int k);

/// Renames arrows: arrow i becomes new_id[i]. new_id must be a permutation.
GaussDiagram relabel(const GaussDiagram& g, std::span<const int> new_id);

/// Slot order reversed. Every arrow keeps its direction; the circle's
/// orientation is what changes, so this is generally a different string.
GaussDiagram reverse_slots(const GaussDiagram& g);

/// Keeps only the listed arrows, renumbered 0..k-1 in increasing old-id order.
GaussDiagram restrict_to(const GaussDiagram& g, std::span<const int> keep);

/// Arrows with both endpoints strictly inside the counterclockwise arc from slot
/// `from` to slot `to`, as a diagram in their own right.
GaussDiagram sub_diagram_in_arc(const GaussDiagram& g, int from, int to);

/// Rotation + relabeling representative whose serialization is least.
GaussDiagram canonical_diagram(const GaussDiagram& g);
CanonicalKey canonical_key(const GaussDiagram& g);

/// As above with relabelings that fix the distinguished arrow; it becomes arrow 0.
SignedDiagram canonical_signed_diagram(const SignedDiagram& g);
CanonicalKey canonical_key_signed(const SignedDiagram& g);

bool is_semi_trivial(const SignedDiagram& g);

/// The five-arrow string of the main example. Arrows 0..4 are A..E.
GaussDiagram make_example_M();

/// Turaev's alpha_{p,q}: arrows 0..p-1 are vertical, p..p+q-1 horizontal.
GaussDiagram make_alpha_pq(int p, int q);

/// Uniformly random arrangement of n arrows' endpoints.
GaussDiagram random_diagram(int n, std::mt19937_64& rng);

/// Display name of an arrow: A..Z, then e26, e27, ...
std::string arrow_name(int arrow);

}  // namespace virtstring
