#pragma once

// Turaev based matrices (G, s, b) over the integers.
//
// Index 0 is always the basepoint s. The remaining indices carry a Label that
// records where the element came from, so that reductions can be traced back
// to the arrows of the diagram that produced the matrix.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "virtstring/diagram.hpp"

namespace virtstring {

struct Label {
  enum class Kind : std::uint8_t { Base, Arrow, Synthetic };
  Kind kind = Kind::Base;
  int id = 0;

  static Label base() { return {Kind::Base, 0}; }
  static Label arrow(int a) { return {Kind::Arrow, a}; }
  static Label synthetic(int k) { return {Kind::Synthetic, k}; }

  std::string name() const;
  friend bool operator==(const Label&, const Label&) = default;
};

class BasedMatrix {
 public:
  /// The 1x1 zero matrix.
  BasedMatrix();

  /// rows[i][j] = b(labels[i], labels[j]). Throws unless square, skew-symmetric
  /// with zero diagonal, and labels[0] is the basepoint.
  BasedMatrix(std::vector<Label> labels, const std::vector<std::vector<int>>& rows);

  int size() const { return size_; }
  int operator()(int i, int j) const { return b_[static_cast<std::size_t>(i * size_ + j)]; }
  const Label& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::span<const Label> labels() const { return labels_; }
  std::vector<std::vector<int>> rows() const;

  /// Index of the element with this label, or -1.
  int find(const Label& l) const;

  /// Drops the listed (non-basepoint) indices.
  BasedMatrix without(std::span<const int> indices) const;

  /// Rows and columns reordered so that new index i is old index order[i].
  /// order[0] must be 0.
  BasedMatrix permuted(std::span<const int> order) const;

  /// Row i replaced by `row` (and column i by its negation). row[i] must be 0.
  BasedMatrix with_row(int i, std::span<const int> row) const;

  friend bool operator==(const BasedMatrix& a, const BasedMatrix& b) {
    return a.size_ == b.size_ && a.b_ == b.b_ && a.labels_ == b.labels_;
  }

 private:
  BasedMatrix(std::vector<Label> labels, std::vector<int> b);

  int size_ = 1;
  std::vector<Label> labels_;
  std::vector<int> b_;
};

// Definitional element tests. h ranges over all of G, basepoint included.
bool is_annihilating(const BasedMatrix& m, int g);
bool is_core(const BasedMatrix& m, int g);
bool are_complementary(const BasedMatrix& m, int g1, int g2);
bool is_self_complementary(const BasedMatrix& m, int g);
bool is_s_annihilating_like(const BasedMatrix& m);

struct ElementClass {
  std::vector<bool> annihilating;        // indexed by matrix index; entry 0 unused
  std::vector<bool> core;
  std::vector<bool> self_complementary;
  std::vector<std::pair<int, int>> complementary_pairs;  // i < j
  bool s_annihilating_like = false;

  bool has_self_complementary() const;
};

ElementClass classify(const BasedMatrix& m);

BasedMatrix based_matrix(const GaussDiagram& g);

/// One inverse elementary extension.
struct Deletion {
  enum class Kind : std::uint8_t { Annihilating, Core, ComplementaryPair };
  Kind kind = Kind::Annihilating;
  std::vector<Label> removed;
};

struct Reduction {
  BasedMatrix primitive;
  std::vector<Deletion> steps;

  /// Labels of the input that survive into the primitive (P(R) for arrows).
  std::vector<Label> survivors() const { return {primitive.labels().begin() + 1, primitive.labels().end()}; }
};

/// Every inverse extension currently applicable, in the deterministic order
/// annihilating, core, complementary pairs (each by increasing index).
std::vector<Deletion> available_deletions(const BasedMatrix& m);

BasedMatrix apply_deletion(const BasedMatrix& m, const Deletion& del);

/// Deletes greedily in the order of available_deletions() until primitive.
Reduction reduce_to_primitive(const BasedMatrix& m);

/// Same, choosing uniformly among all available deletions at each step.
Reduction reduce_to_primitive(const BasedMatrix& m, std::mt19937_64& rng);

bool is_primitive(const BasedMatrix& m);

// Elementary extensions. New elements get Synthetic labels numbered from `tag`.
BasedMatrix extend_annihilating(const BasedMatrix& m, int tag = 0);
BasedMatrix extend_core(const BasedMatrix& m, int tag = 0);
/// Adds g1 with b(g1, h) = row_g1[h] for h in G and its complement g2.
BasedMatrix extend_complementary(const BasedMatrix& m, std::span<const int> row_g1, int tag = 0);

inline constexpr int kDefaultCanonicalCap = 14;

/// Isomorphism-class key (bijections fixing s). Throws TooLarge beyond `cap`
/// non-basepoint elements.
CanonicalKey canonical_form(const BasedMatrix& m, int cap = kDefaultCanonicalCap);

/// Order of indices realising canonical_form (order[0] == 0).
std::vector<int> canonical_order(const BasedMatrix& m, int cap = kDefaultCanonicalCap);

int rho(const GaussDiagram& g);

bool homologous(const BasedMatrix& m1, const BasedMatrix& m2, int cap = kDefaultCanonicalCap);

namespace detail {

/// Canonical ordering with the first `fixed` indices pinned in place. Shared by
/// the signed canonicalizer. Returns (order, serialized key body).
std::pair<std::vector<int>, std::string> canonicalize(const BasedMatrix& m, int fixed, int cap);

void append_int(std::string& out, int v);

}  // namespace detail

}  // namespace virtstring
