#pragma once

// Signed singular based matrices (G, s, d, b, sign) and the moves relating
// primitive representatives of one homology class.

#include <vector>

#include "virtstring/based_matrix.hpp"
#include "virtstring/diagram.hpp"

namespace virtstring {

struct SignedBasedMatrix {
  BasedMatrix base;
  int d = 1;
  Sign sign = Sign::Plus;

  SignedBasedMatrix() = default;
  SignedBasedMatrix(BasedMatrix b, int distinguished, Sign s);

  friend bool operator==(const SignedBasedMatrix&, const SignedBasedMatrix&) = default;
};

struct SignedClass {
  bool d_annihilating_like = false;
  bool d_core_like = false;
  bool d_self_complementary = false;
  bool s_annihilating_like = false;
  std::vector<int> complementary_partners_of_d;

  // Flags for elements other than s and d (indexed by matrix index).
  std::vector<bool> annihilating;
  std::vector<bool> core;
  std::vector<std::pair<int, int>> complementary_pairs;  // neither member is d

  /// Core-like / annihilating-like d while s is not annihilating-like.
  bool d_ordinary_core() const { return d_core_like && !s_annihilating_like; }
  bool d_ordinary_annihilating() const { return d_annihilating_like && !s_annihilating_like; }
  bool d_core_or_annihilating() const { return d_core_like || d_annihilating_like; }
};

SignedBasedMatrix signed_matrix(const SignedDiagram& g);

SignedClass signed_classify(const SignedBasedMatrix& m);

/// Inverse extensions that keep s and d.
std::vector<Deletion> signed_deletions(const SignedBasedMatrix& m);

bool is_primitive_signed(const SignedBasedMatrix& m);

/// Greedy reduction to a primitive matrix; an N'' swap is used only when it
/// exposes a deletion.
SignedBasedMatrix reduce_signed(const SignedBasedMatrix& m);

// The individual moves. Each throws InvalidArgument when not applicable.
SignedBasedMatrix move_n(const SignedBasedMatrix& m, int partner);
SignedBasedMatrix move_d12(const SignedBasedMatrix& m);
SignedBasedMatrix move_d21(const SignedBasedMatrix& m);
SignedBasedMatrix move_d33(const SignedBasedMatrix& m);

/// Sign switch S. Not a homology move in general.
SignedBasedMatrix switch_sign(const SignedBasedMatrix& m);

/// All results of one applicable D''12, D''21, D''33 or N'' move.
/// Throws InvalidArgument for non-primitive input.
std::vector<SignedBasedMatrix> d_moves(const SignedBasedMatrix& m);

/// Key up to bijections fixing s and d; the sign is part of the key.
CanonicalKey signed_canonical_form(const SignedBasedMatrix& m, int cap = kDefaultCanonicalCap);

bool signed_homology_equivalent(const SignedBasedMatrix& m1, const SignedBasedMatrix& m2,
                                int cap = kDefaultCanonicalCap);

/// All primitive matrices of the homology class, up to isomorphism, given one
/// primitive member. At most two by the structure theorem.
std::vector<SignedBasedMatrix> primitive_orbit(const SignedBasedMatrix& primitive);

/// Complete invariant of the signed homology class of `m` (any member).
CanonicalKey signed_class_key(const SignedBasedMatrix& m, int cap = kDefaultCanonicalCap);

/// The primitive in the class of m whose sign equals m.sign. Defined only when
/// the reduced distinguished element is an ordinary core or annihilating one.
SignedBasedMatrix standard_primitive(const SignedBasedMatrix& m);

}  // namespace virtstring
