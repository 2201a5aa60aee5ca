#pragma once

// Reproduction suite for the published examples and structural theorems.
// Shared by the `paper-check` subcommand and the acceptance test binary.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "virtstring/based_matrix.hpp"
#include "virtstring/moves.hpp"
#include "virtstring/signed_matrix.hpp"

namespace virtstring {

// Matrices as printed for the main example (rows s, A, B, C, D, E).
BasedMatrix printed_T_M();
BasedMatrix printed_T_bullet_M();
SignedBasedMatrix printed_T_M_plus_A();
SignedBasedMatrix printed_T_bullet_M_plus_A();
SignedBasedMatrix printed_T_M_plus_C();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0;
};

struct PaperCheckOptions {
  std::uint64_t seed = 0x5eed2026;
  std::size_t max_states = kDefaultMaxStates;
  int property_instances = 500;  // criteria 6, 7, 9
  int factorization_instances = 200;
  bool verbose = false;
};

std::vector<CriterionResult> run_paper_check(const PaperCheckOptions& options = {});

/// One "PASS|FAIL [id] name: detail (ms)" line per criterion.
void print_paper_check(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

/// Random diagram with a uniformly chosen arrow count in [lo, hi].
GaussDiagram random_diagram_between(int lo, int hi, std::mt19937_64& rng);

/// g with the left-hand side of a Type 3a move inserted at random gaps.
GaussDiagram plant_type3(const GaussDiagram& g, std::mt19937_64& rng);

/// a and b joined by one new arrow (id n(a)+n(b)) whose halves are a and b.
/// Arrows of b are shifted by n(a).
GaussDiagram bridge(const GaussDiagram& a, const GaussDiagram& b);

/// A uniformly chosen kind among those with an applicable move, then a
/// uniformly chosen move of that kind. g must admit some move.
Move random_move(const GaussDiagram& g, std::mt19937_64& rng, KindSet kinds = kOrdinaryKinds);

}  // namespace virtstring
