#pragma once

// The cobracket nu, the operation mu, the smoothing map S, and the bounds on
// the minimal self-intersection number that they yield.
//
// Homotopy classes are represented by invariant keys. Equal keys do not prove
// two classes equal, so terms sharing a key are treated as possibly
// cancelling; this keeps every reported term count a lower bound.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virtstring/based_matrix.hpp"
#include "virtstring/diagram.hpp"
#include "virtstring/moves.hpp"
#include "virtstring/signed_matrix.hpp"

namespace virtstring {

/// Finite integer combination of keys. Zero coefficients are never stored.
class TermSum {
 public:
  void add(const std::string& key, long coefficient);
  long coefficient(const std::string& key) const;
  const std::map<std::string, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Number of terms counted with multiplicity.
  long t() const;

  friend bool operator==(const TermSum&, const TermSum&) = default;

 private:
  std::map<std::string, long> terms_;
};

/// Key of the tensor [a] (x) [b] from the primitive keys of the two factors.
std::string tensor_key(const CanonicalKey& a, const CanonicalKey& b);

/// Canonical form of the primitive based matrix of g.
CanonicalKey primitive_key(const GaussDiagram& g);

enum class Triviality : std::uint8_t { Trivial, Nontrivial, Unresolved };

struct OracleBudget {
  std::size_t descent_states = 100'000;
  int extra_arrows = 2;
  std::size_t search_states = 200'000;
};

/// Decides triviality of small strings: rho > 0 proves nontriviality, a
/// reducing search or a bounded homotopy search to the empty string proves
/// triviality. Results are cached by canonical key; not thread-safe.
class TrivialityOracle {
 public:
  explicit TrivialityOracle(OracleBudget budget = {}) : budget_(budget) {}
  Triviality classify(const GaussDiagram& g);
  const OracleBudget& budget() const { return budget_; }

 private:
  OracleBudget budget_;
  std::map<std::string, Triviality> cache_;
};

struct NuResult {
  TermSum sum;         // decided terms
  int unresolved = 0;  // terms left out because a half could not be decided
  /// Per key, how many undecided +1 and -1 terms it might still receive.
  std::map<std::string, std::pair<int, int>> undecided;

  bool imprecise() const { return unresolved > 0; }
  /// Number of terms guaranteed to survive whatever the undecided terms are.
  long t_lower() const;
};

NuResult nu(const GaussDiagram& g, TrivialityOracle& oracle);

/// Halves of arrow e: arrows inside the arc tail->head, and inside head->tail.
std::pair<GaussDiagram, GaussDiagram> halves(const GaussDiagram& g, int arrow);

struct MuTerm {
  int arrow = 0;
  SignedDiagram plus;
  SignedDiagram minus;
  bool plus_semi_trivial = false;
  bool minus_semi_trivial = false;
};

std::vector<MuTerm> mu_terms(const GaussDiagram& g);

enum class Certification : std::uint8_t { Certified, Unknown };

/// Certified when no primitive matrix of the signed homology class has a core
/// or annihilating distinguished element. Literally semi-trivial input is
/// always Unknown.
Certification certify_not_semi_trivial(const SignedDiagram& t);

/// (S1, S2) of a signed singular string.
std::pair<GaussDiagram, GaussDiagram> smoothing_S(const SignedDiagram& t);

enum class TermStatus : std::uint8_t { Zero, Nonzero, Unknown };
enum class NonzeroReason : std::uint8_t { None, DistinguishedType, Halves, Minimality };
enum class StandardKind : std::uint8_t { OrdinaryCore, OrdinaryAnnihilating, Other };

struct MuTermRecord {
  int arrow = 0;
  Sign sign = Sign::Plus;
  bool literal_semi_trivial = false;
  TermStatus status = TermStatus::Unknown;
  NonzeroReason reason = NonzeroReason::None;
  SignedBasedMatrix primitive;  // reduce_signed of the signed matrix
  std::string class_key;        // signed homology class key
  std::string group_key;        // class key refined by the smoothing halves
  StandardKind standard = StandardKind::Other;
};

struct MuGroup {
  std::string group_key;
  int plus = 0;   // number of non-zero-status + terms
  int minus = 0;
  bool certified = false;  // every term of the group is known to be nonzero
  long contribution = 0;   // guaranteed surviving terms from this group
};

struct MuReport {
  int arrows = 0;
  int rho = 0;
  bool base_primitive = false;
  bool base_self_complementary = false;       // T(alpha) has a self-complementary element
  bool primitive_self_complementary = false;  // the primitive of T(alpha) has one
  bool minimality_used = false;               // a matching irreducibility certificate was applied

  std::vector<MuTermRecord> terms;  // 2n records: arrow order, + before -
  std::vector<MuGroup> groups;      // sorted by group key

  long t_mu_lower = 0;  // even
  long t_mu_upper = 0;  // number of terms not known to vanish
  bool t_mu_exact = false;
  bool m_exact = false;  // t_mu_lower == 2n, hence m = n
  bool theorem_primitive_hypotheses = false;
  std::string justification;

  int C = 0;
  int A = 0;
  int O = 0;
  int core_annihilating_uncertain = 0;  // positive uncertain terms left out of C and A

  bool bound_always_holds = false;           // t >= 2 rho - 2 + O
  bool bound_no_self_comp_applies = false;
  bool bound_no_self_comp_holds = false;     // t >= 2 rho + O

  long t_mu_half() const { return t_mu_lower / 2; }
  /// Certified groups with their coefficient sums.
  TermSum certified_sum() const;
};

MuReport mu_analysis(const GaussDiagram& g, const std::optional<OrbitCertificate>& minimality = std::nullopt);

/// S applied termwise to mu, dropping terms with a trivial half.
NuResult s_of_mu(const GaussDiagram& g, TrivialityOracle& oracle);

struct BoundOptions {
  std::size_t orbit_states = kDefaultMaxStates;
  OracleBudget oracle;
};

struct BoundReport {
  int arrows = 0;
  int rho = 0;
  long t_mu_half = 0;
  long t_nu_half = 0;
  int nu_unresolved = 0;
  int O = 0;
  bool irreducible = false;
  std::optional<OrbitCertificate> orbit;  // absent when the orbit search ran out of budget
  bool m_exact = false;
  std::optional<int> m;
  std::string justification;
  int power_index = 1;
  bool mu_dominates_nu = false;        // t_mu >= t_nu
  bool mu_bound_consistent = false;    // arrows >= t_mu_half
  bool suspected_rho_bound = false;    // t_mu_half >= rho (observed, never asserted)
  MuReport mu;
};

BoundReport bound_report(const GaussDiagram& g, const BoundOptions& options = {});

}  // namespace virtstring
