#include "virtstring/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "virtstring/error.hpp"

namespace virtstring {

namespace {

void append_part(std::string& out, const std::string& part) {
  detail::append_int(out, static_cast<int>(part.size()));
  out += part;
}

// Smallest |x| for x in [sum - minus, sum + plus].
long min_abs(long sum, long plus, long minus) {
  const long lo = sum - minus, hi = sum + plus;
  if (lo <= 0 && hi >= 0) return 0;
  return std::min(std::labs(lo), std::labs(hi));
}

long round_up_even(long t) { return t + (t & 1); }

bool d_core_or_annihilating_somewhere(const SignedBasedMatrix& reduced) {
  for (const SignedBasedMatrix& p : primitive_orbit(reduced))
    if (signed_classify(p).d_core_or_annihilating()) return true;
  return false;
}

struct HalfInfo {
  CanonicalKey key;
  int rho = 0;
};

HalfInfo half_info(const GaussDiagram& g) {
  const BasedMatrix p = reduce_to_primitive(based_matrix(g)).primitive;
  return {canonical_form(p), p.size() - 1};
}

// Adds one tensor term, or records why it could not be decided.
void add_tensor(NuResult& out, TrivialityOracle& oracle, const GaussDiagram& first, const GaussDiagram& second,
                long coefficient) {
  const Triviality a = oracle.classify(first);
  const Triviality b = oracle.classify(second);
  if (a == Triviality::Trivial || b == Triviality::Trivial) return;
  const std::string key = tensor_key(primitive_key(first), primitive_key(second));
  if (a == Triviality::Unresolved || b == Triviality::Unresolved) {
    ++out.unresolved;
    auto& [plus, minus] = out.undecided[key];
    (coefficient > 0 ? plus : minus) += 1;
    return;
  }
  out.sum.add(key, coefficient);
}

}  // namespace

void TermSum::add(const std::string& key, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

long TermSum::coefficient(const std::string& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

long TermSum::t() const {
  long total = 0;
  for (const auto& [k, c] : terms_) total += std::labs(c);
  return total;
}

long NuResult::t_lower() const {
  long total = 0;
  for (const auto& [k, c] : sum.terms()) {
    const auto it = undecided.find(k);
    total += it == undecided.end() ? std::labs(c) : min_abs(c, it->second.first, it->second.second);
  }
  return round_up_even(total);
}

std::string tensor_key(const CanonicalKey& a, const CanonicalKey& b) {
  std::string out;
  append_part(out, a.bytes);
  append_part(out, b.bytes);
  return out;
}

CanonicalKey primitive_key(const GaussDiagram& g) {
  return canonical_form(reduce_to_primitive(based_matrix(g)).primitive);
}

Triviality TrivialityOracle::classify(const GaussDiagram& g) {
  std::string key = canonical_key(g).bytes;
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  Triviality verdict = Triviality::Unresolved;
  if (g.empty()) {
    verdict = Triviality::Trivial;
  } else if (rho(g) > 0) {
    verdict = Triviality::Nontrivial;
  } else if (descend_to_empty(g, budget_.descent_states).status == SearchStatus::Yes) {
    verdict = Triviality::Trivial;
  } else if (homotopic_bounded(g, GaussDiagram{}, g.arrow_count() + budget_.extra_arrows, budget_.search_states)
                 .status == SearchStatus::Yes) {
    verdict = Triviality::Trivial;
  }
  cache_.emplace(std::move(key), verdict);
  return verdict;
}

std::pair<GaussDiagram, GaussDiagram> halves(const GaussDiagram& g, int arrow) {
  if (arrow < 0 || arrow >= g.arrow_count()) throw InvalidArgument("no arrow " + std::to_string(arrow));
  const int t = g.tail_slot(arrow), h = g.head_slot(arrow);
  return {sub_diagram_in_arc(g, t, h), sub_diagram_in_arc(g, h, t)};
}

NuResult nu(const GaussDiagram& g, TrivialityOracle& oracle) {
  NuResult out;
  for (int e = 0; e < g.arrow_count(); ++e) {
    const auto [first, second] = halves(g, e);
    add_tensor(out, oracle, first, second, +1);
    add_tensor(out, oracle, second, first, -1);
  }
  return out;
}

std::vector<MuTerm> mu_terms(const GaussDiagram& g) {
  std::vector<MuTerm> out;
  for (int e = 0; e < g.arrow_count(); ++e) {
    MuTerm t{e, SignedDiagram(g, e, Sign::Plus), SignedDiagram(g, e, Sign::Minus), false, false};
    t.plus_semi_trivial = is_semi_trivial(t.plus);
    t.minus_semi_trivial = is_semi_trivial(t.minus);
    out.push_back(std::move(t));
  }
  return out;
}

Certification certify_not_semi_trivial(const SignedDiagram& t) {
  if (is_semi_trivial(t)) return Certification::Unknown;
  const SignedBasedMatrix reduced = reduce_signed(signed_matrix(t));
  return d_core_or_annihilating_somewhere(reduced) ? Certification::Unknown : Certification::Certified;
}

std::pair<GaussDiagram, GaussDiagram> smoothing_S(const SignedDiagram& t) {
  auto [th, ht] = halves(t.base, t.d);
  if (t.sign == Sign::Plus) return {std::move(th), std::move(ht)};
  return {std::move(ht), std::move(th)};
}

TermSum MuReport::certified_sum() const {
  TermSum out;
  for (const MuGroup& grp : groups)
    if (grp.certified) out.add(grp.group_key, grp.plus - grp.minus);
  return out;
}

MuReport mu_analysis(const GaussDiagram& g, const std::optional<OrbitCertificate>& minimality) {
  MuReport r;
  r.arrows = g.arrow_count();
  const BasedMatrix base = based_matrix(g);
  const Reduction red = reduce_to_primitive(base);
  r.rho = red.primitive.size() - 1;
  r.base_primitive = red.steps.empty();
  r.base_self_complementary = classify(base).has_self_complementary();
  r.primitive_self_complementary = classify(red.primitive).has_self_complementary();
  r.theorem_primitive_hypotheses = r.base_primitive && !r.base_self_complementary;
  r.minimality_used = minimality && minimality->irreducible && minimality->start_key == canonical_key(g);

  bool used_dtype = false, used_halves = false, used_minimality = false;
  for (int e = 0; e < r.arrows; ++e) {
    for (const Sign sign : {Sign::Plus, Sign::Minus}) {
      const SignedDiagram sd(g, e, sign);
      const SignedBasedMatrix sm = signed_matrix(sd);
      MuTermRecord rec;
      rec.arrow = e;
      rec.sign = sign;
      rec.literal_semi_trivial = is_semi_trivial(sd);
      rec.primitive = reduce_signed(sm);
      rec.class_key = signed_class_key(rec.primitive).bytes;

      const auto [s1, s2] = smoothing_S(sd);
      const HalfInfo h1 = half_info(s1), h2 = half_info(s2);
      append_part(rec.group_key, rec.class_key);
      append_part(rec.group_key, h1.key.bytes);
      append_part(rec.group_key, h2.key.bytes);

      if (rec.literal_semi_trivial) {
        rec.status = TermStatus::Zero;
      } else if (!d_core_or_annihilating_somewhere(rec.primitive)) {
        rec.status = TermStatus::Nonzero;
        rec.reason = NonzeroReason::DistinguishedType;
        used_dtype = true;
      } else if (h1.rho > 0 && h2.rho > 0) {
        rec.status = TermStatus::Nonzero;
        rec.reason = NonzeroReason::Halves;
        used_halves = true;
      } else if (r.minimality_used) {
        rec.status = TermStatus::Nonzero;
        rec.reason = NonzeroReason::Minimality;
        used_minimality = true;
      }

      try {
        const SignedClass c = signed_classify(standard_primitive(sm));
        rec.standard = c.d_ordinary_core() ? StandardKind::OrdinaryCore : StandardKind::OrdinaryAnnihilating;
      } catch (const InvalidArgument&) {
        rec.standard = StandardKind::Other;
      }
      r.terms.push_back(std::move(rec));
    }
  }

  struct Tally {
    int plus = 0, minus = 0, unknown_plus = 0, unknown_minus = 0;
  };
  std::map<std::string, Tally> tallies;
  for (const MuTermRecord& rec : r.terms) {
    if (rec.status == TermStatus::Zero) continue;
    Tally& t = tallies[rec.group_key];
    const bool plus = rec.sign == Sign::Plus;
    if (rec.status == TermStatus::Nonzero)
      (plus ? t.plus : t.minus) += 1;
    else
      (plus ? t.unknown_plus : t.unknown_minus) += 1;
    ++r.t_mu_upper;
  }
  long lower = 0;
  for (const auto& [key, t] : tallies) {
    MuGroup grp;
    grp.group_key = key;
    grp.plus = t.plus + t.unknown_plus;
    grp.minus = t.minus + t.unknown_minus;
    grp.certified = t.unknown_plus == 0 && t.unknown_minus == 0;
    grp.contribution = min_abs(t.plus - t.minus, t.unknown_plus, t.unknown_minus);
    lower += grp.contribution;
    r.groups.push_back(std::move(grp));
  }
  r.t_mu_lower = round_up_even(lower);
  r.t_mu_exact = r.t_mu_lower == r.t_mu_upper;
  r.m_exact = r.t_mu_lower == 2L * r.arrows;

  for (const MuTermRecord& rec : r.terms) {
    if (rec.sign != Sign::Plus || rec.standard == StandardKind::Other) continue;
    if (rec.status == TermStatus::Nonzero)
      (rec.standard == StandardKind::OrdinaryCore ? r.C : r.A) += 1;
    else if (rec.status == TermStatus::Unknown)
      ++r.core_annihilating_uncertain;
  }
  r.O = std::abs(r.C - r.A);
  r.bound_always_holds = r.t_mu_lower >= 2L * r.rho - 2 + r.O;
  r.bound_no_self_comp_applies = !r.primitive_self_complementary;
  r.bound_no_self_comp_holds = r.t_mu_lower >= 2L * r.rho + r.O;

  if (r.m_exact) {
    std::string routes;
    auto add_route = [&](bool used, const char* name) {
      if (!used) return;
      if (!routes.empty()) routes += ", ";
      routes += name;
    };
    add_route(used_dtype, "distinguished-element type");
    add_route(used_halves, "nontrivial smoothing halves");
    add_route(used_minimality, "crossing-irreducibility certificate");
    if (r.arrows == 0)
      r.justification = "empty diagram, m = 0";
    else
      r.justification = "all " + std::to_string(2 * r.arrows) + " terms are nonzero (" + routes +
                        ") and lie in distinct classes, so m = t(mu)/2 = " + std::to_string(r.arrows);
    if (r.theorem_primitive_hypotheses) r.justification += "; T is primitive without self-complementary elements";
  } else if (r.t_mu_exact) {
    r.justification = "every term is decided; t(mu) is exact but below 2n";
  } else {
    r.justification = "lower bound only";
  }
  return r;
}

NuResult s_of_mu(const GaussDiagram& g, TrivialityOracle& oracle) {
  NuResult out;
  for (const MuTerm& t : mu_terms(g)) {
    if (!t.plus_semi_trivial) {
      const auto [s1, s2] = smoothing_S(t.plus);
      add_tensor(out, oracle, s1, s2, +1);
    }
    if (!t.minus_semi_trivial) {
      const auto [s1, s2] = smoothing_S(t.minus);
      add_tensor(out, oracle, s1, s2, -1);
    }
  }
  return out;
}

BoundReport bound_report(const GaussDiagram& g, const BoundOptions& options) {
  BoundReport r;
  r.arrows = g.arrow_count();
  try {
    r.orbit = type3_orbit(g, options.orbit_states);
  } catch (const BudgetExceeded&) {
    r.orbit.reset();
  }
  r.irreducible = r.orbit && r.orbit->irreducible;
  r.mu = mu_analysis(g, r.orbit);
  r.rho = r.mu.rho;
  r.t_mu_half = r.mu.t_mu_half();
  r.O = r.mu.O;

  TrivialityOracle oracle(options.oracle);
  const NuResult n = nu(g, oracle);
  r.nu_unresolved = n.unresolved;
  const long t_nu = n.t_lower();
  r.t_nu_half = t_nu / 2;

  if (r.mu.m_exact) {
    r.m_exact = true;
    r.justification = r.mu.justification;
  } else if (r.irreducible) {
    r.m_exact = true;
    r.justification = "crossing-irreducible, hence crossing-minimal";
  } else {
    r.justification = r.mu.justification;
  }
  if (r.m_exact) r.m = r.arrows;
  r.mu_dominates_nu = r.mu.t_mu_lower >= t_nu;
  r.mu_bound_consistent = r.arrows >= r.t_mu_half;
  r.suspected_rho_bound = r.t_mu_half >= r.rho;
  return r;
}

}  // namespace virtstring
