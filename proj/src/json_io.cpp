#include "virtstring/json_io.hpp"

#include <charconv>

#include "virtstring/error.hpp"

namespace virtstring {

namespace {

Label parse_label(const std::string& name) {
  if (name == "s") return Label::base();
  if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z') return Label::arrow(name[0] - 'A');
  if (name.size() > 1 && (name[0] == 'e' || name[0] == 'x')) {
    int id = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), id);
    if (ec == std::errc{} && ptr == name.data() + name.size())
      return name[0] == 'e' ? Label::arrow(id) : Label::synthetic(id);
  }
  throw ParseError("unknown matrix label '" + name + "'");
}

const char* status_word(TermStatus s) {
  switch (s) {
    case TermStatus::Zero: return "zero";
    case TermStatus::Nonzero: return "nonzero";
    case TermStatus::Unknown: return "unknown";
  }
  return "?";
}

const char* reason_word(NonzeroReason r) {
  switch (r) {
    case NonzeroReason::None: return "none";
    case NonzeroReason::DistinguishedType: return "distinguished_type";
    case NonzeroReason::Halves: return "nontrivial_halves";
    case NonzeroReason::Minimality: return "minimality";
  }
  return "?";
}

const char* standard_word(StandardKind k) {
  switch (k) {
    case StandardKind::OrdinaryCore: return "ordinary_core";
    case StandardKind::OrdinaryAnnihilating: return "ordinary_annihilating";
    case StandardKind::Other: return "other";
  }
  return "?";
}

std::string hex_of(const std::string& bytes) { return CanonicalKey{bytes}.hex(); }

}  // namespace

Json to_json(const BasedMatrix& m) {
  Json labels = Json::array();
  for (const Label& l : m.labels()) labels.push_back(l.name());
  return Json{{"labels", labels}, {"rows", m.rows()}};
}

Json to_json(const SignedBasedMatrix& m) {
  Json j = to_json(m.base);
  j["d"] = m.base.label(m.d).name();
  j["sign"] = std::string(1, sign_char(m.sign));
  return j;
}

Json to_json(const Move& m) {
  Json site = Json::object();
  switch (m.kind) {
    case MoveKind::T1Add:
      site["gap"] = m.slots[0];
      site["form"] = m.form;
      break;
    case MoveKind::T1Remove:
      site["arrow"] = m.arrows[0];
      break;
    case MoveKind::T2Add:
      site["gaps"] = {m.slots[0], m.slots[1]};
      site["form"] = m.form;
      break;
    case MoveKind::T2Remove:
    case MoveKind::SST2:
      site["arrows"] = {m.arrows[0], m.arrows[1]};
      break;
    case MoveKind::T3a:
    case MoveKind::T3b:
    case MoveKind::SST3a:
    case MoveKind::SST3b:
      site["slots"] = {m.slots[0], m.slots[1], m.slots[2]};
      site["form"] = m.form;
      break;
  }
  return Json{{"kind", std::string(kind_name(m.kind))}, {"site", site}};
}

Json to_json(const std::vector<Move>& path) {
  Json out = Json::array();
  for (const Move& m : path) out.push_back(to_json(m));
  return out;
}

Move move_from_json(const Json& j) {
  try {
    Move m;
    m.kind = parse_kind(j.at("kind").get<std::string>());
    const Json& site = j.at("site");
    switch (m.kind) {
      case MoveKind::T1Add:
        m.slots[0] = site.at("gap").get<int>();
        m.form = site.at("form").get<int>();
        break;
      case MoveKind::T1Remove:
        m.arrows[0] = site.at("arrow").get<int>();
        break;
      case MoveKind::T2Add:
        m.slots[0] = site.at("gaps").at(0).get<int>();
        m.slots[1] = site.at("gaps").at(1).get<int>();
        m.form = site.at("form").get<int>();
        break;
      case MoveKind::T2Remove:
      case MoveKind::SST2:
        m.arrows[0] = site.at("arrows").at(0).get<int>();
        m.arrows[1] = site.at("arrows").at(1).get<int>();
        break;
      default:
        for (std::size_t i = 0; i < 3; ++i) m.slots[i] = site.at("slots").at(i).get<int>();
        m.form = site.at("form").get<int>();
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed move: ") + e.what());
  }
}

std::vector<Move> path_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("move path must be a JSON array");
  std::vector<Move> out;
  for (const Json& m : j) out.push_back(move_from_json(m));
  return out;
}

BasedMatrix based_matrix_from_json(const Json& j) {
  try {
    std::vector<Label> labels;
    for (const Json& l : j.at("labels")) labels.push_back(parse_label(l.get<std::string>()));
    return BasedMatrix(std::move(labels), j.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const OrbitCertificate& c) {
  Json j{{"start_key", c.start_key.hex()},
         {"orbit_size", c.orbit_size},
         {"irreducible", c.irreducible},
         {"max_states", c.max_states}};
  if (c.witness)
    j["witness"] = Json{{"member", serialize_diagram(c.witness->member)}, {"move", to_json(c.witness->move)}};
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const SearchResult& r) {
  return Json{{"status", std::string(status_name(r.status))},
              {"path", to_json(r.path)},
              {"states", r.states},
              {"max_arrows", r.max_arrows},
              {"max_states", r.max_states}};
}

Json to_json(const TermSum& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) terms.push_back(Json{{"key", hex_of(key)}, {"coefficient", c}});
  return Json{{"t", t.t()}, {"terms", terms}};
}

Json to_json(const NuResult& r) {
  Json j = to_json(r.sum);
  j["t_lower"] = r.t_lower();
  j["unresolved"] = r.unresolved;
  j["imprecise"] = r.imprecise();
  return j;
}

Json to_json(const MuReport& r) {
  Json terms = Json::array();
  for (const MuTermRecord& t : r.terms) {
    terms.push_back(Json{{"arrow", arrow_name(t.arrow)},
                         {"sign", std::string(1, sign_char(t.sign))},
                         {"literal_semi_trivial", t.literal_semi_trivial},
                         {"status", status_word(t.status)},
                         {"reason", reason_word(t.reason)},
                         {"standard", standard_word(t.standard)},
                         {"class_key", hex_of(t.class_key)},
                         {"group_key", hex_of(t.group_key)},
                         {"primitive", to_json(t.primitive)}});
  }
  Json groups = Json::array();
  for (const MuGroup& g : r.groups)
    groups.push_back(Json{{"group_key", hex_of(g.group_key)},
                          {"plus", g.plus},
                          {"minus", g.minus},
                          {"certified", g.certified},
                          {"contribution", g.contribution}});
  return Json{{"arrows", r.arrows},
              {"rho", r.rho},
              {"base_primitive", r.base_primitive},
              {"base_self_complementary", r.base_self_complementary},
              {"primitive_self_complementary", r.primitive_self_complementary},
              {"minimality_used", r.minimality_used},
              {"t_mu_lower", r.t_mu_lower},
              {"t_mu_upper", r.t_mu_upper},
              {"t_mu_half", r.t_mu_half()},
              {"t_mu_exact", r.t_mu_exact},
              {"m_exact", r.m_exact},
              {"theorem_primitive_hypotheses", r.theorem_primitive_hypotheses},
              {"justification", r.justification},
              {"C", r.C},
              {"A", r.A},
              {"O", r.O},
              {"core_annihilating_uncertain", r.core_annihilating_uncertain},
              {"bound_always_holds", r.bound_always_holds},
              {"bound_no_self_comp_applies", r.bound_no_self_comp_applies},
              {"bound_no_self_comp_holds", r.bound_no_self_comp_holds},
              {"terms", terms},
              {"groups", groups}};
}

Json to_json(const BoundReport& r) {
  return Json{{"arrows", r.arrows},
              {"rho", r.rho},
              {"t_mu_half", r.t_mu_half},
              {"t_nu_half", r.t_nu_half},
              {"nu_unresolved", r.nu_unresolved},
              {"O", r.O},
              {"irreducible", r.irreducible},
              {"orbit", r.orbit ? to_json(*r.orbit) : Json(nullptr)},
              {"exact", r.m_exact},
              {"m", r.m ? Json(*r.m) : Json(nullptr)},
              {"justification", r.justification},
              {"power_index", r.power_index},
              {"checks",
               Json{{"t_mu_ge_t_nu", r.mu_dominates_nu},
                    {"arrows_ge_t_mu_half", r.mu_bound_consistent},
                    {"t_mu_half_ge_rho_minus_1_plus_O_half", r.mu.bound_always_holds},
                    {"no_self_complementary", r.mu.bound_no_self_comp_applies},
                    {"t_mu_half_ge_rho_plus_O_half", r.mu.bound_no_self_comp_holds},
                    {"observed_t_mu_half_ge_rho", r.suspected_rho_bound}}}};
}

}  // namespace virtstring
