#include "virtstring/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "virtstring/error.hpp"
#include "virtstring/invariants.hpp"
#include "virtstring/json_io.hpp"
#include "virtstring/paper_check.hpp"

namespace virtstring::cli {

namespace {

struct Input {
  std::string name;  // serialized diagram or example name
  GaussDiagram diagram;
};

struct Outcome {
  Json json = Json::object();
  std::string text;
  bool inconclusive = false;
};

struct Settings {
  std::string format = "json";
  int max_arrows = -1;
  std::size_t max_states = kDefaultMaxStates;
  std::string example;
  std::string corpus;
};

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("bad " + what + " '" + s + "'");
  return v;
}

GaussDiagram named_example(const std::string& name) {
  if (name == "M") return make_example_M();
  if (name.rfind("alpha:", 0) == 0) {
    const std::string rest = name.substr(6);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("expected alpha:p,q, got '" + name + "'");
    const int p = parse_int(rest.substr(0, comma), "p");
    const int q = parse_int(rest.substr(comma + 1), "q");
    try {
      return make_alpha_pq(p, q);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown example '" + name + "' (known: M, alpha:p,q)");
}

std::vector<Input> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus '" + path + "'");
  std::vector<Input> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      GaussDiagram g = parse_diagram(line);
      out.push_back({serialize_diagram(g), std::move(g)});
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

// --- text rendering -------------------------------------------------------

std::string render_matrix(const BasedMatrix& m, int d = -1) {
  auto name = [&](int i) { return m.label(i).name() + (i == d ? "*" : ""); };
  std::size_t width = 3;
  for (int i = 0; i < m.size(); ++i) {
    width = std::max(width, name(i).size() + 1);
    for (int j = 0; j < m.size(); ++j) width = std::max(width, std::to_string(m(i, j)).size() + 1);
  }
  std::ostringstream o;
  o << std::setw(static_cast<int>(width)) << "";
  for (int j = 0; j < m.size(); ++j) o << std::setw(static_cast<int>(width)) << name(j);
  o << '\n';
  for (int i = 0; i < m.size(); ++i) {
    o << std::setw(static_cast<int>(width)) << name(i);
    for (int j = 0; j < m.size(); ++j) o << std::setw(static_cast<int>(width)) << m(i, j);
    o << '\n';
  }
  return o.str();
}

const char* superscript(Sign s) { return s == Sign::Plus ? "\u207A" : "\u207B"; }

std::string render_signed(const SignedBasedMatrix& m) {
  return std::string("sign ") + superscript(m.sign) + "  (d = " + m.base.label(m.d).name() + "*)\n" +
         render_matrix(m.base, m.d);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string row(const std::string& key, const std::string& value) {
  std::ostringstream o;
  o << std::left << std::setw(22) << key << value << '\n';
  return o.str();
}

template <typename T>
std::string row(const std::string& key, const T& value) {
  std::ostringstream v;
  v << value;
  return row(key, v.str());
}

std::string render_terms(const TermSum& t) {
  std::string out;
  for (const auto& [key, c] : t.terms()) out += "  " + std::string(c > 0 ? "+" : "") + std::to_string(c) + "  " + CanonicalKey{key}.hex() + '\n';
  return out.empty() ? "  0\n" : out;
}

// --- subcommands ----------------------------------------------------------

std::optional<OrbitCertificate> try_orbit(const GaussDiagram& g, std::size_t max_states) {
  try {
    return type3_orbit(g, max_states);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

Outcome do_matrix(const GaussDiagram& g, const Settings&) {
  Outcome r;
  const BasedMatrix m = based_matrix(g);
  const Reduction red = reduce_to_primitive(m);
  r.json["matrix"] = to_json(m);
  r.json["primitive"] = is_primitive(m);
  r.json["primitive_matrix"] = to_json(red.primitive);
  r.json["rho"] = red.primitive.size() - 1;
  r.json["primitive_key"] = canonical_form(red.primitive).hex();
  r.text = "T:\n" + render_matrix(m) + row("primitive", yes_no(is_primitive(m))) + "T_bullet:\n" +
           render_matrix(red.primitive) + row("rho", red.primitive.size() - 1);
  return r;
}

Outcome do_rho(const GaussDiagram& g, const Settings&) {
  Outcome r;
  r.json["rho"] = rho(g);
  r.text = row("rho", rho(g));
  return r;
}

Outcome do_mu(const GaussDiagram& g, const Settings& s) {
  Outcome r;
  const auto cert = try_orbit(g, s.max_states);
  const MuReport mu = mu_analysis(g, cert);
  r.json["mu"] = to_json(mu);
  std::ostringstream o;
  o << std::left << std::setw(8) << "arrow" << std::setw(6) << "sign" << std::setw(10) << "status" << std::setw(20)
    << "reason" << "standard\n";
  const Json terms = to_json(mu).at("terms");
  for (const Json& t : terms)
    o << std::left << std::setw(8) << t["arrow"].get<std::string>() << std::setw(6) << t["sign"].get<std::string>()
      << std::setw(10) << t["status"].get<std::string>() << std::setw(20) << t["reason"].get<std::string>()
      << t["standard"].get<std::string>() << '\n';
  o << row("t(mu) lower", mu.t_mu_lower) << row("t(mu) upper", mu.t_mu_upper) << row("t(mu)/2", mu.t_mu_half())
    << row("exact", yes_no(mu.t_mu_exact)) << row("C / A / O", std::to_string(mu.C) + " / " + std::to_string(mu.A) +
                                                                   " / " + std::to_string(mu.O))
    << row("uncertain C/A terms", mu.core_annihilating_uncertain) << row("justification", mu.justification);
  for (const MuTermRecord& t : mu.terms)
    if (t.status != TermStatus::Zero)
      o << "primitive of term " << arrow_name(t.arrow) << sign_char(t.sign) << ":\n" << render_signed(t.primitive);
  r.text = o.str();
  return r;
}

Outcome do_nu(const GaussDiagram& g, const Settings&) {
  Outcome r;
  TrivialityOracle oracle;
  const NuResult n = nu(g, oracle);
  const NuResult smu = s_of_mu(g, oracle);
  r.json["nu"] = to_json(n);
  r.json["s_of_mu"] = to_json(smu);
  if (n.imprecise() || smu.imprecise())
    r.json["factorization_holds"] = nullptr;
  else
    r.json["factorization_holds"] = n.sum == smu.sum;
  r.text = "nu:\n" + render_terms(n.sum) + row("t(nu) lower", n.t_lower()) + row("unresolved", n.unresolved) +
           row("nu = S(mu)", n.imprecise() || smu.imprecise() ? "undecided" : yes_no(n.sum == smu.sum));
  return r;
}

Outcome do_bounds(const GaussDiagram& g, const Settings& s) {
  Outcome r;
  BoundOptions opts;
  opts.orbit_states = s.max_states;
  const BoundReport b = bound_report(g, opts);
  r.json["bounds"] = to_json(b);
  r.inconclusive = !b.orbit && !b.m_exact;
  r.text = row("arrows", b.arrows) + row("rho", b.rho) + row("t(mu)/2", b.t_mu_half) + row("t(nu)/2", b.t_nu_half) +
           row("nu unresolved", b.nu_unresolved) + row("O", b.O) +
           row("irreducible", b.orbit ? yes_no(b.irreducible) : "budget exceeded") +
           row("m", b.m ? std::to_string(*b.m) + " (exact)" : ">= " + std::to_string(std::max<long>(b.rho, b.t_mu_half))) +
           row("justification", b.justification) + row("t(mu)/2 >= rho", yes_no(b.suspected_rho_bound));
  return r;
}

Outcome do_orbit(const GaussDiagram& g, const Settings& s) {
  Outcome r;
  const auto cert = try_orbit(g, s.max_states);
  if (!cert) {
    r.inconclusive = true;
    r.json["orbit"] = Json{{"status", std::string(status_name(SearchStatus::BudgetExceeded))},
                           {"max_states", s.max_states}};
    r.text = row("orbit", "budget exceeded after " + std::to_string(s.max_states) + " states");
    return r;
  }
  r.json["orbit"] = to_json(*cert);
  r.text = row("orbit size", cert->orbit_size) + row("irreducible", yes_no(cert->irreducible));
  if (cert->witness)
    r.text += row("witness", serialize_diagram(cert->witness->member) + " via " +
                                 std::string(kind_name(cert->witness->move.kind)));
  return r;
}

Outcome do_equiv(const GaussDiagram& g, const GaussDiagram& h, const Settings& s) {
  Outcome r;
  const CanonicalKey kg = primitive_key(g), kh = primitive_key(h);
  const bool homologous_matrices = kg == kh;
  const int cap = std::max(s.max_arrows, std::max(g.arrow_count(), h.arrow_count()));
  const SearchResult search = homotopic_bounded(g, h, s.max_arrows < 0 ? -1 : cap, s.max_states);
  std::string verdict = "unknown";
  std::string reason;
  bool verified = false;
  if (search.status == SearchStatus::Yes) {
    verified = canonical_key(replay_path(g, search.path)) == canonical_key(h);
    verdict = "homotopic";
    reason = "move path found";
  } else if (!homologous_matrices) {
    verdict = "not_homotopic";
    reason = "primitive based matrices differ";
  } else {
    r.inconclusive = search.status == SearchStatus::BudgetExceeded;
    reason = search.status == SearchStatus::BudgetExceeded ? "search budget exceeded" : "no path within arrow bound";
  }
  r.json["search"] = to_json(search);
  r.json["path_verified"] = verified;
  r.json["primitive_keys"] = {kg.hex(), kh.hex()};
  r.json["homologous_matrices"] = homologous_matrices;
  r.json["verdict"] = verdict;
  r.json["reason"] = reason;
  r.text = row("verdict", verdict) + row("reason", reason) + row("search", status_name(search.status)) +
           row("states", search.states) + row("path length", search.path.size()) +
           row("homologous matrices", yes_no(homologous_matrices));
  return r;
}

int emit(const Settings& s, const std::string& command, const std::vector<Input>& inputs, bool corpus,
         const std::function<Outcome(const GaussDiagram&)>& fn, std::ostream& out) {
  bool inconclusive = false;
  Json results = Json::array();
  std::string text;
  for (const Input& in : inputs) {
    Outcome o = fn(in.diagram);
    inconclusive = inconclusive || o.inconclusive;
    Json j{{"diagram", in.name}};
    for (auto& [k, v] : o.json.items()) j[k] = v;
    results.push_back(std::move(j));
    if (corpus) text += "# " + in.name + '\n';
    text += o.text;
  }
  if (s.format == "text") {
    out << text;
  } else {
    Json doc{{"schema", kSchema}, {"command", command}};
    if (corpus) {
      doc["corpus"] = s.corpus;
      doc["results"] = std::move(results);
    } else {
      for (auto& [k, v] : results.at(0).items()) doc[k] = v;
    }
    out << doc.dump(2) << '\n';
  }
  return inconclusive ? kExitBudget : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and self-intersection bounds of virtual strings", "virtstring"};
  app.require_subcommand(1, 1);
  Settings s;
  auto common = [&](CLI::App* sub, bool single_input) {
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-states", s.max_states, "State budget for orbit and homotopy searches")
        ->capture_default_str();
    if (single_input) {
      sub->add_option("--example", s.example, "Built-in diagram: M or alpha:p,q");
      sub->add_option("--corpus", s.corpus, "File with one diagram per line ('#' starts a comment)");
    }
  };

  const std::vector<std::pair<std::string, std::string>> single{
      {"matrix", "Print the based matrix and its primitive"},
      {"rho", "Print rho"},
      {"mu", "Analyse mu"},
      {"nu", "Compute nu and S(mu)"},
      {"bounds", "Full bound report"},
      {"orbit", "Type 3 orbit and irreducibility certificate"},
  };
  std::string diagram_text;
  std::vector<CLI::App*> single_subs;
  for (const auto& [name, help] : single) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, true);
    sub->add_option("diagram", diagram_text, "Arrow list, e.g. \"T0 H1 H0 T1\"");
    single_subs.push_back(sub);
  }

  CLI::App* equiv = app.add_subcommand("equiv", "Bounded homotopy search between two diagrams");
  common(equiv, false);
  std::vector<std::string> pair;
  equiv->add_option("--max-arrows", s.max_arrows, "Arrow cap for intermediate diagrams (default n+2)");
  equiv->add_option("diagrams", pair, "Two arrow lists, or M / alpha:p,q")->expected(2)->required();

  CLI::App* check = app.add_subcommand("paper-check", "Reproduce the published examples and theorems");
  PaperCheckOptions pc;
  check->add_option("--format", s.format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("--max-states", pc.max_states)->capture_default_str();
  check->add_option("--seed", pc.seed)->capture_default_str();
  check->add_option("--instances", pc.property_instances, "Random instances for the property criteria")
      ->capture_default_str();
  check->add_flag("--verbose", pc.verbose);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (check->parsed()) {
      const auto results = run_paper_check(pc);
      if (s.format == "json") {
        Json list = Json::array();
        for (const CriterionResult& r : results)
          list.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << Json{{"schema", kSchema}, {"command", "paper-check"}, {"all_passed", all_passed(results)},
                    {"criteria", list}}
                   .dump(2)
            << '\n';
      } else {
        print_paper_check(results, out);
      }
      return all_passed(results) ? kExitOk : kExitCheckFailed;
    }

    if (equiv->parsed()) {
      auto resolve = [](const std::string& t) {
        if (t == "M" || t.rfind("alpha:", 0) == 0) return named_example(t);
        return parse_diagram(t);
      };
      const GaussDiagram g = resolve(pair[0]), h = resolve(pair[1]);
      const Outcome o = do_equiv(g, h, s);
      if (s.format == "text") {
        out << o.text;
      } else {
        Json doc{{"schema", kSchema}, {"command", "equiv"}, {"diagrams", {pair[0], pair[1]}}};
        for (auto& [k, v] : o.json.items()) doc[k] = v;
        out << doc.dump(2) << '\n';
      }
      return o.inconclusive ? kExitBudget : kExitOk;
    }

    for (std::size_t i = 0; i < single.size(); ++i) {
      CLI::App* sub = single_subs[i];
      if (!sub->parsed()) continue;
      const bool has_diagram = sub->get_option("diagram")->count() > 0;
      const int sources = static_cast<int>(has_diagram) + static_cast<int>(!s.example.empty()) +
                          static_cast<int>(!s.corpus.empty());
      if (sources != 1) throw ParseError("give exactly one of <diagram>, --example or --corpus");
      std::vector<Input> inputs;
      if (!s.corpus.empty())
        inputs = read_corpus(s.corpus);
      else if (!s.example.empty())
        inputs.push_back({s.example, named_example(s.example)});
      else {
        GaussDiagram g = parse_diagram(diagram_text);
        inputs.push_back({serialize_diagram(g), std::move(g)});
      }
      const std::string& cmd = single[i].first;
      std::function<Outcome(const GaussDiagram&)> fn;
      if (cmd == "matrix") fn = [&](const GaussDiagram& g) { return do_matrix(g, s); };
      if (cmd == "rho") fn = [&](const GaussDiagram& g) { return do_rho(g, s); };
      if (cmd == "mu") fn = [&](const GaussDiagram& g) { return do_mu(g, s); };
      if (cmd == "nu") fn = [&](const GaussDiagram& g) { return do_nu(g, s); };
      if (cmd == "bounds") fn = [&](const GaussDiagram& g) { return do_bounds(g, s); };
      if (cmd == "orbit") fn = [&](const GaussDiagram& g) { return do_orbit(g, s); };
      return emit(s, cmd, inputs, !s.corpus.empty(), fn, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace virtstring::cli
