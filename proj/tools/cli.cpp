#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "dl4x/codec.hpp"
#include "dl4x/errors.hpp"
#include "dl4x/oracle.hpp"
#include "dl4x/owlxml.hpp"
#include "dl4x/reasoner.hpp"

namespace dl4x::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string format = "text";
  bool coding = false, expansion = false, tableau = false, models = false, eqset = false, trace = false;
  std::size_t max_instances = ExpandOptions{}.max_instances;
  std::size_t max_atoms = OracleOptions{}.max_atoms;
  int max_cardinality = TranslateOptions{}.max_cardinality;
  bool strict = false;
};

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string class_text(const std::vector<Variable>& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].name;
  return out + "}";
}

std::string element_name(const Interpretation& m, std::size_t e) { return m.domain[e].front().name; }

Json model_json(const Interpretation& m) {
  Json domain = Json::array();
  for (const auto& c : m.domain) {
    Json names = Json::array();
    for (const auto& v : c) names.push_back(v.name);
    domain.push_back(names);
  }
  Json sets = Json::object();
  for (const auto& [s, elems] : m.sets) {
    Json members = Json::array();
    for (auto e : elems) members.push_back(element_name(m, e));
    sets[s.name] = members;
  }
  Json relations = Json::object();
  for (const auto& [r, pairs] : m.relations) {
    Json members = Json::array();
    for (auto [a, b] : pairs) members.push_back({element_name(m, a), element_name(m, b)});
    relations[r.name] = members;
  }
  return {{"domain", domain}, {"sets", sets}, {"relations", relations}};
}

void print_model(std::ostream& out, const Interpretation& m) {
  out << "  domain:";
  for (const auto& c : m.domain) out << ' ' << class_text(c);
  out << '\n';
  for (const auto& [s, elems] : m.sets) {
    out << "  " << s.name << " = {";
    bool first = true;
    for (auto e : elems) out << (std::exchange(first, false) ? "" : ", ") << element_name(m, e);
    out << "}\n";
  }
  for (const auto& [r, pairs] : m.relations) {
    out << "  " << r.name << " = {";
    bool first = true;
    for (auto [a, b] : pairs)
      out << (std::exchange(first, false) ? "" : ", ") << '<' << element_name(m, a) << ", " << element_name(m, b) << '>';
    out << "}\n";
  }
}

std::vector<std::string> coding_lines(const NormalizedKB& n) {
  std::vector<std::string> out;
  for (const auto& f : n.formulas) out.push_back(encode(f));
  for (const auto& l : n.ground_literals) out.push_back(encode(l));
  for (const auto& l : n.data_facts) out.push_back(encode(l));
  return out;
}

std::string trace_line(const TraceEvent& e) {
  std::string s = std::string(to_string(e.rule)) + " branch " + std::to_string(e.branch) + " clause " +
                  std::to_string(e.clause) + " " + encode(e.literal);
  if (e.rule == Rule::PB) s += " -> " + std::to_string(e.left) + ", " + std::to_string(e.right);
  return s;
}

int check(const RunConfig& cfg, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  dl::KnowledgeBase kb = read_owl_xml_file(cfg.input, ReadOptions{.auto_declare = !cfg.strict});
  DecideOptions options;
  options.translate.max_cardinality = cfg.max_cardinality;
  options.expand.max_instances = cfg.max_instances;
  Pipeline p = run_pipeline(kb, options);
  Verdict v = verdict_of(*p.tableau);
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const Tableau& t = *p.tableau;
  auto open = t.open_branches();

  if (cfg.format == "json") {
    Json j;
    j["verdict"] = to_string(v.kind);
    Json models = Json::array();
    for (std::size_t i = 0; i < v.models.size(); ++i) {
      Json m = model_json(v.models[i]);
      m["branch"] = open[i];
      models.push_back(m);
    }
    j["models"] = models;
    Json eq = Json::array();
    for (std::size_t i = 0; i < v.classes.size(); ++i) {
      Json classes = Json::array();
      for (const auto& c : v.classes[i].nontrivial()) {
        Json names = Json::array();
        for (const auto& x : c) names.push_back(x.name);
        classes.push_back(names);
      }
      eq.push_back({{"branch", open[i]}, {"classes", classes}});
    }
    j["eqClasses"] = eq;
    j["stats"] = {{"clauses", v.clauses},
                  {"branches", v.branches},
                  {"eRuleCount", v.stats.e_rules},
                  {"pbRuleCount", v.stats.pb_rules},
                  {"elapsedMs", elapsed}};
    if (cfg.coding) j["coding"] = coding_lines(p.normalized);
    if (cfg.expansion) {
      Json clauses = Json::array();
      for (const auto& c : p.expanded.clauses) clauses.push_back(encode(c));
      j["expansion"] = clauses;
    }
    if (cfg.tableau) j["tableau"] = t.render();
    if (cfg.trace) {
      Json events = Json::array();
      for (const auto& e : t.trace())
        events.push_back({{"rule", to_string(e.rule)},
                          {"branch", e.branch},
                          {"clause", e.clause},
                          {"literal", encode(e.literal)}});
      j["trace"] = events;
    }
    if (!v.witnesses.empty()) {
      Json w = Json::array();
      for (const auto& c : v.witnesses) w.push_back(to_string(c));
      j["closures"] = w;
    }
    out << j.dump(2) << '\n';
  } else {
    out << to_string(v.kind) << '\n';
    if (cfg.coding) {
      out << "# coding\n";
      for (const auto& line : coding_lines(p.normalized)) out << line << '\n';
    }
    if (cfg.expansion) {
      out << "# expansion\n";
      for (const auto& c : p.expanded.clauses) out << encode(c) << '\n';
    }
    if (cfg.trace) {
      out << "# trace\n";
      for (const auto& e : t.trace()) out << trace_line(e) << '\n';
    }
    if (cfg.tableau) out << "# tableau\n" << t.render();
    if (cfg.eqset) {
      out << "# equivalence classes\n";
      for (std::size_t i = 0; i < v.classes.size(); ++i) {
        out << "branch " << open[i] << ':';
        for (const auto& c : v.classes[i].nontrivial()) out << ' ' << class_text(c);
        out << '\n';
      }
    }
    if (cfg.models) {
      out << "# models\n";
      for (std::size_t i = 0; i < v.models.size(); ++i) {
        out << "model " << i + 1 << " (branch " << open[i] << ")\n";
        print_model(out, v.models[i]);
      }
    }
    out << "models: " << v.models.size() << ", branches: " << v.branches << ", clauses: " << v.clauses
        << ", E-rule: " << v.stats.e_rules << ", PB-rule: " << v.stats.pb_rules << '\n';
  }
  return v.consistent() ? kConsistent : kInconsistent;
}

int oracle(const RunConfig& cfg, std::ostream& out) {
  dl::KnowledgeBase kb = read_owl_xml_file(cfg.input, ReadOptions{.auto_declare = !cfg.strict});
  TranslateOptions topts;
  topts.max_cardinality = cfg.max_cardinality;
  ExpandedKB e = expand_kb(translate_kb(kb, topts), ExpandOptions{cfg.max_instances});
  OracleResult r = brute_force_sat(e, OracleOptions{cfg.max_atoms, false});
  if (cfg.format == "json")
    out << Json{{"satisfiable", r.satisfiable}, {"clauses", e.clauses.size()}}.dump(2) << '\n';
  else
    out << (r.satisfiable ? "Satisfiable" : "Unsatisfiable") << '\n';
  return r.satisfiable ? kConsistent : kInconsistent;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consistency checker for OWL/XML knowledge bases", "dl4x"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", cfg.input, "OWL/XML file")->required();
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--strict-declarations", cfg.strict, "Reject undeclared names");
    cmd->add_option("--max-instances", cfg.max_instances, "Ground instance limit")->check(CLI::PositiveNumber);
    cmd->add_option("--max-cardinality", cfg.max_cardinality, "Largest admitted cardinality bound")
        ->check(CLI::PositiveNumber);
  };
  CLI::App* check_cmd = app.add_subcommand("check", "Decide consistency (default)");
  add_common(check_cmd);
  check_cmd->add_flag("--emit-coding", cfg.coding, "Print the normalized formula in the internal coding");
  check_cmd->add_flag("--emit-expansion", cfg.expansion, "Print the ground clauses");
  check_cmd->add_flag("--emit-tableau", cfg.tableau, "Print the saturated tableau");
  check_cmd->add_flag("--emit-models", cfg.models, "Print one model per open branch");
  check_cmd->add_flag("--emit-eqset", cfg.eqset, "Print the equivalence classes per open branch");
  check_cmd->add_flag("--trace", cfg.trace, "Print every rule application");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive satisfiability check of the expansion");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--max-atoms", cfg.max_atoms, "Atom limit")->check(CLI::PositiveNumber);

  bool explicit_command = !args.empty() && (args[0] == "check" || args[0] == "oracle");
  bool top_level_flag = !args.empty() && (args[0] == "-h" || args[0] == "--help");
  if (!explicit_command && !top_level_flag) args.insert(args.begin(), "check");

  try {
    std::ranges::reverse(args);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    return oracle_cmd->parsed() ? oracle(cfg, out) : check(cfg, out);
  } catch (const ResourceLimit& e) {
    err << "dl4x: resource limit: " << one_line(e.what()) << '\n';
    return kResourceLimit;
  } catch (const InputError& e) {
    err << "dl4x: error: " << one_line(e.what()) << '\n';
    return kInputError;
  }
}

}  // namespace dl4x::cli
