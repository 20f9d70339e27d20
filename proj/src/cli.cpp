#include "strimp/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "strimp/classes.hpp"
#include "strimp/consequence.hpp"
#include "strimp/model_io.hpp"
#include "strimp/search.hpp"
#include "strimp/unravel.hpp"

namespace strimp {

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelClass parse_class_tag(const std::string& tag) {
  auto c = class_from_tag(tag);
  if (!c) throw Error("unknown class tag '" + tag + "'");
  return *c;
}

ProofSystem parse_system_tag(const std::string& tag) {
  auto sys = ProofSystem::from_name(tag);
  if (!sys) throw Error("unknown system tag '" + tag + "'");
  return *sys;
}

std::vector<std::string> split_atoms(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string piece = comma == std::string::npos
                            ? list.substr(start)
                            : list.substr(start, comma - start);
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (const std::string& a : out) {
    if (!is_valid_atom_name(a)) throw Error("invalid atom name '" + a + "'");
  }
  return out;
}

void print_derivation_tree(const Derivation& d, int indent, std::ostream& out) {
  out << std::string(indent * 2, ' ') << rule_name(d.rule) << ":  "
      << d.conclusion.to_string() << "\n";
  for (const Derivation& p : d.premises) {
    print_derivation_tree(p, indent + 1, out);
  }
}

struct Options {
  bool json_output = false;

  std::string model_path;
  std::string proof_path;
  std::string formula_text;
  std::string sequent_text;
  std::string class_tag;
  std::string system_tag;
  std::string atoms_list;
  std::string emit_path;
  int world = 0;
  int max_worlds = 3;
  int depth = 0;
  bool has_depth = false;
  bool reflexive = false;
};

int cmd_check(const Options& opt, std::ostream& out) {
  Model m = model_from_json(read_file(opt.model_path));
  Formula f = parse(opt.formula_text);
  if (opt.world < 0 || opt.world >= m.frame().size()) {
    throw Error("world " + std::to_string(opt.world) + " out of range");
  }
  bool result = satisfies(m, opt.world, f);
  if (opt.json_output) {
    out << json{{"result", result}}.dump() << "\n";
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? kExitYes : kExitNo;
}

int cmd_valid(const Options& opt, std::ostream& out) {
  Model m = model_from_json(read_file(opt.model_path));
  Sequent s = parse_sequent(opt.sequent_text);
  bool result = sequent_valid_in_model(m, s);
  if (opt.json_output) {
    out << json{{"result", result}}.dump() << "\n";
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? kExitYes : kExitNo;
}

int cmd_consequence(const Options& opt, std::ostream& out) {
  ModelClass c = parse_class_tag(opt.class_tag);
  Sequent s = parse_sequent(opt.sequent_text);
  std::vector<std::string> atom_list;
  if (!opt.atoms_list.empty()) {
    atom_list = split_atoms(opt.atoms_list);
  } else {
    std::set<std::string> needed = atoms(s.context());
    for (const std::string& a : atoms(s.goal())) needed.insert(a);
    atom_list.assign(needed.begin(), needed.end());
  }
  Verdict v = semantic_consequence(s, c, opt.max_worlds, atom_list);
  if (v.valid_up_to()) {
    if (opt.json_output) {
      out << json{{"result", "valid-up-to"}, {"max_worlds", v.max_worlds}}
                 .dump()
          << "\n";
    } else {
      out << "valid-up-to " << v.max_worlds << "\n";
    }
    return kExitYes;
  }
  const PointedModel& pm = *v.countermodel;
  if (opt.json_output) {
    json j;
    j["result"] = "countermodel";
    j["model"] = json::parse(model_to_json(pm.model()));
    j["world"] = pm.point();
    out << j.dump() << "\n";
  } else {
    out << "countermodel\n"
        << model_to_json(pm.model()) << "\n"
        << "world " << pm.point() << "\n";
  }
  return kExitNo;
}

int cmd_props(const Options& opt, std::ostream& out) {
  Model m = model_from_json(read_file(opt.model_path));
  std::vector<WorldSet> props = propositions(m.frame());
  if (opt.json_output) {
    json arr = json::array();
    for (const WorldSet& ws : props) arr.push_back(ws.worlds());
    out << json{{"propositions", arr}}.dump() << "\n";
  } else {
    for (const WorldSet& ws : props) out << ws.to_string() << "\n";
  }
  return kExitYes;
}

int cmd_derive_check(const Options& opt, std::ostream& out) {
  ProofSystem sys = parse_system_tag(opt.system_tag);
  Derivation d = derivation_from_json(read_file(opt.proof_path));
  DerivationCheck result = check_derivation(d, sys);
  if (opt.json_output) {
    json j;
    j["ok"] = result.ok;
    if (!result.ok) {
      j["reason"] = result.reason;
      j["path"] = result.path;
    }
    out << j.dump() << "\n";
  } else if (result.ok) {
    out << "ok\n";
  } else {
    out << "error at node [";
    for (std::size_t i = 0; i < result.path.size(); ++i) {
      if (i > 0) out << ",";
      out << result.path[i];
    }
    out << "]: " << result.reason << "\n";
  }
  return result.ok ? kExitYes : kExitNo;
}

int cmd_prove(const Options& opt, std::ostream& out) {
  ProofSystem sys = parse_system_tag(opt.system_tag);
  Sequent s = parse_sequent(opt.sequent_text);
  SearchConfig cfg;
  cfg.system = sys.tag();
  cfg.max_depth = opt.depth;
  auto d = prove(s, cfg);
  if (!d) {
    if (opt.json_output) {
      out << json{{"result", "not-found"}}.dump() << "\n";
    } else {
      out << "not-found\n";
    }
    return kExitNo;
  }
  if (!opt.emit_path.empty()) {
    std::ofstream file(opt.emit_path);
    if (!file) throw Error("cannot write file: " + opt.emit_path);
    file << derivation_to_json(*d, 2) << "\n";
  }
  if (opt.json_output) {
    out << json{{"result", "found"},
                {"proof", json::parse(derivation_to_json(*d))}}
               .dump()
        << "\n";
  } else {
    print_derivation_tree(*d, 0, out);
  }
  return kExitYes;
}

int cmd_unravel(const Options& opt, std::ostream& out) {
  Model m = model_from_json(read_file(opt.model_path));
  PointedModel pm(std::move(m), opt.world);
  std::optional<int> depth;
  if (opt.has_depth) depth = opt.depth;
  UnravelledModel um = unravel(pm, depth, opt.reflexive);
  out << unravelled_to_json(um, opt.json_output ? -1 : 2) << "\n";
  return kExitYes;
}

int cmd_translate(const Options& opt, std::ostream& out) {
  Formula f = parse(opt.formula_text);
  ModalFormula mf = translate_modal(f);
  if (opt.json_output) {
    out << json{{"modal", to_string(mf)}}.dump() << "\n";
  } else {
    out << to_string(mf) << "\n";
  }
  return kExitYes;
}

int cmd_class_check(const Options& opt, std::ostream& out) {
  ModelClass c = parse_class_tag(opt.class_tag);
  Model m = model_from_json(read_file(opt.model_path));
  bool result = class_member(m, c);
  if (opt.json_output) {
    out << json{{"result", result}}.dump() << "\n";
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Kripke semantics toolkit for the {_|_, &, ->} language"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand as well
  Options opt;
  app.add_flag("--json", opt.json_output, "emit JSON output");

  auto* check = app.add_subcommand("check", "evaluate a formula at a world");
  check->add_option("--model", opt.model_path, "model JSON file")->required();
  check->add_option("--world", opt.world, "world index")->required();
  check->add_option("--formula", opt.formula_text, "formula")->required();

  auto* valid = app.add_subcommand("valid", "sequent validity in a model");
  valid->add_option("--model", opt.model_path, "model JSON file")->required();
  valid->add_option("--sequent", opt.sequent_text, "\"ctx ; goal\"")
      ->required();

  auto* consequence = app.add_subcommand(
      "consequence", "brute-force consequence over a model class");
  consequence->add_option("--class", opt.class_tag, "class tag")->required();
  consequence->add_option("--max-worlds", opt.max_worlds, "world bound")
      ->required();
  consequence->add_option("--sequent", opt.sequent_text, "\"ctx ; goal\"")
      ->required();
  consequence->add_option("--atoms", opt.atoms_list,
                          "comma-separated atom list (default: sequent atoms)");

  auto* props =
      app.add_subcommand("props", "list the propositions of a frame");
  props->add_option("--model", opt.model_path, "model or frame JSON file")
      ->required();

  auto* derive_check =
      app.add_subcommand("derive-check", "check a derivation file");
  derive_check->add_option("--system", opt.system_tag, "system tag")
      ->required();
  derive_check->add_option("--proof", opt.proof_path, "derivation JSON file")
      ->required();

  auto* prove_cmd =
      app.add_subcommand("prove", "bounded backward proof search");
  prove_cmd->add_option("--system", opt.system_tag, "system tag")->required();
  prove_cmd->add_option("--depth", opt.depth, "tree depth bound")->required();
  prove_cmd->add_option("--sequent", opt.sequent_text, "\"ctx ; goal\"")
      ->required();
  prove_cmd->add_option("--emit", opt.emit_path, "write the proof JSON here");

  auto* unravel_cmd =
      app.add_subcommand("unravel", "unravel a pointed model");
  unravel_cmd->add_option("--model", opt.model_path, "model JSON file")
      ->required();
  unravel_cmd->add_option("--world", opt.world, "root world")->required();
  auto* depth_opt = unravel_cmd->add_option(
      "--depth", opt.depth, "path length bound (omit for the full tree)");
  unravel_cmd->add_flag("--reflexive", opt.reflexive,
                        "build the reflexive unravelling");

  auto* translate =
      app.add_subcommand("translate", "box translation of a formula");
  translate->add_option("--formula", opt.formula_text, "formula")->required();

  auto* class_check =
      app.add_subcommand("class-check", "class membership of a model");
  class_check->add_option("--class", opt.class_tag, "class tag")->required();
  class_check->add_option("--model", opt.model_path, "model JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  opt.has_depth = depth_opt->count() > 0;

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (valid->parsed()) return cmd_valid(opt, out);
    if (consequence->parsed()) return cmd_consequence(opt, out);
    if (props->parsed()) return cmd_props(opt, out);
    if (derive_check->parsed()) return cmd_derive_check(opt, out);
    if (prove_cmd->parsed()) return cmd_prove(opt, out);
    if (unravel_cmd->parsed()) return cmd_unravel(opt, out);
    if (translate->parsed()) return cmd_translate(opt, out);
    if (class_check->parsed()) return cmd_class_check(opt, out);
    err << "no subcommand given\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace strimp
