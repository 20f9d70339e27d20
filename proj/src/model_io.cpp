#include "strimp/model_io.hpp"

#include <utility>

#include "json.hpp"

namespace strimp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("invalid JSON");
  return j;
}

int read_world_count(const json& j) {
  if (!j.is_object() || !j.contains("worlds") ||
      !j["worlds"].is_number_integer()) {
    throw Error("model: expected an object with an integer 'worlds' field");
  }
  int n = j["worlds"].get<int>();
  if (n < 1) throw Error("model: 'worlds' must be at least 1");
  return n;
}

WorldSet read_world_array(const json& arr, int n, const std::string& what) {
  if (!arr.is_array()) throw Error("model: " + what + " must be an array");
  WorldSet out(n);
  for (const json& e : arr) {
    if (!e.is_number_integer()) {
      throw Error("model: " + what + " must contain world indices");
    }
    int w = e.get<int>();
    if (w < 0 || w >= n) {
      throw Error("model: world " + std::to_string(w) + " in " + what +
                  " is out of range");
    }
    out.set(w);
  }
  return out;
}

}  // namespace

Model model_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = read_world_count(j);

  std::vector<std::pair<int, int>> pairs;
  if (j.contains("rel")) {
    if (!j["rel"].is_array()) throw Error("model: 'rel' must be an array");
    for (const json& pair : j["rel"]) {
      if (!pair.is_array() || pair.size() != 2 ||
          !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw Error("model: relation entries must be [s, t] pairs");
      }
      pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }

  std::map<std::string, WorldSet> val;
  if (j.contains("val")) {
    if (!j["val"].is_object()) throw Error("model: 'val' must be an object");
    for (const auto& [atom, arr] : j["val"].items()) {
      if (!is_valid_atom_name(atom)) {
        throw Error("model: invalid atom name '" + atom + "' in 'val'");
      }
      val.emplace(atom, read_world_array(arr, n, "val of '" + atom + "'"));
    }
  }

  return Model(Frame(n, pairs), std::move(val));  // Frame validates pairs
}

namespace {

json model_to_json_value(const Model& m) {
  json j;
  j["worlds"] = m.frame().size();
  json rel = json::array();
  for (auto [s, t] : m.frame().pairs()) rel.push_back(json::array({s, t}));
  j["rel"] = std::move(rel);
  json val = json::object();
  for (const auto& [atom, ws] : m.valuation()) val[atom] = ws.worlds();
  j["val"] = std::move(val);
  return j;
}

}  // namespace

std::string model_to_json(const Model& m, int indent) {
  return model_to_json_value(m).dump(indent);
}

std::string unravelled_to_json(const UnravelledModel& um, int indent) {
  json j = model_to_json_value(um.model);
  j["depth_map"] = um.depth_map;
  return j.dump(indent);
}

namespace {

Derivation derivation_from_json_value(const json& j) {
  if (!j.is_object()) throw Error("derivation: node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) {
    throw Error("derivation: missing 'rule'");
  }
  auto rule = rule_from_name(j["rule"].get<std::string>());
  if (!rule) {
    throw Error("derivation: unknown rule '" + j["rule"].get<std::string>() +
                "'");
  }

  if (!j.contains("conclusion") || !j["conclusion"].is_object()) {
    throw Error("derivation: missing 'conclusion'");
  }
  const json& conc = j["conclusion"];
  if (!conc.contains("goal") || !conc["goal"].is_string()) {
    throw Error("derivation: conclusion needs a 'goal' string");
  }
  FormulaSet ctx;
  if (conc.contains("ctx")) {
    if (!conc["ctx"].is_array()) {
      throw Error("derivation: conclusion 'ctx' must be an array");
    }
    for (const json& f : conc["ctx"]) {
      if (!f.is_string()) {
        throw Error("derivation: context entries must be formula strings");
      }
      ctx.insert(parse(f.get<std::string>()));
    }
  }
  Sequent conclusion(std::move(ctx), parse(conc["goal"].get<std::string>()));

  RuleParams params;
  if (j.contains("params")) {
    const json& p = j["params"];
    if (!p.is_object()) throw Error("derivation: 'params' must be an object");
    auto read_formula = [&](const char* key) -> std::optional<Formula> {
      if (!p.contains(key)) return std::nullopt;
      if (!p[key].is_string()) {
        throw Error(std::string("derivation: param '") + key +
                    "' must be a formula string");
      }
      return parse(p[key].get<std::string>());
    };
    params.phi = read_formula("phi");
    params.psi = read_formula("psi");
    params.chi = read_formula("chi");
    params.alpha = read_formula("alpha");
    if (p.contains("gamma")) {
      if (!p["gamma"].is_array()) {
        throw Error("derivation: param 'gamma' must be an array");
      }
      FormulaSet gamma;
      for (const json& f : p["gamma"]) {
        if (!f.is_string()) {
          throw Error("derivation: 'gamma' entries must be formula strings");
        }
        gamma.insert(parse(f.get<std::string>()));
      }
      params.gamma = std::move(gamma);
    }
    if (p.contains("p")) {
      if (!p["p"].is_string()) {
        throw Error("derivation: param 'p' must be an atom name");
      }
      params.atom = p["p"].get<std::string>();
    }
  }

  std::vector<Derivation> premises;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) {
      throw Error("derivation: 'premises' must be an array");
    }
    for (const json& sub : j["premises"]) {
      premises.push_back(derivation_from_json_value(sub));
    }
  }

  return Derivation{std::move(conclusion), *rule, std::move(params),
                    std::move(premises)};
}

json derivation_to_json_value(const Derivation& d) {
  json j;
  j["rule"] = rule_name(d.rule);
  json conc;
  json ctx = json::array();
  for (const Formula& f : d.conclusion.context()) ctx.push_back(to_string(f));
  conc["ctx"] = std::move(ctx);
  conc["goal"] = to_string(d.conclusion.goal());
  j["conclusion"] = std::move(conc);

  json p = json::object();
  if (d.params.phi) p["phi"] = to_string(*d.params.phi);
  if (d.params.psi) p["psi"] = to_string(*d.params.psi);
  if (d.params.chi) p["chi"] = to_string(*d.params.chi);
  if (d.params.alpha) p["alpha"] = to_string(*d.params.alpha);
  if (d.params.gamma) {
    json gamma = json::array();
    for (const Formula& f : *d.params.gamma) gamma.push_back(to_string(f));
    p["gamma"] = std::move(gamma);
  }
  if (d.params.atom) p["p"] = *d.params.atom;
  j["params"] = std::move(p);

  json premises = json::array();
  for (const Derivation& sub : d.premises) {
    premises.push_back(derivation_to_json_value(sub));
  }
  j["premises"] = std::move(premises);
  return j;
}

}  // namespace

Derivation derivation_from_json(const std::string& text) {
  return derivation_from_json_value(parse_json(text));
}

std::string derivation_to_json(const Derivation& d, int indent) {
  return derivation_to_json_value(d).dump(indent);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Sequent parse_sequent(const std::string& text) {
  std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    return Sequent({}, parse(trim(text)));
  }
  std::string ctx_part = text.substr(0, semi);
  std::string goal_part = trim(text.substr(semi + 1));
  if (goal_part.empty()) throw Error("sequent: missing goal after ';'");

  FormulaSet ctx;
  if (!trim(ctx_part).empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = ctx_part.find(',', start);
      std::string piece = trim(comma == std::string::npos
                                   ? ctx_part.substr(start)
                                   : ctx_part.substr(start, comma - start));
      if (piece.empty()) {
        throw Error("sequent: empty formula in the context list");
      }
      ctx.insert(parse(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return Sequent(std::move(ctx), parse(goal_part));
}

}  // namespace strimp
