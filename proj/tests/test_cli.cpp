#include "strimp/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "strimp/model_io.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"

using namespace strimp;
using namespace strimp::testing;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"strimp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& contents) {
    path_ = (std::filesystem::temp_directory_path() /
             ("strimp_test_" + name))
                .string();
    std::ofstream f(path_);
    f << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kChain = R"({"worlds":2,"rel":[[0,1]],"val":{"p":[1],"q":[]}})";
const char* kDead = R"({"worlds":1,"rel":[],"val":{"p":[0]}})";

}  // namespace

TEST_CASE("model JSON round-trips") {
  ModelGen gen(454545, {"p", "q"});
  for (int i = 0; i < 100; ++i) {
    Model m = gen.model(4);
    CHECK(model_from_json(model_to_json(m)) == m);
  }
}

TEST_CASE("model JSON validation") {
  CHECK_THROWS_AS(model_from_json("not json"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"rel":[]})"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":0})"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":2,"rel":[[0,2]]})"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":2,"rel":[[0,1],[0,1]]})"),
                  Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":2,"rel":[[0]]})"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":2,"val":{"p":[2]}})"), Error);
  CHECK_THROWS_AS(model_from_json(R"({"worlds":2,"val":{"bot":[0]}})"), Error);
  CHECK(model_from_json(R"({"worlds":1})") == Model(Frame(1, {}), {}));
}

TEST_CASE("derivation JSON round-trips") {
  for (const CorpusEntry& entry : soundness_corpus()) {
    std::string text = derivation_to_json(entry.derivation);
    Derivation back = derivation_from_json(text);
    CHECK(derivation_to_json(back) == text);
    CHECK(check_derivation(back, ProofSystem(entry.system)).ok);
  }
}

TEST_CASE("sequent text syntax") {
  Sequent s = parse_sequent("p, p -> q ; q");
  CHECK(s.context() == FormulaSet{F("p"), F("p -> q")});
  CHECK(s.goal() == F("q"));

  CHECK(parse_sequent("q").context().empty());
  CHECK(parse_sequent(" ; q").context().empty());
  CHECK(parse_sequent("; q").goal() == F("q"));
  CHECK_THROWS_AS(parse_sequent("p, ; q"), Error);
  CHECK_THROWS_AS(parse_sequent("p ;"), Error);
  CHECK_THROWS_AS(parse_sequent("p ; q ; r"), Error);
}

TEST_CASE("cli: check") {
  TempFile chain("chain.json", kChain);
  CliResult r = cli({"check", "--model", chain.path(), "--world", "0",
                     "--formula", "p -> q"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");

  r = cli({"check", "--model", chain.path(), "--world", "1", "--formula",
           "p -> q"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = cli({"--json", "check", "--model", chain.path(), "--world", "0",
           "--formula", "p"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["result"] == false);

  // the flag is accepted after the subcommand too
  r = cli({"check", "--model", chain.path(), "--world", "0", "--formula",
           "p", "--json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["result"] == false);

  r = cli({"check", "--model", chain.path(), "--world", "7", "--formula",
           "p"});
  CHECK(r.code == 2);

  r = cli({"check", "--model", chain.path(), "--world", "0", "--formula",
           "p &"});
  CHECK(r.code == 2);

  r = cli({"check", "--model", "/nonexistent.json", "--world", "0",
           "--formula", "p"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: valid") {
  TempFile chain("chain2.json", kChain);
  CliResult r =
      cli({"valid", "--model", chain.path(), "--sequent", "; p -> p"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  TempFile dead("dead.json",
                R"({"worlds":1,"rel":[],"val":{"p":[0],"q":[]}})");
  r = cli({"valid", "--model", dead.path(), "--sequent", "p, p -> q ; q"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("cli: consequence") {
  CliResult r = cli({"consequence", "--class", "tp", "--max-worlds", "3",
                     "--sequent", "p, p -> q ; q"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid-up-to 3\n");

  r = cli({"--json", "consequence", "--class", "kp", "--max-worlds", "1",
           "--sequent", "p, p -> q ; q"});
  CHECK(r.code == 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["result"] == "countermodel");
  CHECK(j["world"] == 0);
  Model cm = model_from_json(j["model"].dump());
  CHECK(cm == Model(Frame(1, {}),
                    {{"p", WorldSet::of(1, {0})}, {"q", WorldSet(1)}}));

  r = cli({"consequence", "--class", "zz", "--max-worlds", "2", "--sequent",
           "p ; p"});
  CHECK(r.code == 2);

  // atom list must cover the sequent
  r = cli({"consequence", "--class", "kp", "--max-worlds", "2", "--atoms",
           "p", "--sequent", "p ; q"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: props") {
  TempFile dead("dead2.json", kDead);
  CliResult r = cli({"props", "--model", dead.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "{}\n{0}\n");

  r = cli({"--json", "props", "--model", dead.path()});
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["propositions"] ==
        nlohmann::json::parse("[[],[0]]"));
}

TEST_CASE("cli: derive-check") {
  Derivation d = expand_dt0(ax(RuleName::A, RuleParams{.phi = F("p")},
                               {F("p")}, F("p")));
  TempFile proof("proof.json", derivation_to_json(d, 2));
  CliResult r =
      cli({"derive-check", "--system", "kp", "--proof", proof.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");

  Derivation refl = ax(RuleName::Refl,
                       RuleParams{.phi = F("p"), .psi = F("q")},
                       {F("p"), F("p -> q")}, F("q"));
  TempFile refl_proof("refl.json", derivation_to_json(refl, 2));
  r = cli({"derive-check", "--system", "bp", "--proof", refl_proof.path()});
  CHECK(r.code == 1);
  CHECK(r.out.find("rule-not-in-system") != std::string::npos);
  r = cli({"derive-check", "--system", "tp", "--proof", refl_proof.path()});
  CHECK(r.code == 0);

  TempFile garbage("garbage.json", "{not json");
  r = cli({"derive-check", "--system", "kp", "--proof", garbage.path()});
  CHECK(r.code == 2);
}

TEST_CASE("cli: prove and emit") {
  std::string emit_path =
      (std::filesystem::temp_directory_path() / "strimp_test_emit.json")
          .string();
  CliResult r = cli({"prove", "--system", "tp", "--depth", "3", "--sequent",
                     "p, p -> q ; q", "--emit", emit_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("Refl") != std::string::npos);

  // the emitted file re-checks
  r = cli({"derive-check", "--system", "tp", "--proof", emit_path});
  CHECK(r.code == 0);
  std::remove(emit_path.c_str());

  r = cli({"prove", "--system", "kp", "--depth", "6", "--sequent",
           "p, p -> q ; q"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-found\n");
}

TEST_CASE("cli: unravel") {
  TempFile loop("loop.json", R"({"worlds":1,"rel":[[0,0]],"val":{"p":[0]}})");
  CliResult r = cli({"unravel", "--model", loop.path(), "--world", "0",
                     "--depth", "1", "--reflexive"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["worlds"] == 2);
  CHECK(j["depth_map"] == nlohmann::json::parse("[0,1]"));
  CHECK(j["rel"] == nlohmann::json::parse("[[0,0],[0,1],[1,1]]"));
  CHECK(j["val"]["p"] == nlohmann::json::parse("[0,1]"));

  // full unravelling of a cyclic reachable part is an input error
  r = cli({"unravel", "--model", loop.path(), "--world", "0"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: translate") {
  CliResult r = cli({"translate", "--formula", "p -> _|_"});
  CHECK(r.code == 0);
  CHECK(r.out == "[](p -> _|_)\n");
}

TEST_CASE("cli: class-check") {
  TempFile dead("dead3.json", kDead);
  CliResult r = cli({"class-check", "--class", "kp", "--model", dead.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"class-check", "--class", "re", "--model", dead.path()});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("cli: usage errors") {
  CliResult r = cli({"frobnicate"});
  CHECK(r.code == 2);
  r = cli({});
  CHECK(r.code == 2);
  r = cli({"check", "--world", "0", "--formula", "p"});  // missing --model
  CHECK(r.code == 2);
}
