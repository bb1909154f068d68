// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "idpl/cli.hpp"
#include "idpl/costmodel.hpp"
#include "idpl/featmodel.hpp"
#include "idpl/idinstance.hpp"
#include "idpl/idspec.hpp"
#include "idpl/presets.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace idpl;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cost_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"--format", "json", "cost", "report", "--org", "24", "--cab", "48", "--unique", "2",
                             "--reuse", "1", "--product", "24", "--n", "9"},
                            out, err);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(code == 0, "cost report exited " + std::to_string(code));
  const auto r = nlohmann::json::parse(out.str())["result"];
  require(r["spl_pw"] == 99, "C_SPL " + r["spl_pw"].dump());
  require(r["spl_pm_rounded"] == 25, "C_SPL months " + r["spl_pm_rounded"].dump());
  require(r["standalone_pw"] == 216, "C_standalone " + r["standalone_pw"].dump());
  require(r["standalone_pm_rounded"] == 54, "C_standalone months " + r["standalone_pm_rounded"].dump());
  require(r["savings_pm_paper_style"] == 29, "paper-style savings " + r["savings_pm_paper_style"].dump());
  require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  return "spl 99 pw (25 pm), standalone 216 pw (54 pm), savings 29 pm paper-style, " +
         std::to_string(static_cast<int>(elapsed * 1000)) + " ms";
}

std::string break_even() {
  const auto be = cost::break_even({24, 48, 2, 1, 24, 9});
  require(be == 4, "break_even " + (be ? std::to_string(*be) : std::string("none")));
  return "break_even = 4";
}

std::string design_core_suite() {
  const auto model = presets::design_core_model();
  fm::Configuration base;
  base.model = "DesignCore";
  for (const char* f : {"InstructionalDesign", "GoalClassification", "GoalPriority", "High", "IPCL",
                        "InstructionalDesignModel", "GagneModel", "Play", "Act", "Scene", "Instruction"}) {
    base.selections[f] = 1;
  }
  require(fm::check_configuration(model, base).valid, "baseline configuration rejected");

  auto only = [&](const fm::Configuration& c) {
    const auto r = fm::check_configuration(model, c);
    require(!r.valid && r.diagnostics.size() == 1, "expected exactly one diagnostic, got " +
                                                       std::to_string(r.diagnostics.size()));
    return r.diagnostics[0].code;
  };
  auto merrill = base;
  merrill.selections.erase("GagneModel");
  merrill.selections["MerrillModel"] = 1;
  const auto a = only(merrill);
  require(a == "R3_MANDATORY_MISSING", "(a) got " + a);

  auto priorities = base;
  priorities.selections["Medium"] = 1;
  const auto b = only(priorities);
  require(b == "R4_ALTERNATIVE", "(b) got " + b);

  auto plays = base;
  plays.selections["Play"] = 26;
  const auto c = only(plays);
  require(c == "R6_CARDINALITY", "(c) got " + c);

  plays.selections["Play"] = 25;
  require(fm::check_configuration(model, plays).valid, "Play count 25 rejected");
  return a + ", " + b + ", " + c + "; Play=25 accepted";
}

std::string oracle_equivalence() {
  testing::Rng rng(20260101);
  testing::ModelShape shape;
  shape.max_features = 12;
  int models = 0;
  std::uint64_t total = 0;
  for (; models < 60; ++models) {
    const auto m = testing::random_model(rng, shape);
    const auto got = fm::count_configurations(m);
    const auto want = testing::powerset_count(m);
    require(got == want, "count " + std::to_string(got) + " vs oracle " + std::to_string(want) + " for\n" +
                             fm::serialize_model(m));
    total += got;
  }
  return std::to_string(models) + " random models agree (" + std::to_string(total) + " configurations total)";
}

std::string hindi_primer_pipeline() {
  const fs::path samples(IDPL_SAMPLES_DIR);
  const fs::path work = fs::temp_directory_path() / "idpl-acceptance-primer";
  fs::remove_all(work);
  fs::create_directories(work);

  auto run = [](std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, err.str());
  };

  const auto xml = slurp(samples / "hindi_primer.xml");
  require(inst::parse_instance(xml).ok(), "sample does not parse");
  const auto spec_file = (work / "spec.json").string();
  require(run({"spec", "preset", "2", "-o", spec_file}).first == 0, "spec preset 2 failed");
  const auto validated = run({"instance", "validate", spec_file, (samples / "hindi_primer.xml").string()});
  require(validated.first == 0, "validation exit " + std::to_string(validated.first) + ": " + validated.second);
  const auto diags = inst::validate_instance(*inst::parse_instance(xml).instance, spec::preset_specification(2));
  require(error_count(diags) == 0, std::to_string(error_count(diags)) + " validation errors");

  for (const char* out : {"build1", "build2"}) {
    const auto built = run({"primer", "build", spec_file, (samples / "hindi_primer.xml").string(), "-o",
                            (work / out).string(), "--assets", (samples / "assets").string()});
    require(built.first == 0, std::string("primer build failed: ") + built.second);
  }

  const auto lesson = nlohmann::json::parse(slurp(work / "build1" / "lessons" / "00.json"));
  const auto& steps = lesson["steps"];
  std::size_t join = 0;
  while (join < steps.size() && !(steps[join]["kind"] == "join" && steps[join]["text"] == "नम")) ++join;
  require(join >= 2 && join + 1 < steps.size(), "no join step for नम");
  std::vector<std::string> kinds;
  for (std::size_t i = join - 2; i <= join + 1; ++i) kinds.push_back(steps[i]["kind"]);
  require(kinds == std::vector<std::string>{"drop_fact", "drop_fact", "join", "reveal_word"},
          "case steps are not drop, drop, join, reveal");
  require(steps[join - 2]["slot"] == 0 && steps[join - 1]["slot"] == 1, "drop slots not 0, 1");
  require(steps[join - 3]["kind"] != "drop_fact" || steps[join - 3]["word"] != "नम",
          "case नम has more than two drops");

  std::map<std::string, std::string> first;
  std::map<std::string, std::string> second;
  for (const auto& [dir, into] : {std::pair{work / "build1", &first}, std::pair{work / "build2", &second}}) {
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      if (e.is_regular_file()) (*into)[e.path().lexically_relative(dir).generic_string()] = slurp(e.path());
    }
  }
  require(!first.empty() && first == second, "the two builds differ");
  fs::remove_all(work);
  return "0 validation errors; नम = drop, drop, join, reveal; " + std::to_string(first.size()) +
         " files byte-identical across two builds";
}

std::string round_trips() {
  testing::Rng rng(777);
  testing::ModelShape shape;
  shape.max_features = 24;
  shape.clones = true;
  shape.attributes = true;
  for (int i = 0; i < 1000; ++i) {
    const auto m = testing::random_model(rng, shape);
    const auto text = fm::serialize_model(m);
    auto back = fm::parse_model(text);
    require(back.ok() && *back.model == m, "model round trip failed for\n" + text);
  }
  for (int i = 0; i < 1000; ++i) {
    const auto in = testing::random_instance(rng);
    const auto text = inst::serialize_instance(in);
    auto back = inst::parse_instance(text);
    require(back.ok() && *back.instance == in, "instance round trip failed for\n" + text);
  }
  return "1000 models and 1000 instances";
}

std::string decomposition_oracle() {
  testing::Rng rng(4242);
  const std::vector<std::string> alphabet{"न", "म", "र", "क", "ा", "ि", "a", "b"};
  int successes = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> taught;
    const int k = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int j = 0; j < k; ++j) taught.push_back(testing::random_word(rng, alphabet, 1, 3));
    const auto word = std::bernoulli_distribution(0.5)(rng) ? testing::glued_word(rng, taught, alphabet, 12)
                                                            : testing::random_word(rng, alphabet, 1, 12);
    const auto got = inst::decompose_word(word, taught);
    const bool exists = !testing::all_segmentations(word, taught).empty();
    require(got.has_value() == exists, "disagreement on '" + word + "'");
    if (got) {
      ++successes;
      std::string joined;
      for (const auto& p : *got) {
        require(std::find(taught.begin(), taught.end(), p) != taught.end(), "piece not taught: " + p);
        joined += p;
      }
      require(joined == word, "concatenation law broken for '" + word + "'");
    }
  }
  return "500 cases agree (" + std::to_string(successes) + " decomposable)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<std::string()>> criteria[] = {
      {"cost-reproduction", cost_reproduction},   {"break-even", break_even},
      {"design-core-constraints", design_core_suite},      {"oracle-equivalence", oracle_equivalence},
      {"hindi-primer-pipeline", hindi_primer_pipeline},    {"round-trip", round_trips},
      {"decomposition-oracle", decomposition_oracle}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    try {
      std::cout << "PASS " << name << ": " << check() << '\n';
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL " << name << ": " << f.what << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": exception: " << e.what() << '\n';
    }
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << '\n';
  return failures ? 1 : 0;
}
