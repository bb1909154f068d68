#include "idpl/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "idpl/costmodel.hpp"
#include "idpl/featmodel.hpp"
#include "idpl/generator.hpp"
#include "idpl/idinstance.hpp"
#include "idpl/idspec.hpp"

namespace idpl::cli {
namespace {

using json = nlohmann::json;

struct Outcome {
  int code = kSuccess;
  json result = json::object();
  Diagnostics diagnostics;
  std::string text;  // human-readable result for --format text
};

std::string_view status_of(int code) {
  switch (code) {
    case kSuccess: return "ok";
    case kUsageOrIo: return "error";
    case kInvalid: return "invalid";
    default: return "failed";
  }
}

json diagnostics_json(const Diagnostics& diags) {
  json arr = json::array();
  for (const auto& d : diags) {
    json j{{"code", d.code}, {"message", d.message}, {"path", d.path},
           {"severity", std::string(to_string(d.severity))}};
    if (d.line > 0) {
      j["line"] = d.line;
      j["column"] = d.column;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_ERROR", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("IO_ERROR", "cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw Error("IO_ERROR", "failed writing '" + path + "'");
}

std::string months_text(cost::PersonWeeks pw) {
  std::ostringstream os;
  if (pw % cost::kWeeksPerMonth == 0) {
    os << pw / cost::kWeeksPerMonth;
  } else {
    os << std::fixed << std::setprecision(2) << cost::to_months(pw);
  }
  return os.str();
}

/// Parsed model or an Outcome with code 2 carrying the parser's diagnostics.
std::optional<fm::FeatureModel> load_model(const std::string& path, Outcome& o) {
  auto parsed = fm::parse_model(read_file(path));
  for (auto& d : parsed.diagnostics) {
    if (d.path.empty()) d.path = path;
    o.diagnostics.push_back(d);
  }
  if (!parsed.model) o.code = kInvalid;
  return std::move(parsed.model);
}

std::optional<inst::IdInstance> load_instance(const std::string& path, Outcome& o) {
  auto parsed = inst::parse_instance(read_file(path));
  o.diagnostics.insert(o.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  if (!parsed.instance) o.code = kInvalid;
  return std::move(parsed.instance);
}

void emit_document(Outcome& o, const std::string& content, const std::string& out_path,
                   const char* key) {
  if (!out_path.empty()) {
    write_file(out_path, content);
    o.result["written"] = out_path;
    o.text = "wrote " + out_path + "\n";
  } else {
    o.result[key] = json::parse(content);
    o.text = content;
  }
}

// --- commands --------------------------------------------------------------

Outcome model_check(const std::string& path) {
  Outcome o;
  auto model = load_model(path, o);
  if (!model) return o;
  const fm::ModelIndex index(*model);
  o.result = json{{"model", model->name},
                  {"features", index.nodes().size()},
                  {"constraints", model->constraints.size()}};
  o.text = "model " + model->name + " ok: " + std::to_string(index.nodes().size()) + " features, " +
           std::to_string(model->constraints.size()) + " constraints\n";
  return o;
}

Outcome model_count(const std::string& path, int cap) {
  Outcome o;
  auto model = load_model(path, o);
  if (!model) return o;
  const auto n = fm::count_configurations(*model, cap);
  o.result = json{{"model", model->name}, {"clone_cap", cap}, {"count", n}};
  o.text = std::to_string(n) + " valid configurations (clone cap " + std::to_string(cap) + ")\n";
  return o;
}

Outcome config_check(const std::string& model_path, const std::string& config_path) {
  Outcome o;
  auto model = load_model(model_path, o);
  if (!model) return o;
  const auto config = fm::configuration_from_json(read_file(config_path));
  auto report = fm::check_configuration(*model, config);
  o.diagnostics = report.diagnostics;
  o.code = report.valid ? kSuccess : kInvalid;
  o.result = json{{"valid", report.valid}};
  o.text = report.valid ? "configuration valid\n"
                        : "configuration invalid: " + std::to_string(error_count(report.diagnostics)) +
                              " error(s)\n";
  return o;
}

Outcome spec_derive(const std::string& model_path, const std::string& config_path,
                    const std::string& out_path) {
  Outcome o;
  auto model = load_model(model_path, o);
  if (!model) return o;
  const auto config = fm::configuration_from_json(read_file(config_path));
  const auto spec = spec::derive_specification(*model, config);
  emit_document(o, spec::to_json(spec), out_path, "specification");
  return o;
}

Outcome spec_preset(int number, const std::string& out_path) {
  Outcome o;
  emit_document(o, spec::to_json(spec::preset_specification(number)), out_path, "specification");
  return o;
}

PedagogyCatalog load_catalog(const std::string& path) {
  return path.empty() ? default_catalog() : catalog_from_json(read_file(path));
}

Outcome editor_schema(const std::string& spec_path, const std::string& out_path,
                      const std::string& catalog_path) {
  Outcome o;
  const auto spec = spec::specification_from_json(read_file(spec_path));
  const auto schema = spec::generate_editor_schema(spec, load_catalog(catalog_path));
  emit_document(o, spec::to_json(schema), out_path, "schema");
  return o;
}

Outcome instance_validate(const std::string& spec_path, const std::string& xml_path,
                          const std::string& assets, const std::string& catalog_path) {
  Outcome o;
  const auto spec = spec::specification_from_json(read_file(spec_path));
  auto instance = load_instance(xml_path, o);
  if (!instance) return o;
  const auto catalog = load_catalog(catalog_path);
  inst::ValidateOptions opts;
  if (!assets.empty()) opts.asset_base = assets;
  opts.catalog = &catalog;
  auto diags = inst::validate_instance(*instance, spec, opts);
  o.diagnostics.insert(o.diagnostics.end(), diags.begin(), diags.end());
  const auto errors = error_count(o.diagnostics);
  o.code = errors ? kInvalid : kSuccess;
  o.result = json{{"errors", errors}, {"warnings", o.diagnostics.size() - errors},
                  {"lessons", instance->lessons.size()}};
  o.text = xml_path + ": " + std::to_string(errors) + " error(s), " +
           std::to_string(o.diagnostics.size() - errors) + " warning(s)\n";
  return o;
}

Outcome primer_build(const std::string& spec_path, const std::string& xml_path,
                     const std::string& out_dir, const std::string& assets) {
  Outcome o;
  const auto spec = spec::specification_from_json(read_file(spec_path));
  auto instance = load_instance(xml_path, o);
  if (!instance) return o;
  gen::GenerateOptions opts;
  if (!assets.empty()) opts.asset_base = assets;
  const auto bundle = gen::generate_primer(*instance, spec, opts);
  const auto files = gen::write_bundle(bundle, out_dir);
  json list = json::array();
  for (const auto& f : files) list.push_back(f.string());
  std::size_t steps = 0;
  for (const auto& t : bundle.timelines) steps += t.steps.size();
  o.result = json{{"files", list}, {"lessons", bundle.timelines.size()}, {"steps", steps}};
  o.text = "wrote " + std::to_string(files.size()) + " files to " + out_dir + " (" +
           std::to_string(bundle.timelines.size()) + " lessons, " + std::to_string(steps) +
           " steps)\n";
  return o;
}

Outcome cost_report(const cost::CostInputs& in, std::int64_t curve_max, const std::string& csv) {
  Outcome o;
  const auto r = cost::report(in, curve_max);
  json curve = json::array();
  for (const auto& p : r.curve) {
    curve.push_back(json{{"n", p.n}, {"spl_pw", p.spl}, {"standalone_pw", p.standalone}});
  }
  o.result = json{{"spl_pw", r.spl},
                  {"spl_pm", cost::to_months(r.spl)},
                  {"spl_pm_rounded", cost::rounded_months(r.spl)},
                  {"standalone_pw", r.standalone},
                  {"standalone_pm", cost::to_months(r.standalone)},
                  {"standalone_pm_rounded", cost::rounded_months(r.standalone)},
                  {"savings_pw", r.savings.exact},
                  {"savings_pm", cost::to_months(r.savings.exact)},
                  {"savings_pm_paper_style", r.savings.paper_style_months},
                  {"break_even", r.break_even ? json(*r.break_even) : json(nullptr)}};
  if (!r.curve.empty()) o.result["curve"] = curve;

  std::ostringstream os;
  os << "spl: " << r.spl << " pw (" << months_text(r.spl) << " pm; "
     << cost::rounded_months(r.spl) << " pm paper-rounded)\n";
  os << "standalone: " << r.standalone << " pw (" << months_text(r.standalone) << " pm; "
     << cost::rounded_months(r.standalone) << " pm paper-rounded)\n";
  os << "savings: " << r.savings.exact << " pw exact (" << months_text(r.savings.exact) << " pm); "
     << r.savings.paper_style_months << " pm paper-style\n";
  os << "break-even: " << (r.break_even ? std::to_string(*r.break_even) + " products" : "never")
     << '\n';
  if (!csv.empty()) {
    write_file(csv, cost::curve_csv(r.curve));
    o.result["csv"] = csv;
    os << "wrote " << csv << '\n';
  } else if (!r.curve.empty()) {
    os << cost::curve_csv(r.curve);
  }
  o.text = os.str();
  return o;
}

int finish(Outcome& o, bool as_json, std::ostream& out, std::ostream& err) {
  for (const auto& d : o.diagnostics) err << format(d) << '\n';
  if (as_json) {
    json doc{{"status", std::string(status_of(o.code))},
             {"exit_code", o.code},
             {"result", o.result},
             {"diagnostics", diagnostics_json(o.diagnostics)}};
    out << doc.dump(2) << '\n';
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instructional design product line toolchain", "idpl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string model_path, config_path, spec_path, xml_path, out_path, assets, catalog, csv;
  int clone_cap = fm::kDefaultCloneCap;
  int preset = 0;
  cost::CostInputs costs;
  std::int64_t curve_max = 0;

  auto* model = app.add_subcommand("model", "Feature model commands")->require_subcommand(1);
  auto* model_check_cmd = model->add_subcommand("check", "Parse and check a feature model");
  model_check_cmd->add_option("model", model_path, "Feature model (.fm)")->required();
  auto* model_count_cmd = model->add_subcommand("count", "Count valid configurations");
  model_count_cmd->add_option("model", model_path, "Feature model (.fm)")->required();
  model_count_cmd->add_option("--clone-cap", clone_cap, "Clone multiplicity cap")
      ->check(CLI::PositiveNumber);

  auto* config = app.add_subcommand("config", "Configuration commands")->require_subcommand(1);
  auto* config_check_cmd = config->add_subcommand("check", "Check a configuration against a model");
  config_check_cmd->add_option("model", model_path)->required();
  config_check_cmd->add_option("config", config_path)->required();

  auto* spec = app.add_subcommand("spec", "Instructional design specifications")->require_subcommand(1);
  auto* derive_cmd = spec->add_subcommand("derive", "Derive a specification from a configuration");
  derive_cmd->add_option("model", model_path)->required();
  derive_cmd->add_option("config", config_path)->required();
  derive_cmd->add_option("-o,--output", out_path, "Output file");
  auto* preset_cmd = spec->add_subcommand("preset", "Emit one of the four shipped specifications");
  preset_cmd->add_option("number", preset, "Preset 1..4")->required()->check(CLI::Range(1, 4));
  preset_cmd->add_option("-o,--output", out_path, "Output file");

  auto* editor = app.add_subcommand("editor", "Editor schema generation")->require_subcommand(1);
  auto* schema_cmd = editor->add_subcommand("schema", "Generate an editor form schema");
  schema_cmd->add_option("spec", spec_path)->required();
  schema_cmd->add_option("-o,--output", out_path, "Output file");
  schema_cmd->add_option("--catalog", catalog, "Pedagogy catalog JSON");

  auto* instance = app.add_subcommand("instance", "Instance documents")->require_subcommand(1);
  auto* validate_cmd = instance->add_subcommand("validate", "Validate an instance against a specification");
  validate_cmd->add_option("spec", spec_path)->required();
  validate_cmd->add_option("instance", xml_path)->required();
  validate_cmd->add_option("--assets", assets, "Asset base directory");
  validate_cmd->add_option("--catalog", catalog, "Pedagogy catalog JSON");

  auto* primer = app.add_subcommand("primer", "Primer bundles")->require_subcommand(1);
  auto* build_cmd = primer->add_subcommand("build", "Generate a primer bundle");
  build_cmd->add_option("spec", spec_path)->required();
  build_cmd->add_option("instance", xml_path)->required();
  build_cmd->add_option("-o,--output", out_path, "Bundle directory")->required();
  build_cmd->add_option("--assets", assets, "Asset base directory");

  auto* cost_cmd = app.add_subcommand("cost", "Product-line economics")->require_subcommand(1);
  auto* report_cmd = cost_cmd->add_subcommand("report", "Cost report in person-weeks");
  report_cmd->add_option("--org", costs.org, "Organisation cost (pw)")->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--cab", costs.cab, "Core asset base cost (pw)")->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--unique", costs.unique, "Unique cost per product (pw)")->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--reuse", costs.reuse, "Reuse cost per product (pw)")->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--product", costs.product, "Stand-alone cost per product (pw)")->required()->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--n", costs.n, "Number of products")->required()->check(CLI::NonNegativeNumber);
  auto* curve_opt = report_cmd->add_option("--curve", curve_max, "Emit the curve for n = 1..MAX")
                        ->check(CLI::PositiveNumber);
  report_cmd->add_option("--csv", csv, "Write the curve as CSV")->needs(curve_opt);

  std::vector<std::string> argv_store{"idpl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  const bool wants_json = std::find(args.begin(), args.end(), "json") != args.end() &&
                          std::find(args.begin(), args.end(), "--format") != args.end();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    auto* failing = &app;
    for (auto* sub = failing; sub;) {
      auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
      if (sub) failing = sub;
    }
    err << failing->help();
    if (wants_json) {
      out << json{{"status", "error"}, {"exit_code", int(kUsageOrIo)}, {"error", e.what()}}.dump(2)
          << '\n';
    }
    return kUsageOrIo;
  }
  const bool as_json = format == "json";

  Outcome o;
  try {
    if (model_check_cmd->parsed()) {
      o = model_check(model_path);
    } else if (model_count_cmd->parsed()) {
      o = model_count(model_path, clone_cap);
    } else if (config_check_cmd->parsed()) {
      o = config_check(model_path, config_path);
    } else if (derive_cmd->parsed()) {
      o = spec_derive(model_path, config_path, out_path);
    } else if (preset_cmd->parsed()) {
      o = spec_preset(preset, out_path);
    } else if (schema_cmd->parsed()) {
      o = editor_schema(spec_path, out_path, catalog);
    } else if (validate_cmd->parsed()) {
      o = instance_validate(spec_path, xml_path, assets, catalog);
    } else if (build_cmd->parsed()) {
      o = primer_build(spec_path, xml_path, out_path, assets);
    } else if (report_cmd->parsed()) {
      o = cost_report(costs, curve_max, csv);
    }
  } catch (const Error& e) {
    o = Outcome{};
    const std::string& code = e.code();
    if (code == "IO_ERROR" || code == "INVALID_ARGUMENT") {
      o.code = kUsageOrIo;
    } else if (code == "SEARCH_SPACE_TOO_LARGE" || code == "UNDECOMPOSABLE_WORD") {
      o.code = kGenerationFailure;
    } else {
      o.code = kInvalid;  // the input document is wrong
    }
    o.diagnostics = e.details();
    o.diagnostics.push_back(make_error(code, e.what()));
    o.result = json{{"error", code}};
  }
  return finish(o, as_json, out, err);
}

}  // namespace idpl::cli
