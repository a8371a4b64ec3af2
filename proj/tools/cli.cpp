#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbu/error.hpp"
#include "rbu/experiment.hpp"
#include "rbu/formats.hpp"
#include "rbu/potential.hpp"
#include "rbu/preprocess.hpp"
#include "rbu/presets.hpp"
#include "rbu/report.hpp"
#include "rbu/resample_spec.hpp"
#include "rbu/seeding.hpp"
#include "rbu/stats.hpp"
#include "rbu/typing.hpp"

namespace rbu::cli {
namespace {

namespace fs = std::filesystem;

struct InputOptions {
  std::string format = "auto";
  std::string label;
  std::string minority;

  LabelColumn label_column() const {
    if (label.empty()) {
      return {};
    }
    if (std::all_of(label.begin(), label.end(), [](unsigned char c) { return std::isdigit(c); })) {
      return static_cast<std::size_t>(std::stoul(label));
    }
    return label;
  }
  std::optional<std::string> minority_label() const {
    return minority.empty() ? std::nullopt : std::optional<std::string>(minority);
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "Input format: keel, csv or auto (by extension)")
      ->check(CLI::IsMember({"keel", "csv", "auto"}));
  cmd->add_option("--label", in.label, "CSV label column, by name or 0-based index (default: last)");
  cmd->add_option("--minority", in.minority, "Minority class label (default: the less frequent class)");
}

Dataset load(const std::string& path, const InputOptions& in) {
  return load_dataset(path, parse_format(in.format), in.label_column());
}

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParameterError("seed must be a non-negative integer or 'random', got '" + text + "'");
  }
  return value;
}

// Flag beats RR_SEED, which beats the fixed default.
std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) {
    return parse_seed(flag);
  }
  if (const char* env = std::getenv("RR_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env);
  }
  return kDefaultSeed;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return out;
}

std::string percent(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

// Dataset holding the rows of `task`: original rows in source order, then
// synthetic rows in generation order.
Dataset to_dataset(const BinaryTask& task, const Dataset& like) {
  struct Row {
    std::size_t source;
    std::size_t order;
    std::span<const double> values;
    const std::string* label;
  };
  std::vector<Row> rows;
  std::size_t order = 0;
  for (std::size_t i = 0; i < task.n_majority(); ++i) {
    rows.push_back({task.majority_source[i], order++, task.majority.row(i), &task.majority_label});
  }
  for (std::size_t i = 0; i < task.n_minority(); ++i) {
    rows.push_back({task.minority_source[i], order++, task.minority.row(i), &task.minority_label});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.source != b.source ? a.source < b.source : a.order < b.order;
  });

  Dataset out;
  out.name = like.name;
  out.label_name = like.label_name;
  out.feature_meta = like.feature_meta;
  out.features = Matrix(0, task.dim());
  for (const auto& r : rows) {
    out.features.append_row(r.values);
    out.labels.push_back(*r.label);
  }
  return out;
}

Matrix unscale(const Matrix& x, const Standardizer& s) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t f = 0; f < out.cols(); ++f) {
      out(i, f) = out(i, f) * s.scale()[f] + s.mean()[f];
    }
  }
  return out;
}

// Dataset paths from files, directories (*.dat and *.csv inside, sorted) and
// list files (*.txt, one path per line relative to the list).
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".dat" || ext == ".csv")) {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (p.extension() == ".txt") {
      std::ifstream list(p);
      if (!list) {
        throw IoError("cannot open dataset list '" + in + "'");
      }
      std::string line;
      while (std::getline(list, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
          line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
          continue;
        }
        const fs::path entry(line);
        out.push_back((entry.is_absolute() ? entry : p.parent_path() / entry).string());
      }
    } else {
      out.push_back(in);
    }
  }
  if (out.empty()) {
    throw IoError("no datasets found");
  }
  return out;
}

struct ResampleArgs {
  std::string input;
  std::string output;
  std::string method;
  std::optional<std::size_t> k;
  std::optional<double> ratio;
  std::optional<double> gamma;
  std::string tie_rule = "lowest";
  bool standardize = false;
};

int cmd_resample(const ResampleArgs& a, const InputOptions& in, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  ResampleSpec spec = spec_for(a.method, a.k, a.ratio, a.gamma, seed);
  if (a.tie_rule == "random") {
    spec.tie_rule = TieRule::seeded_random;
  }
  const Dataset raw = load(a.input, in);
  const Dataset encoded = encode_categoricals(raw);
  BinaryTask task = split_binary(encoded, in.minority_label());
  std::optional<Standardizer> scaler;
  if (a.standardize) {
    scaler = Standardizer::fit(encoded.features);
    task.majority = scaler->transform(task.majority);
    task.minority = scaler->transform(task.minority);
  }
  BinaryTask result = resample(task, spec);
  if (scaler) {
    result.majority = unscale(result.majority, *scaler);
    result.minority = unscale(result.minority, *scaler);
  }
  const Dataset resampled = to_dataset(result, encoded);
  const Format format = in.format == "auto" ? detect_format(a.input) : parse_format(in.format);

  std::ostream& summary = a.output.empty() ? err : out;
  if (a.output.empty()) {
    if (format == Format::keel) {
      write_keel(out, resampled);
    } else {
      write_csv(out, resampled);
    }
  } else {
    save_dataset(a.output, resampled, format);
  }
  summary << spec.describe() << '\n'
          << "majority (" << task.majority_label << "): " << task.n_majority() << " -> " << result.n_majority()
          << '\n'
          << "minority (" << task.minority_label << "): " << task.n_minority() << " -> " << result.n_minority()
          << '\n';
  return kExitOk;
}

struct TypifyArgs {
  std::string input;
  std::size_t k = 5;
  double p = 2.0;
  std::string per_object;
  bool raw = false;
};

int cmd_typify(const TypifyArgs& a, const InputOptions& in, std::ostream& out) {
  const Dataset encoded = encode_categoricals(load(a.input, in));
  const Dataset data = a.raw ? encoded : Standardizer::fit(encoded).transform(encoded);
  const BinaryTask task = split_binary(data, in.minority_label());
  const MinorityTypeReport report = categorize_minority(task, a.k, a.p);
  out << percent(report.proportions[0]) << ' ' << percent(report.proportions[1]) << ' '
      << percent(report.proportions[2]) << ' ' << percent(report.proportions[3]) << '\n';
  if (!a.per_object.empty()) {
    std::ofstream csv = open_output(a.per_object);
    csv << "row,same_class,type\n";
    for (std::size_t j = 0; j < report.types.size(); ++j) {
      csv << task.minority_source[j] << ',' << report.same_class[j] << ',' << to_string(report.types[j]) << '\n';
    }
  }
  return kExitOk;
}

struct StatsArgs {
  std::vector<std::string> inputs;
  bool json = false;
};

int cmd_stats(const StatsArgs& a, const InputOptions& in, std::ostream& out) {
  nlohmann::json all = nlohmann::json::array();
  if (!a.json) {
    out << "dataset,ir,samples,features,safe,borderline,rare,outlier\n";
  }
  for (const auto& path : expand_inputs(a.inputs)) {
    const DatasetStats s = dataset_stats(load(path, in), in.minority_label());
    if (a.json) {
      all.push_back(stats_to_json(s));
      continue;
    }
    out << s.name << ',' << percent(s.ir) << ',' << s.samples << ',' << s.features;
    for (double t : s.type_proportions) {
      out << ',' << percent(t);
    }
    out << '\n';
  }
  if (a.json) {
    out << all.dump(2) << '\n';
  }
  return kExitOk;
}

struct GridArgs {
  std::string input;
  std::string output;
  double gamma = 0.1;
  std::size_t resolution = 50;
  double margin = 0.1;
  std::string grid_format = "auto";
  bool standardize = false;
  bool swap = false;
};

int cmd_potential_grid(const GridArgs& a, const InputOptions& in, std::ostream& out) {
  check_gamma(a.gamma);
  if (a.resolution < 2) {
    throw ParameterError("grid resolution must be at least 2");
  }
  Dataset data = encode_categoricals(load(a.input, in));
  if (data.num_features() != 2) {
    throw ParameterError("potential grids need two-dimensional data, got " + std::to_string(data.num_features()) +
                         " features");
  }
  if (a.standardize) {
    data = Standardizer::fit(data).transform(data);
  }
  BinaryTask task = split_binary(data, in.minority_label());
  if (a.swap) {
    std::swap(task.majority, task.minority);
  }
  const PotentialGrid grid = potential_grid(task, a.gamma, bounding_box(task, a.margin), a.resolution);

  std::string format = a.grid_format;
  if (format == "auto") {
    format = fs::path(a.output).extension() == ".json" ? "json" : "csv";
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.output.empty()) {
    file = open_output(a.output);
    sink = &file;
  }
  if (format == "json") {
    *sink << grid_to_json(grid).dump() << '\n';
  } else {
    write_grid_csv(*sink, grid);
  }
  return kExitOk;
}

struct EvalArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> methods;
  std::vector<std::string> classifiers{"knn"};
  std::string preset;
  std::string grid_file;
  std::string json_out;
  std::string csv_out;
  std::optional<std::size_t> k;
  std::optional<double> ratio;
  std::optional<double> gamma;
  std::size_t jobs = 1;
  std::size_t outer = 5;
  std::size_t inner = 3;
  bool global_standardize = false;
};

std::vector<MethodGrid> build_grids(const EvalArgs& a, bool sweep) {
  if (!a.grid_file.empty()) {
    std::ifstream in(a.grid_file);
    if (!in) {
      throw IoError("cannot open grid file '" + a.grid_file + "'");
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError("grid file '" + a.grid_file + "': " + e.what());
    }
    return grids_from_json(j);
  }
  std::vector<std::string> methods = a.methods;
  const std::string preset = a.preset.empty() && sweep ? "paper-final" : a.preset;
  if (methods.empty()) {
    if (preset.empty()) {
      throw ParameterError("name at least one --method, a --preset or a --grid file");
    }
    for (auto m : preset_methods(preset)) {
      methods.emplace_back(m);
    }
  }
  std::vector<MethodGrid> grids;
  for (const auto& m : methods) {
    if (!preset.empty()) {
      grids.push_back(preset_grid(preset, m));
    } else {
      grids.push_back(MethodGrid{m, {spec_for(m, a.k, a.ratio, a.gamma, 0)}});
    }
  }
  return grids;
}

int cmd_evaluate(const EvalArgs& a, const InputOptions& in, std::uint64_t seed, bool sweep, bool verbose,
                 std::ostream& out, std::ostream& err) {
  if (a.jobs < 1) {
    throw ParameterError("--jobs must be at least 1");
  }
  const std::vector<MethodGrid> grids = build_grids(a, sweep);
  ExperimentConfig config;
  config.classifiers.clear();
  for (const auto& c : a.classifiers) {
    config.classifiers.push_back(parse_classifier(c));
  }
  config.seed = seed;
  config.jobs = a.jobs;
  config.outer_repeats = a.outer;
  config.inner_repeats = a.inner;
  config.global_standardize = a.global_standardize;

  std::vector<ExperimentDataset> datasets;
  for (const auto& path : expand_inputs(a.inputs)) {
    datasets.push_back(prepare_dataset(load(path, in), in.minority_label()));
  }

  const EvalReport report = run_experiment(datasets, grids, config);
  const nlohmann::json j = report_to_json(report);
  if (!a.json_out.empty()) {
    open_output(a.json_out) << j.dump(2) << '\n';
  }
  if (!a.csv_out.empty()) {
    std::ofstream csv = open_output(a.csv_out);
    write_report_csv(csv, report);
  }
  if (a.json_out.empty() && a.csv_out.empty()) {
    out << j.dump(2) << '\n';
  }
  if (verbose) {
    for (const auto& w : report.warnings) {
      err << "warning: " << w << '\n';
    }
  }

  const std::size_t ok = std::count_if(report.runs.begin(), report.runs.end(), [](const FoldRecord& r) {
    return r.metrics.has_value();
  });
  if (!a.json_out.empty() || !a.csv_out.empty()) {
    out << ok << " of " << report.runs.size() << " folds evaluated, " << report.leakage_checks
        << " leakage checks passed\n";
  }
  if (ok == 0) {
    err << "error: every fold failed\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial-based undersampling and imbalanced-data benchmarking", "rbu"};
  app.require_subcommand(1);
  std::string seed_flag;
  bool verbose = false;
  app.add_option("--seed", seed_flag, "Random seed, or 'random' (default: $RR_SEED, else 42)");
  app.add_flag("-v,--verbose", verbose, "Print warnings");

  InputOptions in;

  ResampleArgs rs;
  auto* resample_cmd = app.add_subcommand("resample", "Resample a dataset");
  resample_cmd->add_option("input", rs.input, "Input dataset")->required();
  resample_cmd->add_option("-o,--output", rs.output, "Output path (default: standard output)");
  resample_cmd->add_option("-m,--method", rs.method, "rus|ros|smote|enn|renn|tomek|nm|rbu|stl|senn|none")
      ->required();
  resample_cmd->add_option("-k,--k", rs.k, "Neighbourhood size");
  resample_cmd->add_option("-r,--ratio", rs.ratio, "Resampling ratio in [0, 1]");
  resample_cmd->add_option("-g,--gamma", rs.gamma, "RBF spread for rbu");
  resample_cmd->add_option("--tie-rule", rs.tie_rule, "rbu tie rule: lowest or random")
      ->check(CLI::IsMember({"lowest", "random"}));
  resample_cmd->add_flag("--standardize", rs.standardize,
                         "Resample in standardized space; output stays in input units");
  resample_cmd->add_option("--seed", seed_flag, "Random seed");
  add_input_options(resample_cmd, in);

  TypifyArgs ty;
  auto* typify_cmd = app.add_subcommand("typify", "Minority type percentages: safe borderline rare outlier");
  typify_cmd->add_option("input", ty.input, "Input dataset")->required();
  typify_cmd->add_option("-k,--k", ty.k, "Neighbourhood size")->check(CLI::PositiveNumber);
  typify_cmd->add_option("-p,--p", ty.p, "Minkowski exponent")->check(CLI::Range(1.0, HUGE_VAL));
  typify_cmd->add_option("--per-object", ty.per_object, "Write per-object types to this CSV");
  typify_cmd->add_flag("--raw", ty.raw, "Skip standardization");
  add_input_options(typify_cmd, in);

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset summary: IR, size and minority types");
  stats_cmd->add_option("inputs", st.inputs, "Datasets, directories or list files")->required();
  stats_cmd->add_flag("--json", st.json, "Emit JSON");
  add_input_options(stats_cmd, in);

  GridArgs gr;
  auto* grid_cmd = app.add_subcommand("potential-grid", "Mutual class potential over a 2-D grid");
  grid_cmd->add_option("input", gr.input, "Two-feature dataset")->required();
  grid_cmd->add_option("-o,--output", gr.output, "Output path (.csv or .json)");
  grid_cmd->add_option("-g,--gamma", gr.gamma, "RBF spread");
  grid_cmd->add_option("--resolution", gr.resolution, "Cells per axis");
  grid_cmd->add_option("--margin", gr.margin, "Bounding box margin as a fraction of the extent");
  grid_cmd->add_option("--grid-format", gr.grid_format, "csv, json or auto")
      ->check(CLI::IsMember({"csv", "json", "auto"}));
  grid_cmd->add_flag("--standardize", gr.standardize, "Standardize features first");
  grid_cmd->add_flag("--swap-classes", gr.swap, "Exchange the roles of the two classes");
  add_input_options(grid_cmd, in);

  EvalArgs ev;
  auto add_eval = [&](const char* name, const char* description) {
    auto* cmd = app.add_subcommand(name, description);
    cmd->add_option("inputs", ev.inputs, "Datasets, directories or list files")->required();
    cmd->add_option("-m,--method", ev.methods, "Method to evaluate (repeatable)");
    cmd->add_option("-c,--classifier", ev.classifiers, "knn or gnb (repeatable)");
    cmd->add_option("--preset", ev.preset, "paper-final or paper-prelim");
    cmd->add_option("--grid", ev.grid_file, "JSON grid file");
    cmd->add_option("--json", ev.json_out, "Write the JSON report here");
    cmd->add_option("--csv", ev.csv_out, "Write the per-fold CSV here");
    cmd->add_option("-k,--k", ev.k, "Neighbourhood size (without a preset)");
    cmd->add_option("-r,--ratio", ev.ratio, "Resampling ratio (without a preset)");
    cmd->add_option("-g,--gamma", ev.gamma, "RBF spread (without a preset)");
    cmd->add_option("-j,--jobs", ev.jobs, "Worker threads");
    cmd->add_option("--outer", ev.outer, "Outer cross-validation repeats");
    cmd->add_option("--inner", ev.inner, "Inner cross-validation repeats");
    cmd->add_flag("--global-standardize", ev.global_standardize, "Standardize once per dataset instead of per fold");
    cmd->add_option("--seed", seed_flag, "Random seed");
    add_input_options(cmd, in);
    return cmd;
  };
  add_eval("evaluate", "Cross-validated evaluation of the given methods");
  auto* sweep_cmd = add_eval("sweep", "Evaluation over a preset grid (default paper-final, all methods)");

  std::vector<const char*> argv{"rbu"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParameter;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    if (active == resample_cmd) {
      return cmd_resample(rs, in, seed, out, err);
    }
    if (active == typify_cmd) {
      return cmd_typify(ty, in, out);
    }
    if (active == stats_cmd) {
      return cmd_stats(st, in, out);
    }
    if (active == grid_cmd) {
      return cmd_potential_grid(gr, in, out);
    }
    return cmd_evaluate(ev, in, seed, active == sweep_cmd, verbose, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitParameter;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const LeakageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace rbu::cli
