#include "agree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "agree/csv.hpp"
#include "agree/diagnostics.hpp"
#include "agree/error.hpp"
#include "agree/legacy.hpp"
#include "agree/report.hpp"
#include "agree/simulate.hpp"
#include "agree/stats.hpp"

namespace agree {

namespace {

// Bad flag combinations and malformed flag grammar; exits 2 instead of 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MeasureId measure_from_token(const std::string& token) {
  if (token == "kappa") return MeasureId::kappa;
  if (token == "pi") return MeasureId::scotts_pi;
  if (token == "alpha-nominal") return MeasureId::alpha_nominal;
  if (token == "alpha-interval") return MeasureId::alpha_interval;
  if (token == "alpha-ratio") return MeasureId::alpha_ratio;
  if (token == "percent-pair") return MeasureId::percent_pair;
  if (token == "percent-allpairs") return MeasureId::percent_all_pairs;
  if (token == "percent-majority") return MeasureId::percent_majority;
  if (token == "boundary-jaccard") return MeasureId::boundary_jaccard;
  throw UsageError("unknown measure '" + token + "'");
}

double parse_probability(const std::string& token) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty()) {
    throw UsageError("bad probability '" + token + "' in profile spec");
  }
  return value;
}

// One distribution: `A:0.95,B:0.05`
std::vector<std::pair<std::string, double>> parse_marginals(const std::string& spec) {
  std::vector<std::pair<std::string, double>> marginals;
  std::stringstream stream(spec);
  std::string entry;
  while (std::getline(stream, entry, ',')) {
    const std::size_t colon = entry.rfind(':');
    if (colon == std::string::npos || colon == 0) {
      throw UsageError("bad profile entry '" + entry + "', expected <label>:<probability>");
    }
    marginals.emplace_back(entry.substr(0, colon), parse_probability(entry.substr(colon + 1)));
  }
  if (marginals.empty()) throw UsageError("empty profile spec");
  return marginals;
}

// Per-coder distributions separated by `;`
std::vector<CoderProfile> parse_profiles(const std::string& spec) {
  std::vector<CoderProfile> profiles;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ';')) {
    profiles.push_back(CoderProfile{parse_marginals(part), std::nullopt});
  }
  if (profiles.empty()) throw UsageError("empty profiles spec");
  return profiles;
}

// Interval and ratio distances read each label as a number.
AnnotationMatrix with_numeric_labels(const AnnotationMatrix& matrix) {
  std::vector<double> values;
  values.reserve(matrix.n_categories());
  for (const std::string& label : matrix.categories().labels()) {
    char* end = nullptr;
    const double value = std::strtod(label.c_str(), &end);
    if (label.empty() || end != label.c_str() + label.size()) {
      throw Error("label '" + label +
                  "' is not numeric; interval and ratio metrics need numeric labels");
    }
    values.push_back(value);
  }
  return AnnotationMatrix(matrix.items(), matrix.coders(), matrix.codes(),
                          CategorySet(matrix.categories().labels(), std::move(values)));
}

AnnotationMatrix parse_matrix(const std::string& format, const std::string& bytes) {
  if (format == "long") return parse_long_csv(bytes);
  if (format == "wide") return parse_wide_csv(bytes);
  const BoundaryTrack track = parse_boundary_file(bytes);
  if (!track.site_count) {
    throw Error("site count unknown (sites=?); only boundary-jaccard is available");
  }
  return to_boundary_matrix(track, *track.site_count);
}

struct ComputeArgs {
  std::string input;
  std::string format;
  std::string measure;
  std::string expert;
  std::string coder_a;
  std::string coder_b;
  bool significance_requested = false;
  std::size_t significance_iterations = 0;
  std::uint64_t seed = 0;
  std::string output = "json";
};

int do_compute(const ComputeArgs& args, std::ostream& out) {
  const std::string bytes = read_file(args.input);
  const MeasureId requested = measure_from_token(args.measure);

  ReportDocument document;
  document.input_digest = content_digest(bytes);

  std::optional<AnnotationMatrix> matrix;
  MeasureResult result;

  if (requested == MeasureId::boundary_jaccard) {
    if (args.format != "boundary") {
      throw UsageError("boundary-jaccard requires --format boundary");
    }
    const BoundaryTrack track = parse_boundary_file(bytes);
    if (track.marks.size() != 2) {
      throw Error("boundary-jaccard needs exactly 2 coders, got " +
                  std::to_string(track.marks.size()));
    }
    std::size_t expert_side = 0;
    if (!args.expert.empty()) {
      if (track.marks[1].first == args.expert) {
        expert_side = 1;
      } else if (track.marks[0].first != args.expert) {
        throw Error("unknown coder '" + args.expert + "'");
      }
    }
    result = boundary_ratio(track.marks[expert_side].second,
                            track.marks[1 - expert_side].second);
  } else {
    matrix = parse_matrix(args.format, bytes);
    switch (requested) {
      case MeasureId::kappa:
        result = args.expert.empty() ? kappa(*matrix) : expert_kappa(*matrix, args.expert);
        break;
      case MeasureId::scotts_pi:
        result = scotts_pi(*matrix);
        break;
      case MeasureId::alpha_nominal:
        result = krippendorff_alpha(*matrix, DistanceMetric::nominal);
        break;
      case MeasureId::alpha_interval:
        matrix = with_numeric_labels(*matrix);
        result = krippendorff_alpha(*matrix, DistanceMetric::interval);
        break;
      case MeasureId::alpha_ratio:
        matrix = with_numeric_labels(*matrix);
        result = krippendorff_alpha(*matrix, DistanceMetric::ratio);
        break;
      case MeasureId::percent_pair:
        if (args.coder_a.empty() || args.coder_b.empty()) {
          throw UsageError("percent-pair requires --coder-a and --coder-b");
        }
        result = percent_pairwise(*matrix, args.coder_a, args.coder_b);
        break;
      case MeasureId::percent_all_pairs:
        result = percent_all_pairs(*matrix);
        break;
      case MeasureId::percent_majority:
        result = percent_majority(*matrix);
        break;
      default:
        throw UsageError("unknown measure '" + args.measure + "'");
    }
  }

  if (!args.expert.empty() && requested != MeasureId::kappa &&
      requested != MeasureId::boundary_jaccard) {
    document.warnings.push_back("--expert has no effect on measure " + args.measure);
  }
  for (const std::string& item : result.excluded_items) {
    if (result.measure == MeasureId::percent_majority) {
      document.warnings.push_back("percent-majority: majority tied on item '" + item +
                                  "'; item excluded");
    } else {
      document.warnings.push_back(std::string(to_string(result.measure)) + ": item '" + item +
                                  "' has fewer than 2 judgments; item excluded");
    }
  }

  if (args.significance_requested) {
    if (!is_chance_corrected(result.measure)) {
      throw UsageError("--significance requires a chance-corrected measure");
    }
    StatisticSpec spec;
    spec.id = result.measure;
    if (result.measure == MeasureId::expert_kappa) spec.expert = args.expert;
    result.significance =
        significance(*matrix, spec, args.significance_iterations, args.seed);
  }

  document.results.push_back(std::move(result));
  out << (args.output == "text" ? render_text(document) : render_json(document));
  return 0;
}

struct DiagnoseArgs {
  std::string input;
  std::string format;
  std::string report;
  std::string output = "json";
};

int do_diagnose(const DiagnoseArgs& args, std::ostream& out) {
  const std::string bytes = read_file(args.input);
  const AnnotationMatrix matrix = parse_matrix(args.format, bytes);

  ReportDocument document;
  document.input_digest = content_digest(bytes);
  if (args.report == "loo") {
    document.diagnostics.emplace_back(leave_one_coder_out(matrix));
  } else if (args.report == "pairs") {
    document.diagnostics.emplace_back(pairwise_kappa_matrix(matrix));
  } else if (args.report == "per-category") {
    document.diagnostics.emplace_back(per_category_kappa(matrix));
  } else {
    document.diagnostics.emplace_back(UnitProfile{unit_profile(matrix)});
  }
  out << (args.output == "text" ? render_text(document) : render_json(document));
  return 0;
}

struct SimulateArgs {
  std::size_t items = 0;
  std::string profiles;
  std::uint64_t seed = 0;
  std::string truth;
  double accuracy = 1.0;
  std::string emit = "long";
};

int do_simulate(const SimulateArgs& args, std::ostream& out) {
  std::vector<CoderProfile> profiles = parse_profiles(args.profiles);
  if (args.truth.empty()) {
    out << to_long_csv(simulate_coders(args.items, profiles, args.seed));
    return 0;
  }
  for (CoderProfile& profile : profiles) profile.accuracy = args.accuracy;
  out << to_long_csv(
      simulate_with_truth(args.items, parse_marginals(args.truth), profiles, args.seed));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"inter-coder agreement statistics"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "compute one agreement measure");
  compute->add_option("--input", compute_args.input, "input file")->required();
  compute->add_option("--format", compute_args.format, "long|wide|boundary")
      ->required()
      ->check(CLI::IsMember({"long", "wide", "boundary"}));
  compute->add_option("--measure", compute_args.measure, "measure to compute")
      ->required()
      ->check(CLI::IsMember({"kappa", "pi", "alpha-nominal", "alpha-interval", "alpha-ratio",
                             "percent-pair", "percent-allpairs", "percent-majority",
                             "boundary-jaccard"}));
  compute->add_option("--expert", compute_args.expert, "expert coder id");
  compute->add_option("--coder-a", compute_args.coder_a, "first coder for percent-pair");
  compute->add_option("--coder-b", compute_args.coder_b, "second coder for percent-pair");
  CLI::Option* significance_option = compute->add_option(
      "--significance", compute_args.significance_iterations, "permutation iterations");
  CLI::Option* seed_option =
      compute->add_option("--seed", compute_args.seed, "permutation seed (decimal uint64)");
  significance_option->needs(seed_option);
  seed_option->needs(significance_option);
  compute->add_option("--output", compute_args.output, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  DiagnoseArgs diagnose_args;
  CLI::App* diagnose = app.add_subcommand("diagnose", "locate the source of disagreement");
  diagnose->add_option("--input", diagnose_args.input, "input file")->required();
  diagnose->add_option("--format", diagnose_args.format, "long|wide|boundary")
      ->required()
      ->check(CLI::IsMember({"long", "wide", "boundary"}));
  diagnose->add_option("--report", diagnose_args.report, "loo|pairs|per-category|units")
      ->required()
      ->check(CLI::IsMember({"loo", "pairs", "per-category", "units"}));
  diagnose->add_option("--output", diagnose_args.output, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand("simulate", "emit a seeded random annotation matrix");
  simulate->add_option("--items", simulate_args.items, "number of items")->required();
  simulate->add_option("--profiles", simulate_args.profiles,
                       "per-coder marginals, e.g. A:0.95,B:0.05;A:0.95,B:0.05")
      ->required();
  simulate->add_option("--seed", simulate_args.seed, "seed (decimal uint64)")->required();
  CLI::Option* truth_option =
      simulate->add_option("--truth", simulate_args.truth, "latent truth marginals");
  CLI::Option* accuracy_option = simulate->add_option("--accuracy", simulate_args.accuracy,
                                                      "chance each coder echoes the truth");
  truth_option->needs(accuracy_option);
  accuracy_option->needs(truth_option);
  simulate->add_option("--emit", simulate_args.emit, "output format")
      ->check(CLI::IsMember({"long"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  compute_args.significance_requested = significance_option->count() > 0;

  try {
    if (compute->parsed()) return do_compute(compute_args, out);
    if (diagnose->parsed()) return do_diagnose(diagnose_args, out);
    return do_simulate(simulate_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace agree
