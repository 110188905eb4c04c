// Acceptance suite: every release-gating check, one printed line each.
// Exit status is the number of failed criteria.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agree/cli.hpp"
#include "agree/diagnostics.hpp"
#include "agree/legacy.hpp"
#include "agree/rng.hpp"
#include "agree/simulate.hpp"
#include "agree/stats.hpp"
#include "helpers.hpp"

using namespace agree;
using namespace agree::testing;

namespace {

constexpr std::uint64_t kSuiteSeed = 20240601;

const std::string kFixtures = AGREE_FIXTURE_DIR;
const std::string kGolden = AGREE_GOLDEN_DIR;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void require_close(double got, double want, double tolerance, const std::string& what) {
  if (!(std::abs(got - want) <= tolerance)) {
    throw Failure{what + ": got " + std::to_string(got) + ", want " + std::to_string(want) +
                  " within " + std::to_string(tolerance)};
  }
}

std::string run_tool(std::vector<std::string> args) {
  args.insert(args.begin(), "agree");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  require(code == 0, "tool exited " + std::to_string(code) + ": " + err.str());
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// --- criteria ---------------------------------------------------------

void chance_agreement_worked_examples() {
  const auto even2 = build_matrix({{"u1", "c1", "A"}, {"u1", "c2", "B"}});
  require_close(expected_agreement(even2), 0.5, 1e-12, "two equal categories");

  const auto even4 = build_matrix(
      {{"u1", "c1", "A"}, {"u1", "c2", "B"}, {"u2", "c1", "C"}, {"u2", "c2", "D"}});
  require_close(expected_agreement(even4), 0.25, 1e-12, "four equal categories");

  std::vector<Record> records;
  for (int i = 1; i <= 50; ++i) {
    const std::string item = "u" + std::to_string(i);
    records.push_back({item, "c1", i <= 48 ? "A" : "B"});
    records.push_back({item, "c2", i <= 47 ? "A" : "B"});
  }
  const auto skewed = build_matrix(records);  // pooled 95% / 5%
  require_close(expected_agreement(skewed), 0.905, 1e-12, "95/5 split");
}

void kappa_endpoints() {
  const auto unanimous = build_matrix({
      {"u1", "c1", "A"}, {"u1", "c2", "A"}, {"u1", "c3", "A"},
      {"u2", "c1", "B"}, {"u2", "c2", "B"}, {"u2", "c3", "B"},
  });
  require(kappa(unanimous).value == 1.0, "unanimous kappa must be exactly 1");

  // P(A) = P(E) = 1/2 by construction
  const auto at_chance = build_matrix({
      {"u1", "c1", "A"}, {"u1", "c2", "A"},
      {"u2", "c1", "B"}, {"u2", "c2", "B"},
      {"u3", "c1", "A"}, {"u3", "c2", "B"},
      {"u4", "c1", "B"}, {"u4", "c2", "A"},
  });
  require_close(kappa(at_chance).value, 0.0, 1e-12, "kappa at the chance rate");
}

void monte_carlo_calibration() {
  const std::vector<CoderProfile> even(2, CoderProfile{{{"A", 0.5}, {"B", 0.5}}, {}});
  const std::vector<CoderProfile> skew(2, CoderProfile{{{"A", 0.95}, {"B", 0.05}}, {}});

  double even_kappa = 0.0;
  for (std::size_t r = 0; r < 50; ++r) {
    even_kappa += kappa(simulate_coders(10000, even, derive_seed(kSuiteSeed, r))).value;
  }
  require_close(even_kappa / 50.0, 0.0, 0.01, "mean kappa, even binary profiles");

  double skew_agreement = 0.0;
  double skew_kappa = 0.0;
  for (std::size_t r = 0; r < 50; ++r) {
    const auto matrix = simulate_coders(10000, skew, derive_seed(kSuiteSeed, 100 + r));
    skew_agreement += observed_agreement(matrix);
    skew_kappa += kappa(matrix).value;
  }
  require_close(skew_agreement / 50.0, 0.905, 0.02, "mean raw agreement, 95/5 profiles");
  require_close(skew_kappa / 50.0, 0.0, 0.02, "mean kappa, 95/5 profiles");
}

void hand_derived_fixtures() {
  require_close(kappa(m1()).value, 7.0 / 15.0, 1e-12, "m1 kappa");
  require_close(scotts_pi(m1()).value, 7.0 / 15.0, 1e-12, "m1 pi");
  require_close(krippendorff_alpha(m1(), DistanceMetric::nominal).value, 8.0 / 15.0, 1e-12,
                "m1 nominal alpha");
  require_close(kappa(m2()).value, 0.55, 1e-12, "m2 kappa");
  require_close(percent_all_pairs(m2()).value, 7.0 / 9.0, 1e-12, "m2 percent-allpairs");
  require_close(percent_majority(m2()).value, 8.0 / 9.0, 1e-12, "m2 percent-majority");
  require_close(expert_kappa(m2(), "c1").value, 2.0 / 3.0, 1e-12, "m2 expert kappa, c1");
}

void measure_identities() {
  Rng rng(derive_seed(kSuiteSeed, 5000));
  for (int trial = 0; trial < 1000; ++trial) {
    const auto matrix = random_matrix(rng);
    require(std::abs(percent_all_pairs(matrix).value - observed_agreement(matrix)) <= 1e-10,
            "percent-allpairs = observed agreement");
  }
  MatrixOptions two_coders;
  two_coders.max_coders = 2;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto matrix = random_matrix(rng, two_coders);
    const double pi = scotts_pi(matrix).value;
    require(std::abs(pi - kappa(matrix).value) <= 1e-10, "pi = kappa for two coders");
    const double alpha = krippendorff_alpha(matrix, DistanceMetric::nominal).value;
    const double n = 2.0 * static_cast<double>(matrix.n_items());
    require(std::abs((1.0 - alpha) * n - (1.0 - pi) * (n - 1.0)) <= 1e-10,
            "(1-alpha)n = (1-pi)(n-1) for two coders");
  }
}

void majority_floor() {
  Rng rng(derive_seed(kSuiteSeed, 6000));
  for (int trial = 0; trial < 1000; ++trial) {
    MatrixOptions options;
    options.max_categories = 2;
    options.min_coders = 3 + 2 * static_cast<std::size_t>(rng.next_below(3));
    options.max_coders = options.min_coders;
    const auto matrix = random_matrix(rng, options);
    const double m = static_cast<double>(matrix.n_coders());
    require(percent_majority(matrix).value >= std::ceil(m / 2.0) / m,
            "binary odd-panel majority floor");
  }
}

void unitization_demonstration() {
  const BoundaryTrack track{std::nullopt, {{"expert", {2, 5, 9}}, {"naive", {2, 9, 12}}}};
  const double ratio = boundary_ratio(track.marks[0].second, track.marks[1].second).value;
  require(ratio == 0.5, "set ratio is exactly 0.5");

  const auto sweep = unitization_sweep(track, {13, 130, 1300});
  require(sweep[0].second != sweep[1].second, "kappa differs between 13 and 130 sites");
  require(sweep[1].second != sweep[2].second, "kappa differs between 130 and 1300 sites");
  require(sweep[0].second != sweep[2].second, "kappa differs between 13 and 1300 sites");
  // the ratio is blind to the added unmarked sites
  require(boundary_ratio(track.marks[0].second, track.marks[1].second).value == ratio,
          "set ratio unchanged by the site base");
}

void significance_calibration() {
  const std::vector<CoderProfile> profiles(3, CoderProfile{{{"A", 0.5}, {"B", 0.5}}, {}});
  const StatisticSpec spec{MeasureId::kappa, ""};

  std::size_t rejections = 0;
  for (std::size_t panel = 0; panel < 500; ++panel) {
    const auto matrix = simulate_coders(50, profiles, derive_seed(kSuiteSeed, 10000 + panel));
    const auto null = significance(matrix, spec, 1000, derive_seed(kSuiteSeed, 20000 + panel));
    if (null.p_value <= 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / 500.0;
  require(rate >= 0.02 && rate <= 0.09,
          "null rejection rate " + std::to_string(rate) + " outside [0.02, 0.09]");

  std::vector<Record> records;
  for (int i = 1; i <= 50; ++i) {
    const std::string label = i <= 25 ? "A" : "B";
    for (int j = 1; j <= 3; ++j) {
      records.push_back({"u" + std::to_string(i), "c" + std::to_string(j), label});
    }
  }
  const auto unanimous = build_matrix(records);
  const auto null = significance(unanimous, spec, 1000, derive_seed(kSuiteSeed, 30000));
  require(null.p_value < 0.01, "unanimous panel p-value " + std::to_string(null.p_value));
}

void interpretation_bands() {
  require(interpret(0.85).band == Band::good, "0.85 is good");
  require(interpret(0.7).band == Band::tentative, "0.7 is tentative");
  require(interpret(0.67).band == Band::discount, "0.67 is discount");
}

void cli_golden_files() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> invocations = {
      {"compute_kappa_m2.json",
       {"compute", "--input", kFixtures + "/m2_long.csv", "--format", "long", "--measure",
        "kappa"}},
      {"compute_alpha_m1.json",
       {"compute", "--input", kFixtures + "/m1_wide.csv", "--format", "wide", "--measure",
        "alpha-nominal"}},
      {"compute_jaccard_boundary.json",
       {"compute", "--input", kFixtures + "/boundary_track.txt", "--format", "boundary",
        "--measure", "boundary-jaccard"}},
      {"diagnose_loo_m2.json",
       {"diagnose", "--input", kFixtures + "/m2_long.csv", "--format", "long", "--report",
        "loo"}},
      {"simulate_even.csv",
       {"simulate", "--items", "12", "--profiles", "A:0.5,B:0.5;A:0.5,B:0.5", "--seed", "1234"}},
  };
  for (const auto& [golden_name, args] : invocations) {
    const std::string first = run_tool(args);
    const std::string second = run_tool(args);
    require(first == second, golden_name + ": two consecutive runs differ");
    require(first == read_file(kGolden + "/" + golden_name),
            golden_name + ": output differs from the shipped golden file");
  }

  const std::string kappa_report = run_tool({"compute", "--input", kFixtures + "/m2_long.csv",
                                             "--format", "long", "--measure", "kappa"});
  require(kappa_report.find("\"value\": 0.55") != std::string::npos,
          "m2 kappa report must carry value 0.55");
  require(kappa_report.find("\"band\": \"discount\"") != std::string::npos,
          "m2 kappa report must carry band discount");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"1. chance-agreement worked examples", chance_agreement_worked_examples},
      {"2. kappa endpoints", kappa_endpoints},
      {"3. monte-carlo chance calibration", monte_carlo_calibration},
      {"4. hand-derived fixtures", hand_derived_fixtures},
      {"5. measure identities", measure_identities},
      {"6. majority-measure floor", majority_floor},
      {"7. unitization demonstration", unitization_demonstration},
      {"8. significance calibration", significance_calibration},
      {"9. interpretation bands", interpretation_bands},
      {"10. cli golden files", cli_golden_files},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    try {
      check();
      std::cout << "PASS  " << name << "\n";
    } catch (const Failure& failure) {
      ++failures;
      std::cout << "FAIL  " << name << " — " << failure.what << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  " << name << " — unexpected error: " << e.what() << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failures << " of " << criteria.size() << " acceptance criteria failed\n";
  }
  return failures;
}
