#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agree {

enum class MeasureId {
  boundary_jaccard,
  percent_pair,
  percent_all_pairs,
  percent_majority,
  kappa,
  scotts_pi,
  alpha_nominal,
  alpha_interval,
  alpha_ratio,
  expert_kappa,
};

std::string_view to_string(MeasureId id);

/// True for the statistics that subtract chance agreement (and so admit a
/// permutation significance test).
bool is_chance_corrected(MeasureId id);

enum class Band { good, tentative, discount };

std::string_view to_string(Band band);

/// Reliability reading of a chance-corrected value: > 0.8 good, > 0.67
/// tentative, otherwise discount. Both thresholds are exclusive.
struct InterpretationBand {
  Band band;
  double lower_threshold = 0.67;
  double upper_threshold = 0.8;
};

/// How far apart two categories are when they disagree.
enum class DistanceMetric { nominal, interval, ratio };

std::string_view to_string(DistanceMetric metric);

/// Seeded Monte Carlo sample of a statistic under the chance hypothesis.
struct NullDistribution {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::vector<double> samples;  // sorted ascending
  double observed = 0.0;
  double p_value = 1.0;
};

/// A computed statistic together with its components and context.
struct MeasureResult {
  MeasureId measure = MeasureId::kappa;
  double value = 0.0;
  std::optional<double> observed_agreement;
  std::optional<double> expected_agreement;
  std::optional<double> observed_disagreement;
  std::optional<double> expected_disagreement;
  std::size_t n_items = 0;
  std::size_t n_coders = 0;
  std::size_t n_categories = 0;
  std::optional<InterpretationBand> band;
  std::optional<NullDistribution> significance;
  /// Items the measure had to drop (majority ties, under-annotated items).
  std::vector<std::string> excluded_items;
};

}  // namespace agree
