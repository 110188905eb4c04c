#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "agree/annotation_matrix.hpp"
#include "agree/measures.hpp"

namespace agree {

/// P(A): mean over items of the fraction of agreeing unordered coder pairs.
/// Requires a complete matrix.
double observed_agreement(const AnnotationMatrix& matrix);

/// P(E): sum of squared pooled label proportions — the chance that two
/// coders drawing labels at the pooled rates coincide.
double expected_agreement(const AnnotationMatrix& matrix);

/// K = (P(A) - P(E)) / (1 - P(E)), with pooled-marginal P(E).
MeasureResult kappa(const AnnotationMatrix& matrix);

/// Two-coder restriction of the same pooled-marginal formula.
MeasureResult scotts_pi(const AnnotationMatrix& matrix);

/// alpha = 1 - D_o/D_e from the coincidence of label pairs within items.
/// Tolerates missing cells; items with fewer than two judgments are dropped
/// and reported. Interval and ratio metrics need numeric category values.
MeasureResult krippendorff_alpha(const AnnotationMatrix& matrix, DistanceMetric metric);

/// Kappa variant pairing every naive coder against one expert coder:
/// P(A) is the rate of naive-expert matches, P(E) the dot product of the
/// expert's marginals with the pooled naive marginals.
MeasureResult expert_kappa(const AnnotationMatrix& matrix, std::string_view expert);

/// Band for a chance-corrected value in [-1, 1].
InterpretationBand interpret(double value);

/// K x K distance table over the category set. `pooled` carries the label
/// counts actually in play: the ratio metric is rejected only when an
/// undefined pair would carry weight.
Eigen::MatrixXd distance_matrix(const CategorySet& categories, DistanceMetric metric,
                                const Eigen::VectorXd& pooled);

/// Which chance-corrected statistic a significance run resamples. The alpha
/// measure ids carry their distance metric.
struct StatisticSpec {
  MeasureId id = MeasureId::kappa;
  std::string expert;  // expert_kappa only
};

/// Value of the statistic named by `spec` on `matrix`.
double evaluate_statistic(const AnnotationMatrix& matrix, const StatisticSpec& spec);

/// Permutation test: each replicate independently permutes every coder's
/// column across items (preserving coder marginals, destroying item
/// alignment) and recomputes the statistic. Replicates on which the
/// statistic is undefined are discarded and regenerated, up to 10x
/// `iterations` attempts. Attempt t draws from the stream derive_seed(seed,
/// t), so the result is a pure function of the arguments.
NullDistribution significance(const AnnotationMatrix& matrix, const StatisticSpec& spec,
                              std::size_t iterations, std::uint64_t seed);

}  // namespace agree
