#include "agree/stats.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "agree/error.hpp"
#include "agree/rng.hpp"

namespace agree {

namespace {

MeasureResult chance_corrected(MeasureId id, double pa, double pe,
                               const AnnotationMatrix& matrix) {
  MeasureResult result;
  result.measure = id;
  result.value = (pa - pe) / (1.0 - pe);
  result.observed_agreement = pa;
  result.expected_agreement = pe;
  result.n_items = matrix.n_items();
  result.n_coders = matrix.n_coders();
  result.n_categories = matrix.n_categories();
  result.band = interpret(std::clamp(result.value, -1.0, 1.0));
  return result;
}

}  // namespace

double observed_agreement(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("observed agreement requires a complete matrix");
  const Eigen::MatrixXd counts = item_label_counts(matrix);
  const double m = static_cast<double>(matrix.n_coders());
  const double pairs = m * (m - 1.0);

  // mean over items of the fraction of agreeing unordered coder pairs
  double total = 0.0;
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    const auto row = counts.row(i).array();
    total += (row * (row - 1.0)).sum() / pairs;
  }
  return total / static_cast<double>(matrix.n_items());
}

double expected_agreement(const AnnotationMatrix& matrix) {
  return pooled_proportions(matrix).squaredNorm();
}

MeasureResult kappa(const AnnotationMatrix& matrix) {
  const double pa = observed_agreement(matrix);
  const double pe = expected_agreement(matrix);
  if (!(pe < 1.0)) throw Error("kappa undefined: degenerate marginals");
  return chance_corrected(MeasureId::kappa, pa, pe, matrix);
}

MeasureResult scotts_pi(const AnnotationMatrix& matrix) {
  if (matrix.n_coders() != 2) throw Error("pi requires exactly 2 coders");
  const double pa = observed_agreement(matrix);
  const double pe = expected_agreement(matrix);
  if (!(pe < 1.0)) throw Error("pi undefined: degenerate marginals");
  return chance_corrected(MeasureId::scotts_pi, pa, pe, matrix);
}

Eigen::MatrixXd distance_matrix(const CategorySet& categories, DistanceMetric metric,
                                const Eigen::VectorXd& pooled) {
  const Eigen::Index k = static_cast<Eigen::Index>(categories.size());
  if (metric == DistanceMetric::nominal) {
    return Eigen::MatrixXd::Ones(k, k) - Eigen::MatrixXd::Identity(k, k);
  }
  if (!categories.has_values()) {
    throw Error(std::string(to_string(metric)) + " metric requires numeric category values");
  }
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a + 1; b < k; ++b) {
      const double va = categories.value(static_cast<std::size_t>(a));
      const double vb = categories.value(static_cast<std::size_t>(b));
      double d = 0.0;
      if (metric == DistanceMetric::interval) {
        d = (va - vb) * (va - vb);
      } else {
        const double sum = va + vb;
        if (sum == 0.0) {
          // only an error when the undefined pair would carry weight
          if (pooled[a] > 0.0 && pooled[b] > 0.0) {
            throw Error("ratio distance undefined for labels '" +
                        categories.label(static_cast<std::size_t>(a)) + "' and '" +
                        categories.label(static_cast<std::size_t>(b)) +
                        "' (values sum to zero)");
          }
          d = 0.0;
        } else {
          d = ((va - vb) / sum) * ((va - vb) / sum);
        }
      }
      delta(a, b) = d;
      delta(b, a) = d;
    }
  }
  return delta;
}

MeasureResult krippendorff_alpha(const AnnotationMatrix& matrix, DistanceMetric metric) {
  const Eigen::MatrixXd counts = item_label_counts(matrix);

  std::vector<Eigen::Index> included;
  std::vector<std::string> excluded;
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    if (counts.row(i).sum() >= 2.0) {
      included.push_back(i);
    } else {
      excluded.push_back(matrix.items()[static_cast<std::size_t>(i)]);
    }
  }

  Eigen::VectorXd pooled = Eigen::VectorXd::Zero(counts.cols());
  for (const Eigen::Index i : included) pooled += counts.row(i).transpose();
  const double n = pooled.sum();
  if (n < 2.0) throw Error("alpha undefined: fewer than 2 pairable judgments");

  const Eigen::MatrixXd delta = distance_matrix(matrix.categories(), metric, pooled);

  // D_o: within-item label-pair distances; the quadratic form counts every
  // ordered pair of distinct cells since delta's diagonal is zero
  double d_obs = 0.0;
  for (const Eigen::Index i : included) {
    const Eigen::VectorXd row = counts.row(i).transpose();
    const double m_u = row.sum();
    d_obs += row.dot(delta * row) / (m_u - 1.0);
  }
  d_obs /= n;

  const double d_exp = pooled.dot(delta * pooled) / (n * (n - 1.0));
  if (!(d_exp > 0.0)) throw Error("alpha undefined: no variation in the data");

  MeasureResult result;
  result.measure = metric == DistanceMetric::nominal    ? MeasureId::alpha_nominal
                   : metric == DistanceMetric::interval ? MeasureId::alpha_interval
                                                        : MeasureId::alpha_ratio;
  result.value = 1.0 - d_obs / d_exp;
  result.observed_disagreement = d_obs;
  result.expected_disagreement = d_exp;
  result.n_items = included.size();
  result.n_coders = matrix.n_coders();
  result.n_categories = matrix.n_categories();
  result.band = interpret(std::clamp(result.value, -1.0, 1.0));
  result.excluded_items = std::move(excluded);
  return result;
}

MeasureResult expert_kappa(const AnnotationMatrix& matrix, std::string_view expert) {
  if (!matrix.complete()) throw Error("expert kappa requires a complete matrix");
  const int e = matrix.coder_index(expert);
  if (e < 0) throw Error("unknown coder '" + std::string(expert) + "'");

  const std::size_t n_items = matrix.n_items();
  const std::size_t m = matrix.n_coders();
  const Eigen::Index k = static_cast<Eigen::Index>(matrix.n_categories());

  std::size_t agreements = 0;
  Eigen::VectorXd expert_counts = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd naive_counts = Eigen::VectorXd::Zero(k);
  for (std::size_t i = 0; i < n_items; ++i) {
    const int expert_code = matrix.code(i, static_cast<std::size_t>(e));
    expert_counts[expert_code] += 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (static_cast<int>(j) == e) continue;
      const int naive_code = matrix.code(i, j);
      naive_counts[naive_code] += 1.0;
      if (naive_code == expert_code) ++agreements;
    }
  }

  const double pa =
      static_cast<double>(agreements) / (static_cast<double>(n_items) * (m - 1.0));
  const Eigen::VectorXd q = expert_counts / expert_counts.sum();
  const Eigen::VectorXd r = naive_counts / naive_counts.sum();
  const double pe = q.dot(r);
  if (!(pe < 1.0)) throw Error("expert kappa undefined: degenerate marginals");
  MeasureResult result = chance_corrected(MeasureId::expert_kappa, pa, pe, matrix);
  result.n_coders = m;
  return result;
}

InterpretationBand interpret(double value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw Error("interpretation requires a value in [-1, 1]");
  }
  InterpretationBand band;
  band.band = value > 0.8 ? Band::good : value > 0.67 ? Band::tentative : Band::discount;
  return band;
}

double evaluate_statistic(const AnnotationMatrix& matrix, const StatisticSpec& spec) {
  switch (spec.id) {
    case MeasureId::kappa: return kappa(matrix).value;
    case MeasureId::scotts_pi: return scotts_pi(matrix).value;
    case MeasureId::alpha_nominal: return krippendorff_alpha(matrix, DistanceMetric::nominal).value;
    case MeasureId::alpha_interval: return krippendorff_alpha(matrix, DistanceMetric::interval).value;
    case MeasureId::alpha_ratio: return krippendorff_alpha(matrix, DistanceMetric::ratio).value;
    case MeasureId::expert_kappa: return expert_kappa(matrix, spec.expert).value;
    default:
      throw Error("statistic '" + std::string(to_string(spec.id)) + "' is not chance-corrected");
  }
}

NullDistribution significance(const AnnotationMatrix& matrix, const StatisticSpec& spec,
                              std::size_t iterations, std::uint64_t seed) {
  if (iterations < 100) throw Error("significance requires at least 100 iterations");
  if (!is_chance_corrected(spec.id)) {
    throw Error("significance requires a chance-corrected measure");
  }
  const double observed = evaluate_statistic(matrix, spec);

  const Eigen::Index n = static_cast<Eigen::Index>(matrix.n_items());
  const Eigen::Index m = static_cast<Eigen::Index>(matrix.n_coders());
  std::vector<double> samples;
  samples.reserve(iterations);

  const std::size_t max_attempts = 10 * iterations;
  std::size_t attempt = 0;
  while (samples.size() < iterations) {
    if (attempt == max_attempts) {
      throw Error("significance failed: statistic undefined on too many permuted replicates");
    }
    Rng rng(derive_seed(seed, attempt++));
    Eigen::MatrixXi codes = matrix.codes();
    for (Eigen::Index j = 0; j < m; ++j) {
      rng.shuffle(static_cast<std::size_t>(n), [&](std::size_t a, std::size_t b) {
        std::swap(codes(static_cast<Eigen::Index>(a), j), codes(static_cast<Eigen::Index>(b), j));
      });
    }
    try {
      AnnotationMatrix replicate(matrix.items(), matrix.coders(), std::move(codes),
                                 matrix.categories());
      samples.push_back(evaluate_statistic(replicate, spec));
    } catch (const Error&) {
      continue;  // undefined on this permutation; draw the next stream
    }
  }

  std::size_t at_least_as_extreme = 0;
  for (const double sample : samples) {
    if (std::abs(sample) >= std::abs(observed)) ++at_least_as_extreme;
  }
  std::sort(samples.begin(), samples.end());

  NullDistribution null;
  null.seed = seed;
  null.iterations = iterations;
  null.samples = std::move(samples);
  null.observed = observed;
  null.p_value =
      static_cast<double>(1 + at_least_as_extreme) / static_cast<double>(iterations + 1);
  return null;
}

}  // namespace agree
