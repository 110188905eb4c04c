#include "agree/measures.hpp"

namespace agree {

std::string_view to_string(MeasureId id) {
  switch (id) {
    case MeasureId::boundary_jaccard: return "boundary-jaccard";
    case MeasureId::percent_pair: return "percent-pair";
    case MeasureId::percent_all_pairs: return "percent-allpairs";
    case MeasureId::percent_majority: return "percent-majority";
    case MeasureId::kappa: return "kappa";
    case MeasureId::scotts_pi: return "pi";
    case MeasureId::alpha_nominal: return "alpha-nominal";
    case MeasureId::alpha_interval: return "alpha-interval";
    case MeasureId::alpha_ratio: return "alpha-ratio";
    case MeasureId::expert_kappa: return "expert-kappa";
  }
  return "unknown";
}

bool is_chance_corrected(MeasureId id) {
  switch (id) {
    case MeasureId::kappa:
    case MeasureId::scotts_pi:
    case MeasureId::alpha_nominal:
    case MeasureId::alpha_interval:
    case MeasureId::alpha_ratio:
    case MeasureId::expert_kappa:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(Band band) {
  switch (band) {
    case Band::good: return "good";
    case Band::tentative: return "tentative";
    case Band::discount: return "discount";
  }
  return "unknown";
}

std::string_view to_string(DistanceMetric metric) {
  switch (metric) {
    case DistanceMetric::nominal: return "nominal";
    case DistanceMetric::interval: return "interval";
    case DistanceMetric::ratio: return "ratio";
  }
  return "unknown";
}

}  // namespace agree
