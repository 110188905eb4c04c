#include "agree/legacy.hpp"

#include <algorithm>
#include <iterator>

#include "agree/error.hpp"

namespace agree {

MeasureResult boundary_ratio(const std::vector<std::size_t>& expert_marks,
                             const std::vector<std::size_t>& naive_marks) {
  if (expert_marks.empty() && naive_marks.empty()) {
    throw Error("ratio undefined: no boundaries marked");
  }
  std::vector<std::size_t> both;
  std::set_intersection(expert_marks.begin(), expert_marks.end(), naive_marks.begin(),
                        naive_marks.end(), std::back_inserter(both));
  std::vector<std::size_t> either;
  std::set_union(expert_marks.begin(), expert_marks.end(), naive_marks.begin(),
                 naive_marks.end(), std::back_inserter(either));

  MeasureResult result;
  result.measure = MeasureId::boundary_jaccard;
  result.value = static_cast<double>(both.size()) / static_cast<double>(either.size());
  result.n_items = either.size();
  result.n_coders = 2;
  result.n_categories = 2;
  return result;
}

MeasureResult percent_pairwise(const AnnotationMatrix& matrix, std::string_view coder_a,
                               std::string_view coder_b) {
  if (!matrix.complete()) throw Error("percent-pair requires a complete matrix");
  const int a = matrix.coder_index(coder_a);
  const int b = matrix.coder_index(coder_b);
  if (a < 0) throw Error("unknown coder '" + std::string(coder_a) + "'");
  if (b < 0) throw Error("unknown coder '" + std::string(coder_b) + "'");
  if (a == b) throw Error("percent-pair needs two distinct coders");

  std::size_t agreements = 0;
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    if (matrix.code(i, static_cast<std::size_t>(a)) == matrix.code(i, static_cast<std::size_t>(b))) {
      ++agreements;
    }
  }

  MeasureResult result;
  result.measure = MeasureId::percent_pair;
  result.value = static_cast<double>(agreements) / static_cast<double>(matrix.n_items());
  result.n_items = matrix.n_items();
  result.n_coders = 2;
  result.n_categories = matrix.n_categories();
  return result;
}

MeasureResult percent_all_pairs(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("percent-allpairs requires a complete matrix");
  const std::size_t m = matrix.n_coders();

  // ratio of sums: agreeing unordered pairs over all pairs, pooled over items
  std::size_t agreeing = 0;
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (matrix.code(i, a) == matrix.code(i, b)) ++agreeing;
      }
    }
  }
  const double possible =
      static_cast<double>(matrix.n_items()) * (static_cast<double>(m) * (m - 1.0) / 2.0);

  MeasureResult result;
  result.measure = MeasureId::percent_all_pairs;
  result.value = static_cast<double>(agreeing) / possible;
  result.n_items = matrix.n_items();
  result.n_coders = m;
  result.n_categories = matrix.n_categories();
  return result;
}

MeasureResult percent_majority(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("percent-majority requires a complete matrix");
  const std::size_t m = matrix.n_coders();

  std::size_t matching = 0;
  std::size_t scored_items = 0;
  std::vector<std::string> tied;
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    std::vector<std::size_t> counts(matrix.n_categories(), 0);
    for (std::size_t j = 0; j < m; ++j) counts[static_cast<std::size_t>(matrix.code(i, j))]++;
    const std::size_t top = *std::max_element(counts.begin(), counts.end());
    if (std::count(counts.begin(), counts.end(), top) > 1) {
      tied.push_back(matrix.items()[i]);
      continue;
    }
    matching += top;
    ++scored_items;
  }
  if (scored_items == 0) throw Error("majority undefined on every item");

  MeasureResult result;
  result.measure = MeasureId::percent_majority;
  result.value = static_cast<double>(matching) / (static_cast<double>(m) * scored_items);
  result.n_items = scored_items;
  result.n_coders = m;
  result.n_categories = matrix.n_categories();
  result.excluded_items = std::move(tied);
  return result;
}

}  // namespace agree
