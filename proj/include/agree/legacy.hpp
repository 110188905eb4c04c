#pragma once

#include <string_view>
#include <vector>

#include "agree/annotation_matrix.hpp"
#include "agree/measures.hpp"

namespace agree {

// The four raw agreement measures that ignore chance. Kept exactly as the
// source studies defined them so their biases can be demonstrated against
// the chance-corrected family.

/// Set ratio |intersection| / |union| over two coders' marked sites. Inputs
/// are sorted, duplicate-free index lists. Defined without any site
/// universe; requires at least one mark between the two coders.
MeasureResult boundary_ratio(const std::vector<std::size_t>& expert_marks,
                             const std::vector<std::size_t>& naive_marks);

/// Fraction of items on which two named coders chose the same label.
MeasureResult percent_pairwise(const AnnotationMatrix& matrix, std::string_view coder_a,
                               std::string_view coder_b);

/// Agreeing unordered coder pairs over all possible pairs, pooled across
/// items.
MeasureResult percent_all_pairs(const AnnotationMatrix& matrix);

/// Fraction of coders matching each item's strict majority label. Items
/// whose top count is tied are excluded from both sides of the ratio and
/// reported in the result.
MeasureResult percent_majority(const AnnotationMatrix& matrix);

}  // namespace agree
