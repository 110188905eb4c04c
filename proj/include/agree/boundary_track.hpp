#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agree/annotation_matrix.hpp"

namespace agree {

/// Per-coder sets of marked boundary sites over an ordered site universe.
/// The universe size S may be unknown; without it only the set-ratio
/// measure applies.
struct BoundaryTrack {
  std::optional<std::size_t> site_count;
  /// Coder name -> sorted, duplicate-free site indices, in input order.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> marks;

  /// Largest marked index over all coders, or nullopt when nothing is marked.
  std::optional<std::size_t> max_mark() const;
};

/// Expands a track over an explicit site universe into a complete yes/no
/// matrix: one item per site (ids "0".."S-1"), label "yes" where the coder
/// marked the site and "no" elsewhere. Categories are ["no", "yes"].
AnnotationMatrix to_boundary_matrix(const BoundaryTrack& track, std::size_t site_count);

}  // namespace agree
