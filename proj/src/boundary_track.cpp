#include "agree/boundary_track.hpp"

#include <algorithm>
#include <string>

#include "agree/error.hpp"

namespace agree {

std::optional<std::size_t> BoundaryTrack::max_mark() const {
  std::optional<std::size_t> max;
  for (const auto& [coder, sites] : marks) {
    if (sites.empty()) continue;
    const std::size_t coder_max = sites.back();
    if (!max || coder_max > *max) max = coder_max;
  }
  return max;
}

AnnotationMatrix to_boundary_matrix(const BoundaryTrack& track, std::size_t site_count) {
  if (track.marks.size() < 2) throw Error("boundary matrix needs at least 2 coders");
  for (const auto& [coder, sites] : track.marks) {
    for (const std::size_t site : sites) {
      if (site >= site_count) {
        throw Error("index " + std::to_string(site) + " >= sites " +
                    std::to_string(site_count) + " for coder '" + coder + "'");
      }
    }
  }
  if (site_count == 0) throw Error("boundary matrix needs at least 1 site");

  CategorySet categories(std::vector<std::string>{"no", "yes"});
  const int yes = categories.index_of("yes");
  const int no = categories.index_of("no");

  std::vector<std::string> items;
  items.reserve(site_count);
  for (std::size_t s = 0; s < site_count; ++s) items.push_back(std::to_string(s));

  std::vector<std::string> coders;
  coders.reserve(track.marks.size());
  for (const auto& [coder, sites] : track.marks) coders.push_back(coder);

  Eigen::MatrixXi codes = Eigen::MatrixXi::Constant(static_cast<Eigen::Index>(site_count),
                                                    static_cast<Eigen::Index>(coders.size()), no);
  for (std::size_t j = 0; j < track.marks.size(); ++j) {
    for (const std::size_t site : track.marks[j].second) {
      codes(static_cast<Eigen::Index>(site), static_cast<Eigen::Index>(j)) = yes;
    }
  }

  return AnnotationMatrix(std::move(items), std::move(coders), std::move(codes),
                          std::move(categories));
}

}  // namespace agree
