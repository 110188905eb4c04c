#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agree/annotation_matrix.hpp"
#include "agree/boundary_track.hpp"

namespace agree {

enum class DiagnosticKind { leave_one_coder_out, pairwise_kappa, per_category_kappa };

std::string_view to_string(DiagnosticKind kind);

struct DiagnosticRow {
  std::string subject;
  std::optional<double> value;  // empty when the statistic is undefined here
  std::optional<double> delta;  // value - baseline
};

/// Odd-man-out style report: a full-panel kappa baseline plus one row per
/// isolated subject (coder, coder pair, or category).
struct DiagnosticReport {
  DiagnosticKind kind;
  double baseline = 0.0;
  std::vector<DiagnosticRow> rows;
};

/// Kappa of each (m-1)-coder subpanel; needs at least 3 coders.
DiagnosticReport leave_one_coder_out(const AnnotationMatrix& matrix);

/// Two-coder kappa for every unordered coder pair.
DiagnosticReport pairwise_kappa_matrix(const AnnotationMatrix& matrix);

/// Kappa of the matrix collapsed to "this category vs everything else",
/// one row per category in use.
DiagnosticReport per_category_kappa(const AnnotationMatrix& matrix);

struct UnitProfileEntry {
  std::string item;
  std::string modal_label;
  std::size_t modal_count = 0;
  bool tie = false;  // modal count shared; broken by category order
  /// "yes" votes on yes/no boundary matrices — the boundary strength scale.
  std::optional<std::size_t> yes_count;
};

/// Per-item modal label and its support.
std::vector<UnitProfileEntry> unit_profile(const AnnotationMatrix& matrix);

/// Kappa of the same marks expanded over different site universes. Shows
/// the statistic's dependence on the unit base while the set ratio stays
/// put.
std::vector<std::pair<std::size_t, double>> unitization_sweep(
    const BoundaryTrack& track, const std::vector<std::size_t>& site_counts);

}  // namespace agree
