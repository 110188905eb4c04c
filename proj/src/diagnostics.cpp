#include "agree/diagnostics.hpp"

#include <algorithm>
#include <utility>

#include "agree/error.hpp"
#include "agree/stats.hpp"

namespace agree {

namespace {

AnnotationMatrix select_coders(const AnnotationMatrix& matrix,
                               const std::vector<std::size_t>& which) {
  std::vector<std::string> coders;
  coders.reserve(which.size());
  Eigen::MatrixXi codes(static_cast<Eigen::Index>(matrix.n_items()),
                        static_cast<Eigen::Index>(which.size()));
  for (std::size_t out = 0; out < which.size(); ++out) {
    coders.push_back(matrix.coders()[which[out]]);
    codes.col(static_cast<Eigen::Index>(out)) =
        matrix.codes().col(static_cast<Eigen::Index>(which[out]));
  }
  return AnnotationMatrix(matrix.items(), std::move(coders), std::move(codes),
                          matrix.categories());
}

}  // namespace

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::leave_one_coder_out: return "leave_one_coder_out";
    case DiagnosticKind::pairwise_kappa: return "pairwise_kappa";
    case DiagnosticKind::per_category_kappa: return "per_category_kappa";
  }
  return "unknown";
}

DiagnosticReport leave_one_coder_out(const AnnotationMatrix& matrix) {
  if (matrix.n_coders() < 3) {
    throw Error("leave-one-coder-out requires at least 3 coders");
  }
  DiagnosticReport report;
  report.kind = DiagnosticKind::leave_one_coder_out;
  report.baseline = kappa(matrix).value;
  for (std::size_t drop = 0; drop < matrix.n_coders(); ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < matrix.n_coders(); ++j) {
      if (j != drop) keep.push_back(j);
    }
    DiagnosticRow row;
    row.subject = matrix.coders()[drop];
    try {
      row.value = kappa(select_coders(matrix, keep)).value;
      row.delta = *row.value - report.baseline;
    } catch (const Error&) {
      // degenerate subpanel; leave the row undefined
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

DiagnosticReport pairwise_kappa_matrix(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("pairwise kappa requires a complete matrix");
  DiagnosticReport report;
  report.kind = DiagnosticKind::pairwise_kappa;
  report.baseline = kappa(matrix).value;
  for (std::size_t a = 0; a < matrix.n_coders(); ++a) {
    for (std::size_t b = a + 1; b < matrix.n_coders(); ++b) {
      DiagnosticRow row;
      row.subject = matrix.coders()[a] + "," + matrix.coders()[b];
      try {
        row.value = kappa(select_coders(matrix, {a, b})).value;
        row.delta = *row.value - report.baseline;
      } catch (const Error&) {
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

DiagnosticReport per_category_kappa(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("per-category kappa requires a complete matrix");
  const Eigen::VectorXd pooled = pooled_counts(matrix);
  if ((pooled.array() > 0.0).count() < 2) {
    throw Error("per-category kappa requires at least 2 categories in use");
  }

  DiagnosticReport report;
  report.kind = DiagnosticKind::per_category_kappa;
  report.baseline = kappa(matrix).value;
  for (std::size_t c = 0; c < matrix.n_categories(); ++c) {
    if (pooled[static_cast<Eigen::Index>(c)] == 0.0) continue;  // category never used
    // collapse to "is this category" vs "anything else"
    Eigen::MatrixXi collapsed = matrix.codes();
    for (Eigen::Index i = 0; i < collapsed.rows(); ++i) {
      for (Eigen::Index j = 0; j < collapsed.cols(); ++j) {
        collapsed(i, j) = collapsed(i, j) == static_cast<int>(c) ? 1 : 0;
      }
    }
    DiagnosticRow row;
    row.subject = matrix.categories().label(c);
    try {
      AnnotationMatrix binary(matrix.items(), matrix.coders(), std::move(collapsed),
                              CategorySet(std::vector<std::string>{"0", "1"}));
      row.value = kappa(binary).value;
      row.delta = *row.value - report.baseline;
    } catch (const Error&) {
      // collapse degenerated; row stays undefined
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<UnitProfileEntry> unit_profile(const AnnotationMatrix& matrix) {
  if (!matrix.complete()) throw Error("unit profile requires a complete matrix");
  const Eigen::MatrixXd counts = item_label_counts(matrix);
  const bool boundary_labels =
      matrix.categories().labels() == std::vector<std::string>{"no", "yes"};
  const int yes = boundary_labels ? matrix.categories().index_of("yes") : -1;

  std::vector<UnitProfileEntry> profile;
  profile.reserve(matrix.n_items());
  for (Eigen::Index i = 0; i < counts.rows(); ++i) {
    Eigen::Index modal = 0;
    counts.row(i).maxCoeff(&modal);  // first max wins: tie breaks by category order
    UnitProfileEntry entry;
    entry.item = matrix.items()[static_cast<std::size_t>(i)];
    entry.modal_label = matrix.categories().label(static_cast<std::size_t>(modal));
    entry.modal_count = static_cast<std::size_t>(counts(i, modal));
    entry.tie = (counts.row(i).array() == counts(i, modal)).count() > 1;
    if (boundary_labels) entry.yes_count = static_cast<std::size_t>(counts(i, yes));
    profile.push_back(std::move(entry));
  }
  return profile;
}

std::vector<std::pair<std::size_t, double>> unitization_sweep(
    const BoundaryTrack& track, const std::vector<std::size_t>& site_counts) {
  if (track.marks.size() < 2) throw Error("unitization sweep requires at least 2 coders");
  const std::optional<std::size_t> max = track.max_mark();
  std::vector<std::pair<std::size_t, double>> sweep;
  sweep.reserve(site_counts.size());
  for (const std::size_t sites : site_counts) {
    if (max && sites < *max + 1) {
      throw Error("site count " + std::to_string(sites) +
                  " is smaller than the largest marked index " + std::to_string(*max) + " + 1");
    }
    sweep.emplace_back(sites, kappa(to_boundary_matrix(track, sites)).value);
  }
  return sweep;
}

}  // namespace agree
