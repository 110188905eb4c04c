#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "agree/category_set.hpp"

namespace agree {

/// Items x coders table of category codes, the input of every measure.
/// Cell values index into the category set; kMissing marks an absent
/// judgment. Immutable after construction.
class AnnotationMatrix {
 public:
  static constexpr int kMissing = -1;

  AnnotationMatrix(std::vector<std::string> items, std::vector<std::string> coders,
                   Eigen::MatrixXi codes, CategorySet categories);

  std::size_t n_items() const { return items_.size(); }
  std::size_t n_coders() const { return coders_.size(); }
  std::size_t n_categories() const { return categories_.size(); }

  const std::vector<std::string>& items() const { return items_; }
  const std::vector<std::string>& coders() const { return coders_; }
  const CategorySet& categories() const { return categories_; }
  const Eigen::MatrixXi& codes() const { return codes_; }

  int code(std::size_t item, std::size_t coder) const {
    return codes_(static_cast<Eigen::Index>(item), static_cast<Eigen::Index>(coder));
  }

  /// Coder column index, or -1 when unknown.
  int coder_index(std::string_view coder) const;

  /// True iff no cell is missing.
  bool complete() const { return missing_ == 0; }
  std::size_t missing_cells() const { return missing_; }

 private:
  std::vector<std::string> items_;
  std::vector<std::string> coders_;
  Eigen::MatrixXi codes_;
  CategorySet categories_;
  std::size_t missing_ = 0;
};

/// One (item, coder, label) judgment, the long-form exchange record.
struct Record {
  std::string item;
  std::string coder;
  std::string label;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Assembles a matrix from long-form records. Items and coders keep
/// first-appearance order; when no category set is supplied one is inferred
/// from the observed labels, sorted lexicographically. Identical duplicate
/// records collapse; records assigning two labels to one cell are rejected.
AnnotationMatrix build_matrix(const std::vector<Record>& records,
                              const std::optional<CategorySet>& categories = std::nullopt);

/// Flattens back to records in item-major, coder-minor order, skipping
/// missing cells.
std::vector<Record> to_records(const AnnotationMatrix& matrix);

/// N x K table of per-item label counts over present cells.
Eigen::MatrixXd item_label_counts(const AnnotationMatrix& matrix);

/// Per-label counts over all present cells, aligned with the category set.
Eigen::VectorXd pooled_counts(const AnnotationMatrix& matrix);

/// Per-label proportions of all present cells; entries sum to 1.
Eigen::VectorXd pooled_proportions(const AnnotationMatrix& matrix);

}  // namespace agree
