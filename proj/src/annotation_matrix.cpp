#include "agree/annotation_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "agree/error.hpp"

namespace agree {

AnnotationMatrix::AnnotationMatrix(std::vector<std::string> items,
                                   std::vector<std::string> coders, Eigen::MatrixXi codes,
                                   CategorySet categories)
    : items_(std::move(items)),
      coders_(std::move(coders)),
      codes_(std::move(codes)),
      categories_(std::move(categories)) {
  if (coders_.size() < 2) throw Error("a matrix needs at least 2 coders");
  if (items_.empty()) throw Error("a matrix needs at least 1 item");
  if (codes_.rows() != static_cast<Eigen::Index>(items_.size()) ||
      codes_.cols() != static_cast<Eigen::Index>(coders_.size())) {
    throw Error("code table shape does not match items x coders");
  }
  {
    std::set<std::string_view> seen;
    for (const auto& item : items_) {
      if (!seen.insert(item).second) throw Error("duplicate item id '" + item + "'");
    }
    seen.clear();
    for (const auto& coder : coders_) {
      if (!seen.insert(coder).second) throw Error("duplicate coder id '" + coder + "'");
    }
  }
  const int n_cats = static_cast<int>(categories_.size());
  for (Eigen::Index i = 0; i < codes_.rows(); ++i) {
    bool any_present = false;
    for (Eigen::Index j = 0; j < codes_.cols(); ++j) {
      const int c = codes_(i, j);
      if (c == kMissing) {
        ++missing_;
        continue;
      }
      if (c < 0 || c >= n_cats) {
        throw Error("cell (" + items_[i] + "," + coders_[j] + ") holds an unknown category code");
      }
      any_present = true;
    }
    if (!any_present) throw Error("item '" + items_[i] + "' has no labels");
  }
}

int AnnotationMatrix::coder_index(std::string_view coder) const {
  const auto it = std::find(coders_.begin(), coders_.end(), coder);
  return it == coders_.end() ? -1 : static_cast<int>(it - coders_.begin());
}

AnnotationMatrix build_matrix(const std::vector<Record>& records,
                              const std::optional<CategorySet>& categories) {
  if (records.empty()) throw Error("no records");

  std::vector<std::string> items;
  std::vector<std::string> coders;
  std::map<std::string, int, std::less<>> item_index;
  std::map<std::string, int, std::less<>> coder_index;
  for (const auto& record : records) {
    if (item_index.emplace(record.item, static_cast<int>(items.size())).second) {
      items.push_back(record.item);
    }
    if (coder_index.emplace(record.coder, static_cast<int>(coders.size())).second) {
      coders.push_back(record.coder);
    }
  }

  std::optional<CategorySet> cats = categories;
  if (!cats) {
    std::set<std::string> observed;
    for (const auto& record : records) observed.insert(record.label);
    cats.emplace(std::vector<std::string>(observed.begin(), observed.end()));
  }

  Eigen::MatrixXi codes = Eigen::MatrixXi::Constant(static_cast<Eigen::Index>(items.size()),
                                                    static_cast<Eigen::Index>(coders.size()),
                                                    AnnotationMatrix::kMissing);
  for (const auto& record : records) {
    const int label_code = cats->index_of(record.label);
    if (label_code < 0) {
      throw Error("label '" + record.label + "' is not in the supplied category set");
    }
    const Eigen::Index i = item_index.find(record.item)->second;
    const Eigen::Index j = coder_index.find(record.coder)->second;
    int& cell = codes(i, j);
    if (cell != AnnotationMatrix::kMissing && cell != label_code) {
      throw Error("conflicting labels for (" + record.item + "," + record.coder + ")");
    }
    cell = label_code;
  }

  return AnnotationMatrix(std::move(items), std::move(coders), std::move(codes),
                          std::move(*cats));
}

std::vector<Record> to_records(const AnnotationMatrix& matrix) {
  std::vector<Record> records;
  records.reserve(matrix.n_items() * matrix.n_coders() - matrix.missing_cells());
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    for (std::size_t j = 0; j < matrix.n_coders(); ++j) {
      const int c = matrix.code(i, j);
      if (c == AnnotationMatrix::kMissing) continue;
      records.push_back({matrix.items()[i], matrix.coders()[j],
                         matrix.categories().label(static_cast<std::size_t>(c))});
    }
  }
  return records;
}

Eigen::MatrixXd item_label_counts(const AnnotationMatrix& matrix) {
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(matrix.n_items()),
                                                 static_cast<Eigen::Index>(matrix.n_categories()));
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    for (std::size_t j = 0; j < matrix.n_coders(); ++j) {
      const int c = matrix.code(i, j);
      if (c != AnnotationMatrix::kMissing) {
        counts(static_cast<Eigen::Index>(i), c) += 1.0;
      }
    }
  }
  return counts;
}

Eigen::VectorXd pooled_counts(const AnnotationMatrix& matrix) {
  return item_label_counts(matrix).colwise().sum().transpose();
}

Eigen::VectorXd pooled_proportions(const AnnotationMatrix& matrix) {
  Eigen::VectorXd counts = pooled_counts(matrix);
  return counts / counts.sum();
}

}  // namespace agree
