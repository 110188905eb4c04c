#include "agree/category_set.hpp"

#include "agree/error.hpp"

namespace agree {

CategorySet::CategorySet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  build_index();
}

CategorySet::CategorySet(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (values_.size() != labels_.size()) {
    throw Error("numeric values must cover every label exactly once");
  }
  build_index();
}

void CategorySet::build_index() {
  if (labels_.empty()) throw Error("category set needs at least 1 label");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw Error("duplicate label '" + labels_[i] + "' in category set");
    }
  }
}

int CategorySet::index_of(std::string_view label) const {
  const auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

double CategorySet::value(std::size_t code) const {
  if (!has_values()) throw Error("category set carries no numeric values");
  return values_[code];
}

}  // namespace agree
