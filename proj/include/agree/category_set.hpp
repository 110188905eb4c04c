#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace agree {

/// Ordered label vocabulary. Labels are compared as exact byte strings.
/// Optionally each label carries a numeric value, enabling interval- and
/// ratio-scale distances; values are present for every label or for none.
class CategorySet {
 public:
  explicit CategorySet(std::vector<std::string> labels);
  CategorySet(std::vector<std::string> labels, std::vector<double> values);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t code) const { return labels_[code]; }

  /// Code of `label`, or -1 when the label is not in the set.
  int index_of(std::string_view label) const;

  bool has_values() const { return !values_.empty(); }
  double value(std::size_t code) const;

 private:
  void build_index();

  std::vector<std::string> labels_;
  std::vector<double> values_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace agree
