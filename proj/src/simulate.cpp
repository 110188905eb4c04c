#include "agree/simulate.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "agree/error.hpp"
#include "agree/rng.hpp"
#include "agree/stats.hpp"

namespace agree {

namespace {

constexpr double kMarginalTolerance = 1e-9;

void validate_marginals(const std::vector<std::pair<std::string, double>>& marginals,
                        const std::string& owner) {
  if (marginals.empty()) throw Error(owner + ": empty marginals");
  double sum = 0.0;
  std::set<std::string_view> seen;
  for (const auto& [label, p] : marginals) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(owner + ": probability for '" + label + "' outside [0, 1]");
    }
    if (!seen.insert(label).second) throw Error(owner + ": duplicate label '" + label + "'");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kMarginalTolerance) {
    throw Error(owner + ": marginals do not sum to 1");
  }
}

// Draw table for one distribution over the shared category universe.
struct DrawTable {
  std::vector<int> codes;       // union code for each entry
  Eigen::VectorXd cumulative;   // running probability sums
};

DrawTable make_table(const std::vector<std::pair<std::string, double>>& marginals,
                     const CategorySet& categories) {
  DrawTable table;
  table.codes.reserve(marginals.size());
  table.cumulative.resize(static_cast<Eigen::Index>(marginals.size()));
  double running = 0.0;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    table.codes.push_back(categories.index_of(marginals[i].first));
    running += marginals[i].second;
    table.cumulative[static_cast<Eigen::Index>(i)] = running;
  }
  return table;
}

CategorySet union_categories(const std::vector<CoderProfile>& profiles,
                             const std::vector<std::pair<std::string, double>>* truth) {
  std::set<std::string> labels;
  for (const auto& profile : profiles) {
    for (const auto& [label, p] : profile.marginals) labels.insert(label);
  }
  if (truth) {
    for (const auto& [label, p] : *truth) labels.insert(label);
  }
  return CategorySet(std::vector<std::string>(labels.begin(), labels.end()));
}

std::vector<std::string> sequence_names(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

}  // namespace

AnnotationMatrix simulate_coders(std::size_t n_items, const std::vector<CoderProfile>& profiles,
                                 std::uint64_t seed) {
  if (n_items < 1) throw Error("simulation needs at least 1 item");
  if (profiles.size() < 2) throw Error("simulation needs at least 2 coder profiles");
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    validate_marginals(profiles[j].marginals, "profile " + std::to_string(j + 1));
  }

  CategorySet categories = union_categories(profiles, nullptr);
  std::vector<DrawTable> tables;
  tables.reserve(profiles.size());
  for (const auto& profile : profiles) tables.push_back(make_table(profile.marginals, categories));

  Rng rng(seed);
  Eigen::MatrixXi codes(static_cast<Eigen::Index>(n_items),
                        static_cast<Eigen::Index>(profiles.size()));
  for (Eigen::Index i = 0; i < codes.rows(); ++i) {
    for (Eigen::Index j = 0; j < codes.cols(); ++j) {
      const DrawTable& table = tables[static_cast<std::size_t>(j)];
      codes(i, j) = table.codes[static_cast<std::size_t>(rng.pick(table.cumulative))];
    }
  }

  return AnnotationMatrix(sequence_names("u", n_items), sequence_names("c", profiles.size()),
                          std::move(codes), std::move(categories));
}

double monte_carlo_pe(const std::vector<CoderProfile>& profiles, std::size_t n_items,
                      std::size_t replicates, std::uint64_t seed) {
  if (replicates < 10) throw Error("monte carlo estimate needs at least 10 replicates");
  double total = 0.0;
  for (std::size_t r = 0; r < replicates; ++r) {
    total += observed_agreement(simulate_coders(n_items, profiles, derive_seed(seed, r)));
  }
  return total / static_cast<double>(replicates);
}

AnnotationMatrix simulate_with_truth(
    std::size_t n_items, const std::vector<std::pair<std::string, double>>& truth_marginals,
    const std::vector<CoderProfile>& profiles, std::uint64_t seed) {
  if (n_items < 1) throw Error("simulation needs at least 1 item");
  if (profiles.size() < 2) throw Error("simulation needs at least 2 coder profiles");
  validate_marginals(truth_marginals, "truth");
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    const std::string owner = "profile " + std::to_string(j + 1);
    validate_marginals(profiles[j].marginals, owner);
    if (!profiles[j].accuracy) throw Error(owner + ": accuracy required");
    if (!(*profiles[j].accuracy >= 0.0 && *profiles[j].accuracy <= 1.0)) {
      throw Error(owner + ": accuracy outside [0, 1]");
    }
  }

  CategorySet categories = union_categories(profiles, &truth_marginals);
  const DrawTable truth_table = make_table(truth_marginals, categories);
  std::vector<DrawTable> tables;
  tables.reserve(profiles.size());
  for (const auto& profile : profiles) tables.push_back(make_table(profile.marginals, categories));

  Rng rng(seed);
  Eigen::MatrixXi codes(static_cast<Eigen::Index>(n_items),
                        static_cast<Eigen::Index>(profiles.size()));
  for (Eigen::Index i = 0; i < codes.rows(); ++i) {
    const int truth =
        truth_table.codes[static_cast<std::size_t>(rng.pick(truth_table.cumulative))];
    for (Eigen::Index j = 0; j < codes.cols(); ++j) {
      if (rng.next_unit() < *profiles[static_cast<std::size_t>(j)].accuracy) {
        codes(i, j) = truth;
      } else {
        const DrawTable& table = tables[static_cast<std::size_t>(j)];
        codes(i, j) = table.codes[static_cast<std::size_t>(rng.pick(table.cumulative))];
      }
    }
  }

  return AnnotationMatrix(sequence_names("u", n_items), sequence_names("c", profiles.size()),
                          std::move(codes), std::move(categories));
}

}  // namespace agree
