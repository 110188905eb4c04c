#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agree/annotation_matrix.hpp"

namespace agree {

/// Label distribution of one simulated coder. `accuracy` only applies when
/// simulating against a latent truth: it is the chance of echoing the true
/// label instead of drawing from the marginals.
struct CoderProfile {
  std::vector<std::pair<std::string, double>> marginals;  // label -> probability
  std::optional<double> accuracy;
};

/// Complete matrix with every cell drawn independently from its coder's
/// marginals. Items are "u1".."uN", coders "c1".."cm". One mt19937_64
/// stream seeded with `seed`, consumed item-major then coder-minor.
AnnotationMatrix simulate_coders(std::size_t n_items, const std::vector<CoderProfile>& profiles,
                                 std::uint64_t seed);

/// Mean observed agreement over `replicates` independent simulations;
/// replicate r runs simulate_coders with derive_seed(seed, r). Empirical
/// oracle for expected_agreement.
double monte_carlo_pe(const std::vector<CoderProfile>& profiles, std::size_t n_items,
                      std::size_t replicates, std::uint64_t seed);

/// Per item, a latent true label is drawn from `truth_marginals`; each coder
/// reports it with probability accuracy and otherwise draws from its own
/// marginals. Draw order per item: truth, then per coder an accuracy draw
/// followed (only on a miss) by a label draw.
AnnotationMatrix simulate_with_truth(std::size_t n_items,
                                     const std::vector<std::pair<std::string, double>>& truth_marginals,
                                     const std::vector<CoderProfile>& profiles,
                                     std::uint64_t seed);

}  // namespace agree
