#pragma once

// Shared fixtures, generators, and brute-force oracles. The oracles stay
// deliberately naive — explicit loops over cells and pairs — so they check
// the library's closed forms through an independent route.

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "agree/annotation_matrix.hpp"
#include "agree/rng.hpp"
#include "agree/stats.hpp"

namespace agree::testing {

// Two coders, four items:
//   u1 A,A   u2 A,B   u3 B,B   u4 A,A
// pooled A 5/8, B 3/8; P(A) 3/4; P(E) 25/64+9/64 = 17/32
// kappa = (3/4 - 17/32) / (15/32) = 7/15
// nominal alpha: D_o 2/8 = 0.25, D_e 2*5*3/(8*7) = 30/56, alpha = 8/15
inline AnnotationMatrix m1() {
  return build_matrix({
      {"u1", "c1", "A"}, {"u1", "c2", "A"},
      {"u2", "c1", "A"}, {"u2", "c2", "B"},
      {"u3", "c1", "B"}, {"u3", "c2", "B"},
      {"u4", "c1", "A"}, {"u4", "c2", "A"},
  });
}

// Three coders, three items:
//   u1 Y,Y,Y   u2 Y,Y,N   u3 N,N,N
// pooled Y 5/9, N 4/9; P(A) = (3+1+3)/9 = 7/9; P(E) = 41/81
// kappa = (63/81 - 41/81) / (40/81) = 22/40 = 0.55
// expert c1: P(A) 5/6, P(E) 2/3*1/2 + 1/3*1/2 = 1/2, value 2/3
inline AnnotationMatrix m2() {
  return build_matrix({
      {"u1", "c1", "Y"}, {"u1", "c2", "Y"}, {"u1", "c3", "Y"},
      {"u2", "c1", "Y"}, {"u2", "c2", "Y"}, {"u2", "c3", "N"},
      {"u3", "c1", "N"}, {"u3", "c2", "N"}, {"u3", "c3", "N"},
  });
}

// m2 plus a fourth coder duplicating c1: full-panel kappa 23/35; removing
// the disagreeing c3 lifts kappa to 1, removing anyone else leaves 0.55.
inline AnnotationMatrix m2_plus_duplicate() {
  return build_matrix({
      {"u1", "c1", "Y"}, {"u1", "c2", "Y"}, {"u1", "c3", "Y"}, {"u1", "c4", "Y"},
      {"u2", "c1", "Y"}, {"u2", "c2", "Y"}, {"u2", "c3", "N"}, {"u2", "c4", "Y"},
      {"u3", "c1", "N"}, {"u3", "c2", "N"}, {"u3", "c3", "N"}, {"u3", "c4", "N"},
  });
}

struct MatrixOptions {
  std::size_t max_items = 12;
  std::size_t min_coders = 2;
  std::size_t max_coders = 5;
  std::size_t max_categories = 4;
  double missing_rate = 0.0;
};

// Random matrix with at least two categories in use (so kappa, pi, and
// nominal alpha are all defined). Deterministic in the rng state.
inline AnnotationMatrix random_matrix(Rng& rng, const MatrixOptions& options = {}) {
  const std::vector<std::string> alphabet = {"A", "B", "C", "D", "E", "F"};
  while (true) {
    const std::size_t n = 1 + rng.next_below(options.max_items);
    const std::size_t m =
        options.min_coders + rng.next_below(options.max_coders - options.min_coders + 1);
    const std::size_t k = 2 + rng.next_below(options.max_categories - 1);

    Eigen::MatrixXi codes(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < codes.rows(); ++i) {
      for (Eigen::Index j = 0; j < codes.cols(); ++j) {
        codes(i, j) = static_cast<int>(rng.next_below(k));
        if (options.missing_rate > 0.0 && rng.next_unit() < options.missing_rate) {
          codes(i, j) = AnnotationMatrix::kMissing;
        }
      }
    }

    // validity: >= 1 label per item, >= 2 categories in use overall
    std::vector<bool> used(k, false);
    bool rows_ok = true;
    for (Eigen::Index i = 0; i < codes.rows() && rows_ok; ++i) {
      bool any = false;
      for (Eigen::Index j = 0; j < codes.cols(); ++j) {
        if (codes(i, j) != AnnotationMatrix::kMissing) {
          any = true;
          used[static_cast<std::size_t>(codes(i, j))] = true;
        }
      }
      rows_ok = any;
    }
    if (!rows_ok) continue;
    std::size_t categories_used = 0;
    for (const bool u : used) categories_used += u ? 1 : 0;
    if (categories_used < 2) continue;

    std::vector<std::string> items, coders;
    for (std::size_t i = 1; i <= n; ++i) items.push_back("u" + std::to_string(i));
    for (std::size_t j = 1; j <= m; ++j) coders.push_back("c" + std::to_string(j));
    return AnnotationMatrix(std::move(items), std::move(coders), std::move(codes),
                            CategorySet(std::vector<std::string>(alphabet.begin(),
                                                                 alphabet.begin() + k)));
  }
}

// Oracle: P(A) by enumerating every unordered coder pair on every item.
inline double oracle_pairwise_agreement(const AnnotationMatrix& matrix) {
  const std::size_t m = matrix.n_coders();
  double total = 0.0;
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    std::size_t agreeing = 0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        ++pairs;
        if (matrix.code(i, a) == matrix.code(i, b)) ++agreeing;
      }
    }
    total += static_cast<double>(agreeing) / static_cast<double>(pairs);
  }
  return total / static_cast<double>(matrix.n_items());
}

// Oracle: alpha from an explicitly assembled coincidence matrix, looping
// over ordered pairs of distinct cells within each item.
inline double oracle_alpha(const AnnotationMatrix& matrix, const Eigen::MatrixXd& delta) {
  const Eigen::Index k = static_cast<Eigen::Index>(matrix.n_categories());
  Eigen::MatrixXd coincidence = Eigen::MatrixXd::Zero(k, k);
  double n = 0.0;
  for (std::size_t i = 0; i < matrix.n_items(); ++i) {
    std::vector<int> cells;
    for (std::size_t j = 0; j < matrix.n_coders(); ++j) {
      if (matrix.code(i, j) != AnnotationMatrix::kMissing) cells.push_back(matrix.code(i, j));
    }
    if (cells.size() < 2) continue;
    n += static_cast<double>(cells.size());
    const double weight = 1.0 / static_cast<double>(cells.size() - 1);
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (a != b) coincidence(cells[a], cells[b]) += weight;
      }
    }
  }

  double d_obs = 0.0;
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) d_obs += coincidence(a, b) * delta(a, b);
  }
  d_obs /= n;

  const Eigen::VectorXd pooled = coincidence.rowwise().sum();
  double d_exp = 0.0;
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) d_exp += pooled[a] * pooled[b] * delta(a, b);
  }
  d_exp /= n * (n - 1.0);

  return 1.0 - d_obs / d_exp;
}

inline double oracle_alpha_nominal(const AnnotationMatrix& matrix) {
  const Eigen::Index k = static_cast<Eigen::Index>(matrix.n_categories());
  const Eigen::MatrixXd delta = Eigen::MatrixXd::Ones(k, k) - Eigen::MatrixXd::Identity(k, k);
  return oracle_alpha(matrix, delta);
}

// Oracle: two-coder expert kappa straight from the confusion counts.
inline double oracle_expert_kappa_two_coders(const AnnotationMatrix& matrix,
                                             std::size_t expert_column) {
  const std::size_t naive_column = 1 - expert_column;
  const std::size_t n = matrix.n_items();
  const std::size_t k = matrix.n_categories();
  std::vector<double> expert_marginal(k, 0.0), naive_marginal(k, 0.0);
  double agree = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int e = matrix.code(i, expert_column);
    const int v = matrix.code(i, naive_column);
    expert_marginal[static_cast<std::size_t>(e)] += 1.0;
    naive_marginal[static_cast<std::size_t>(v)] += 1.0;
    if (e == v) agree += 1.0;
  }
  const double pa = agree / static_cast<double>(n);
  double pe = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    pe += (expert_marginal[c] / n) * (naive_marginal[c] / n);
  }
  return (pa - pe) / (1.0 - pe);
}

}  // namespace agree::testing
