#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gdss::mcda {

inline constexpr double kSaatyMin = 1.0 / 9.0;
inline constexpr double kSaatyMax = 9.0;
/// Relative slack allowed on ingest, both for reciprocity (a_ij * a_ji) and for
/// rounded scale bounds such as 0.11 standing in for 1/9.
inline constexpr double kIngestTolerance = 0.05;

/// Reciprocal Saaty comparison matrix in canonical form: unit diagonal,
/// upper triangle within [1/9, 9], lower triangle holding 1.0 / upper.
/// Only obtainable through the factories below.
class PairwiseMatrix {
 public:
  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  std::vector<std::vector<double>> to_rows() const;
  /// Row-major upper triangle (i < j), the legacy file representation.
  std::vector<double> upper_triangle() const;

  bool operator==(const PairwiseMatrix&) const = default;

  friend PairwiseMatrix canonicalize_pairwise(const std::vector<std::vector<double>>& raw);
  friend PairwiseMatrix pairwise_from_upper_triangle(std::span<const double> upper);

 private:
  PairwiseMatrix(std::size_t order, std::vector<double> entries)
      : order_(order), entries_(std::move(entries)) {}

  std::size_t order_ = 0;
  std::vector<double> entries_;
};

/// Validates a full judgment grid and rebuilds it from its upper triangle.
/// Throws NonSquare, NonPositiveEntry, OutOfSaatyRange or ReciprocityViolation
/// (the message names the worst pair).
PairwiseMatrix canonicalize_pairwise(const std::vector<std::vector<double>>& raw);

/// Builds a matrix from n(n-1)/2 row-major upper-triangle judgments.
PairwiseMatrix pairwise_from_upper_triangle(std::span<const double> upper);

/// Identity-like matrix of the given order (every judgment 1).
PairwiseMatrix uniform_pairwise(std::size_t order);

}  // namespace gdss::mcda
