#include "gdss/mcda/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gdss/core/error.hpp"

namespace gdss::mcda {
namespace {

// Accepts a judgment within the ingest tolerance of the scale and snaps it
// onto [1/9, 9].
double clamp_to_scale(double v, std::size_t i, std::size_t j) {
  if (v < kSaatyMin * (1.0 - kIngestTolerance) || v > kSaatyMax * (1.0 + kIngestTolerance)) {
    std::ostringstream msg;
    msg << "judgment (" << i << "," << j << ") = " << v << " is outside the Saaty range [1/9, 9]";
    throw Error(ErrorCode::OutOfSaatyRange, msg.str());
  }
  return std::clamp(v, kSaatyMin, kSaatyMax);
}

std::vector<double> build(std::size_t n, std::span<const double> upper) {
  std::vector<double> entries(n * n, 1.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      entries[i * n + j] = upper[k];
      entries[j * n + i] = 1.0 / upper[k];
    }
  }
  return entries;
}

}  // namespace

std::vector<std::vector<double>> PairwiseMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    rows[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return rows;
}

std::vector<double> PairwiseMatrix::upper_triangle() const {
  std::vector<double> out;
  out.reserve(order_ * (order_ - 1) / 2);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

PairwiseMatrix canonicalize_pairwise(const std::vector<std::vector<double>>& raw) {
  const std::size_t n = raw.size();
  if (n < 2) throw Error(ErrorCode::NonSquare, "a pairwise matrix needs order >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(raw[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(raw[i][j] > 0.0) || !std::isfinite(raw[i][j])) {
        throw Error(ErrorCode::NonPositiveEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be positive");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw[i][i] - 1.0) > kIngestTolerance) {
      std::ostringstream msg;
      msg << "diagonal entry (" << i << "," << i << ") = " << raw[i][i] << " must be 1";
      throw Error(ErrorCode::ReciprocityViolation, msg.str());
    }
  }

  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      upper.push_back(clamp_to_scale(raw[i][j], i, j));
      const double deviation = std::abs(raw[i][j] * raw[j][i] - 1.0);
      if (deviation > worst) {
        worst = deviation;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > kIngestTolerance) {
    std::ostringstream msg;
    msg << "pair (" << wi << "," << wj << ") is not reciprocal: " << raw[wi][wj] << " * "
        << raw[wj][wi] << " = " << raw[wi][wj] * raw[wj][wi];
    throw Error(ErrorCode::ReciprocityViolation, msg.str());
  }
  return PairwiseMatrix(n, build(n, upper));
}

PairwiseMatrix pairwise_from_upper_triangle(std::span<const double> upper) {
  std::size_t n = 2;
  while (n * (n - 1) / 2 < upper.size()) ++n;
  if (upper.empty() || n * (n - 1) / 2 != upper.size()) {
    throw Error(ErrorCode::NonSquare, std::to_string(upper.size()) +
                                          " judgments do not form the upper triangle of a square matrix");
  }
  std::vector<double> clamped(upper.begin(), upper.end());
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (!(clamped[k] > 0.0) || !std::isfinite(clamped[k])) {
        throw Error(ErrorCode::NonPositiveEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be positive");
      }
      clamped[k] = clamp_to_scale(clamped[k], i, j);
    }
  }
  return PairwiseMatrix(n, build(n, clamped));
}

PairwiseMatrix uniform_pairwise(std::size_t order) {
  std::vector<double> ones(order * (order - 1) / 2, 1.0);
  return pairwise_from_upper_triangle(ones);
}

}  // namespace gdss::mcda
