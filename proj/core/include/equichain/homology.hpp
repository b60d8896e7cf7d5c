#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equichain/complex.hpp"

namespace equichain {

/// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Integer& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntegerMatrix transpose() const;
  bool is_zero() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Invariant factors d1 | d2 | ... | dr (all positive) with r the rank.
/// With certification, U A V = diag(d1, ..., dr, 0, ...) for unimodular U, V.
struct SmithForm {
  std::vector<Integer> factors;
  int rank = 0;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

SmithForm smith_normal_form(const IntegerMatrix& a, bool certify = false);

/// Z^rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti >= 2.
struct AbelianGroup {
  int rank = 0;
  std::vector<Integer> torsion;

  std::string to_string() const;  // "0", "Z", "Z/2", "Z^2 + Z/2 + Z/4", ...
  std::string json() const;       // {"rank": r, "torsion": [..]}
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) = default;
};

AbelianGroup free_group(int rank);
AbelianGroup cyclic_group(const Integer& order);

/// A finite Z-complex as matrices: d[k] : C_k -> C_{k-1} has ranks[k-1]
/// rows and ranks[k] columns (d[0] is the zero map to nothing).
struct ChainMatrices {
  std::vector<int> ranks;
  std::vector<IntegerMatrix> d;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  /// d_{k} d_{k+1} = 0 for all k; nullopt when it holds.
  std::optional<std::string> check_square_zero() const;
};

/// Z (x)_ZG N in degrees 0..max_degree+1: module basis cells become Z-basis
/// elements and each ring generator collapses to its augmentation.
ChainMatrices quotient_by_group(const ChainComplex& complex, int max_degree);

/// A complex with a Z-basis in degrees 0..max_degree+1, as matrices.
ChainMatrices complex_matrices(const ChainComplex& complex, int max_degree);

/// H_k = ker d_k / im d_{k+1}, for k <= top - 1.
AbelianGroup homology_group(const ChainMatrices& c, int k);
/// H^k of Hom(C, Z), for k <= top - 1.
AbelianGroup cohomology_group(const ChainMatrices& c, int k);

std::vector<AbelianGroup> homology_groups(const ChainMatrices& c, int max_degree);
std::vector<AbelianGroup> cohomology_groups(const ChainMatrices& c, int max_degree);

}  // namespace equichain
