#pragma once

/// @file tensor.hpp
/// Sparse complex tensors of arbitrary arity, dense complex matrices, and
/// tensor contraction. These are the two coefficient containers used by all
/// algebraic structures: multiplication/comultiplication are arity-3 sparse
/// tensors, while structure maps (antipode, star, Nakayama, Gram) are dense
/// matrices.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "cqg/core.hpp"

namespace cqg {

/// Coordinate vector over the canonical basis.
using Vec = std::vector<Complex>;

/// Sparse entry list for a vector: (basis index, coefficient) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Complex>>;

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

/// A sparse tensor with explicit shape. Entries are kept in an ordered map
/// keyed by the multi-index, so iteration order (and therefore every
/// serialization and report built from it) is deterministic.
class SparseTensor {
 public:
  using Index = std::vector<std::uint32_t>;
  using Map = std::map<Index, Complex>;

  SparseTensor() = default;

  explicit SparseTensor(std::vector<std::uint32_t> dims) : dims_(std::move(dims)) {}

  const std::vector<std::uint32_t>& dims() const { return dims_; }
  std::size_t arity() const { return dims_.size(); }
  const Map& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  void check_index(const Index& idx) const {
    require(idx.size() == dims_.size(), Errc::kDimensionMismatch,
            "tensor index arity mismatch");
    for (std::size_t a = 0; a < idx.size(); ++a)
      require(idx[a] < dims_[a], Errc::kDimensionMismatch,
              "tensor index out of range");
  }

  /// Accumulates @p value at @p idx. Entries that cancel to (numerically)
  /// zero are removed immediately so the container never accumulates noise.
  void add(const Index& idx, Complex value) {
    check_index(idx);
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) it->second += value;
    if (std::abs(it->second) <= thresholds::kPrune) entries_.erase(it);
  }

  void set(const Index& idx, Complex value) {
    check_index(idx);
    if (std::abs(value) <= thresholds::kPrune) {
      entries_.erase(idx);
    } else {
      entries_[idx] = value;
    }
  }

  Complex at(const Index& idx) const {
    check_index(idx);
    const auto it = entries_.find(idx);
    return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
  }

  /// Drops all entries with modulus at or below @p threshold.
  void prune(double threshold = thresholds::kPrune) {
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (std::abs(it->second) <= threshold) {
        it = entries_.erase(it);
      } else {
        ++it;
      }
    }
  }

  SparseTensor scaled(Complex lambda) const {
    SparseTensor out(dims_);
    for (const auto& [idx, v] : entries_) out.add(idx, lambda * v);
    return out;
  }

  SparseTensor plus(const SparseTensor& o) const {
    require(dims_ == o.dims_, Errc::kDimensionMismatch, "tensor sum shape mismatch");
    SparseTensor out = *this;
    for (const auto& [idx, v] : o.entries_) out.add(idx, v);
    return out;
  }

  /// Largest entry-wise |a - b| over the union of supports.
  double max_abs_diff(const SparseTensor& o) const {
    require(dims_ == o.dims_, Errc::kDimensionMismatch, "tensor diff shape mismatch");
    double m = 0.0;
    for (const auto& [idx, v] : entries_) m = std::max(m, std::abs(v - o.at(idx)));
    for (const auto& [idx, v] : o.entries_) m = std::max(m, std::abs(at(idx) - v));
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [idx, v] : entries_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::vector<std::uint32_t> dims_;
  Map entries_;
};

/// Contracts @p a with @p b along the axis pairs in @p axes (axis of a,
/// axis of b). Remaining axes of a come first in the result, then remaining
/// axes of b. Complexity is O(nnz(a) * nnz(b)) which is fine at the sizes
/// this library works with; hot loops elsewhere use purpose-built kernels.
inline SparseTensor contract(
    const SparseTensor& a, const SparseTensor& b,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& axes) {
  std::vector<bool> a_contracted(a.arity(), false);
  std::vector<bool> b_contracted(b.arity(), false);
  for (const auto& [ax, bx] : axes) {
    require(ax < a.arity() && bx < b.arity(), Errc::kDimensionMismatch,
            "contraction axis out of range");
    require(!a_contracted[ax] && !b_contracted[bx], Errc::kDimensionMismatch,
            "contraction axis repeated");
    require(a.dims()[ax] == b.dims()[bx], Errc::kDimensionMismatch,
            "contracted axes have different lengths");
    a_contracted[ax] = true;
    b_contracted[bx] = true;
  }

  std::vector<std::uint32_t> out_dims;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!a_contracted[i]) out_dims.push_back(a.dims()[i]);
  for (std::size_t i = 0; i < b.arity(); ++i)
    if (!b_contracted[i]) out_dims.push_back(b.dims()[i]);

  SparseTensor out(out_dims);
  SparseTensor::Index out_idx(out_dims.size());
  for (const auto& [ia, va] : a.entries()) {
    for (const auto& [ib, vb] : b.entries()) {
      bool match = true;
      for (const auto& [ax, bx] : axes) {
        if (ia[ax] != ib[bx]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      std::size_t k = 0;
      for (std::size_t i = 0; i < ia.size(); ++i)
        if (!a_contracted[i]) out_idx[k++] = ia[i];
      for (std::size_t i = 0; i < ib.size(); ++i)
        if (!b_contracted[i]) out_idx[k++] = ib[i];
      out.add(out_idx, va * vb);
    }
  }
  return out;
}

/// Dense complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::uint32_t rows, std::uint32_t cols)
      : rows_(rows), cols_(cols), data_(std::size_t{rows} * cols, Complex(0.0, 0.0)) {}

  static DenseMatrix identity(std::uint32_t n) {
    DenseMatrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
  }

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  Complex& operator()(std::uint32_t r, std::uint32_t c) {
    return data_[std::size_t{r} * cols_ + c];
  }
  const Complex& operator()(std::uint32_t r, std::uint32_t c) const {
    return data_[std::size_t{r} * cols_ + c];
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  DenseMatrix operator*(const DenseMatrix& o) const {
    require(cols_ == o.rows_, Errc::kDimensionMismatch, "matrix product shape mismatch");
    DenseMatrix out(rows_, o.cols_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
      for (std::uint32_t k = 0; k < cols_; ++k) {
        const Complex aik = (*this)(i, k);
        if (aik == Complex(0.0, 0.0)) continue;
        const Complex* brow = &o.data_[std::size_t{k} * o.cols_];
        Complex* orow = &out.data_[std::size_t{i} * o.cols_];
        for (std::uint32_t j = 0; j < o.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  DenseMatrix operator+(const DenseMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::kDimensionMismatch,
            "matrix sum shape mismatch");
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }

  DenseMatrix operator-(const DenseMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::kDimensionMismatch,
            "matrix difference shape mismatch");
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }

  DenseMatrix scaled(Complex lambda) const {
    DenseMatrix out = *this;
    for (Complex& z : out.data_) z *= lambda;
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::uint32_t i = 0; i < rows_; ++i)
      for (std::uint32_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  DenseMatrix conjugate() const {
    DenseMatrix out = *this;
    for (Complex& z : out.data_) z = std::conj(z);
    return out;
  }

  DenseMatrix adjoint() const { return transpose().conjugate(); }

  /// Matrix-vector product (column convention: vectors are coordinate
  /// columns, matrices act on the left).
  Vec apply(const Vec& v) const {
    require(v.size() == cols_, Errc::kDimensionMismatch, "matrix apply shape mismatch");
    Vec out(rows_, Complex(0.0, 0.0));
    for (std::uint32_t i = 0; i < rows_; ++i) {
      Complex acc(0.0, 0.0);
      const Complex* row = &data_[std::size_t{i} * cols_];
      for (std::uint32_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  double max_abs_diff(const DenseMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::kDimensionMismatch,
            "matrix diff shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      m = std::max(m, std::abs(data_[i] - o.data_[i]));
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  bool is_square() const { return rows_ == cols_; }

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<Complex> data_;
};

}  // namespace cqg
