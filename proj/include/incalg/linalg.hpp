// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_LINALG_HPP
#define INCALG_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incalg/rational.hpp"

namespace incalg {

/// Finitely supported vector over an indexed basis. Zero entries are never
/// stored, so two vectors are equal iff their maps are equal.
class SparseVector {
public:
    using Map = std::map<std::size_t, Rational>;

    SparseVector() = default;

    static SparseVector basis(std::size_t i) {
        SparseVector v;
        v.entries_.emplace(i, Rational(1));
        return v;
    }

    Rational at(std::size_t i) const;
    void add(std::size_t i, const Rational& value);
    void add_scaled(const SparseVector& other, const Rational& factor);
    SparseVector scaled(const Rational& factor) const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    /// One past the largest stored index, zero for the zero vector.
    std::size_t extent() const { return entries_.empty() ? 0 : entries_.rbegin()->first + 1; }

    Map::const_iterator begin() const { return entries_.begin(); }
    Map::const_iterator end() const { return entries_.end(); }
    const Map& entries() const { return entries_; }

    /// "{0:1, 3:-1/2}"
    std::string str() const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    Map entries_;
};

/// Element of V (x) V with the basis of pairs (i, j).
class SparseTensor {
public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Map = std::map<Key, Rational>;

    SparseTensor() = default;

    static SparseTensor basis(std::size_t i, std::size_t j) {
        SparseTensor t;
        t.entries_.emplace(Key{i, j}, Rational(1));
        return t;
    }

    Rational at(std::size_t i, std::size_t j) const;
    void add(std::size_t i, std::size_t j, const Rational& value);
    void add_scaled(const SparseTensor& other, const Rational& factor);
    SparseTensor scaled(const Rational& factor) const;
    /// t(i,j) -> t(j,i)
    SparseTensor flipped() const;

    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    Map::const_iterator begin() const { return entries_.begin(); }
    Map::const_iterator end() const { return entries_.end(); }

    /// "{(0,0):1, (1,2):-1}"
    std::string str() const;

    friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

private:
    Map entries_;
};

SparseTensor tensor_product(const SparseVector& a, const SparseVector& b);

/// Row-major dense matrix of rationals.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

    SparseVector column(std::size_t c) const;
    void set_column(std::size_t c, const SparseVector& v);

    SparseVector apply(const SparseVector& x) const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> cells_;
};

/// Kronecker product; with columns as images of basis vectors this is the
/// matrix of f (x) g in the row-major pair basis (i, j) -> i * dim(g) + j.
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Solves A x = b exactly by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row. Returns
/// nullopt for inconsistent systems; free variables are set to zero.
std::optional<SparseVector> solve_linear(const DenseMatrix& a, const SparseVector& b);

/// Rank of the given vectors (as columns) over Q.
std::size_t rank(const std::vector<SparseVector>& vectors);

}  // namespace incalg

#endif
