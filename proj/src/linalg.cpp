// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/linalg.hpp"

#include <algorithm>

#include <sstream>

#include "incalg/error.hpp"

namespace incalg {

Rational SparseVector::at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::add(std::size_t i, const Rational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(i, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
    if (factor.is_zero()) return;
    for (const auto& [i, v] : other.entries_) add(i, v * factor);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
    SparseVector out;
    out.add_scaled(*this, factor);
    return out;
}

std::string SparseVector::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [i, v] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << i << ':' << v;
    }
    os << '}';
    return os.str();
}

Rational SparseTensor::at(std::size_t i, std::size_t j) const {
    auto it = entries_.find(Key{i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseTensor::add(std::size_t i, std::size_t j, const Rational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(Key{i, j}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void SparseTensor::add_scaled(const SparseTensor& other, const Rational& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, v] : other.entries_) add(k.first, k.second, v * factor);
}

SparseTensor SparseTensor::scaled(const Rational& factor) const {
    SparseTensor out;
    out.add_scaled(*this, factor);
    return out;
}

SparseTensor SparseTensor::flipped() const {
    SparseTensor out;
    for (const auto& [k, v] : entries_) out.add(k.second, k.first, v);
    return out;
}

std::string SparseTensor::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << '(' << k.first << ',' << k.second << "):" << v;
    }
    os << '}';
    return os.str();
}

SparseTensor tensor_product(const SparseVector& a, const SparseVector& b) {
    SparseTensor t;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) t.add(i, j, x * y);
    return t;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SparseVector DenseMatrix::column(std::size_t c) const {
    SparseVector v;
    for (std::size_t r = 0; r < rows_; ++r) v.add(r, at(r, c));
    return v;
}

void DenseMatrix::set_column(std::size_t c, const SparseVector& v) {
    if (v.extent() > rows_) throw Error("dimension mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v.at(r);
}

SparseVector DenseMatrix::apply(const SparseVector& x) const {
    if (x.extent() > cols_) throw Error("dimension mismatch");
    SparseVector y;
    for (const auto& [c, v] : x)
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& m = at(r, c);
            if (!m.is_zero()) y.add(r, m * v);
        }
    return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const Rational& x = a.at(p, i);
            if (x.is_zero()) continue;
            for (std::size_t q = 0; q < b.rows(); ++q)
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    const Rational& y = b.at(q, j);
                    if (!y.is_zero()) out.at(p * b.rows() + q, i * b.cols() + j) = x * y;
                }
        }
    return out;
}

namespace {

// Reduces the rows in place to reduced row echelon form over the first
// `cols` columns; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.size();
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rational inv = m[r][c].inverse();
        support.clear();
        for (std::size_t j = c; j < m[r].size(); ++j) {
            if (m[r][j].is_zero()) continue;
            m[r][j] *= inv;
            support.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j : support) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<SparseVector> solve_linear(const DenseMatrix& a, const SparseVector& b) {
    if (b.extent() > a.rows()) throw Error("dimension mismatch");
    const std::size_t n = a.cols();
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
        m[i][n] = b.at(i);
    }
    auto pivots = row_reduce(m, n);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (!m[i][n].is_zero()) return std::nullopt;
    SparseVector x;
    for (std::size_t k = 0; k < pivots.size(); ++k) x.add(pivots[k], m[k][n]);
    return x;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
    std::size_t dim = 0;
    for (const auto& v : vectors) dim = std::max(dim, v.extent());
    // rows = vector coordinates, so the rank of the column set is unchanged
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(vectors.size()));
    for (std::size_t c = 0; c < vectors.size(); ++c)
        for (const auto& [r, v] : vectors[c]) m[r][c] = v;
    return row_reduce(m, vectors.size()).size();
}

}  // namespace incalg
