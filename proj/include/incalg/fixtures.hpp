// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_FIXTURES_HPP
#define INCALG_FIXTURES_HPP

#include <cstddef>

#include "incalg/algebra.hpp"

namespace incalg {

/// Quaternions over the basis {1, i, j, k} (indices 0..3), with the
/// diagonal coalgebra of that basis: Delta(b) = b (x) b, eps(b) = 1.
FiniteBialgebra quaternion_fixture();

/// M_n over the matrix units B_{i,j} (index i * n + j):
/// B_{i,j} B_{k,l} = delta_{j,k} B_{i,l}, unit = sum_i B_{i,i},
/// Delta(B_{i,j}) = sum_k B_{i,k} (x) B_{k,j}, eps(B_{i,j}) = delta_{i,j}.
/// Requires 1 <= n <= 6.
FiniteBialgebra matrix_bialgebra(std::size_t n);

/// The two-dimensional coalgebra on {1, i}: Delta(1) = 1(x)1 - i(x)i,
/// Delta(i) = 1(x)i + i(x)1, eps(1) = 1, eps(i) = 0.
FiniteCoalgebra complex_coalgebra_fixture();

/// Delta(e_k) = e_k (x) e_k and eps(e_k) = 1 on a basis of size dim.
FiniteCoalgebra diagonal_coalgebra(std::size_t dim);

}  // namespace incalg

#endif
