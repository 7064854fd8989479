// pfaffian.hpp
// Finite Pfaffians of complex skew-symmetric matrices: Parlett-Reid style
// skew elimination with column pivoting for production use, plus the naive
// first-row expansion kept as a small-size test oracle.
#pragma once

#include <complex>
#include <vector>

namespace rwre {

using cplx = std::complex<double>;
using CMat = std::vector<std::vector<cplx>>;

// Pf(A) for even-dimensional skew A (upper triangle is trusted; the lower
// triangle is not read). Throws on odd dimension.
cplx pfaffian(CMat A);

// Recursive first-row expansion Pf(A) = sum_j (-1)^j a_{1j} Pf(A_{1^,j^});
// exponential cost, intended for dimensions <= 8.
cplx pfaffian_naive(const CMat& A);

// det(A) by LU with partial pivoting (test helper for Pf^2 = det).
cplx cdet(CMat A);

} // namespace rwre
