// polydecomp.hpp
// Exact-rational polynomial algebra on the cube space C[z_1..z_k]_{<=2,..,2}:
// the boundary polynomial P_k, shuffle maps L_{r,k}, SH_k membership and
// dimension, the C_{r,k} coefficient identity (dual path: closed form vs
// extraction), and constructive BD_k decompositions by exact linear solve.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>
#include "rwre/rational.hpp"

namespace rwre {

using cplx = std::complex<double>;

// Polynomial with exponents componentwise <= 2, sparse over base-3 encoded
// exponent vectors: digit j of the key is the exponent of z_{j+1}.
struct CubePoly {
    int k = 0;
    std::map<uint32_t, Rat> coeff;   // no zero entries

    void add(uint32_t idx, const Rat& v);
    Rat get(uint32_t idx) const;
};

uint32_t pow3(int k);
int cube_digit(uint32_t idx, int j);                 // exponent of z_{j+1}
uint32_t cube_index(const std::vector<int>& exps);   // exps[j] in {0,1,2}

// Product of two cube polynomials; throws if any exponent exceeds 2.
CubePoly cube_mul(const CubePoly& a, const CubePoly& b);

// Numeric evaluation (testing bridge to the contour integrals).
cplx eval_cube(const CubePoly& p, const std::vector<cplx>& z);

// P_k(z) = prod z_i^2 - (prod (z_i - mu)) sum_i binom(k,i)
//          (mu)_i (eta)_{k-i} / (eta+mu)_k prod_{l<=k-i}(z_l+mu)
//          prod_{j>k-i} z_j.  k <= 6.
CubePoly build_pk(int k, const Rat& mu, const Rat& eta);

// L_{r,k}(p): sum over the C(k,r) shuffles placing the constants
// -eta, -eta-1, ..., -eta-k+r+1 (in order) at the chosen k-r positions and
// x_1..x_r (in order) at the rest. Result lives in r variables.
CubePoly shuffle_map(const CubePoly& p, int r, const Rat& eta);

// true iff [x_1^2...x_r^2] L_{r,k}(p) = 0 exactly for all 0 <= r <= k;
// per_r (optional) receives the k+1 extracted coefficients.
bool sh_membership(const CubePoly& p, const Rat& eta, std::vector<Rat>* per_r = nullptr);

// Closed-form C_{r,k}; equals [x_1^2...x_r^2] L_{r,k}(P_k) and vanishes
// identically in (mu, eta). 0 <= r <= k <= 8.
Rat c_rk(int k, int r, const Rat& mu, const Rat& eta);

// Boundary decomposition p = (z_1+eta) F_1 + sum_i (z_{i-1}-z_i-1) F_i with
// F_1 of z_1-degree 0 and F_i symmetric of degree <= 1 in z_{i-1}, z_i.
struct DecompositionWitness {
    std::vector<CubePoly> F;   // F[i-1] = F_i, each a k-variable cube poly
};
std::optional<DecompositionWitness> bd_decompose(const CubePoly& p, const Rat& eta);

// Recombine a witness into the decomposed polynomial (residual check).
CubePoly recombine(const DecompositionWitness& w, const Rat& eta);

// dim SH_k = 3^k - rank of the k+1 coefficient functionals (= 3^k - k - 1).
size_t sh_dimension(int k, const Rat& eta);

// dim BD_k = rank of the generator matrix (equals sh_dimension by Thm 3.3).
size_t bd_dimension(int k, const Rat& eta);

// Monomial index sets: W_k = {(2,..,2)} plus the k points with one
// coordinate lowered to 1; L_k^i = monomials with z_k-exponent i.
std::vector<uint32_t> w_set(int k);
std::vector<uint32_t> l_set(int k, int i);
// Append a fixed z_k exponent to a (k-1)-variable monomial index.
uint32_t extend_index(uint32_t idx_km1, int last_digit, int k);

// Feasibility of p in BD_k + span{monomials}; exact augmented solve.
bool decompose_with_span(const CubePoly& p, const Rat& eta,
                         const std::vector<uint32_t>& span_monomials);

// Random integer combination of the BD_k generating set (deterministic in
// the seed); coefficients in [-range, range].
CubePoly random_bd_element(int k, const Rat& eta, uint64_t seed, int range = 9);

} // namespace rwre
