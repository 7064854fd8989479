// polydecomp.cpp — exact cube-polynomial algebra and BD/SH machinery.
#include "rwre/polydecomp.hpp"

#include <array>
#include <stdexcept>

namespace rwre {

namespace {

// Deterministic 64-bit mixer for random generator combinations.
uint64_t mix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Enumerate all (k-r)-element subsets of {0..k-1} as sorted index lists.
void subsets_rec(int k, int need, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == need) { out.push_back(cur); return; }
    for (int i = start; i <= k - (need - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_rec(k, need, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int k, int need) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(k, need, 0, cur, out);
    return out;
}

// The BD_k generating set, in a fixed order:
//   block 1: (z_1 + eta) * m for the 3^{k-1} monomials m in z_2..z_k;
//   block i (2..k): (z_{i-1} - z_i - 1) * s * m for s in
//                   {1, z_{i-1}+z_i, z_{i-1} z_i} and m over the other vars.
std::vector<CubePoly> bd_generators(int k, const Rat& eta) {
    if (k < 1 || k > 6) throw std::invalid_argument("bd_generators: k must be 1..6");
    std::vector<CubePoly> gens;
    gens.reserve(static_cast<size_t>(k) * pow3(k - 1));

    // Block 1.
    for (uint32_t m = 0; m < pow3(k - 1); ++m) {
        const uint32_t base = m * 3;   // shift exponents onto z_2..z_k
        CubePoly g;
        g.k = k;
        g.add(base + 1, 1);            // z_1 * m
        g.add(base, eta);              // eta * m
        gens.push_back(std::move(g));
    }

    // Blocks 2..k. Expand (a - b - 1) * s in a = z_{i-1}, b = z_i.
    // Entries are (exp_a, exp_b, coeff).
    struct Term { int ea, eb; Rat c; };
    const std::vector<std::vector<Term>> sym = {
        {{1, 0, 1}, {0, 1, -1}, {0, 0, -1}},                       // s = 1
        {{2, 0, 1}, {0, 2, -1}, {1, 0, -1}, {0, 1, -1}},           // s = a + b
        {{2, 1, 1}, {1, 2, -1}, {1, 1, -1}},                       // s = a b
    };
    for (int i = 2; i <= k; ++i) {
        const int pa = i - 2, pb = i - 1;   // 0-based variable positions
        // Monomials over the other k-2 variables.
        std::vector<int> others;
        for (int j = 0; j < k; ++j)
            if (j != pa && j != pb) others.push_back(j);
        const uint32_t nm = pow3(static_cast<int>(others.size()));
        for (const auto& s : sym) {
            for (uint32_t m = 0; m < nm; ++m) {
                CubePoly g;
                g.k = k;
                uint32_t base = 0;
                uint32_t mm = m;
                for (int j : others) {
                    base += static_cast<uint32_t>(mm % 3) * pow3(j);
                    mm /= 3;
                }
                for (const Term& t : s)
                    g.add(base + static_cast<uint32_t>(t.ea) * pow3(pa) +
                              static_cast<uint32_t>(t.eb) * pow3(pb),
                          t.c);
                gens.push_back(std::move(g));
            }
        }
    }
    return gens;
}

// Dense coefficient vector of p over the 3^k monomial basis.
RatVec dense(const CubePoly& p) {
    RatVec v(pow3(p.k), Rat(0));
    for (const auto& [idx, c] : p.coeff) v[idx] = c;
    return v;
}

// Column matrix of the generators (rows = monomials, cols = generators).
RatMat generator_matrix(const std::vector<CubePoly>& gens, int k) {
    const size_t rows = pow3(k);
    RatMat A(rows, RatVec(gens.size(), Rat(0)));
    for (size_t c = 0; c < gens.size(); ++c)
        for (const auto& [idx, v] : gens[c].coeff) A[idx][c] = v;
    return A;
}

} // namespace

void CubePoly::add(uint32_t idx, const Rat& v) {
    if (v == 0) return;
    auto it = coeff.find(idx);
    if (it == coeff.end()) {
        coeff.emplace(idx, v);
    } else {
        it->second += v;
        if (it->second == 0) coeff.erase(it);
    }
}

Rat CubePoly::get(uint32_t idx) const {
    auto it = coeff.find(idx);
    return it == coeff.end() ? Rat(0) : it->second;
}

uint32_t pow3(int k) {
    uint32_t p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

int cube_digit(uint32_t idx, int j) {
    for (int i = 0; i < j; ++i) idx /= 3;
    return static_cast<int>(idx % 3);
}

uint32_t cube_index(const std::vector<int>& exps) {
    uint32_t idx = 0;
    for (size_t j = exps.size(); j-- > 0;) {
        if (exps[j] < 0 || exps[j] > 2) throw std::invalid_argument("cube_index: exponent out of range");
        idx = idx * 3 + static_cast<uint32_t>(exps[j]);
    }
    return idx;
}

CubePoly cube_mul(const CubePoly& a, const CubePoly& b) {
    if (a.k != b.k) throw std::invalid_argument("cube_mul: variable count mismatch");
    CubePoly r;
    r.k = a.k;
    for (const auto& [ia, ca] : a.coeff)
        for (const auto& [ib, cb] : b.coeff) {
            uint32_t idx = 0;
            for (int j = a.k; j-- > 0;) {
                const int d = cube_digit(ia, j) + cube_digit(ib, j);
                if (d > 2) throw std::invalid_argument("cube_mul: exponent exceeds 2");
                idx = idx * 3 + static_cast<uint32_t>(d);
            }
            r.add(idx, ca * cb);
        }
    return r;
}

cplx eval_cube(const CubePoly& p, const std::vector<cplx>& z) {
    if (static_cast<int>(z.size()) != p.k) throw std::invalid_argument("eval_cube: arity mismatch");
    cplx sum = 0.0;
    for (const auto& [idx, c] : p.coeff) {
        cplx m = static_cast<double>(c);
        for (int j = 0; j < p.k; ++j)
            for (int d = 0; d < cube_digit(idx, j); ++d) m *= z[static_cast<size_t>(j)];
        sum += m;
    }
    return sum;
}

CubePoly build_pk(int k, const Rat& mu, const Rat& eta) {
    if (k < 1 || k > 6) throw std::invalid_argument("build_pk: k must be 1..6");
    CubePoly p;
    p.k = k;
    p.add(pow3(k) - 1, 1);   // prod z_i^2 (all digits 2)

    const Rat denom = rat_pochhammer(eta + mu, k);
    for (int i = 0; i <= k; ++i) {
        const Rat w = rat_binomial(k, i) * rat_pochhammer(mu, i) *
                      rat_pochhammer(eta, k - i) / denom;
        // Per-variable quadratic (z - mu)(z + mu) for l <= k-i, (z - mu) z after.
        // coeffs[d] = coefficient of z^d.
        std::vector<std::array<Rat, 3>> fac(static_cast<size_t>(k));
        for (int l = 1; l <= k; ++l) {
            if (l <= k - i) fac[static_cast<size_t>(l - 1)] = {-mu * mu, Rat(0), Rat(1)};
            else            fac[static_cast<size_t>(l - 1)] = {Rat(0), -mu, Rat(1)};
        }
        // Tensor expansion.
        std::vector<int> exps(static_cast<size_t>(k), 0);
        auto rec = [&](auto&& self, int j, const Rat& c) -> void {
            if (c == 0) return;
            if (j == k) { p.add(cube_index(exps), -w * c); return; }
            for (int d = 0; d < 3; ++d) {
                if (fac[static_cast<size_t>(j)][static_cast<size_t>(d)] == 0) continue;
                exps[static_cast<size_t>(j)] = d;
                self(self, j + 1, c * fac[static_cast<size_t>(j)][static_cast<size_t>(d)]);
            }
            exps[static_cast<size_t>(j)] = 0;
        };
        rec(rec, 0, Rat(1));
    }
    return p;
}

CubePoly shuffle_map(const CubePoly& p, int r, const Rat& eta) {
    const int k = p.k;
    if (r < 0 || r > k) throw std::invalid_argument("shuffle_map: need 0 <= r <= k");
    CubePoly out;
    out.k = r;
    for (const auto& S : subsets(k, k - r)) {
        // Constants -eta, -eta-1, ... at positions S (ascending); variables
        // x_1..x_r in order at the complement.
        std::vector<Rat> cval(static_cast<size_t>(k));      // per position, if constant
        std::vector<int> varpos(static_cast<size_t>(k), -1); // x-slot, if variable
        {
            size_t ci = 0;
            int vi = 0;
            for (int j = 0; j < k; ++j) {
                if (ci < S.size() && S[ci] == j) { cval[static_cast<size_t>(j)] = -eta - static_cast<int>(ci); ++ci; }
                else varpos[static_cast<size_t>(j)] = vi++;
            }
        }
        for (const auto& [idx, c] : p.coeff) {
            Rat v = c;
            uint32_t xidx = 0;
            for (int j = 0; j < k; ++j) {
                const int d = cube_digit(idx, j);
                if (varpos[static_cast<size_t>(j)] < 0) {
                    for (int m = 0; m < d; ++m) v *= cval[static_cast<size_t>(j)];
                } else {
                    xidx += static_cast<uint32_t>(d) * pow3(varpos[static_cast<size_t>(j)]);
                }
            }
            out.add(xidx, v);
        }
    }
    return out;
}

bool sh_membership(const CubePoly& p, const Rat& eta, std::vector<Rat>* per_r) {
    if (per_r) per_r->clear();
    bool ok = true;
    for (int r = 0; r <= p.k; ++r) {
        const CubePoly q = shuffle_map(p, r, eta);
        const Rat v = q.get(pow3(r) - 1);   // coefficient of x_1^2 ... x_r^2
        if (per_r) per_r->push_back(v);
        if (v != 0) ok = false;
    }
    return ok;
}

Rat c_rk(int k, int r, const Rat& mu, const Rat& eta) {
    if (r < 0 || r > k || k > 8) throw std::invalid_argument("c_rk: need 0 <= r <= k <= 8");
    const Rat first = rat_binomial(k, r) * rat_pochhammer(eta, k - r) *
                      rat_pochhammer(eta, k - r);
    Rat inner = 0;
    const Rat denom = rat_pochhammer(eta + mu, k);
    for (int i = 0; i <= k; ++i) {
        Rat lsum = 0;
        for (int l = 0; l <= k - r; ++l)
            lsum += rat_binomial(i, l) * rat_binomial(k - i, k - r - l) *
                    rat_pochhammer(eta + (k - r - l), l) *
                    rat_pochhammer(eta - mu, k - r - l);
        inner += rat_binomial(k, i) * rat_pochhammer(mu, i) *
                 rat_pochhammer(eta, k - i) / denom * lsum;
    }
    return first - rat_pochhammer(eta + mu, k - r) * inner;
}

std::optional<DecompositionWitness> bd_decompose(const CubePoly& p, const Rat& eta) {
    const int k = p.k;
    if (k < 1 || k > 4) throw std::invalid_argument("bd_decompose: k must be 1..4");
    const std::vector<CubePoly> gens = bd_generators(k, eta);
    const auto sol = rat_solve(generator_matrix(gens, k), dense(p));
    if (!sol) return std::nullopt;

    DecompositionWitness w;
    w.F.assign(static_cast<size_t>(k), CubePoly{});
    for (auto& f : w.F) f.k = k;
    // Recover F_i from the generator coefficients, mirroring bd_generators'
    // ordering: block 1 contributes monomials to F_1; block i contributes
    // s * m to F_i.
    size_t gi = 0;
    for (uint32_t m = 0; m < pow3(k - 1); ++m, ++gi)
        w.F[0].add(m * 3, (*sol)[gi]);
    struct Term { int ea, eb; Rat c; };
    const std::vector<std::vector<Term>> sym = {
        {{0, 0, 1}},
        {{1, 0, 1}, {0, 1, 1}},
        {{1, 1, 1}},
    };
    for (int i = 2; i <= k; ++i) {
        const int pa = i - 2, pb = i - 1;
        std::vector<int> others;
        for (int j = 0; j < k; ++j)
            if (j != pa && j != pb) others.push_back(j);
        const uint32_t nm = pow3(static_cast<int>(others.size()));
        for (const auto& s : sym) {
            for (uint32_t m = 0; m < nm; ++m, ++gi) {
                if ((*sol)[gi] == 0) continue;
                uint32_t base = 0;
                uint32_t mm = m;
                for (int j : others) {
                    base += static_cast<uint32_t>(mm % 3) * pow3(j);
                    mm /= 3;
                }
                for (const Term& t : s)
                    w.F[static_cast<size_t>(i - 1)].add(
                        base + static_cast<uint32_t>(t.ea) * pow3(pa) +
                            static_cast<uint32_t>(t.eb) * pow3(pb),
                        (*sol)[gi] * t.c);
            }
        }
    }
    return w;
}

CubePoly recombine(const DecompositionWitness& w, const Rat& eta) {
    const int k = static_cast<int>(w.F.size());
    CubePoly out;
    out.k = k;
    // (z_1 + eta) F_1
    for (const auto& [idx, c] : w.F[0].coeff) {
        if (cube_digit(idx, 0) != 0) throw std::invalid_argument("recombine: F_1 must have z_1-degree 0");
        out.add(idx + 1, c);
        out.add(idx, eta * c);
    }
    // (z_{i-1} - z_i - 1) F_i
    for (int i = 2; i <= k; ++i) {
        const uint32_t ta = pow3(i - 2), tb = pow3(i - 1);
        for (const auto& [idx, c] : w.F[static_cast<size_t>(i - 1)].coeff) {
            if (cube_digit(idx, i - 2) > 1 || cube_digit(idx, i - 1) > 1)
                throw std::invalid_argument("recombine: F_i degree cap violated");
            out.add(idx + ta, c);
            out.add(idx + tb, -c);
            out.add(idx, -c);
        }
    }
    return out;
}

size_t sh_dimension(int k, const Rat& eta) {
    if (k < 1 || k > 5) throw std::invalid_argument("sh_dimension: k must be 1..5");
    const uint32_t n = pow3(k);
    RatMat M(static_cast<size_t>(k + 1), RatVec(n, Rat(0)));
    // Row r: the functional m -> [x_1^2...x_r^2] L_{r,k}(m). Only subsets
    // whose complement carries exponent 2 everywhere contribute.
    for (int r = 0; r <= k; ++r) {
        for (const auto& S : subsets(k, k - r)) {
            std::vector<bool> is_const(static_cast<size_t>(k), false);
            for (int j : S) is_const[static_cast<size_t>(j)] = true;
            for (uint32_t m = 0; m < n; ++m) {
                Rat v = 1;
                bool ok = true;
                size_t ci = 0;
                for (int j = 0; j < k && ok; ++j) {
                    const int d = cube_digit(m, j);
                    if (is_const[static_cast<size_t>(j)]) {
                        const Rat c = -eta - static_cast<int>(ci++);
                        for (int q = 0; q < d; ++q) v *= c;
                    } else if (d != 2) {
                        ok = false;
                    }
                }
                if (ok) M[static_cast<size_t>(r)][m] += v;
            }
        }
    }
    return n - rat_rank(M);
}

size_t bd_dimension(int k, const Rat& eta) {
    const std::vector<CubePoly> gens = bd_generators(k, eta);
    return rat_rank(generator_matrix(gens, k));
}

std::vector<uint32_t> w_set(int k) {
    std::vector<uint32_t> out;
    out.push_back(pow3(k) - 1);   // (2,...,2)
    for (int j = 0; j < k; ++j) out.push_back(pow3(k) - 1 - pow3(j));
    return out;
}

std::vector<uint32_t> l_set(int k, int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("l_set: exponent must be 0..2");
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < pow3(k); ++m)
        if (cube_digit(m, k - 1) == i) out.push_back(m);
    return out;
}

uint32_t extend_index(uint32_t idx_km1, int last_digit, int k) {
    if (last_digit < 0 || last_digit > 2) throw std::invalid_argument("extend_index: digit must be 0..2");
    return idx_km1 + static_cast<uint32_t>(last_digit) * pow3(k - 1);
}

bool decompose_with_span(const CubePoly& p, const Rat& eta,
                         const std::vector<uint32_t>& span_monomials) {
    const int k = p.k;
    const std::vector<CubePoly> gens = bd_generators(k, eta);
    RatMat A = generator_matrix(gens, k);
    for (uint32_t m : span_monomials)
        for (size_t row = 0; row < A.size(); ++row)
            A[row].push_back(row == m ? Rat(1) : Rat(0));
    return rat_solve(A, dense(p)).has_value();
}

CubePoly random_bd_element(int k, const Rat& eta, uint64_t seed, int range) {
    const std::vector<CubePoly> gens = bd_generators(k, eta);
    uint64_t s = seed;
    CubePoly out;
    out.k = k;
    for (const CubePoly& g : gens) {
        const int c = static_cast<int>(mix64(s) % (2 * static_cast<uint64_t>(range) + 1)) - range;
        if (c == 0) continue;
        for (const auto& [idx, v] : g.coeff) out.add(idx, v * c);
    }
    return out;
}

} // namespace rwre
