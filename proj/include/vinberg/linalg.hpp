#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vinberg/scalars.hpp"

namespace vinberg {

template <class K>
struct Mat {
    long nr = 0, nc = 0;
    std::vector<K> a;
    Mat() = default;
    Mat(long r, long c) : nr(r), nc(c), a((size_t)r * c) {}
    K& operator()(long i, long j) { return a[(size_t)i * nc + j]; }
    const K& operator()(long i, long j) const { return a[(size_t)i * nc + j]; }
    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
};

using RMat = Mat<Rat>;
using CMat = Mat<Cyclo>;
using IMat = Mat<Int>;

inline bool k_is_zero(const Rat& x) { return x == 0; }
inline bool k_is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool k_is_zero(const Int& x) { return x == 0; }
inline Rat k_inv(const Rat& x) { return 1 / x; }
inline Cyclo k_inv(const Cyclo& x) { return x.inverse(); }

// In-place reduced row echelon form over a field; returns rank,
// records pivot columns if requested.
template <class K>
long row_echelon(Mat<K>& m, std::vector<long>* pivots = nullptr) {
    long row = 0;
    for (long col = 0; col < m.nc && row < m.nr; ++col) {
        long p = row;
        while (p < m.nr && k_is_zero(m(p, col))) ++p;
        if (p == m.nr) continue;
        if (p != row)
            for (long j = 0; j < m.nc; ++j) std::swap(m(p, j), m(row, j));
        K inv = k_inv(m(row, col));
        for (long j = col; j < m.nc; ++j) m(row, j) = m(row, j) * inv;
        for (long i = 0; i < m.nr; ++i) {
            if (i != row && !k_is_zero(m(i, col))) {
                K f = m(i, col);
                for (long j = col; j < m.nc; ++j) m(i, j) = m(i, j) - f * m(row, j);
            }
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return row;
}

template <class K>
long rank_of(Mat<K> m) {
    return row_echelon(m);
}

// Basis of {x : M x = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
    std::vector<long> pivots;
    row_echelon(m, &pivots);
    std::vector<bool> is_pivot(m.nc, false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> out;
    for (long c = 0; c < m.nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(m.nc, K(0));
        v[c] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r has 1 at pivots[r]; entry at column c gives the dependence
            v[pivots[r]] = K(0) - m((long)r, c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

// One solution of M x = b (not the full affine set); nullopt if inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(const Mat<K>& m, const std::vector<K>& b) {
    if ((long)b.size() != m.nr) throw std::invalid_argument("solve_linear: size mismatch");
    Mat<K> aug(m.nr, m.nc + 1);
    for (long i = 0; i < m.nr; ++i) {
        for (long j = 0; j < m.nc; ++j) aug(i, j) = m(i, j);
        aug(i, m.nc) = b[i];
    }
    std::vector<long> pivots;
    long rk = row_echelon(aug, &pivots);
    if (!pivots.empty() && pivots.back() == m.nc) return std::nullopt;
    std::vector<K> x(m.nc, K(0));
    for (long r = 0; r < rk; ++r) x[pivots[r]] = aug(r, m.nc);
    return x;
}

template <class K>
std::vector<K> mat_vec(const Mat<K>& m, const std::vector<K>& v) {
    std::vector<K> out(m.nr, K(0));
    for (long i = 0; i < m.nr; ++i)
        for (long j = 0; j < m.nc; ++j)
            if (!k_is_zero(m(i, j)) && !k_is_zero(v[j])) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

// --- integer matrices ---

Int bareiss_det(IMat m);
long bareiss_rank(IMat m);

// Invariant factors d_1 | d_2 | ..., nonnegative, zeros (free rank) last.
std::vector<Int> smith_invariant_factors(IMat m);

// --- modular tools (fixed 62-bit primes, deterministic) ---

const std::vector<uint64_t>& crt_primes();
uint64_t prime_congruent_1_mod(long m, int index);  // index-th prime p = 1 (mod m)

struct FpMat {
    long nr = 0, nc = 0;
    std::vector<uint64_t> a;
    FpMat(long r, long c) : nr(r), nc(c), a((size_t)r * c, 0) {}
    uint64_t& operator()(long i, long j) { return a[(size_t)i * nc + j]; }
    uint64_t operator()(long i, long j) const { return a[(size_t)i * nc + j]; }
};

uint64_t mod_reduce(const Int& x, uint64_t p);
uint64_t mod_reduce(const Rat& x, uint64_t p);  // throws if denominator divisible by p

// Reduction of Q(zeta_m) to F_p along zeta -> fixed element of order m
// (p = 1 mod m), for one-sided modular certificates.
struct CycloModEnv {
    uint64_t p = 0;
    uint64_t zeta_img = 1;
    long conductor = 1;
    uint64_t reduce(const Cyclo& c) const;
};
CycloModEnv make_cyclo_mod_env(long conductor, int index);

FpMat mod_reduce(const IMat& m, uint64_t p);
long rank_mod_p(FpMat m, uint64_t p);

// Characteristic polynomial of a square matrix mod p, coefficients low -> high
// (monic of degree n), via Hessenberg reduction.
std::vector<uint64_t> charpoly_mod_p(FpMat m, uint64_t p);

// Exact elementary symmetric functions e_1..e_D of the eigenvalues of an
// integer matrix (signed coefficients of the characteristic polynomial near
// the top), reconstructed by CRT against a rigorous bound.
std::vector<Int> charpoly_top_elem_sym(const IMat& a, long D);

// --- univariate polynomials over a field ---

template <class K>
using UPoly = std::vector<K>;  // coefficients low -> high

template <class K>
long upoly_deg(const UPoly<K>& p) {
    for (long i = (long)p.size() - 1; i >= 0; --i)
        if (!k_is_zero(p[i])) return i;
    return -1;
}

template <class K>
void upoly_trim(UPoly<K>& p) {
    p.resize(upoly_deg(p) + 1);
}

template <class K>
UPoly<K> upoly_monic(UPoly<K> p) {
    long d = upoly_deg(p);
    if (d < 0) return p;
    K inv = k_inv(p[d]);
    for (auto& c : p) c = c * inv;
    p.resize(d + 1);
    return p;
}

template <class K>
UPoly<K> upoly_rem(UPoly<K> a, const UPoly<K>& b) {
    long db = upoly_deg(b);
    if (db < 0) throw std::domain_error("upoly_rem: division by zero poly");
    K lead_inv = k_inv(b[db]);
    for (long i = upoly_deg(a); i >= db; i = upoly_deg(a)) {
        K f = a[i] * lead_inv;
        for (long j = 0; j <= db; ++j) a[i - db + j] = a[i - db + j] - f * b[j];
        a[i] = K(0);
        a.resize(i);
        if ((long)a.size() <= db) break;
    }
    upoly_trim(a);
    return a;
}

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    upoly_trim(a);
    upoly_trim(b);
    while (upoly_deg(b) >= 0) {
        UPoly<K> r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

template <class K>
UPoly<K> upoly_mul(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<K> c(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (!k_is_zero(a[i]))
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

template <class K>
UPoly<K> upoly_derivative(const UPoly<K>& p) {
    if (p.size() <= 1) return {};
    UPoly<K> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * K((long)i);
    return d;
}

template <class K>
bool upoly_squarefree(const UPoly<K>& p) {
    return upoly_deg(upoly_gcd(p, upoly_derivative(p))) <= 0;
}

// Monic minimal polynomial of a square matrix over a field, by Krylov
// iteration over all standard basis vectors.
template <class K>
UPoly<K> min_poly(const Mat<K>& A) {
    long n = A.nr;
    UPoly<K> mu{K(1)};  // constant 1 = minimal poly of nothing
    auto apply_poly = [&](const UPoly<K>& p, std::vector<K> v) {
        // p(A) v via Horner
        std::vector<K> acc(n, K(0));
        for (long i = upoly_deg(p); i >= 0; --i) {
            acc = mat_vec(A, acc);
            for (long j = 0; j < n; ++j) acc[j] = acc[j] + p[i] * v[j];
        }
        return acc;
    };
    for (long s = 0; s < n; ++s) {
        std::vector<K> v(n, K(0));
        v[s] = K(1);
        std::vector<K> w = apply_poly(mu, v);
        bool zero = true;
        for (auto& x : w)
            if (!k_is_zero(x)) {
                zero = false;
                break;
            }
        if (zero) continue;
        // Krylov space of w: find monic dependence
        std::vector<std::vector<K>> rows;      // echelonized Krylov vectors
        std::vector<std::vector<K>> coeffs;    // their expressions in powers A^k w
        std::vector<long> lead;
        std::vector<K> cur = w;
        long k = 0;
        UPoly<K> nu;
        while (true) {
            // reduce cur against rows
            std::vector<K> expr(k + 1, K(0));
            expr[k] = K(1);
            std::vector<K> red = cur;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (!k_is_zero(red[lead[r]])) {
                    K f = red[lead[r]];
                    for (long j = 0; j < n; ++j) red[j] = red[j] - f * rows[r][j];
                    for (size_t t = 0; t < coeffs[r].size(); ++t)
                        expr[t] = expr[t] - f * coeffs[r][t];
                }
            }
            long l = -1;
            for (long j = 0; j < n; ++j)
                if (!k_is_zero(red[j])) {
                    l = j;
                    break;
                }
            if (l < 0) {
                // dependence: expr gives monic polynomial of degree k
                nu = expr;
                break;
            }
            K inv = k_inv(red[l]);
            for (long j = 0; j < n; ++j) red[j] = red[j] * inv;
            for (auto& t : expr) t = t * inv;
            rows.push_back(std::move(red));
            coeffs.push_back(std::move(expr));
            lead.push_back(l);
            cur = mat_vec(A, cur);
            ++k;
        }
        // nu is the minimal polynomial of mu(A)e_s, which equals
        // minpoly(e_s)/gcd(minpoly(e_s), mu); so mu*nu = lcm(mu, minpoly(e_s)).
        mu = upoly_monic(upoly_mul(mu, nu));
    }
    return mu;
}

// Clear denominators: returns integer matrix D*M and the common denominator D.
std::pair<IMat, Int> clear_denominators(const RMat& m);

}  // namespace vinberg
