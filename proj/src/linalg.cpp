#include "vinberg/linalg.hpp"

#include <algorithm>

namespace vinberg {

Int bareiss_det(IMat m) {
    if (m.nr != m.nc) throw std::invalid_argument("bareiss_det: matrix not square");
    long n = m.nr;
    Int prev(1);
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            long p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

long bareiss_rank(IMat m) {
    long rank = 0;
    Int prev(1);
    for (long col = 0; col < m.nc && rank < m.nr; ++col) {
        long p = rank;
        while (p < m.nr && m(p, col) == 0) ++p;
        if (p == m.nr) continue;
        if (p != rank)
            for (long j = 0; j < m.nc; ++j) std::swap(m(p, j), m(rank, j));
        for (long i = rank + 1; i < m.nr; ++i) {
            for (long j = col + 1; j < m.nc; ++j) {
                Int t = m(i, j) * m(rank, col) - m(i, col) * m(rank, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

std::vector<Int> smith_invariant_factors(IMat m) {
    long nr = m.nr, nc = m.nc;
    long t = 0;  // current pivot index
    std::vector<Int> factors;
    while (t < std::min(nr, nc)) {
        // find entry of minimal nonzero absolute value in the remaining block
        long bi = -1, bj = -1;
        Int best;
        for (long i = t; i < nr; ++i)
            for (long j = t; j < nc; ++j) {
                if (m(i, j) == 0) continue;
                Int a = abs(m(i, j));
                if (bi < 0 || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // all zero
        for (long j = 0; j < nc; ++j) std::swap(m(bi, j), m(t, j));
        for (long i = 0; i < nr; ++i) std::swap(m(i, bj), m(i, t));
        // reduce row and column by the pivot
        bool clean = true;
        for (long i = t + 1; i < nr; ++i) {
            if (m(i, t) != 0) {
                Int q = m(i, t) / m(t, t);
                if (q != 0)
                    for (long j = t; j < nc; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
        }
        for (long j = t + 1; j < nc; ++j) {
            if (m(t, j) != 0) {
                Int q = m(t, j) / m(t, t);
                if (q != 0)
                    for (long i = t; i < nr; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
        }
        if (!clean) continue;  // rerun with a smaller pivot
        // pivot must divide the rest of the block
        bool divides = true;
        for (long i = t + 1; i < nr && divides; ++i)
            for (long j = t + 1; j < nc; ++j)
                if (m(i, j) % m(t, t) != 0) {
                    // mix row i into row t and retry
                    for (long k = t; k < nc; ++k) m(t, k) += m(i, k);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        factors.push_back(abs(m(t, t)));
        ++t;
    }
    long freerank = std::min(nr, nc) - (long)factors.size();
    for (long i = 0; i < freerank; ++i) factors.push_back(Int(0));
    return factors;
}

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powm(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool ok = false;
        for (int r = 1; r < s; ++r) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

const std::vector<u64>& crt_primes() {
    static std::vector<u64> primes = [] {
        std::vector<u64> v;
        u64 p = (1ull << 62) - 1;
        while (v.size() < 64) {
            if (miller_rabin(p)) v.push_back(p);
            --p;
        }
        return v;
    }();
    return primes;
}

u64 prime_congruent_1_mod(long m, int index) {
    u64 p = ((1ull << 62) / (u64)m) * (u64)m + 1;
    int found = 0;
    while (true) {
        if (miller_rabin(p) && (p - 1) % (u64)m == 0) {
            if (found == index) return p;
            ++found;
        }
        p += (u64)m;
    }
}

u64 mod_reduce(const Int& x, u64 p) {
    Int r = x % Int((unsigned long)p);
    if (r < 0) r += Int((unsigned long)p);
    return r.get_ui();
}

u64 mod_reduce(const Rat& x, u64 p) {
    u64 num = mod_reduce(Int(x.get_num()), p);
    u64 den = mod_reduce(Int(x.get_den()), p);
    if (den == 0) throw std::domain_error("mod_reduce: denominator divisible by p");
    return mulm(num, invm(den, p), p);
}

FpMat mod_reduce(const IMat& m, u64 p) {
    FpMat out(m.nr, m.nc);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = mod_reduce(m.a[i], p);
    return out;
}

long rank_mod_p(FpMat m, u64 p) {
    long rank = 0;
    for (long col = 0; col < m.nc && rank < m.nr; ++col) {
        long piv = -1;
        for (long i = rank; i < m.nr; ++i)
            if (m(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j < m.nc; ++j) std::swap(m(piv, j), m(rank, j));
        u64 inv = invm(m(rank, col), p);
        for (long j = col; j < m.nc; ++j) m(rank, j) = mulm(m(rank, j), inv, p);
        for (long i = rank + 1; i < m.nr; ++i) {
            u64 f = m(i, col);
            if (!f) continue;
            for (long j = col; j < m.nc; ++j) m(i, j) = subm(m(i, j), mulm(f, m(rank, j), p), p);
        }
        ++rank;
    }
    return rank;
}

std::vector<u64> charpoly_mod_p(FpMat m, u64 p) {
    long n = m.nr;
    if (n != m.nc) throw std::invalid_argument("charpoly_mod_p: not square");
    // reduce to upper Hessenberg by similarity transforms
    for (long k = 0; k < n - 2; ++k) {
        long piv = -1;
        for (long i = k + 1; i < n; ++i)
            if (m(i, k)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            for (long j = 0; j < n; ++j) std::swap(m(piv, j), m(k + 1, j));
            for (long i = 0; i < n; ++i) std::swap(m(i, piv), m(i, k + 1));
        }
        u64 inv = invm(m(k + 1, k), p);
        for (long i = k + 2; i < n; ++i) {
            u64 f = mulm(m(i, k), inv, p);
            if (!f) continue;
            for (long j = 0; j < n; ++j) m(i, j) = subm(m(i, j), mulm(f, m(k + 1, j), p), p);
            for (long j = 0; j < n; ++j) m(j, k + 1) = addm(m(j, k + 1), mulm(f, m(j, i), p), p);
        }
    }
    // charpoly of Hessenberg by last-column expansion:
    // p_m(x) = (x - h[m][m]) p_{m-1}(x) - sum_i h[i][m] (prod_{j=i..m-1} h[j+1][j]) p_{i-1}(x)
    std::vector<std::vector<u64>> P(n + 1);
    P[0] = {1};
    for (long mdeg = 1; mdeg <= n; ++mdeg) {
        std::vector<u64> q(mdeg + 1, 0);
        const std::vector<u64>& prev = P[mdeg - 1];
        // (x - h_mm) * prev
        for (long t = 0; t < (long)prev.size(); ++t) {
            q[t + 1] = addm(q[t + 1], prev[t], p);
            q[t] = subm(q[t], mulm(m(mdeg - 1, mdeg - 1), prev[t], p), p);
        }
        u64 prod = 1;
        for (long i = mdeg - 1; i >= 1; --i) {
            prod = mulm(prod, m(i, i - 1), p);
            if (!prod) break;
            u64 c = mulm(m(i - 1, mdeg - 1), prod, p);
            if (!c) continue;
            const std::vector<u64>& pi = P[i - 1];
            for (long t = 0; t < (long)pi.size(); ++t) q[t] = subm(q[t], mulm(c, pi[t], p), p);
        }
        P[mdeg] = std::move(q);
    }
    return P[n];
}

std::vector<Int> charpoly_top_elem_sym(const IMat& a, long D) {
    long n = a.nr;
    D = std::min(D, n);
    // bound: |e_d| <= binom(n,d) * (sqrt(d) * M)^d with M = max |entry|
    Int M(1);
    for (const Int& x : a.a) {
        Int ax = abs(x);
        if (ax > M) M = ax;
    }
    Int bound(1);
    for (long d = 1; d <= D; ++d) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)n, (unsigned long)d);
        Int b = binom;
        Int dm2 = Int(d) * M * M;
        for (long t = 0; t < (d + 1) / 2; ++t) b *= dm2;
        if (b > bound) bound = b;
    }
    bound *= 4;  // symmetric range + slack
    // collect primes until product exceeds bound
    std::vector<u64> used;
    Int prod(1);
    for (u64 p : crt_primes()) {
        used.push_back(p);
        prod *= Int((unsigned long)p);
        if (prod > bound) break;
    }
    if (prod <= bound) throw std::logic_error("charpoly_top_elem_sym: prime pool exhausted");
    // CRT per coefficient
    std::vector<Int> residues(D + 1, Int(0));  // combined residue mod prod
    Int partial(1);
    for (u64 p : used) {
        FpMat mp = mod_reduce(a, p);
        std::vector<u64> cp = charpoly_mod_p(mp, p);
        // e_d = (-1)^d * coeff of T^{n-d}
        for (long d = 1; d <= D; ++d) {
            u64 coeff = cp[n - d];
            u64 ed = (d % 2 == 0) ? coeff : (coeff ? p - coeff : 0);
            // CRT update: find x = residues[d] mod partial, x = ed mod p
            Int cur = residues[d];
            Int pi((unsigned long)p);
            Int inv;  // partial^{-1} mod p
            {
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), partial.get_mpz_t(),
                           pi.get_mpz_t());
                inv = s % pi;
                if (inv < 0) inv += pi;
            }
            Int diff = (Int((unsigned long)ed) - cur) % pi;
            if (diff < 0) diff += pi;
            Int k = (diff * inv) % pi;
            residues[d] = cur + k * partial;
        }
        partial *= Int((unsigned long)p);
    }
    // symmetric lift
    std::vector<Int> out(D + 1, Int(0));
    for (long d = 1; d <= D; ++d) {
        Int r = residues[d] % partial;
        if (r < 0) r += partial;
        if (2 * r > partial) r -= partial;
        out[d] = r;
    }
    return out;
}

uint64_t CycloModEnv::reduce(const Cyclo& c) const {
    const Cyclo* v = &c;
    Cyclo lifted;
    if (c.conductor() != conductor) {
        if (conductor % c.conductor() == 0) {
            lifted = c.lifted(conductor);
            v = &lifted;
        } else {
            lifted = c.reduced();
            if (conductor % lifted.conductor() != 0)
                throw std::domain_error("CycloModEnv: conductor mismatch");
            lifted = lifted.lifted(conductor);
            v = &lifted;
        }
    }
    uint64_t acc = 0, zp = 1;
    for (const Rat& co : v->coeffs()) {
        if (co != 0) {
            uint64_t t = mod_reduce(co, p);
            acc = (acc + (unsigned __int128)t * zp % p) % p;
        }
        zp = (uint64_t)((unsigned __int128)zp * zeta_img % p);
    }
    return acc;
}

CycloModEnv make_cyclo_mod_env(long conductor, int index) {
    CycloModEnv env;
    env.conductor = std::max(conductor, 1L);
    env.p = prime_congruent_1_mod(std::max(conductor, 2L), index);
    env.zeta_img = 1;
    if (env.conductor > 1) {
        uint64_t p = env.p;
        for (uint64_t g = 2;; ++g) {
            uint64_t e = (p - 1) / (uint64_t)env.conductor;
            uint64_t x = 1, b = g % p, ee = e;
            while (ee) {
                if (ee & 1) x = (uint64_t)((unsigned __int128)x * b % p);
                b = (uint64_t)((unsigned __int128)b * b % p);
                ee >>= 1;
            }
            if (x == 1) continue;
            bool exact = true;
            for (long d : divisors(env.conductor)) {
                if (d == env.conductor || d == 1) continue;
                uint64_t z = 1, bb = x;
                long dd = d;
                while (dd) {
                    if (dd & 1) z = (uint64_t)((unsigned __int128)z * bb % p);
                    bb = (uint64_t)((unsigned __int128)bb * bb % p);
                    dd >>= 1;
                }
                if (z == 1) {
                    exact = false;
                    break;
                }
            }
            if (exact) {
                env.zeta_img = x;
                break;
            }
        }
    }
    return env;
}

std::pair<IMat, Int> clear_denominators(const RMat& m) {
    Int den(1);
    for (const Rat& x : m.a) {
        Int d = x.get_den();
        den = lcm(den, d);
    }
    IMat out(m.nr, m.nc);
    for (size_t i = 0; i < m.a.size(); ++i) {
        Rat v = m.a[i] * Rat(den);
        out.a[i] = v.get_num();
    }
    return {std::move(out), den};
}

}  // namespace vinberg
