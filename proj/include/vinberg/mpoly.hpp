#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vinberg/linalg.hpp"
#include "vinberg/scalars.hpp"

namespace vinberg {

// Sparse multivariate polynomial; every exponent key has length nvars.
template <class K>
struct MPoly {
    long nvars = 0;
    std::map<std::vector<int>, K> terms;

    MPoly() = default;
    explicit MPoly(long nv) : nvars(nv) {}

    static MPoly constant(long nv, const K& c) {
        MPoly p(nv);
        if (!k_is_zero(c)) p.terms[std::vector<int>(nv, 0)] = c;
        return p;
    }
    static MPoly monomial(long nv, const std::vector<int>& e, const K& c) {
        MPoly p(nv);
        if (!k_is_zero(c)) p.terms[e] = c;
        return p;
    }
    static MPoly var(long nv, long i, const K& c = K(1)) {
        std::vector<int> e(nv, 0);
        e[i] = 1;
        return monomial(nv, e, c);
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const K& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!k_is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (k_is_zero(it->second)) terms.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, K(0) - c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly p(a.nvars);
        std::vector<int> e(a.nvars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                for (long i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const K& c) const {
        MPoly p(nvars);
        if (k_is_zero(c)) return p;
        for (const auto& [e, co] : terms) p.terms[e] = co * c;
        return p;
    }

    MPoly pow(long n) const {
        MPoly r = constant(nvars, K(1));
        MPoly b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n > 1) b *= b;
            n >>= 1;
        }
        return r;
    }

    MPoly derivative(long v) const {
        MPoly p(nvars);
        for (const auto& [e, c] : terms) {
            if (e[v] == 0) continue;
            std::vector<int> e2 = e;
            e2[v] -= 1;
            p.add_term(e2, c * K((long)e[v]));
        }
        return p;
    }

    // substitute variable v by the given polynomial (same nvars)
    MPoly substituted(long v, const MPoly& val) const {
        MPoly out(nvars);
        for (const auto& [e, c] : terms) {
            std::vector<int> e2 = e;
            int k = e2[v];
            e2[v] = 0;
            MPoly t = monomial(nvars, e2, c);
            if (k > 0) t *= val.pow(k);
            out += t;
        }
        return out;
    }

    // set variable v to a constant
    MPoly evaluated(long v, const K& value) const {
        MPoly out(nvars);
        std::vector<int> e2;
        for (const auto& [e, c] : terms) {
            e2 = e;
            int k = e2[v];
            e2[v] = 0;
            K cc = c;
            for (int t = 0; t < k; ++t) cc = cc * value;
            out.add_term(e2, cc);
        }
        return out;
    }

    long weighted_degree(const std::vector<long>& w, const std::vector<int>& e) const {
        long s = 0;
        for (long i = 0; i < nvars; ++i) s += w[i] * e[i];
        return s;
    }
    // -1 if not weighted-homogeneous, else the common weight (zero poly: 0)
    long homogeneous_weight(const std::vector<long>& w) const {
        long val = -2;
        for (const auto& [e, c] : terms) {
            long s = weighted_degree(w, e);
            if (val == -2) val = s;
            else if (val != s) return -1;
        }
        return val == -2 ? 0 : val;
    }
};

using QPoly = MPoly<Rat>;
using ZetaPoly = MPoly<Cyclo>;

// Exact squarefreeness of a weighted-homogeneous polynomial in two of its
// variables (all other exponents must be zero): factor out pure powers and
// test the associated univariate polynomial.
template <class K>
bool bivariate_homogeneous_squarefree(const MPoly<K>& f, long vx, long vy) {
    if (f.is_zero()) return false;
    int minx = 1 << 30, miny = 1 << 30;
    for (const auto& [e, c] : f.terms) {
        for (long i = 0; i < f.nvars; ++i)
            if (i != vx && i != vy && e[i] != 0)
                throw std::invalid_argument("bivariate_homogeneous_squarefree: extra variables");
        minx = std::min(minx, e[vx]);
        miny = std::min(miny, e[vy]);
    }
    if (minx > 1 || miny > 1) return false;
    // After x^minx y^miny is removed the exponent pairs lie on a line
    // (weighted homogeneity); the form is x^a y^b g(x^p / y^q) up to a unit,
    // and squarefreeness reduces to that of the univariate g.
    std::map<int, std::pair<int, K>> by_xshift;  // x-shift -> (y-exponent, coeff)
    int maxx = 0;
    for (const auto& [e, c] : f.terms) {
        int xs = e[vx] - minx;
        auto it = by_xshift.find(xs);
        if (it != by_xshift.end()) {
            if (it->second.first != e[vy])
                throw std::invalid_argument("bivariate_homogeneous_squarefree: not homogeneous");
            it->second.second = it->second.second + c;
        } else {
            by_xshift.emplace(xs, std::make_pair(e[vy], c));
        }
        maxx = std::max(maxx, xs);
    }
    if (maxx == 0) return true;  // a single factor class
    int step = 0;
    for (auto& [xs, bc] : by_xshift)
        if (xs > 0) step = step ? std::gcd(step, xs) : xs;
    UPoly<K> g(maxx / step + 1, K(0));
    for (auto& [xs, bc] : by_xshift) g[xs / step] = g[xs / step] + bc.second;
    return upoly_squarefree(g);
}

}  // namespace vinberg
