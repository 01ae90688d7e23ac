#include "vinberg/winvariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "vinberg/mpoly.hpp"

namespace vinberg {

namespace {

using Weight = std::vector<Rat>;  // in simple-root coordinates

// W-orbit of a weight by BFS with simple reflections
std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w0) {
    std::set<Weight> orbit{w0};
    std::vector<Weight> queue{w0};
    while (!queue.empty()) {
        Weight w = queue.back();
        queue.pop_back();
        for (long i = 0; i < rs.rank; ++i) {
            Rat pair(0);
            for (long k = 0; k < rs.rank; ++k) pair += w[k] * Rat(rs.cartan[i][k]);
            if (pair == 0) continue;
            Weight s = w;
            s[i] -= pair;
            if (orbit.insert(s).second) queue.push_back(s);
        }
    }
    return orbit;
}

QPoly orbit_power_sum(const RootSystem& rs, const std::set<Weight>& orbit, long d) {
    QPoly sum(rs.rank);
    for (const Weight& w : orbit) {
        QPoly form(rs.rank);
        for (long i = 0; i < rs.rank; ++i)
            if (w[i] != 0) form += QPoly::var(rs.rank, i, w[i]);
        sum += form.pow(d);
    }
    return sum;
}

Weight apply_auto(const DiagramAutomorphism& da, const Weight& w) {
    Weight out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[da.perm[i]] = w[i];
    return out;
}

// growing echelon container over coefficient vectors
struct Echelon {
    std::vector<std::vector<Rat>> rows;  // normalized, leading coefficient 1
    std::vector<long> lead;

    void sync(std::vector<Rat>& v) {
        size_t n = v.size();
        for (auto& r : rows) n = std::max(n, r.size());
        v.resize(n, Rat(0));
        for (auto& r : rows) r.resize(n, Rat(0));
    }
    void reduce(std::vector<Rat>& v) {
        sync(v);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (v[lead[r]] != 0) {
                Rat f = v[lead[r]];
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
            }
        }
    }
    bool insert(std::vector<Rat> v) {
        reduce(v);
        long l = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                l = (long)j;
                break;
            }
        if (l < 0) return false;
        Rat inv = 1 / v[l];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }
};

// shared monomial -> column map
std::vector<Rat> poly_row(const QPoly& p, std::map<std::vector<int>, long>& col_of) {
    for (const auto& [e, c] : p.terms)
        if (!col_of.count(e)) {
            long idx = (long)col_of.size();
            col_of[e] = idx;
        }
    std::vector<Rat> row(col_of.size(), Rat(0));
    for (const auto& [e, c] : p.terms) row[col_of.at(e)] = c;
    return row;
}

}  // namespace

std::vector<std::pair<long, long>> invariant_degree_shifts(const RootSystem& rs,
                                                           const DiagramAutomorphism& da) {
    std::vector<long> degrees = rs.invariant_degrees();
    std::vector<std::pair<long, long>> out;
    long e = da.order;
    if (e == 1) {
        for (long d : degrees) out.push_back({d, 0});
        return out;
    }
    long n = rs.rank;
    // fundamental weights in root coordinates: solve C q = e_j
    RMat cmat(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) cmat(i, j) = Rat(rs.cartan[i][j]);
    std::vector<Weight> fweights;
    for (long j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        auto q = solve_linear(cmat, ej);
        if (!q) throw std::logic_error("invariant_degree_shifts: singular Cartan matrix");
        fweights.push_back(*q);
    }
    // candidate orbit seeds, closed under the automorphism: fundamental
    // weights first, then pairwise sums as a fallback
    std::vector<Weight> seeds = fweights;
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) {
            Weight s(n);
            for (long k = 0; k < n; ++k) s[k] = fweights[i][k] + fweights[j][k];
            seeds.push_back(s);
        }
    std::vector<std::set<Weight>> orbits(seeds.size());
    std::vector<long> sigma_of_seed(seeds.size(), -1);
    for (size_t s = 0; s < seeds.size(); ++s) {
        // the image orbit under the automorphism: find the seed whose orbit
        // contains theta(seed)
        orbits[s] = weyl_orbit(rs, seeds[s]);
    }
    for (size_t s = 0; s < seeds.size(); ++s) {
        Weight img = apply_auto(da, seeds[s]);
        for (size_t t = 0; t < seeds.size(); ++t)
            if (orbits[t].count(img)) {
                sigma_of_seed[s] = (long)t;
                break;
            }
        if (sigma_of_seed[s] < 0)
            throw std::logic_error("invariant_degree_shifts: automorphism image orbit missing");
    }

    // chosen generators (representatives; rationality is enough, eigenvalues
    // are read off the quotient action)
    std::vector<std::pair<long, QPoly>> gens;  // (degree, polynomial)

    std::set<long> degree_set(degrees.begin(), degrees.end());
    for (long d : degree_set) {
        long mult = (long)std::count(degrees.begin(), degrees.end(), d);
        // decomposables of degree d: products of already-chosen generators
        std::map<std::vector<int>, long> col_of;
        Echelon dec;
        {
            std::function<void(long, long, QPoly)> rec = [&](long start, long remaining,
                                                             QPoly acc) {
                if (remaining == 0) {
                    dec.insert(poly_row(acc, col_of));
                    return;
                }
                for (long g = start; g < (long)gens.size(); ++g) {
                    if (gens[g].first <= remaining)
                        rec(g, remaining - gens[g].first, acc * gens[g].second);
                }
            };
            rec(0, d, QPoly::constant(n, Rat(1)));
        }
        // candidates: orbit power sums, in seed order
        std::vector<long> selected;                // seed indices
        std::map<long, std::vector<Rat>> reduced;  // seed -> row reduced mod decomposables
        std::map<long, QPoly> cand_poly;
        Echelon quotient;  // tracks independence of reduced candidates
        auto get_candidate = [&](long s) {
            if (reduced.count(s)) return;
            QPoly p = orbit_power_sum(rs, orbits[s], d);
            cand_poly[s] = p;
            std::vector<Rat> row = poly_row(p, col_of);
            dec.reduce(row);
            reduced.emplace(s, std::move(row));
        };
        for (long s = 0; s < (long)seeds.size() && (long)selected.size() < mult; ++s) {
            // pull in the whole sigma-orbit of this seed
            std::vector<long> group;
            long cur = s;
            do {
                group.push_back(cur);
                cur = sigma_of_seed[cur];
            } while (cur != s && std::find(group.begin(), group.end(), cur) == group.end());
            for (long g : group) get_candidate(g);
            for (long g : group) {
                if (quotient.insert(reduced[g])) selected.push_back(g);
            }
        }
        if ((long)selected.size() != mult)
            throw std::logic_error("invariant_degree_shifts: candidate orbits insufficient");
        // action of the automorphism on the quotient in the selected basis:
        // theta . p_{d,s} = p_{d, sigma(s)} (orbit sums are permuted); the
        // reduced rows may still differ by decomposables, so solve modulo them.
        long t = mult;
        for (long k = 0; k < t; ++k) get_candidate(sigma_of_seed[selected[k]]);
        size_t width = 0;
        for (auto& [s, r] : reduced) width = std::max(width, r.size());
        auto padded = [&](long s) {
            std::vector<Rat> r = reduced[s];
            dec.reduce(r);  // re-reduce: later candidates may have added columns
            r.resize(std::max(width, r.size()), Rat(0));
            width = std::max(width, r.size());
            return r;
        };
        RMat basis_mat((long)width, t);
        for (long k = 0; k < t; ++k) {
            std::vector<Rat> r = padded(selected[k]);
            r.resize(width, Rat(0));
            for (long i = 0; i < (long)width; ++i) basis_mat(i, k) = r[i];
        }
        RMat theta_mat(t, t);
        for (long k = 0; k < t; ++k) {
            std::vector<Rat> img = padded(sigma_of_seed[selected[k]]);
            img.resize(width, Rat(0));
            auto sol = solve_linear(basis_mat, img);
            if (!sol) throw std::logic_error("invariant_degree_shifts: quotient not stable");
            for (long i = 0; i < t; ++i) theta_mat(i, k) = (*sol)[i];
        }
        // eigenvalue multiplicities over Q(zeta_e)
        long found = 0;
        for (long a = 0; a < e; ++a) {
            CMat ma(t, t);
            for (long i = 0; i < t; ++i)
                for (long j = 0; j < t; ++j) {
                    ma(i, j) = Cyclo(theta_mat(i, j));
                    if (i == j) ma(i, j) -= Cyclo::zeta(e, a);
                }
            long nullity = t - row_echelon(ma);
            for (long c = 0; c < nullity; ++c) out.push_back({d, a});
            found += nullity;
        }
        if (found != mult)
            throw std::logic_error("invariant_degree_shifts: quotient action not of order e");
        for (long k = 0; k < t; ++k) gens.push_back({d, cand_poly[selected[k]]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vinberg
