#include "vinberg/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vinberg {

namespace {

void add_edge(std::vector<std::vector<long>>& c, long i, long j) {
    c[i][j] = -1;
    c[j][i] = -1;
}

// Cartan matrix with c[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering,
// plus the symmetrizers d_i = (alpha_i, alpha_i)/2.
void cartan_and_symmetrizers(char type, long rank, std::vector<std::vector<long>>& c,
                             std::vector<long>& d) {
    c.assign(rank, std::vector<long>(rank, 0));
    for (long i = 0; i < rank; ++i) c[i][i] = 2;
    d.assign(rank, 1);
    auto chain = [&](long upto) {
        for (long i = 0; i + 1 < upto; ++i) add_edge(c, i, i + 1);
    };
    switch (type) {
        case 'A':
            if (rank < 1) throw std::domain_error("type A needs rank >= 1");
            chain(rank);
            break;
        case 'B':
            if (rank < 2) throw std::domain_error("type B needs rank >= 2");
            chain(rank);
            for (long i = 0; i + 1 < rank; ++i) d[i] = 2;
            d[rank - 1] = 1;
            c[rank - 1][rank - 2] = -2;  // <alpha_{l-1}, alpha_l^vee>
            break;
        case 'C':
            if (rank < 3) throw std::domain_error("type C needs rank >= 3");
            chain(rank);
            for (long i = 0; i + 1 < rank; ++i) d[i] = 1;
            d[rank - 1] = 2;
            c[rank - 2][rank - 1] = -2;  // <alpha_l, alpha_{l-1}^vee>
            break;
        case 'D':
            if (rank < 4) throw std::domain_error("type D needs rank >= 4");
            chain(rank - 1);
            add_edge(c, rank - 3, rank - 1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) throw std::domain_error("type E needs rank 6..8");
            // nodes 0..rank-1; chain 2-3-4-...-(rank-1), node 0 on 2, node 1 on 3
            for (long i = 2; i + 1 < rank; ++i) add_edge(c, i, i + 1);
            add_edge(c, 0, 2);
            add_edge(c, 1, 3);
            break;
        case 'F':
            if (rank != 4) throw std::domain_error("type F needs rank 4");
            chain(4);
            d[0] = d[1] = 2;
            d[2] = d[3] = 1;
            c[2][1] = -2;  // <alpha_2, alpha_3^vee>
            break;
        case 'G':
            if (rank != 2) throw std::domain_error("type G needs rank 2");
            chain(2);
            d[0] = 1;
            d[1] = 3;
            c[0][1] = -3;  // <alpha_2, alpha_1^vee>
            break;
        default:
            throw std::domain_error(std::string("unknown Dynkin type ") + type);
    }
}

}  // namespace

long RootSystem::pairing_coroot_simple(const std::vector<long>& beta, long i) const {
    long s = 0;
    for (long j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
    return s;
}

long RootSystem::bilinear(const std::vector<long>& a, const std::vector<long>& b) const {
    long s = 0;
    for (long i = 0; i < rank; ++i) {
        if (!a[i]) continue;
        for (long j = 0; j < rank; ++j)
            if (b[j]) s += a[i] * b[j] * dsym[i] * cartan[i][j];
    }
    return s;
}

long RootSystem::pairing_coroot(const std::vector<long>& beta, const std::vector<long>& gamma) const {
    long num = 2 * bilinear(beta, gamma);
    long den = bilinear(gamma, gamma);
    if (num % den != 0) throw std::logic_error("pairing_coroot: non-integral pairing");
    return num / den;
}

std::vector<long> RootSystem::reflect(const std::vector<long>& beta,
                                      const std::vector<long>& gamma) const {
    long k = pairing_coroot(beta, gamma);
    std::vector<long> out = beta;
    for (long i = 0; i < rank; ++i) out[i] -= k * gamma[i];
    return out;
}

long RootSystem::max_height() const {
    long m = 0;
    for (long i = 0; i < npos; ++i) m = std::max(m, heights[i]);
    return m;
}

std::vector<long> RootSystem::highest_root() const {
    long m = max_height();
    for (long i = 0; i < npos; ++i)
        if (heights[i] == m) return roots[i];
    throw std::logic_error("highest_root: empty root system");
}

long RootSystem::lowest_root_index() const {
    std::vector<long> h = highest_root();
    for (auto& x : h) x = -x;
    return root_index(h);
}

std::vector<long> RootSystem::invariant_degrees() const {
    // height distribution of positive roots; exponents are the conjugate partition
    long maxh = max_height();
    std::vector<long> nh(maxh + 1, 0);
    for (long i = 0; i < npos; ++i) ++nh[heights[i]];
    std::vector<long> degrees;
    for (long k = 1; k <= nh[1]; ++k) {
        long exponent = 0;
        for (long h = 1; h <= maxh; ++h)
            if (nh[h] >= k) ++exponent;
        degrees.push_back(exponent + 1);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

RootSystem build_root_system(char type, long rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    cartan_and_symmetrizers(type, rank, rs.cartan, rs.dsym);

    // reflection closure from the simple roots
    std::set<std::vector<long>> seen;
    std::deque<std::vector<long>> queue;
    for (long i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<long> r = queue.front();
        queue.pop_front();
        for (long i = 0; i < rank; ++i) {
            long k = rs.pairing_coroot_simple(r, i);
            if (k == 0) continue;
            std::vector<long> s = r;
            s[i] -= k;
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    std::vector<std::vector<long>> pos;
    for (const auto& r : seen) {
        long h = std::accumulate(r.begin(), r.end(), 0L);
        if (h > 0) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const std::vector<long>& a, const std::vector<long>& b) {
        long ha = std::accumulate(a.begin(), a.end(), 0L);
        long hb = std::accumulate(b.begin(), b.end(), 0L);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.npos = (long)pos.size();
    rs.roots = pos;
    for (const auto& r : pos) {
        std::vector<long> n = r;
        for (auto& x : n) x = -x;
        rs.roots.push_back(n);
    }
    rs.heights.resize(rs.roots.size());
    for (size_t i = 0; i < rs.roots.size(); ++i)
        rs.heights[i] = std::accumulate(rs.roots[i].begin(), rs.roots[i].end(), 0L);
    for (size_t i = 0; i < rs.roots.size(); ++i) rs.index_of[rs.roots[i]] = (long)i;
    return rs;
}

CoweightVector rho_check(const RootSystem& rs) {
    CoweightVector v;
    v.pairings.assign(rs.rank, Rat(1));
    return v;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
    long n = rs.rank;
    std::vector<long> perm(n);
    std::iota(perm.begin(), perm.end(), 0L);
    std::vector<DiagramAutomorphism> out;
    do {
        bool ok = true;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n; ++j)
                if (rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j]) {
                    ok = false;
                    break;
                }
        if (ok) {
            DiagramAutomorphism a;
            a.perm = perm;
            std::vector<long> p = perm;
            long ord = 1;
            auto is_id = [&] {
                for (long i = 0; i < n; ++i)
                    if (p[i] != i) return false;
                return true;
            };
            while (!is_id()) {
                std::vector<long> q(n);
                for (long i = 0; i < n; ++i) q[i] = perm[p[i]];
                p = q;
                ++ord;
            }
            a.order = ord;
            out.push_back(a);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<long> LatticeEndo::apply(const std::vector<long>& v) const {
    long n = (long)mat.size();
    std::vector<long> out(n, 0);
    for (long j = 0; j < n; ++j)
        if (v[j])
            for (long i = 0; i < n; ++i) out[i] += mat[i][j] * v[j];
    return out;
}

LatticeEndo lattice_identity(long rank) {
    LatticeEndo w;
    w.mat.assign(rank, std::vector<long>(rank, 0));
    for (long i = 0; i < rank; ++i) w.mat[i][i] = 1;
    return w;
}

LatticeEndo subsystem_coxeter(const RootSystem& rs, const std::vector<long>& root_indices) {
    // independence check
    IMat m((long)root_indices.size(), rs.rank);
    for (size_t k = 0; k < root_indices.size(); ++k)
        for (long j = 0; j < rs.rank; ++j) m((long)k, j) = rs.roots[root_indices[k]][j];
    if (bareiss_rank(m) != (long)root_indices.size())
        throw std::domain_error("subsystem_coxeter: selected roots are linearly dependent");
    LatticeEndo w = lattice_identity(rs.rank);
    for (long j = 0; j < rs.rank; ++j) {
        std::vector<long> v(rs.rank, 0);
        v[j] = 1;
        for (long idx : root_indices) v = rs.reflect(v, rs.roots[idx]);
        for (long i = 0; i < rs.rank; ++i) w.mat[i][j] = v[i];
    }
    return w;
}

long endo_order(const LatticeEndo& w, long bound) {
    long n = (long)w.mat.size();
    LatticeEndo p = w;
    auto is_id = [&](const LatticeEndo& x) {
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (x.mat[i][j] != (i == j ? 1 : 0)) return false;
        return true;
    };
    for (long k = 1; k <= bound; ++k) {
        if (is_id(p)) return k;
        LatticeEndo q;
        q.mat.assign(n, std::vector<long>(n, 0));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                for (long t = 0; t < n; ++t) q.mat[i][j] += p.mat[i][t] * w.mat[t][j];
        p = q;
    }
    throw std::domain_error("endo_order: order exceeds bound");
}

Int endo_det_one_minus(const LatticeEndo& w) {
    long n = (long)w.mat.size();
    IMat m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = Int((i == j ? 1 : 0) - w.mat[i][j]);
    return bareiss_det(std::move(m));
}

std::vector<Int> coinvariant_lattice(const RootSystem& rs, const LatticeEndo& w) {
    long n = rs.rank;
    if ((long)w.mat.size() != n) throw std::invalid_argument("coinvariant_lattice: size mismatch");
    IMat m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = Int((i == j ? 1 : 0) - w.mat[i][j]);
    std::vector<Int> fac = smith_invariant_factors(std::move(m));
    std::vector<Int> out;
    for (const Int& f : fac)
        if (f == 0 || f > 1) out.push_back(f);
    return out;
}

std::pair<std::vector<long>, std::vector<long>> a4_a4_in_e8(const RootSystem& rs) {
    if (rs.type != 'E' || rs.rank != 8) throw std::domain_error("a4_a4_in_e8: needs E8");
    // First A4 chain: simple roots 1-3-4-2 (Bourbaki), 0-indexed {0,2,3,1}.
    // Second: 6-7-8 extended by the lowest root, 0-indexed {5,6,7,lowest}.
    std::vector<long> first, second;
    for (long i : {0, 2, 3, 1}) {
        std::vector<long> e(8, 0);
        e[i] = 1;
        first.push_back(rs.root_index(e));
    }
    for (long i : {5, 6, 7}) {
        std::vector<long> e(8, 0);
        e[i] = 1;
        second.push_back(rs.root_index(e));
    }
    second.push_back(rs.lowest_root_index());
    // verify both are A4 chains and mutually orthogonal
    auto check_chain = [&](const std::vector<long>& idx) {
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                long bil = rs.bilinear(rs.roots[idx[a]], rs.roots[idx[b]]);
                if (b == a + 1) {
                    if (bil >= 0) throw std::logic_error("a4_a4_in_e8: chain not linked");
                } else if (bil != 0) {
                    throw std::logic_error("a4_a4_in_e8: chain not a path");
                }
            }
    };
    check_chain(first);
    check_chain(second);
    for (long a : first)
        for (long b : second)
            if (rs.bilinear(rs.roots[a], rs.roots[b]) != 0)
                throw std::logic_error("a4_a4_in_e8: factors not orthogonal");
    return {first, second};
}

}  // namespace vinberg
