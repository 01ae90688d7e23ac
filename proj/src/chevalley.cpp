#include "vinberg/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinberg {

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
    dim_ = rs_.rank + rs_.nroots();
    build_table();
}

long ChevalleyAlgebra::chain_down(long a, long b) const {
    // p = max{k : roots[b] - k roots[a] is a root}
    long p = 0;
    std::vector<long> v = rs_.roots[b];
    while (true) {
        for (long i = 0; i < rs_.rank; ++i) v[i] -= rs_.roots[a][i];
        if (rs_.root_index(v) < 0) break;
        ++p;
    }
    return p;
}

long ChevalleyAlgebra::extraspecial_first(long sum_idx) const {
    // minimal positive root xi (in the fixed order) with gamma - xi a positive root
    const std::vector<long>& gamma = rs_.roots[sum_idx];
    for (long xi = 0; xi < rs_.npos; ++xi) {
        std::vector<long> rest(rs_.rank);
        for (long i = 0; i < rs_.rank; ++i) rest[i] = gamma[i] - rs_.roots[xi][i];
        long r = rs_.root_index(rest);
        if (r >= 0 && r < rs_.npos) return xi;
    }
    throw std::logic_error("extraspecial_first: no decomposition of a non-simple root");
}

long ChevalleyAlgebra::nval(long a, long b) const {
    auto key = std::make_pair(a, b);
    auto it = nmemo_.find(key);
    if (it != nmemo_.end()) return it->second;

    const std::vector<long>& A = rs_.roots[a];
    const std::vector<long>& B = rs_.roots[b];
    std::vector<long> sum(rs_.rank);
    for (long i = 0; i < rs_.rank; ++i) sum[i] = A[i] + B[i];
    long sidx = rs_.root_index(sum);
    if (sidx < 0) throw std::logic_error("nval: sum is not a root");

    bool apos = a < rs_.npos, bpos = b < rs_.npos;
    long result = 0;
    if (apos && bpos) {
        if (a > b) {
            result = -nval(b, a);
        } else {
            long xi = extraspecial_first(sidx);
            if (a == xi) {
                result = chain_down(a, b) + 1;  // extraspecial pair: positive by convention
            } else {
                // Jacobi identity against the extraspecial pair (xi, eta):
                // N(a,b) N(-xi,sum) = N(-xi,a) N(a-xi,b) + N(-xi,b) N(a,b-xi)
                long num = 0;
                std::vector<long> amx(rs_.rank), bmx(rs_.rank);
                for (long i = 0; i < rs_.rank; ++i) {
                    amx[i] = A[i] - rs_.roots[xi][i];
                    bmx[i] = B[i] - rs_.roots[xi][i];
                }
                long nxi = rs_.neg_index(xi);
                if (rs_.root_index(amx) >= 0)
                    num += nval(nxi, a) * nval(rs_.root_index(amx), b);
                if (rs_.root_index(bmx) >= 0)
                    num += nval(nxi, b) * nval(a, rs_.root_index(bmx));
                long den = nval(nxi, sidx);
                if (den == 0 || num % den != 0)
                    throw std::logic_error("nval: special-pair recursion not divisible");
                result = num / den;
            }
        }
    } else if (!apos && !bpos) {
        result = -nval(rs_.neg_index(a), rs_.neg_index(b));
    } else if (!apos && bpos) {
        result = -nval(b, a);
    } else {
        // a positive, b negative; mu = -b > 0, both a - mu = sum
        long mu = rs_.neg_index(b);
        if (sidx < rs_.npos) {
            // N(a,-mu) = N(delta,mu) (delta,delta)/(a,a), delta = sum
            long num = nval(sidx, mu) * rs_.bilinear(sum, sum);
            long den = rs_.bilinear(A, A);
            if (num % den != 0) throw std::logic_error("nval: mixed reduction not divisible");
            result = num / den;
        } else {
            // eps = mu - a > 0: N(a,-mu) = N(eps,a) (eps,eps)/(mu,mu)
            long eps = rs_.neg_index(sidx);
            long num = nval(eps, a) * rs_.bilinear(rs_.roots[eps], rs_.roots[eps]);
            long den = rs_.bilinear(rs_.roots[mu], rs_.roots[mu]);
            if (num % den != 0) throw std::logic_error("nval: mixed reduction not divisible");
            result = num / den;
        }
    }
    nmemo_[key] = result;
    return result;
}

long ChevalleyAlgebra::n_const(long a, long b) const { return nval(a, b); }

std::vector<long> ChevalleyAlgebra::coroot(long r) const {
    const std::vector<long>& alpha = rs_.roots[r];
    long d_alpha = rs_.bilinear(alpha, alpha) / 2;
    std::vector<long> c(rs_.rank);
    for (long k = 0; k < rs_.rank; ++k) {
        long num = alpha[k] * rs_.dsym[k];
        if (num % d_alpha != 0) throw std::logic_error("coroot: non-integral coefficient");
        c[k] = num / d_alpha;
    }
    return c;
}

void ChevalleyAlgebra::build_table() {
    table_.assign((size_t)dim_ * dim_, {});
    long nr = rs_.nroots();
    // [h_i, e_r] and [e_r, h_i]
    for (long i = 0; i < rs_.rank; ++i) {
        for (long r = 0; r < nr; ++r) {
            long c = rs_.pairing_coroot_simple(rs_.roots[r], i);
            if (c != 0) {
                table_[(size_t)i * dim_ + e_index(r)].push_back({e_index(r), c});
                table_[(size_t)e_index(r) * dim_ + i].push_back({e_index(r), -c});
            }
        }
    }
    // [e_a, e_b]
    for (long a = 0; a < nr; ++a) {
        for (long b = 0; b < nr; ++b) {
            if (b == rs_.neg_index(a)) {
                // [e_a, e_{-a}] = h_a for every root a (h_{-a} = -h_a)
                std::vector<long> h = coroot(a);
                auto& cell = table_[(size_t)e_index(a) * dim_ + e_index(b)];
                for (long k = 0; k < rs_.rank; ++k)
                    if (h[k] != 0) cell.push_back({k, h[k]});
                continue;
            }
            std::vector<long> sum(rs_.rank);
            for (long i = 0; i < rs_.rank; ++i) sum[i] = rs_.roots[a][i] + rs_.roots[b][i];
            long sidx = rs_.root_index(sum);
            if (sidx < 0) continue;
            long c = nval(a, b);
            table_[(size_t)e_index(a) * dim_ + e_index(b)].push_back({e_index(sidx), c});
        }
    }
}

IMat ChevalleyAlgebra::ad_int(const std::vector<long>& coords) const {
    if ((long)coords.size() != dim_) throw std::invalid_argument("ad_int: dimension mismatch");
    IMat m(dim_, dim_);
    for (long i = 0; i < dim_; ++i) {
        if (!coords[i]) continue;
        for (long j = 0; j < dim_; ++j)
            for (const auto& [k, c] : basis_bracket(i, j)) m(k, j) += Int(coords[i] * c);
    }
    return m;
}

const IMat& ChevalleyAlgebra::killing_basis() const {
    if (!killing_ready_) {
        killing_ = IMat(dim_, dim_);
        for (long i = 0; i < dim_; ++i) {
            for (long j = i; j < dim_; ++j) {
                Int acc(0);
                for (long k = 0; k < dim_; ++k) {
                    for (const auto& [l, c1] : basis_bracket(j, k)) {
                        for (const auto& [m2, c2] : basis_bracket(i, l)) {
                            if (m2 == k) acc += Int(c1) * Int(c2);
                        }
                    }
                }
                killing_(i, j) = acc;
                killing_(j, i) = acc;
            }
        }
        killing_ready_ = true;
    }
    return killing_;
}

bool ChevalleyAlgebra::is_nilpotent(const CVec& x) const {
    bool rational = true;
    for (const Cyclo& c : x)
        if (!c.is_rational()) {
            rational = false;
            break;
        }
    if (rational) {
        RMat ad(dim_, dim_);
        {
            RVec xr = to_rat(x);
            for (long i = 0; i < dim_; ++i) {
                if (xr[i] == 0) continue;
                for (long j = 0; j < dim_; ++j)
                    for (const auto& [k, c] : basis_bracket(i, j))
                        ad(k, j) += xr[i] * Rat(c);
            }
        }
        auto [im, den] = clear_denominators(ad);
        std::vector<Int> esym = charpoly_top_elem_sym(im, dim_);
        for (long d = 1; d <= dim_; ++d)
            if (esym[d] != 0) return false;
        return true;
    }
    // cyclotomic coordinates: repeated squaring of the ad matrix
    CMat a = ad_matrix(x);
    long e = 1;
    while (e < dim_) {
        bool zero = true;
        for (const Cyclo& c : a.a)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero) return true;
        CMat b(dim_, dim_);
        for (long i = 0; i < dim_; ++i)
            for (long k = 0; k < dim_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (long j = 0; j < dim_; ++j)
                    if (!a(k, j).is_zero()) b(i, j) += a(i, k) * a(k, j);
            }
        a = std::move(b);
        e *= 2;
    }
    for (const Cyclo& c : a.a)
        if (!c.is_zero()) return false;
    return true;
}

bool ChevalleyAlgebra::is_semisimple(const CVec& x) const {
    bool rational = true;
    for (const Cyclo& c : x)
        if (!c.is_rational()) {
            rational = false;
            break;
        }
    if (rational) {
        RVec xr = to_rat(x);
        Mat<Rat> a = ad_matrix(xr);
        UPoly<Rat> mu = min_poly(a);
        return upoly_squarefree(mu);
    }
    CMat a = ad_matrix(x);
    UPoly<Cyclo> mu = min_poly(a);
    return upoly_squarefree(mu);
}

bool ChevalleyAlgebra::is_regular(const CVec& x) const {
    bool rational = true;
    for (const Cyclo& c : x)
        if (!c.is_rational()) {
            rational = false;
            break;
        }
    long nullity;
    if (rational) {
        Mat<Rat> a = ad_matrix(to_rat(x));
        nullity = dim_ - row_echelon(a);
    } else {
        CMat a = ad_matrix(x);
        nullity = dim_ - row_echelon(a);
    }
    return nullity == rs_.rank;
}

std::vector<long> ChevalleyAlgebra::pinned_automorphism_signs(const DiagramAutomorphism& da) const {
    long nr = rs_.nroots();
    std::vector<long> s(nr, 0);
    // positive roots in index order = by increasing height
    for (long r = 0; r < rs_.npos; ++r) {
        if (rs_.heights[r] == 1) {
            s[r] = 1;
            continue;
        }
        long xi = extraspecial_first(r);
        std::vector<long> rest(rs_.rank);
        for (long i = 0; i < rs_.rank; ++i) rest[i] = rs_.roots[r][i] - rs_.roots[xi][i];
        long eta = rs_.root_index(rest);
        long pxi = permute_root(da, xi), peta = permute_root(da, eta);
        long num = s[xi] * s[eta] * nval(pxi, peta);
        long den = nval(xi, eta);
        if (num % den != 0 || (num / den != 1 && num / den != -1))
            throw std::logic_error("pinned_automorphism_signs: non-unit sign");
        s[r] = num / den;
    }
    for (long r = 0; r < rs_.npos; ++r) s[r + rs_.npos] = s[r];
    return s;
}

long ChevalleyAlgebra::permute_root(const DiagramAutomorphism& da, long root_idx) const {
    const std::vector<long>& r = rs_.roots[root_idx];
    std::vector<long> img(rs_.rank, 0);
    for (long i = 0; i < rs_.rank; ++i) img[da.perm[i]] = r[i];
    long idx = rs_.root_index(img);
    if (idx < 0) throw std::logic_error("permute_root: image is not a root");
    return idx;
}

CVec to_cyclo(const RVec& v) {
    CVec out;
    out.reserve(v.size());
    for (const Rat& x : v) out.emplace_back(x);
    return out;
}

RVec to_rat(const CVec& v) {
    RVec out;
    out.reserve(v.size());
    for (const Cyclo& x : v) out.push_back(x.to_rational());
    return out;
}

bool is_integral(const RVec& v) {
    for (const Rat& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

}  // namespace vinberg
