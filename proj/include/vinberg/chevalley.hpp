#pragma once

#include <map>
#include <vector>

#include "vinberg/linalg.hpp"
#include "vinberg/rootdata.hpp"
#include "vinberg/scalars.hpp"

namespace vinberg {

using CVec = std::vector<Cyclo>;
using RVec = std::vector<Rat>;

// Chevalley basis: indices 0..rank-1 are the simple coroots h_i, index
// rank + r is the root vector e_{roots[r]}. All structure constants are
// integers; [e_a, e_b] = N(a,b) e_{a+b}, [e_a, e_{-a}] = h_a, and
// [h_i, e_a] = <a, alpha_i^vee> e_a.
class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    long rank() const { return rs_.rank; }
    long dim() const { return dim_; }
    long e_index(long root_idx) const { return rs_.rank + root_idx; }
    long root_of_basis(long basis_idx) const { return basis_idx - rs_.rank; }  // -ve if Cartan

    // structure constant N(a,b) for roots with roots[a]+roots[b] a root
    long n_const(long a, long b) const;
    // chain length p = max{k : b - k a is a root}
    long chain_down(long a, long b) const;

    // bracket of basis elements, as a sparse list of (basis index, coeff)
    const std::vector<std::pair<long, long>>& basis_bracket(long i, long j) const {
        return table_[(size_t)i * dim_ + j];
    }

    // coroot of roots[r] in the simple-coroot basis (integral)
    std::vector<long> coroot(long r) const;

    template <class K>
    std::vector<K> bracket(const std::vector<K>& x, const std::vector<K>& y) const {
        if ((long)x.size() != dim_ || (long)y.size() != dim_)
            throw std::invalid_argument("bracket: dimension mismatch");
        std::vector<K> out(dim_, K(0));
        for (long i = 0; i < dim_; ++i) {
            if (k_is_zero(x[i])) continue;
            for (long j = 0; j < dim_; ++j) {
                if (k_is_zero(y[j])) continue;
                for (const auto& [k, c] : basis_bracket(i, j)) out[k] = out[k] + x[i] * y[j] * K(c);
            }
        }
        return out;
    }

    template <class K>
    Mat<K> ad_matrix(const std::vector<K>& x) const {
        Mat<K> m(dim_, dim_);
        for (long i = 0; i < dim_; ++i) {
            if (k_is_zero(x[i])) continue;
            for (long j = 0; j < dim_; ++j) {
                for (const auto& [k, c] : basis_bracket(i, j)) m(k, j) = m(k, j) + x[i] * K(c);
            }
        }
        return m;
    }

    // ad matrix of an integer-coordinate element
    IMat ad_int(const std::vector<long>& coords) const;

    // Killing form on basis elements (computed lazily, cached)
    const IMat& killing_basis() const;

    template <class K>
    K killing_form(const std::vector<K>& x, const std::vector<K>& y) const {
        const IMat& kb = killing_basis();
        K s(0);
        for (long i = 0; i < dim_; ++i) {
            if (k_is_zero(x[i])) continue;
            for (long j = 0; j < dim_; ++j)
                if (!k_is_zero(y[j]) && kb(i, j) != 0) s = s + x[i] * y[j] * K(kb(i, j).get_si());
        }
        return s;
    }

    bool is_nilpotent(const CVec& x) const;
    bool is_semisimple(const CVec& x) const;
    bool is_regular(const CVec& x) const;

    // element helpers
    CVec zero() const { return CVec(dim_, Cyclo(0L)); }
    CVec basis_elem(long i) const {
        CVec v = zero();
        v[i] = Cyclo(1L);
        return v;
    }
    CVec root_vector(long root_idx) const { return basis_elem(e_index(root_idx)); }

    // signs s_a with theta(e_a) = s_a e_{perm(a)} making the pinned diagram
    // automorphism a Lie algebra automorphism (s = +1 on simple root vectors)
    std::vector<long> pinned_automorphism_signs(const DiagramAutomorphism& da) const;
    // image root index under a diagram automorphism
    long permute_root(const DiagramAutomorphism& da, long root_idx) const;

private:
    RootSystem rs_;
    long dim_;
    std::vector<std::vector<std::pair<long, long>>> table_;
    mutable std::map<std::pair<long, long>, long> nmemo_;
    mutable IMat killing_;
    mutable bool killing_ready_ = false;

    long nval(long a, long b) const;
    long extraspecial_first(long sum_idx) const;  // index of xi for gamma
    void build_table();
};

// convenience conversions
CVec to_cyclo(const RVec& v);
RVec to_rat(const CVec& v);  // throws if any coordinate is irrational
bool is_integral(const RVec& v);

}  // namespace vinberg
