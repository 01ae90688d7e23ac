#pragma once

#include <string>

#include "vinberg/grading.hpp"

namespace vinberg {

struct Sl2Triple {
    CVec e, h, f;
    bool h_in_cartan = false;
};

// Graded Jacobson-Morozov completion. Prefers h inside the Cartan subalgebra
// when the linear system allows it. Throws std::domain_error if e is not a
// nonzero nilpotent element of h_1.
Sl2Triple complete_sl2(const GradedDecomposition& gd, const CVec& e);

// dim ker(ad(x): h_i -> h_{i+deg}) for i = 0..m-1
std::vector<long> centralizer_dims(const GradedDecomposition& gd, const CVec& x, long deg = 1);
long centralizer_total(const GradedDecomposition& gd, const CVec& x, long deg = 1);

// Dynkin label: values alpha_i(h') for the dominant Weyl representative of h.
// Requires h in the Cartan subalgebra with rational integer eigenvalues.
std::vector<long> dynkin_label(const ChevalleyAlgebra& alg, const CVec& h);

// (rho weight 2-n, grading degree k) pairs of the graded and full Slodowy
// slice bases; computed by the slice module but carried here for orbit
// identification.
struct OrbitData {
    std::vector<long> dynkin;
    long relative_dimension = -1;                       // dim z_{h_0}(e)
    std::vector<long> centralizer_dims;                 // per piece
    std::vector<std::pair<long, long>> slice_weights;   // full slice, sorted (2-n, k)
    bool operator==(const OrbitData& o) const {
        return dynkin == o.dynkin && relative_dimension == o.relative_dimension &&
               centralizer_dims == o.centralizer_dims && slice_weights == o.slice_weights;
    }
    bool operator<(const OrbitData& o) const {
        if (relative_dimension != o.relative_dimension)
            return relative_dimension < o.relative_dimension;
        if (dynkin != o.dynkin) return dynkin < o.dynkin;
        if (centralizer_dims != o.centralizer_dims) return centralizer_dims < o.centralizer_dims;
        return slice_weights < o.slice_weights;
    }
};

struct FoundOrbit {
    std::vector<long> support;  // positions in the h_1 piece basis
    std::vector<long> coeffs;
    CVec rep;
    Sl2Triple triple;
    OrbitData data;
};

struct SearchOptions {
    long max_support = 6;
    uint64_t seed = 7;
    long coeff_trials = 2;          // 1 all-ones + random draws from {1,-1,2,-2}
    long max_candidates = 300000;   // candidate budget (enumeration cap)
    long keep_reldim_max = 1;
};

// Enumerate nilpotents supported on subsets of the h_1 basis, keep those of
// relative dimension <= keep_reldim_max, deduplicate by OrbitData.
std::vector<FoundOrbit> search_nilpotents(const GradedDecomposition& gd,
                                          const SearchOptions& opt);

// OrbitData of one explicit nilpotent
FoundOrbit classify_nilpotent(const GradedDecomposition& gd, const CVec& e);

// Paper-pinned representatives. kind: "regular" (sum of simple root
// vectors; any inner grading), "subregular" (B_l/2 and C_l/2 classical
// cases; C gives two representatives).
std::vector<CVec> seeded_representatives(const GradedDecomposition& gd,
                                         const std::string& kind, uint64_t seed = 7);

// multiset of eigenvalues of ad(h) acting on piece `i`
std::vector<long> ad_h_spectrum(const GradedDecomposition& gd, const CVec& h, long i);

// ad(h)-eigenbasis of the full centralizer z_h(f), graded piece by piece;
// weights are (2 - n, k) with n the ad(h) eigenvalue and k the degree.
struct SliceRaw {
    std::vector<CVec> vectors;
    std::vector<std::pair<long, long>> weights;
};
SliceRaw slodowy_raw(const GradedDecomposition& gd, const Sl2Triple& triple);

}  // namespace vinberg
