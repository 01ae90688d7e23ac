#pragma once

#include "vinberg/slice.hpp"

namespace vinberg {

// monomial-linear substitution x_i -> coeff_i * x_{perm(i)}
struct MonLin {
    std::vector<long> perm;
    std::vector<Cyclo> coeff;
};

// One surface-singularity normal form with its finite symmetry group and the
// order-m automorphism acting on the slice coordinates.
struct SingularityDatum {
    char htype = 0;
    long hrank = 0;
    long m = 1;
    std::string variant;           // distinguishes several sigma normal forms
    ZetaPoly f_std;                // in variables x, y, z (indices 0, 1, 2)
    std::vector<long> var_weights; // rho weights of x, y, z
    std::vector<MonLin> gamma;
    MonLin sigma;
    long dmax = 0;       // top invariant degree; f_std has weight 2*dmax
    long expected_mu = 0;  // Milnor number of f_std
};

// the tabulated datum; throws std::domain_error for unsupported combinations
SingularityDatum singularity_table(char type, long rank, long m, const std::string& variant);
// all sigma normal forms for the pair (type-with-outer-order, m)
std::vector<SingularityDatum> singularity_variants(char type, long rank, long m,
                                                   long outer_order);

// monomial basis of k[x,y,z]/(df/dx, df/dy, df/dz) under the weighted order
std::vector<std::vector<int>> jacobian_basis(const SingularityDatum& d);
std::vector<std::vector<int>> gamma_fixed_subbasis(const SingularityDatum& d,
                                                   const std::vector<std::vector<int>>& basis);

struct SemiversalFamily {
    SingularityDatum datum;
    std::vector<std::vector<int>> gi;  // deformation monomials (Gamma-fixed)
    std::vector<long> t_rho;           // rho weight of t_i (= 2 dmax - rho(g_i))
    std::vector<Cyclo> t_chi;          // sigma acts on t_i by this root of unity
    std::vector<std::string> names;    // p_{rho/2}, primed on repeats
    ZetaPoly total;                    // f_std + sum t_i g_i in vars x,y,z,t_1..t_n
};

SemiversalFamily semiversal_family(const SingularityDatum& d);

// sigma-fixed locus of the semiversal family as a family of curves
CurveFamily sigma_fixed_curve(const SemiversalFamily& fam);

// the full Table-1 pipeline for one built grading: empty when the grading is
// not stable or the pair is not subregular adapted
std::vector<CurveFamily> classify_subregular(const GradedDecomposition& gd, long trials = 64,
                                             uint64_t seed = 1);

}  // namespace vinberg
