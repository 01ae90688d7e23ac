#pragma once

#include <set>
#include <string>

#include "vinberg/mpoly.hpp"
#include "vinberg/nilpotent.hpp"

namespace vinberg {

// Graded Slodowy slice X_e = e + z_{h_1}(f) together with the full slice
// S_e = e + z_h(f), both with rho x sigma weight data, plus the weights of
// the base B = V // G.
struct SliceData {
    Sl2Triple triple;
    long m = 1;
    long relative_dimension = -1;

    std::vector<CVec> graded_basis;  // ad(h)-eigenbasis of z_{h_1}(f)
    std::vector<long> graded_rho;    // 2 - n per graded basis vector

    std::vector<CVec> full_basis;                      // z_h(f)
    std::vector<std::pair<long, long>> full_weights;   // (2 - n, grading degree k)

    std::vector<long> base_degrees;                    // degrees d of B
    std::vector<std::pair<long, long>> base_weights;   // (2d, printed sigma)

    // printed sigma of a slice vector is 1 - k (represented mod m)
    std::vector<std::pair<long, long>> printed_slice_weights() const;
    std::vector<std::pair<long, long>> printed_base_weights() const { return base_weights; }
};

SliceData slodowy_slice(const GradedDecomposition& gd, const Sl2Triple& triple);

// true iff the graded slice weight multiset equals the base weight multiset;
// requires relative dimension 0
bool is_reduced(const SliceData& sd);

// |base| minus the largest sub-multiset of base matched by slice weights
long corank_check(const SliceData& sd);

struct CurveVar {
    std::string name;
    long rho = 0;
};

// F(x, y, params) = 0 with polynomial variables ordered (x, y, p...)
struct CurveFamily {
    std::vector<CurveVar> vars;    // exactly two
    std::vector<CurveVar> params;  // p_d, weight 2d
    ZetaPoly equation;
    std::string provenance;
    std::vector<std::string> free_coeffs;  // flagged undetermined coefficients

    std::set<std::vector<int>> support() const {
        std::set<std::vector<int>> s;
        for (const auto& [e, c] : equation.terms) s.insert(e);
        return s;
    }
    std::string pretty() const;
};

// weight-driven synthesis (appendix method); relative dimension must be 1
CurveFamily synthesize_curve_family(const GradedDecomposition& gd, const SliceData& sd);

// exact fiber of a Coxeter-grading slice missing the two given affine nodes
// (0 = lowest root, 1..rank = simple roots): x^{c_j} y^{c_k} = p_h
CurveFamily coxeter_slice(const GradedDecomposition& gd, long node_j, long node_k);

// Exact restriction of the invariant map to the graded slice via
// characteristic-polynomial invariants (inner gradings): returns, for each
// surviving degree d, the polynomial e_d(e + sum t_i v_i) in the slice
// coordinates t_i. Coefficients are rational.
struct RestrictedInvariants {
    std::vector<long> degrees;          // surviving degrees, ascending
    std::vector<long> rho_weights;      // of the slice coordinates t_i
    std::vector<QPoly> components;      // in the t-coordinates
};
RestrictedInvariants restrict_invariants_to_slice(const GradedDecomposition& gd,
                                                  const SliceData& sd);

// exact curve from the restricted invariant map (relative dimension 1,
// inner gradings); provenance "invariant-restriction"
CurveFamily slice_invariant_curve(const GradedDecomposition& gd, const SliceData& sd);

// canonicalize scalings (and variable naming) in place; returns residual
// coefficient names that could not be normalized to +-1
void canonicalize_curve(CurveFamily& cf);

// support comparison after canonicalization; free-coefficient monomials on
// either side must appear in the other support
bool curves_match(const CurveFamily& a, const CurveFamily& b);

}  // namespace vinberg
