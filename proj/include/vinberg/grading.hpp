#pragma once

#include <memory>
#include <optional>

#include "vinberg/chevalley.hpp"

namespace vinberg {

struct GradingSpec {
    long m = 1;
    DiagramAutomorphism outer;  // identity for inner gradings
    bool is_inner() const { return outer.perm.empty() || outer.is_identity(); }
};

// A Z/mZ-grading of a Chevalley algebra coming from a principal mu_m-action.
// Inner case: rational, basis-aligned (degree_of). Outer case: eigenbasis over
// Q(zeta_m), each eigenvector supported on a single theta-orbit of the basis.
struct GradedDecomposition {
    std::shared_ptr<const ChevalleyAlgebra> alg;
    long m = 1;
    GradingSpec spec;
    bool inner = true;
    std::vector<std::vector<CVec>> pieces;  // pieces[i] = basis of h_i
    std::vector<long> degree_of;            // inner only: degree of each algebra basis vector

    long dim() const { return alg->dim(); }
    long piece_dim(long i) const { return (long)pieces[imod(i)].size(); }
    long imod(long i) const { return ((i % m) + m) % m; }

    // coordinates of x in the concatenated piece bases (inner: fast path)
    std::vector<CVec> decompose(const CVec& x) const;
    bool in_piece(const CVec& x, long i) const;
    // element of the piece from coefficients on its basis
    CVec from_piece_coords(long i, const CVec& coords) const;

    // matrix of ad(x): piece[i] -> piece[j] in piece coordinates (x homogeneous
    // of degree j - i)
    CMat ad_block(const CVec& x, long i, long j) const;

    // construction details (filled by principal_grading)
    CMat pinv_;                       // outer: inverse of the concatenated eigenbasis matrix
    std::vector<long> pos_of_basis_;  // inner: position inside the piece
};

GradedDecomposition principal_grading(std::shared_ptr<const ChevalleyAlgebra> alg,
                                      const GradingSpec& spec);

bool graded_bracket_check(const GradedDecomposition& gd);

struct StabilityCertificate {
    bool found = false;
    CVec witness;                 // empty when not found
    long stabilizer_dim = -1;     // 0 when found; min observed bound otherwise
    bool regular_semisimple = false;
    uint64_t seed = 0;
    long trials = 0;
};

StabilityCertificate stability_witness(const GradedDecomposition& gd, long trials = 64,
                                       uint64_t seed = 1);

// Degrees of the basic invariants of B = V // G (sorted, with multiplicity).
std::vector<long> invariant_degrees_of_B(const GradedDecomposition& gd);

// dim h_1 == dim h_0 + dim B (eqn-quotient); requires a stable grading.
bool dimension_identity_check(const GradedDecomposition& gd);

}  // namespace vinberg
