#include "vinberg/grading.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vinberg/util.hpp"
#include "vinberg/winvariants.hpp"

namespace vinberg {

std::vector<CVec> GradedDecomposition::decompose(const CVec& x) const {
    std::vector<CVec> out(m);
    for (long i = 0; i < m; ++i) out[i] = CVec(pieces[i].size(), Cyclo(0L));
    if (inner) {
        for (long b = 0; b < dim(); ++b) {
            if (x[b].is_zero()) continue;
            out[degree_of[b]][pos_of_basis_[b]] = x[b];
        }
        return out;
    }
    // outer: multiply by the precomputed inverse of the eigenbasis matrix
    CVec coords(dim(), Cyclo(0L));
    for (long i = 0; i < dim(); ++i) {
        for (long j = 0; j < dim(); ++j)
            if (!pinv_(i, j).is_zero() && !x[j].is_zero()) coords[i] += pinv_(i, j) * x[j];
    }
    long off = 0;
    for (long i = 0; i < m; ++i)
        for (size_t k = 0; k < pieces[i].size(); ++k) out[i][k] = coords[off++];
    return out;
}

bool GradedDecomposition::in_piece(const CVec& x, long i) const {
    std::vector<CVec> d = decompose(x);
    for (long j = 0; j < m; ++j) {
        if (j == imod(i)) continue;
        for (const Cyclo& c : d[j])
            if (!c.is_zero()) return false;
    }
    return true;
}

CVec GradedDecomposition::from_piece_coords(long i, const CVec& coords) const {
    const auto& basis = pieces[imod(i)];
    CVec x(dim(), Cyclo(0L));
    for (size_t k = 0; k < basis.size(); ++k) {
        if (coords[k].is_zero()) continue;
        for (long t = 0; t < dim(); ++t)
            if (!basis[k][t].is_zero()) x[t] += coords[k] * basis[k][t];
    }
    return x;
}

CMat GradedDecomposition::ad_block(const CVec& x, long i, long j) const {
    const auto& src = pieces[imod(i)];
    const auto& dst = pieces[imod(j)];
    CMat out((long)dst.size(), (long)src.size());
    for (size_t k = 0; k < src.size(); ++k) {
        CVec b = alg->bracket(x, src[k]);
        std::vector<CVec> dec = decompose(b);
        for (long t = 0; t < m; ++t) {
            if (t == imod(j)) continue;
            for (const Cyclo& c : dec[t])
                if (!c.is_zero()) throw std::logic_error("ad_block: image not in expected piece");
        }
        for (size_t r = 0; r < dst.size(); ++r) out((long)r, (long)k) = dec[imod(j)][r];
    }
    return out;
}

namespace {

// inner principal grading: degrees by root height mod m
GradedDecomposition inner_grading(std::shared_ptr<const ChevalleyAlgebra> alg, long m) {
    const RootSystem& rs = alg->root_system();
    GradedDecomposition gd;
    gd.alg = alg;
    gd.m = m;
    gd.inner = true;
    gd.degree_of.assign(alg->dim(), 0);
    gd.pos_of_basis_.assign(alg->dim(), 0);
    gd.pieces.assign(m, {});
    for (long i = 0; i < rs.rank; ++i) {
        gd.pos_of_basis_[i] = (long)gd.pieces[0].size();
        gd.pieces[0].push_back(alg->basis_elem(i));
    }
    for (long r = 0; r < rs.nroots(); ++r) {
        long d = ((rs.heights[r] % m) + m) % m;
        long b = alg->e_index(r);
        gd.degree_of[b] = d;
        gd.pos_of_basis_[b] = (long)gd.pieces[d].size();
        gd.pieces[d].push_back(alg->root_vector(r));
    }
    return gd;
}

GradedDecomposition outer_grading(std::shared_ptr<const ChevalleyAlgebra> alg,
                                  const GradingSpec& spec) {
    const RootSystem& rs = alg->root_system();
    const DiagramAutomorphism& da = spec.outer;
    long m = spec.m;
    long e = da.order;
    if (m % e != 0) throw std::domain_error("principal_grading: outer order must divide m");
    {
        // reject a permutation that is not an automorphism of this diagram
        for (long i = 0; i < rs.rank; ++i)
            for (long j = 0; j < rs.rank; ++j)
                if (rs.cartan[da.perm[i]][da.perm[j]] != rs.cartan[i][j])
                    throw std::domain_error("principal_grading: not a diagram automorphism");
    }
    std::vector<long> signs = alg->pinned_automorphism_signs(da);

    GradedDecomposition gd;
    gd.alg = alg;
    gd.m = m;
    gd.inner = false;
    gd.pieces.assign(m, {});

    long dim = alg->dim();
    // eigenvectors of theta(zeta) = Ad(rho_check(zeta)) o vartheta, orbit by orbit
    // Cartan block: vartheta permutes the simple coroots
    std::vector<bool> seen(rs.rank, false);
    for (long i0 = 0; i0 < rs.rank; ++i0) {
        if (seen[i0]) continue;
        std::vector<long> cyc;
        long i = i0;
        do {
            cyc.push_back(i);
            seen[i] = true;
            i = da.perm[i];
        } while (i != i0);
        long k = (long)cyc.size();
        // eigenvalues mu with mu^k = 1: mu = zeta_m^(j m/k), j = 0..k-1
        for (long j = 0; j < k; ++j) {
            long d = (j * (m / k)) % m;
            CVec v = alg->zero();
            for (long t = 0; t < k; ++t) v[cyc[t]] = Cyclo::zeta(m, -d * t);
            gd.pieces[d].push_back(std::move(v));
        }
    }
    // root orbits
    std::vector<bool> seen_r(rs.nroots(), false);
    for (long r0 = 0; r0 < rs.nroots(); ++r0) {
        if (seen_r[r0]) continue;
        std::vector<long> orb;
        long r = r0;
        do {
            orb.push_back(r);
            seen_r[r] = true;
            r = alg->permute_root(da, r);
        } while (r != r0);
        long k = (long)orb.size();
        long h = rs.heights[r0];
        long prod_sign = 1;
        for (long t : orb) prod_sign *= signs[t];
        // theta(e_{orb[t]}) = zeta^h * sign(orb[t]) * e_{orb[t+1]}
        // product around the cycle: A = zeta^{k h} * prod_sign = zeta^tt
        long tt = (((k * h) % m) + m) % m;
        if (prod_sign < 0) {
            if (m % 2 != 0)
                throw std::logic_error("outer_grading: sign obstruction with odd m");
            tt = (tt + m / 2) % m;
        }
        if (tt % k != 0) throw std::logic_error("outer_grading: eigenvalue not in mu_m");
        for (long j = 0; j < k; ++j) {
            long d = (tt / k + j * (m / k)) % m;
            // c_{t+1} = c_t * a_t / mu with a_t = zeta^h sign_t, mu = zeta^d
            CVec v = alg->zero();
            Cyclo c(1L);
            for (long t = 0; t < k; ++t) {
                v[alg->e_index(orb[t])] = c;
                c *= Cyclo::zeta(m, h - d) * Cyclo(signs[orb[t]]);
            }
            gd.pieces[d].push_back(std::move(v));
        }
    }
    // inverse of the concatenated eigenbasis
    CMat P(dim, dim);
    long col = 0;
    for (long i = 0; i < m; ++i)
        for (const CVec& v : gd.pieces[i]) {
            for (long t = 0; t < dim; ++t) P(t, col) = v[t];
            ++col;
        }
    if (col != dim) throw std::logic_error("outer_grading: pieces do not sum to full dimension");
    // invert by Gaussian elimination on [P | I]
    CMat aug(dim, 2 * dim);
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) aug(i, j) = P(i, j);
        aug(i, dim + i) = Cyclo(1L);
    }
    if (row_echelon(aug) != dim) throw std::logic_error("outer_grading: eigenbasis is singular");
    gd.pinv_ = CMat(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) gd.pinv_(i, j) = aug(i, dim + j);
    return gd;
}

}  // namespace

GradedDecomposition principal_grading(std::shared_ptr<const ChevalleyAlgebra> alg,
                                      const GradingSpec& spec) {
    if (spec.m < 1) throw std::domain_error("principal_grading: m must be >= 1");
    GradedDecomposition gd =
        spec.is_inner() ? inner_grading(alg, spec.m) : outer_grading(alg, spec);
    gd.spec = spec;
    if (gd.spec.outer.perm.empty()) {
        gd.spec.outer.perm.resize(alg->rank());
        std::iota(gd.spec.outer.perm.begin(), gd.spec.outer.perm.end(), 0L);
        gd.spec.outer.order = 1;
    }
    long total = 0;
    for (auto& p : gd.pieces) total += (long)p.size();
    if (total != alg->dim()) throw std::logic_error("principal_grading: dimension mismatch");
    return gd;
}

bool graded_bracket_check(const GradedDecomposition& gd) {
    const ChevalleyAlgebra& alg = *gd.alg;
    for (long i = 0; i < gd.m; ++i) {
        for (long j = i; j < gd.m; ++j) {
            for (const CVec& u : gd.pieces[i]) {
                for (const CVec& v : gd.pieces[j]) {
                    CVec b = alg.bracket(u, v);
                    if (!gd.in_piece(b, i + j)) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// v in h_1 with integer coordinates on the piece basis
CVec sample_h1(const GradedDecomposition& gd, DetRng& rng) {
    long n = gd.piece_dim(1);
    CVec coords(n, Cyclo(0L));
    bool nonzero = false;
    for (long i = 0; i < n; ++i) {
        long c = rng.range(-3, 3);
        if (c != 0) nonzero = true;
        coords[i] = Cyclo(c);
    }
    if (!nonzero) coords[0] = Cyclo(1L);
    return gd.from_piece_coords(1, coords);
}

long grading_conductor(const GradedDecomposition& gd) {
    return gd.inner ? 1 : gd.m;
}

}  // namespace

StabilityCertificate stability_witness(const GradedDecomposition& gd, long trials, uint64_t seed) {
    const ChevalleyAlgebra& alg = *gd.alg;
    long rank = alg.rank();
    long dim = alg.dim();
    long cond = grading_conductor(gd);
    StabilityCertificate cert;
    cert.seed = seed;
    cert.trials = trials;

    long best_bound = -1;
    CVec best_candidate;
    for (long trial = 0; trial < trials; ++trial) {
        DetRng rng(mix_seed(seed, (uint64_t)trial));
        CVec v = sample_h1(gd, rng);
        // (b) ad(v): h_0 -> h_1 has zero kernel -- certified by full rank mod p
        bool krn_zero = false;
        long h0 = gd.piece_dim(0), h1 = gd.piece_dim(1);
        long observed_nullity_bound = h0;
        CMat blk = gd.ad_block(v, 0, 1);
        for (int pi = 0; pi < 3 && !krn_zero; ++pi) {
            CycloModEnv env = make_cyclo_mod_env(cond, pi);
            FpMat f(h1, h0);
            for (long i = 0; i < h1; ++i)
                for (long j = 0; j < h0; ++j) f(i, j) = env.reduce(blk(i, j));
            long rk = rank_mod_p(f, env.p);
            observed_nullity_bound = std::min(observed_nullity_bound, h0 - rk);
            if (rk == h0) krn_zero = true;
        }
        if (best_bound < 0 || observed_nullity_bound < best_bound) {
            best_bound = observed_nullity_bound;
            best_candidate = v;
        }
        if (!krn_zero) continue;
        // (a)+(c) regular semisimple: the algebraic multiplicity of the zero
        // eigenvalue of ad(v) equals the rank. It is always >= rank, so a
        // single prime with nonzero T^rank coefficient certifies equality.
        bool reg_ss = false;
        CMat ad = alg.ad_matrix(v);
        for (int pi = 0; pi < 3 && !reg_ss; ++pi) {
            CycloModEnv env = make_cyclo_mod_env(cond, pi + 3);
            FpMat f(dim, dim);
            for (long i = 0; i < dim; ++i)
                for (long j = 0; j < dim; ++j)
                    if (!ad(i, j).is_zero()) f(i, j) = env.reduce(ad(i, j));
            std::vector<uint64_t> cp = charpoly_mod_p(std::move(f), env.p);
            for (long t = 0; t < rank; ++t)
                if (cp[t] != 0) throw std::logic_error("stability_witness: charpoly sanity");
            if (cp[rank] != 0) reg_ss = true;
        }
        if (!reg_ss) continue;
        cert.found = true;
        cert.witness = v;
        cert.stabilizer_dim = 0;
        cert.regular_semisimple = true;
        cert.trials = trial + 1;
        return cert;
    }
    // no witness: refine the reported bound exactly for the best candidate
    if (best_bound > 0 && !best_candidate.empty()) {
        CMat blk = gd.ad_block(best_candidate, 0, 1);
        cert.stabilizer_dim = gd.piece_dim(0) - row_echelon(blk);
    } else {
        cert.stabilizer_dim = best_bound;
    }
    cert.found = false;
    return cert;
}

std::vector<long> invariant_degrees_of_B(const GradedDecomposition& gd) {
    const RootSystem& rs = gd.alg->root_system();
    std::vector<long> degrees = rs.invariant_degrees();
    std::vector<long> out;
    if (gd.spec.is_inner()) {
        for (long d : degrees)
            if (d % gd.m == 0) out.push_back(d);
        return out;
    }
    long e = gd.spec.outer.order;
    // theta(zeta_m)(F) = vartheta(F) = zeta_e^a F = zeta_m^{a m / e} F
    std::vector<std::pair<long, long>> shifts = invariant_degree_shifts(rs, gd.spec.outer);
    for (auto [d, a] : shifts) {
        long shift = (a * (gd.m / e)) % gd.m;
        if ((d + shift) % gd.m == 0) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool dimension_identity_check(const GradedDecomposition& gd) {
    long db = (long)invariant_degrees_of_B(gd).size();
    return gd.piece_dim(1) == gd.piece_dim(0) + db;
}

}  // namespace vinberg
