#include "vinberg/slice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "vinberg/util.hpp"
#include "vinberg/winvariants.hpp"

namespace vinberg {

namespace {

std::vector<long> graded_base_rho(const SliceData& sd) {
    std::vector<long> out;
    for (auto& [w, s] : sd.base_weights)
        if (s == 0) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<long, long>> SliceData::printed_slice_weights() const {
    std::vector<std::pair<long, long>> out;
    for (auto& [w, k] : full_weights) out.push_back({w, ((1 - k) % m + m) % m});
    std::sort(out.begin(), out.end());
    return out;
}

SliceData slodowy_slice(const GradedDecomposition& gd, const Sl2Triple& triple) {
    SliceData sd;
    sd.triple = triple;
    sd.m = gd.m;
    SliceRaw raw = slodowy_raw(gd, triple);
    sd.full_basis = raw.vectors;
    sd.full_weights = raw.weights;
    for (size_t i = 0; i < raw.vectors.size(); ++i) {
        if (raw.weights[i].second == gd.imod(1)) {
            sd.graded_basis.push_back(raw.vectors[i]);
            sd.graded_rho.push_back(raw.weights[i].first);
        }
    }
    sd.relative_dimension = centralizer_dims(gd, triple.e, 1)[0];
    // base weights: all ambient degrees with printed sigma = -(d + shift) mod m
    const RootSystem& rs = gd.alg->root_system();
    std::vector<std::pair<long, long>> shifts;
    if (gd.spec.is_inner()) {
        for (long d : rs.invariant_degrees()) shifts.push_back({d, 0});
    } else {
        long e = gd.spec.outer.order;
        for (auto [d, a] : invariant_degree_shifts(rs, gd.spec.outer))
            shifts.push_back({d, (a * (gd.m / e)) % gd.m});
    }
    for (auto [d, shift] : shifts) {
        long s = ((-(d + shift)) % gd.m + gd.m) % gd.m;
        sd.base_weights.push_back({2 * d, s});
        sd.base_degrees.push_back(d);
    }
    std::sort(sd.base_weights.begin(), sd.base_weights.end());
    std::sort(sd.base_degrees.begin(), sd.base_degrees.end());
    // all rho weights on a slice are >= 2
    for (auto& [w, k] : sd.full_weights)
        if (w < 2) throw std::logic_error("slodowy_slice: rho weight below 2");
    return sd;
}

bool is_reduced(const SliceData& sd) {
    if (sd.relative_dimension != 0)
        throw std::domain_error("is_reduced: relative dimension must be 0");
    std::vector<long> slice = sd.graded_rho;
    std::sort(slice.begin(), slice.end());
    return slice == graded_base_rho(sd);
}

long corank_check(const SliceData& sd) {
    std::vector<long> base = graded_base_rho(sd);
    std::multiset<long> slice(sd.graded_rho.begin(), sd.graded_rho.end());
    long matched = 0;
    for (long w : base) {
        auto it = slice.find(w);
        if (it != slice.end()) {
            slice.erase(it);
            ++matched;
        }
    }
    return (long)base.size() - matched;
}

namespace {

std::string param_name(long degree, bool prime) {
    std::ostringstream os;
    os << "p" << degree;
    if (prime) os << "p";
    return os.str();
}

// exponent vectors over given weights with target total weight
void weight_monomials_rec(const std::vector<long>& w, long target, size_t i, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (i == w.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    // remaining weights are positive, bound the exponent
    for (long e = 0; e * w[i] <= target; ++e) {
        cur[i] = (int)e;
        weight_monomials_rec(w, target - e * w[i], i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<std::vector<int>> weight_monomials(const std::vector<long>& w, long target) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(w.size(), 0);
    weight_monomials_rec(w, target, 0, cur, out);
    return out;
}

}  // namespace

CurveFamily synthesize_curve_family(const GradedDecomposition& gd, const SliceData& sd) {
    if (sd.relative_dimension != 1)
        throw std::domain_error("synthesize_curve_family: relative dimension must be 1");
    std::vector<long> base = graded_base_rho(sd);
    std::multiset<long> slice(sd.graded_rho.begin(), sd.graded_rho.end());
    // matched base weights ride along; the single unmatched one is the target
    std::vector<long> matched;
    std::vector<long> unmatched_base;
    for (long w : base) {
        auto it = slice.find(w);
        if (it != slice.end()) {
            slice.erase(it);
            matched.push_back(w);
        } else {
            unmatched_base.push_back(w);
        }
    }
    if (unmatched_base.size() != 1)
        throw std::domain_error("synthesize_curve_family: corank is not 1");
    long wmax = unmatched_base[0];
    if (wmax != base.back())
        throw std::logic_error("synthesize_curve_family: corank direction is not the top weight");
    if (slice.size() != 2)
        throw std::logic_error("synthesize_curve_family: expected two free slice coordinates");
    long wx = *slice.begin(), wy = *slice.rbegin();

    CurveFamily cf;
    cf.provenance = "weight-synthesis";
    cf.vars.push_back({"x", wx});
    cf.vars.push_back({"y", wy});
    std::map<long, long> seen_degree;
    for (long w : matched) {
        bool prime = seen_degree[w / 2]++ > 0;
        cf.params.push_back({param_name(w / 2, prime), w});
    }
    cf.params.push_back({param_name(wmax / 2, false), wmax});
    long nv = 2 + (long)cf.params.size();
    std::vector<long> weights{wx, wy};
    for (auto& p : cf.params) weights.push_back(p.rho);

    cf.equation = ZetaPoly(nv);
    std::vector<std::vector<int>> monos = weight_monomials(weights, wmax);
    // split pure (x,y only) from parameter monomials
    std::vector<std::vector<int>> pure, mixed;
    for (auto& e : monos) {
        bool has_param = false;
        for (long i = 2; i < nv; ++i)
            if (e[i]) has_param = true;
        // drop the target parameter itself from the RHS candidates
        if (has_param) {
            if (e[nv - 1] > 0) continue;  // p_max only enters as the image coordinate
            mixed.push_back(e);
        } else {
            pure.push_back(e);
        }
    }
    // prune pure part: the central fiber is singular at the origin, so no
    // linear monomials; a triangular shift of y removes the y^{bmax-1} layer
    long bmax = 0;
    for (auto& e : pure) bmax = std::max<long>(bmax, e[1]);
    std::vector<std::vector<int>> pure2;
    for (auto& e : pure) {
        long a = e[0], b = e[1];
        if (a + b <= 1) continue;                 // smooth linear term
        if (bmax >= 2 && b == bmax - 1) continue;  // completed power in y
        pure2.push_back(e);
    }
    // assemble: the highest pure y-power gets coefficient -1, the rest +1
    std::sort(pure2.begin(), pure2.end(), [](const std::vector<int>& l, const std::vector<int>& r) {
        if (l[1] != r[1]) return l[1] > r[1];
        return l[0] > r[0];
    });
    for (size_t i = 0; i < pure2.size(); ++i)
        cf.equation.add_term(pure2[i], Cyclo(i == 0 ? -1L : 1L));
    // parameter monomials ride along with undetermined coefficients
    for (auto& e : mixed) {
        std::ostringstream nm;
        nm << "c[";
        bool first = true;
        for (long i = 0; i < nv; ++i)
            if (e[i]) {
                if (!first) nm << "*";
                first = false;
                nm << (i == 0 ? "x" : i == 1 ? "y" : cf.params[i - 2].name);
                if (e[i] > 1) nm << "^" << e[i];
            }
        nm << "]";
        cf.free_coeffs.push_back(nm.str());
        cf.equation.add_term(e, Cyclo(1L));
    }
    // the image coordinate p_max itself
    std::vector<int> pmax(nv, 0);
    pmax[nv - 1] = 1;
    cf.equation.add_term(pmax, Cyclo(1L));
    return cf;
}

CurveFamily coxeter_slice(const GradedDecomposition& gd, long node_j, long node_k) {
    const ChevalleyAlgebra& alg = *gd.alg;
    const RootSystem& rs = alg.root_system();
    if (!gd.spec.is_inner() || gd.m != rs.coxeter_number())
        throw std::domain_error("coxeter_slice: grading is not the Coxeter grading");
    long rank = rs.rank;
    if (node_j == node_k || node_j < 0 || node_k < 0 || node_j > rank || node_k > rank)
        throw std::domain_error("coxeter_slice: invalid affine node indices");
    // affine marks: c_0 = 1 and the coefficients of the highest root
    std::vector<long> marks(rank + 1, 1);
    std::vector<long> hr = rs.highest_root();
    for (long i = 0; i < rank; ++i) marks[i + 1] = hr[i];
    // node -> root index
    auto node_root = [&](long node) {
        if (node == 0) return rs.lowest_root_index();
        std::vector<long> s(rank, 0);
        s[node - 1] = 1;
        return rs.root_index(s);
    };
    CVec e = alg.zero();
    for (long node = 0; node <= rank; ++node) {
        if (node == node_j || node == node_k) continue;
        e[alg.e_index(node_root(node))] = Cyclo(1L);
    }
    Sl2Triple triple = complete_sl2(gd, e);
    SliceData sd = slodowy_slice(gd, triple);
    if ((long)sd.graded_basis.size() != 2)
        throw std::logic_error("coxeter_slice: slice dimension is not 2");
    // identify the slice directions with the missing node root vectors
    long bj = alg.e_index(node_root(node_j)), bk = alg.e_index(node_root(node_k));
    long wj = -1, wk = -1;
    for (size_t i = 0; i < sd.graded_basis.size(); ++i) {
        if (!sd.graded_basis[i][bj].is_zero()) wj = sd.graded_rho[i];
        if (!sd.graded_basis[i][bk].is_zero()) wk = sd.graded_rho[i];
    }
    if (wj < 0 || wk < 0)
        throw std::logic_error("coxeter_slice: slice is not spanned by the missing nodes");
    CurveFamily cf;
    cf.provenance = "coxeter";
    long cj = marks[node_j], ck = marks[node_k];
    // order so that x gets the smaller exponent's variable... keep (j, k) order
    cf.vars.push_back({"x", wj});
    cf.vars.push_back({"y", wk});
    long h = rs.coxeter_number();
    cf.params.push_back({param_name(h, false), 2 * h});
    cf.equation = ZetaPoly(3);
    std::vector<int> mono{(int)cj, (int)ck, 0};
    cf.equation.add_term(mono, Cyclo(-1L));
    cf.equation.add_term({0, 0, 1}, Cyclo(1L));
    return cf;
}

RestrictedInvariants restrict_invariants_to_slice(const GradedDecomposition& gd,
                                                  const SliceData& sd) {
    if (!gd.inner)
        throw std::domain_error("restrict_invariants_to_slice: inner gradings only");
    const ChevalleyAlgebra& alg = *gd.alg;
    RestrictedInvariants out;
    for (size_t i = 0; i < sd.base_weights.size(); ++i)
        if (sd.base_weights[i].second == 0) out.degrees.push_back(sd.base_weights[i].first / 2);
    std::sort(out.degrees.begin(), out.degrees.end());
    out.rho_weights = sd.graded_rho;
    long nslice = (long)sd.graded_basis.size();
    // integer slice directions (primitive multiples are a coordinate choice)
    std::vector<std::vector<long>> dirs;
    for (const CVec& v : sd.graded_basis) {
        RMat col(alg.dim(), 1);
        for (long b = 0; b < alg.dim(); ++b) col(b, 0) = v[b].to_rational();
        auto [im, den] = clear_denominators(col);
        Int g(0);
        for (long b = 0; b < alg.dim(); ++b) g = gcd(g, im(b, 0));
        std::vector<long> d(alg.dim());
        for (long b = 0; b < alg.dim(); ++b) {
            Int q = im(b, 0) / g;
            if (!q.fits_slong_p())
                throw std::logic_error("restrict_invariants_to_slice: direction overflow");
            d[b] = q.get_si();
        }
        dirs.push_back(std::move(d));
    }
    std::vector<long> e_int(alg.dim());
    for (long b = 0; b < alg.dim(); ++b) {
        Rat v = sd.triple.e[b].to_rational();
        if (v.get_den() != 1)
            throw std::domain_error("restrict_invariants_to_slice: representative not integral");
        e_int[b] = rat_to_long(v);
    }
    long dmax = out.degrees.empty() ? 0 : out.degrees.back();
    // monomial supports per degree and the total unknown count
    std::vector<std::vector<std::vector<int>>> monos;
    long max_unknowns = 0;
    for (long d : out.degrees) {
        monos.push_back(weight_monomials(out.rho_weights, 2 * d));
        max_unknowns = std::max<long>(max_unknowns, (long)monos.back().size());
    }
    long npoints = max_unknowns + 4;
    DetRng rng(20240311);
    std::vector<std::vector<long>> points;
    for (long t = 0; t < npoints; ++t) {
        std::vector<long> pt(nslice);
        for (auto& x : pt) x = rng.range(-5, 5);
        points.push_back(std::move(pt));
    }
    // evaluate the elementary symmetric invariants at each sample point
    std::vector<std::vector<Int>> esym(npoints);
    for (long t = 0; t < npoints; ++t) {
        std::vector<long> coords = e_int;
        for (long i = 0; i < nslice; ++i)
            for (long b = 0; b < alg.dim(); ++b) coords[b] += points[t][i] * dirs[i][b];
        IMat ad = alg.ad_int(coords);
        esym[t] = charpoly_top_elem_sym(ad, dmax);
    }
    // solve for each component
    for (size_t di = 0; di < out.degrees.size(); ++di) {
        long d = out.degrees[di];
        const auto& ms = monos[di];
        long nm = (long)ms.size();
        RMat sys(npoints, nm);
        std::vector<Rat> rhs(npoints);
        for (long t = 0; t < npoints; ++t) {
            for (long c = 0; c < nm; ++c) {
                Rat val(1);
                for (long i = 0; i < nslice; ++i)
                    for (int q = 0; q < ms[c][i]; ++q) val *= Rat(points[t][i]);
                sys(t, c) = val;
            }
            rhs[t] = Rat(esym[t][d]);
        }
        // unique solution required: the monomials are linearly independent as
        // functions, so enough random points give full column rank
        RMat check = sys;
        if (row_echelon(check) != nm)
            throw std::logic_error("restrict_invariants_to_slice: sample points degenerate");
        auto sol = solve_linear(sys, rhs);
        if (!sol)
            throw std::logic_error("restrict_invariants_to_slice: inconsistent samples");
        QPoly comp(nslice);
        for (long c = 0; c < nm; ++c)
            if ((*sol)[c] != 0) comp.add_term(ms[c], (*sol)[c]);
        out.components.push_back(std::move(comp));
    }
    return out;
}

CurveFamily slice_invariant_curve(const GradedDecomposition& gd, const SliceData& sd) {
    if (sd.relative_dimension != 1)
        throw std::domain_error("slice_invariant_curve: relative dimension must be 1");
    RestrictedInvariants ri = restrict_invariants_to_slice(gd, sd);
    long nslice = (long)sd.graded_basis.size();
    long ndeg = (long)ri.degrees.size();
    if (nslice != ndeg + 1)
        throw std::logic_error("slice_invariant_curve: slice dimension mismatch");
    // match slice coordinates to base weights, one per degree below the top
    std::vector<long> matched_pos;  // slice position matched to degrees[k], k ascending
    std::vector<bool> used(nslice, false);
    for (long k = 0; k + 1 < ndeg; ++k) {
        long want = 2 * ri.degrees[k];
        long found = -1;
        for (long i = 0; i < nslice; ++i)
            if (!used[i] && ri.rho_weights[i] == want) {
                found = i;
                break;
            }
        if (found < 0) throw std::logic_error("slice_invariant_curve: matched weight missing");
        used[found] = true;
        matched_pos.push_back(found);
    }
    std::vector<long> free_pos;
    for (long i = 0; i < nslice; ++i)
        if (!used[i]) free_pos.push_back(i);
    if (free_pos.size() != 2) throw std::logic_error("slice_invariant_curve: need 2 variables");
    if (ri.rho_weights[free_pos[0]] > ri.rho_weights[free_pos[1]])
        std::swap(free_pos[0], free_pos[1]);

    // combined ring: vars t_0..t_{n-1}, params q_0..q_{ndeg-1}
    long nv = nslice + ndeg;
    auto lift = [&](const QPoly& p) {
        ZetaPoly out(nv);
        for (const auto& [e, c] : p.terms) {
            std::vector<int> e2(nv, 0);
            for (long i = 0; i < nslice; ++i) e2[i] = e[i];
            out.add_term(e2, Cyclo(c));
        }
        return out;
    };
    // triangular elimination: for k ascending, solve t_{matched_pos[k]} from
    // q_k = comp_k and substitute everywhere above
    std::vector<ZetaPoly> comps;
    for (long k = 0; k < ndeg; ++k) comps.push_back(lift(ri.components[k]));
    for (long k = 0; k + 1 < ndeg; ++k) {
        long tv = matched_pos[k];
        // comp_k = c * t_tv + rest (t_tv appears linearly; its weight equals
        // the component weight and every other monomial misses it)
        Cyclo lead(0L);
        ZetaPoly rest(nv);
        for (const auto& [e, c] : comps[k].terms) {
            if (e[tv] == 1) {
                bool alone = true;
                for (long i = 0; i < nv; ++i)
                    if (i != tv && e[i]) alone = false;
                if (alone) {
                    lead = c;
                    continue;
                }
            }
            if (e[tv] != 0)
                throw std::logic_error("slice_invariant_curve: non-triangular component");
            rest.add_term(e, c);
        }
        if (lead.is_zero())
            throw std::logic_error("slice_invariant_curve: invariant misses its coordinate");
        // t_tv = (q_k - rest) / lead
        ZetaPoly qk = ZetaPoly::var(nv, nslice + k, Cyclo(1L));
        ZetaPoly subst = (qk - rest).scaled(lead.inverse());
        for (long k2 = k + 1; k2 < ndeg; ++k2) comps[k2] = comps[k2].substituted(tv, subst);
    }
    // the top component gives the curve: q_top = comp_top(x, y, q_lower)
    ZetaPoly top = comps[ndeg - 1];
    CurveFamily cf;
    cf.provenance = "invariant-restriction";
    cf.vars.push_back({"x", ri.rho_weights[free_pos[0]]});
    cf.vars.push_back({"y", ri.rho_weights[free_pos[1]]});
    std::map<long, long> seen_degree;
    for (long k = 0; k + 1 < ndeg; ++k) {
        bool prime = seen_degree[ri.degrees[k]]++ > 0;
        cf.params.push_back({param_name(ri.degrees[k], prime), 2 * ri.degrees[k]});
    }
    cf.params.push_back({param_name(ri.degrees[ndeg - 1], false), 2 * ri.degrees[ndeg - 1]});
    // remap variables: (free0, free1, q_0..q_{ndeg-1}) -> (0, 1, 2..)
    long outv = 2 + ndeg;
    cf.equation = ZetaPoly(outv);
    for (const auto& [e, c] : top.terms) {
        std::vector<int> e2(outv, 0);
        for (long i = 0; i < nslice; ++i) {
            if (e[i] == 0) continue;
            if (i == free_pos[0]) e2[0] = e[i];
            else if (i == free_pos[1]) e2[1] = e[i];
            else throw std::logic_error("slice_invariant_curve: residual matched coordinate");
        }
        for (long k = 0; k + 1 < ndeg; ++k) e2[2 + k] = e[nslice + k];
        cf.equation.add_term(e2, Cyclo(0L) - c);
    }
    std::vector<int> qtop(outv, 0);
    qtop[outv - 1] = 1;
    cf.equation.add_term(qtop, Cyclo(1L));  // q_top - comp = 0
    return cf;
}

namespace {

// integer-combination representation of w over rows, if any
std::optional<std::vector<Rat>> rational_combo(const std::vector<std::vector<Rat>>& rows,
                                               const std::vector<Rat>& w) {
    if (rows.empty()) return std::nullopt;
    RMat m((long)w.size(), (long)rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < w.size(); ++i) m((long)i, (long)r) = rows[r][i];
    return solve_linear(m, w);
}

}  // namespace

void canonicalize_curve(CurveFamily& cf) {
    long nv = 2 + (long)cf.params.size();
    if (cf.equation.is_zero()) return;
    // ensure x has the smaller weight
    if (cf.vars[0].rho > cf.vars[1].rho) {
        std::swap(cf.vars[0], cf.vars[1]);
        ZetaPoly ne(nv);
        for (const auto& [e, c] : cf.equation.terms) {
            std::vector<int> e2 = e;
            std::swap(e2[0], e2[1]);
            ne.add_term(e2, c);
        }
        cf.equation = ne;
    }
    cf.vars[0].name = "x";
    cf.vars[1].name = "y";
    // anchor: highest pure power in y, then x (printed on the left)
    std::vector<int> anchor;
    for (const auto& [e, c] : cf.equation.terms) {
        bool pure = true;
        for (long i = 2; i < nv; ++i)
            if (e[i]) pure = false;
        if (!pure) continue;
        if (anchor.empty() || e[1] > anchor[1] || (e[1] == anchor[1] && e[0] > anchor[0]))
            anchor = e;
    }
    // scaling normalization: generators lambda_x, lambda_y, lambda_p_i and a
    // global scalar; a monomial's exponent vector over these decides whether
    // its coefficient can be scaled to the target
    std::vector<std::vector<Rat>> fixed_vecs;
    auto mono_vec = [&](const std::vector<int>& e) {
        std::vector<Rat> v(nv + 1);
        for (long i = 0; i < nv; ++i) v[i] = Rat(e[i]);
        v[nv] = 1;  // global scalar
        return v;
    };
    std::vector<std::vector<int>> order;
    if (!anchor.empty()) order.push_back(anchor);
    for (const auto& [e, c] : cf.equation.terms)
        if (e != anchor) order.push_back(e);
    std::sort(order.begin() + (anchor.empty() ? 0 : 1), order.end());
    std::vector<Cyclo> fixed_ratio;  // lambda^{v_i} = target_i / original_i
    ZetaPoly out(nv);
    for (const auto& e : order) {
        Cyclo c = cf.equation.terms.at(e);
        Cyclo target = (e == anchor) ? Cyclo(-1L) : Cyclo(1L);
        auto combo = rational_combo(fixed_vecs, mono_vec(e));
        if (!combo) {
            out.add_term(e, target);
            fixed_vecs.push_back(mono_vec(e));
            fixed_ratio.push_back(target * c.inverse());
            continue;
        }
        // forced coefficient c * prod ratio_i^{a_i}, valid when integral
        bool integral = true;
        for (const Rat& a : *combo)
            if (a.get_den() != 1) integral = false;
        if (!integral) {
            out.add_term(e, c);  // unit-lattice torsion; keep the raw value
            continue;
        }
        Cyclo forced = c;
        for (size_t i = 0; i < combo->size(); ++i) {
            long a = rat_to_long((*combo)[i]);
            if (a != 0) forced = forced * fixed_ratio[i].pow(a);
        }
        out.add_term(e, forced);
    }
    cf.equation = out;
}

std::string CurveFamily::pretty() const {
    long nv = 2 + (long)params.size();
    auto mono_str = [&](const std::vector<int>& e) {
        std::ostringstream os;
        bool first = true;
        for (long i = 0; i < nv; ++i) {
            if (!e[i]) continue;
            if (!first) os << "*";
            first = false;
            os << (i == 0 ? vars[0].name : i == 1 ? vars[1].name : params[i - 2].name);
            if (e[i] > 1) os << "^" << e[i];
        }
        if (first) os << "1";
        return os.str();
    };
    // left side: the (unique) monomial with coefficient -1 if present
    std::vector<int> lhs;
    for (const auto& [e, c] : equation.terms)
        if (c == Cyclo(-1L) && lhs.empty()) {
            bool pure = true;
            for (long i = 2; i < nv; ++i)
                if (e[i]) pure = false;
            if (pure) lhs = e;
        }
    std::ostringstream os;
    if (!lhs.empty()) {
        os << mono_str(lhs) << " =";
        bool first = true;
        for (const auto& [e, c] : equation.terms) {
            if (e == lhs) continue;
            Cyclo cc = c;
            std::string s = cc.str();
            if (!first || s.rfind("-", 0) == 0) os << (s.rfind("-", 0) == 0 ? " - " : " + ");
            else os << " ";
            first = false;
            Cyclo abs_c = (s.rfind("-", 0) == 0) ? Cyclo(0L) - cc : cc;
            if (abs_c == Cyclo(1L)) os << mono_str(e);
            else os << "(" << abs_c.str() << ")*" << mono_str(e);
        }
        if (first) os << " 0";
        return os.str();
    }
    bool first = true;
    for (const auto& [e, c] : equation.terms) {
        std::string s = c.str();
        bool neg = s.rfind("-", 0) == 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        Cyclo abs_c = neg ? Cyclo(0L) - c : c;
        if (abs_c == Cyclo(1L)) os << mono_str(e);
        else os << "(" << abs_c.str() << ")*" << mono_str(e);
    }
    os << " = 0";
    return os.str();
}

bool curves_match(const CurveFamily& a0, const CurveFamily& b0) {
    CurveFamily a = a0, b = b0;
    canonicalize_curve(a);
    canonicalize_curve(b);
    if (a.params.size() != b.params.size()) return false;
    std::vector<long> wa{a.vars[0].rho, a.vars[1].rho}, wb{b.vars[0].rho, b.vars[1].rho};
    if (wa != wb) return false;
    // parameter alignment: weights must agree as multisets; try the small set
    // of weight-preserving permutations
    std::vector<long> pa, pb;
    for (auto& p : a.params) pa.push_back(p.rho);
    for (auto& p : b.params) pb.push_back(p.rho);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    long np = (long)a.params.size();
    std::vector<long> perm(np);
    for (long i = 0; i < np; ++i) perm[i] = i;
    // we only permute among equal weights; iterate permutations and filter
    auto support_of = [&](const CurveFamily& f) { return f.support(); };
    std::set<std::vector<int>> sb_set = support_of(b);
    bool free_a = !a.free_coeffs.empty(), free_b = !b.free_coeffs.empty();
    do {
        bool weight_ok = true;
        for (long i = 0; i < np; ++i)
            if (pa[i] != pb[perm[i]]) weight_ok = false;
        if (!weight_ok) continue;
        // remap a's support through the permutation
        std::set<std::vector<int>> sa_set;
        std::map<std::vector<int>, Cyclo> coeff_a;
        for (const auto& [e, c] : a.equation.terms) {
            std::vector<int> e2 = e;
            for (long i = 0; i < np; ++i) e2[2 + perm[i]] = e[2 + i];
            sa_set.insert(e2);
            coeff_a[e2] = c;
        }
        if (sa_set != sb_set) continue;
        if (free_a || free_b) return true;  // support match is the contract
        bool all = true;
        for (const auto& [e, c] : b.equation.terms)
            if (!(coeff_a.at(e) == c)) all = false;
        if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace vinberg
