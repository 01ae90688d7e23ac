#include "vinberg/deformation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vinberg {

namespace {

ZetaPoly tri(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
    ZetaPoly p(3);
    for (auto& [e, c] : terms) p.add_term(e, Cyclo(c));
    return p;
}

MonLin diag(Cyclo cx, Cyclo cy, Cyclo cz) {
    return MonLin{{0, 1, 2}, {cx, cy, cz}};
}

const Cyclo ONE = Cyclo(1L);
const Cyclo MINUS = Cyclo(-1L);

// base normal form (f_std, weights, Gamma) per ambient type
SingularityDatum base_datum(char type, long rank) {
    SingularityDatum d;
    d.htype = type;
    d.hrank = rank;
    switch (type) {
        case 'A':
            if (rank < 2) throw std::domain_error("singularity_table: A needs rank >= 2");
            d.f_std = tri({{{0, 0, 2}, 1}, {{0, 2, 0}, -1}, {{(int)rank + 1, 0, 0}, 1}});
            d.var_weights = {2, rank + 1, rank + 1};
            d.expected_mu = rank;
            break;
        case 'B':
            if (rank < 2) throw std::domain_error("singularity_table: B needs rank >= 2");
            d.f_std = tri({{{0, 0, 2}, 1}, {{0, 2, 0}, -1}, {{(int)(2 * rank), 0, 0}, 1}});
            d.var_weights = {2, 2 * rank, 2 * rank};
            d.gamma = {diag(MINUS, MINUS, ONE)};
            d.expected_mu = 2 * rank - 1;
            break;
        case 'C':
            if (rank < 3) throw std::domain_error("singularity_table: C needs rank >= 3");
            d.f_std = tri({{{0, 0, 2}, 1}, {{1, 2, 0}, -1}, {{(int)rank, 0, 0}, 1}});
            d.var_weights = {4, 2 * rank - 2, 2 * rank};
            d.gamma = {diag(ONE, MINUS, MINUS)};
            d.expected_mu = rank + 1;
            break;
        case 'D':
            if (rank == 4) {
                d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, 1}, {{3, 0, 0}, 1}});
                d.var_weights = {4, 4, 6};
            } else if (rank >= 5) {
                d.f_std = tri({{{0, 0, 2}, 1}, {{1, 2, 0}, -1}, {{(int)rank - 1, 0, 0}, 1}});
                d.var_weights = {4, 2 * rank - 4, 2 * rank - 2};
            } else {
                throw std::domain_error("singularity_table: D needs rank >= 4");
            }
            d.expected_mu = rank;
            break;
        case 'E':
            if (rank == 6) {
                d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, -1}, {{4, 0, 0}, 1}});
                d.var_weights = {6, 8, 12};
            } else if (rank == 7) {
                d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, -1}, {{3, 1, 0}, 1}});
                d.var_weights = {8, 12, 18};
            } else if (rank == 8) {
                d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, -1}, {{5, 0, 0}, 1}});
                d.var_weights = {12, 20, 30};
            } else {
                throw std::domain_error("singularity_table: E needs rank 6..8");
            }
            d.expected_mu = rank;
            break;
        case 'F':
            if (rank != 4) throw std::domain_error("singularity_table: F needs rank 4");
            d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, -1}, {{4, 0, 0}, 1}});
            d.var_weights = {6, 8, 12};
            d.gamma = {diag(MINUS, ONE, MINUS)};
            d.expected_mu = 6;
            break;
        case 'G':
            if (rank != 2) throw std::domain_error("singularity_table: G needs rank 2");
            d.f_std = tri({{{0, 0, 2}, 1}, {{0, 3, 0}, 1}, {{3, 0, 0}, 1}});
            d.var_weights = {4, 4, 6};
            d.gamma = {diag(Cyclo::zeta(3), Cyclo::zeta(3, 2), ONE),
                       MonLin{{1, 0, 2}, {ONE, ONE, MINUS}}};
            d.expected_mu = 4;
            break;
        default:
            throw std::domain_error("singularity_table: unknown type");
    }
    long w = d.f_std.homogeneous_weight(d.var_weights);
    if (w <= 0 || w % 2 != 0) throw std::logic_error("singularity_table: bad f_std weight");
    d.dmax = w / 2;
    return d;
}

struct SigmaCase {
    char type;
    long outer_order;
    // m == 0 means "any stable m with an extra predicate"; handled in code
    long m;
    std::string variant;
};

}  // namespace

SingularityDatum singularity_table(char type, long rank, long m, const std::string& variant) {
    SingularityDatum d = base_datum(type, rank);
    d.m = m;
    d.variant = variant;
    auto zm = Cyclo::zeta(std::max(m, 1L));
    if (variant == "flip-z") {
        if (m != 2) throw std::domain_error("singularity_table: flip-z needs m = 2");
        d.sigma = diag(ONE, ONE, MINUS);
    } else if (variant == "flip-y") {
        if (m != 2) throw std::domain_error("singularity_table: flip-y needs m = 2");
        d.sigma = diag(ONE, MINUS, ONE);
    } else if (variant == "zeta-x") {
        d.sigma = diag(zm, ONE, ONE);
    } else if (variant == "zeta-y") {
        d.sigma = diag(ONE, zm, ONE);
    } else if (variant == "swap") {
        if (type != 'G' || m != 2) throw std::domain_error("singularity_table: swap is G2/2");
        d.sigma = MonLin{{1, 0, 2}, {Cyclo::zeta(3), Cyclo::zeta(3, 2), ONE}};
    } else {
        throw std::domain_error("singularity_table: unknown variant " + variant);
    }
    // sigma must fix f_std
    {
        ZetaPoly img(3);
        for (const auto& [e, c] : d.f_std.terms) {
            std::vector<int> e2(3, 0);
            Cyclo cc = c;
            for (long i = 0; i < 3; ++i) {
                e2[d.sigma.perm[i]] += e[i];
                cc *= d.sigma.coeff[i].pow(e[i]);
            }
            img.add_term(e2, cc);
        }
        img -= d.f_std;
        if (!img.is_zero()) throw std::domain_error("singularity_table: sigma does not fix f");
    }
    return d;
}

std::vector<SingularityDatum> singularity_variants(char type, long rank, long m,
                                                   long outer_order) {
    std::vector<std::pair<long, std::string>> cases;  // (required outer order, variant)
    // the sigma normal-form case list
    if (m == 2) {
        switch (type) {
            case 'A':
                if (outer_order == 2) cases.push_back({2, "flip-z"});
                break;
            case 'B':
                cases.push_back({1, "flip-z"});
                cases.push_back({1, "zeta-x"});
                break;
            case 'C':
                cases.push_back({1, "flip-z"});
                cases.push_back({1, "flip-y"});
                break;
            case 'D':
                if (rank % 2 == 0 && outer_order == 1) cases.push_back({1, "flip-z"});
                if (rank % 2 == 1 && outer_order == 2) cases.push_back({2, "flip-z"});
                break;
            case 'E':
                if (rank == 6 && outer_order == 2) cases.push_back({2, "flip-z"});
                if (rank == 7 && outer_order == 1) cases.push_back({1, "flip-z"});
                if (rank == 8 && outer_order == 1) cases.push_back({1, "flip-z"});
                break;
            case 'F':
                cases.push_back({1, "flip-z"});
                cases.push_back({1, "zeta-x"});
                break;
            case 'G':
                cases.push_back({1, "flip-z"});
                cases.push_back({1, "swap"});
                break;
        }
    } else {
        switch (type) {
            case 'A':
                if (m == rank + 1 && outer_order == 1) cases.push_back({1, "zeta-x"});
                break;
            case 'B':
                if (m > 2 && m % 2 == 0 && (2 * rank) % m == 0 && outer_order == 1)
                    cases.push_back({1, "zeta-x"});
                break;
            case 'D':
                if (rank == 4 && m == 3 && outer_order == 3) cases.push_back({3, "zeta-x"});
                break;
            case 'E':
                if (rank == 6 && m == 3 && outer_order == 1) cases.push_back({1, "zeta-y"});
                if (rank == 6 && m == 4 && outer_order == 2) cases.push_back({2, "zeta-x"});
                if (rank == 8 && m == 3 && outer_order == 1) cases.push_back({1, "zeta-y"});
                // the weight-12 coordinate carries the mu_5 action (x in the
                // normal form used here)
                if (rank == 8 && m == 5 && outer_order == 1) cases.push_back({1, "zeta-x"});
                break;
            case 'F':
                if (m == 3 && outer_order == 1) cases.push_back({1, "zeta-y"});
                if (m == 4 && outer_order == 1) cases.push_back({1, "zeta-x"});
                break;
            case 'G':
                if (m == 3 && outer_order == 1) {
                    cases.push_back({1, "zeta-x"});
                    cases.push_back({1, "zeta-y"});
                }
                break;
        }
    }
    std::vector<SingularityDatum> out;
    for (auto& [req, variant] : cases) {
        if (req != outer_order) continue;
        out.push_back(singularity_table(type, rank, m, variant));
    }
    return out;
}

namespace {

// weighted order: total weight, ties broken lexicographically with x > y > z
struct WeightedOrder {
    std::vector<long> w;
    bool less(const std::vector<int>& a, const std::vector<int>& b) const {
        long wa = 0, wb = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            wa += w[i] * a[i];
            wb += w[i] * b[i];
        }
        if (wa != wb) return wa < wb;
        return a < b;  // lex with x > y > z: larger x-exponent wins; vector
                       // comparison on (x,y,z) exponents does exactly that
    }
};

std::vector<int> leading_monomial(const QPoly& p, const WeightedOrder& ord) {
    const std::vector<int>* best = nullptr;
    for (const auto& [e, c] : p.terms)
        if (!best || ord.less(*best, e)) best = &e;
    if (!best) throw std::logic_error("leading_monomial: zero polynomial");
    return *best;
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

QPoly normal_form(QPoly f, const std::vector<QPoly>& gb,
                  const std::vector<std::vector<int>>& lts, const WeightedOrder& ord) {
    QPoly rem(3);
    while (!f.is_zero()) {
        std::vector<int> lm = leading_monomial(f, ord);
        Rat lc = f.terms.at(lm);
        bool reduced = false;
        for (size_t k = 0; k < gb.size(); ++k) {
            if (divides(lts[k], lm)) {
                std::vector<int> q(3);
                for (int i = 0; i < 3; ++i) q[i] = lm[i] - lts[k][i];
                Rat factor = lc / gb[k].terms.at(lts[k]);
                QPoly sub = QPoly::monomial(3, q, factor) * gb[k];
                f -= sub;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            f.terms.erase(lm);
        }
    }
    return rem;
}

}  // namespace

std::vector<std::vector<int>> jacobian_basis(const SingularityDatum& d) {
    WeightedOrder ord{d.var_weights};
    // rational copy of f
    QPoly f(3);
    for (const auto& [e, c] : d.f_std.terms) f.add_term(e, c.to_rational());
    std::vector<QPoly> gb;
    for (int v = 0; v < 3; ++v) {
        QPoly pd = f.derivative(v);
        if (!pd.is_zero()) gb.push_back(pd);
    }
    // Buchberger with the weighted order
    auto lts = [&] {
        std::vector<std::vector<int>> l;
        for (auto& g : gb) l.push_back(leading_monomial(g, ord));
        return l;
    };
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> lt = lts();
        for (size_t i = 0; i < gb.size() && !grew; ++i)
            for (size_t j = i + 1; j < gb.size() && !grew; ++j) {
                std::vector<int> lcm(3);
                for (int v = 0; v < 3; ++v) lcm[v] = std::max(lt[i][v], lt[j][v]);
                std::vector<int> qi(3), qj(3);
                for (int v = 0; v < 3; ++v) {
                    qi[v] = lcm[v] - lt[i][v];
                    qj[v] = lcm[v] - lt[j][v];
                }
                QPoly s = QPoly::monomial(3, qi, Rat(1) / gb[i].terms.at(lt[i])) * gb[i] -
                          QPoly::monomial(3, qj, Rat(1) / gb[j].terms.at(lt[j])) * gb[j];
                QPoly r = normal_form(std::move(s), gb, lt, ord);
                if (!r.is_zero()) {
                    gb.push_back(std::move(r));
                    grew = true;
                }
            }
    }
    std::vector<std::vector<int>> lt = lts();
    // standard monomials: need a pure power of each variable among the LTs
    int bound[3];
    for (int v = 0; v < 3; ++v) {
        bound[v] = -1;
        for (auto& l : lt) {
            bool pure = l[v] > 0;
            for (int u = 0; u < 3; ++u)
                if (u != v && l[u] > 0) pure = false;
            if (pure && (bound[v] < 0 || l[v] < bound[v])) bound[v] = l[v];
        }
        if (bound[v] < 0) throw std::logic_error("jacobian_basis: quotient is not finite");
    }
    std::vector<std::vector<int>> basis;
    for (int a = 0; a < bound[0]; ++a)
        for (int b = 0; b < bound[1]; ++b)
            for (int c = 0; c < bound[2]; ++c) {
                std::vector<int> e{a, b, c};
                bool standard = true;
                for (auto& l : lt)
                    if (divides(l, e)) standard = false;
                if (standard) basis.push_back(e);
            }
    if ((long)basis.size() != d.expected_mu)
        throw std::logic_error("jacobian_basis: basis size differs from the Milnor number");
    // deterministic order: by weight then lex
    std::sort(basis.begin(), basis.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        return ord.less(a, b);
    });
    return basis;
}

namespace {

// image of a monomial under a monomial-linear substitution
std::pair<std::vector<int>, Cyclo> apply_monlin(const MonLin& s, const std::vector<int>& e) {
    std::vector<int> e2(e.size(), 0);
    Cyclo c = Cyclo(1L);
    for (size_t i = 0; i < e.size() && i < s.perm.size(); ++i) {
        e2[s.perm[i]] += e[i];
        if (e[i]) c *= s.coeff[i].pow(e[i]);
    }
    for (size_t i = s.perm.size(); i < e.size(); ++i) e2[i] += e[i];
    return {e2, c};
}

}  // namespace

std::vector<std::vector<int>> gamma_fixed_subbasis(const SingularityDatum& d,
                                                   const std::vector<std::vector<int>>& basis) {
    std::vector<std::vector<int>> out;
    for (const auto& e : basis) {
        bool fixed = true;
        for (const MonLin& g : d.gamma) {
            auto [e2, c] = apply_monlin(g, e);
            if (e2 != e || !(c == Cyclo(1L))) {
                fixed = false;
                break;
            }
        }
        if (fixed) out.push_back(e);
    }
    return out;
}

SemiversalFamily semiversal_family(const SingularityDatum& d) {
    SemiversalFamily fam;
    fam.datum = d;
    fam.gi = gamma_fixed_subbasis(d, jacobian_basis(d));
    long n = (long)fam.gi.size();
    long nv = 3 + n;
    fam.total = ZetaPoly(nv);
    for (const auto& [e, c] : d.f_std.terms) {
        std::vector<int> e2(nv, 0);
        for (int i = 0; i < 3; ++i) e2[i] = e[i];
        fam.total.add_term(e2, c);
    }
    // sigma eigenvalue of f (all terms must agree)
    Cyclo chi_f(0L);
    {
        bool first = true;
        for (const auto& [e, c] : d.f_std.terms) {
            auto [e2, cc] = apply_monlin(d.sigma, e);
            // image term must appear; chi = coeff(image term's source)...
            (void)e2;
            if (first) {
                chi_f = cc;
                first = false;
            }
        }
        // f is sigma-invariant (checked at construction), its weight is 0
        chi_f = Cyclo(1L);
    }
    // weights sorted descending in rho(g) = ascending in t-weight
    std::vector<long> order(n);
    for (long i = 0; i < n; ++i) order[i] = i;
    std::vector<long> grho(n);
    for (long i = 0; i < n; ++i) {
        long w = 0;
        for (int v = 0; v < 3; ++v) w += d.var_weights[v] * fam.gi[i][v];
        grho[i] = w;
    }
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        if (grho[a] != grho[b]) return grho[a] > grho[b];
        return fam.gi[a] < fam.gi[b];
    });
    std::vector<std::vector<int>> gi2;
    std::map<long, long> dup;
    for (long k = 0; k < n; ++k) {
        long i = order[k];
        gi2.push_back(fam.gi[i]);
        long trho = 2 * d.dmax - grho[i];
        fam.t_rho.push_back(trho);
        // sigma acts on t by chi(f)/chi(g)
        auto [e2, chi_g] = apply_monlin(d.sigma, fam.gi[i]);
        if (e2 != fam.gi[i])
            throw std::logic_error("semiversal_family: deformation monomial not sigma-eigen");
        fam.t_chi.push_back(chi_f * chi_g.inverse());
        bool prime = dup[trho]++ > 0;
        std::ostringstream nm;
        nm << "p" << trho / 2;
        if (prime) nm << "p";
        fam.names.push_back(nm.str());
    }
    fam.gi = gi2;
    for (long k = 0; k < n; ++k) {
        std::vector<int> e(nv, 0);
        for (int v = 0; v < 3; ++v) e[v] = fam.gi[k][v];
        e[3 + k] = 1;
        fam.total.add_term(e, Cyclo(1L));
    }
    return fam;
}

CurveFamily sigma_fixed_curve(const SemiversalFamily& fam) {
    const SingularityDatum& d = fam.datum;
    long n = (long)fam.gi.size();
    long nv = 3 + n;
    ZetaPoly total = fam.total;
    MonLin sigma = d.sigma;
    std::vector<long> weights = d.var_weights;
    // swap case: pass to eigencoordinates u = x + c0 y, v = x - c0 y
    if (sigma.perm[0] == 1) {
        Cyclo c0 = sigma.coeff[0];
        // x = (u + v)/2, y = (u - v)/(2 c0); u is fixed, v flips sign
        Cyclo half = Cyclo(Rat(1, 2));
        ZetaPoly u = ZetaPoly::var(nv, 0, Cyclo(1L));
        ZetaPoly v = ZetaPoly::var(nv, 1, Cyclo(1L));
        ZetaPoly xs = (u + v).scaled(half);
        ZetaPoly ys = (u - v).scaled(half * c0.inverse());
        // substitute via a temporary variable shuffle: first x, then y
        // (x and y are replaced by expressions in the same slots u = slot 0,
        // v = slot 1, which is safe with a two-step temeporary)
        // do it by direct expansion over terms
        ZetaPoly out(nv);
        for (const auto& [e, c] : total.terms) {
            ZetaPoly term = ZetaPoly::constant(nv, c);
            if (e[0]) term *= xs.pow(e[0]);
            if (e[1]) term *= ys.pow(e[1]);
            std::vector<int> rest = e;
            rest[0] = rest[1] = 0;
            term *= ZetaPoly::monomial(nv, rest, Cyclo(1L));
            out += term;
        }
        total = out;
        sigma = diag(ONE, MINUS, sigma.coeff[2] * Cyclo(1L));
        // u inherits weight of x (equal weights in the swap case)
    }
    // kill the sigma-moved coordinate among x,y,z and the non-invariant t's
    std::vector<long> killed, kept_vars;
    for (long i = 0; i < 3; ++i) {
        if (sigma.perm[i] != i) throw std::logic_error("sigma_fixed_curve: sigma not diagonal");
        if (sigma.coeff[i] == Cyclo(1L)) kept_vars.push_back(i);
        else killed.push_back(i);
    }
    if (kept_vars.size() != 2)
        throw std::domain_error("sigma_fixed_curve: sigma must move exactly one coordinate");
    for (long v : killed) total = total.evaluated(v, Cyclo(0L));
    std::vector<long> kept_params;
    for (long k = 0; k < n; ++k) {
        if (fam.t_chi[k] == Cyclo(1L)) kept_params.push_back(k);
        else total = total.evaluated(3 + k, Cyclo(0L));
    }
    CurveFamily cf;
    cf.provenance = "deformation";
    cf.vars.push_back({"x", weights[kept_vars[0]]});
    cf.vars.push_back({"y", weights[kept_vars[1]]});
    // parameters sorted by increasing weight
    std::sort(kept_params.begin(), kept_params.end(),
              [&](long a, long b) { return fam.t_rho[a] < fam.t_rho[b]; });
    std::map<long, long> pos;  // old var index -> new
    pos[kept_vars[0]] = 0;
    pos[kept_vars[1]] = 1;
    for (size_t k = 0; k < kept_params.size(); ++k) {
        cf.params.push_back({fam.names[kept_params[k]], fam.t_rho[kept_params[k]]});
        pos[3 + kept_params[k]] = 2 + (long)k;
    }
    long outv = 2 + (long)cf.params.size();
    cf.equation = ZetaPoly(outv);
    for (const auto& [e, c] : total.terms) {
        std::vector<int> e2(outv, 0);
        for (long i = 0; i < nv; ++i) {
            if (!e[i]) continue;
            auto it = pos.find(i);
            if (it == pos.end()) throw std::logic_error("sigma_fixed_curve: stray variable");
            e2[it->second] = e[i];
        }
        cf.equation.add_term(e2, c);
    }
    canonicalize_curve(cf);
    return cf;
}

std::vector<CurveFamily> classify_subregular(const GradedDecomposition& gd, long trials,
                                             uint64_t seed) {
    const RootSystem& rs = gd.alg->root_system();
    long outer_order = gd.spec.is_inner() ? 1 : gd.spec.outer.order;
    std::vector<SingularityDatum> variants =
        singularity_variants(rs.type, rs.rank, gd.m, outer_order);
    if (variants.empty()) return {};
    StabilityCertificate cert = stability_witness(gd, trials, seed);
    if (!cert.found) return {};
    std::vector<CurveFamily> out;
    for (const auto& d : variants) out.push_back(sigma_fixed_curve(semiversal_family(d)));
    return out;
}

}  // namespace vinberg
