#include "vinberg/nilpotent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "vinberg/util.hpp"

namespace vinberg {

namespace {

bool vec_is_zero(const CVec& v) {
    for (const Cyclo& c : v)
        if (!c.is_zero()) return false;
    return true;
}

long grading_conductor(const GradedDecomposition& gd) { return gd.inner ? 1 : gd.m; }

// quick one-sided nilpotency certificate: charpoly = T^n mod one prime
// rejects non-nilpotents; inner elements supported on positive heights are
// nilpotent outright
bool nilpotent_screen(const GradedDecomposition& gd, const CVec& e) {
    const ChevalleyAlgebra& alg = *gd.alg;
    if (gd.inner) {
        bool positive = true;
        for (long b = 0; b < alg.dim(); ++b) {
            if (e[b].is_zero()) continue;
            if (b < alg.rank() || alg.root_system().heights[alg.root_of_basis(b)] <= 0) {
                positive = false;
                break;
            }
        }
        if (positive) return true;
    }
    CMat ad = alg.ad_matrix(e);
    CycloModEnv env = make_cyclo_mod_env(grading_conductor(gd), 0);
    FpMat f(alg.dim(), alg.dim());
    for (long i = 0; i < alg.dim(); ++i)
        for (long j = 0; j < alg.dim(); ++j)
            if (!ad(i, j).is_zero()) f(i, j) = env.reduce(ad(i, j));
    std::vector<uint64_t> cp = charpoly_mod_p(std::move(f), env.p);
    for (long t = 0; t < alg.dim(); ++t)
        if (cp[t] != 0) return false;
    return true;
}

// integer roots of the minimal polynomial of a small Cyclo matrix, with
// multiplicities read off kernel dimensions; total must exhaust the space
template <class Consume>
void integer_eigen_split(const CMat& a, Consume&& consume) {
    long n = a.nr;
    if (n == 0) return;
    UPoly<Cyclo> mu = min_poly(a);
    UPoly<Rat> mq;
    for (auto& cc : mu) {
        if (!cc.is_rational()) throw std::logic_error("integer_eigen_split: irrational minpoly");
        mq.push_back(cc.to_rational());
    }
    Int den(1);
    for (auto& cc : mq) den = lcm(den, Int(cc.get_den()));
    std::vector<Int> mi;
    for (auto& cc : mq) mi.push_back(Int(cc * Rat(den)));
    long low = 0;
    while (low < (long)mi.size() && mi[low] == 0) ++low;
    std::set<long> cands{0};
    if (low < (long)mi.size()) {
        // candidate integer roots divide the lowest nonzero coefficient
        // (after clearing denominators the polynomial is den * monic)
        Int c = abs(mi[low]);
        for (Int d(1); d * d <= c; ++d) {
            if (c % d != 0) continue;
            Int q1 = d, q2 = c / d;
            for (const Int& q : {q1, q2})
                if (q.fits_slong_p()) {
                    cands.insert(q.get_si());
                    cands.insert(-q.get_si());
                }
        }
    }
    long total = 0;
    for (long r : cands) {
        CMat shifted = a;
        for (long k = 0; k < n; ++k) shifted(k, k) -= Cyclo(r);
        auto ker = kernel_basis(shifted);
        if (!ker.empty()) consume(r, ker);
        total += (long)ker.size();
    }
    if (total != n) throw std::logic_error("integer_eigen_split: matrix not integer-diagonalizable");
}

}  // namespace

Sl2Triple complete_sl2(const GradedDecomposition& gd, const CVec& e) {
    const ChevalleyAlgebra& alg = *gd.alg;
    if (vec_is_zero(e)) throw std::domain_error("complete_sl2: e is zero");
    if (!gd.in_piece(e, 1)) throw std::domain_error("complete_sl2: e not in h_1");
    if (!nilpotent_screen(gd, e)) throw std::domain_error("complete_sl2: e not nilpotent");

    const auto& wbasis = gd.pieces[gd.imod(-1)];
    long nw = (long)wbasis.size();
    long dim = alg.dim();
    long rank = alg.rank();
    // u_k = [e, w_k]; the system [[e, w], e] = 2e picks out h = [e, w]
    std::vector<CVec> u(nw), t(nw);
    for (long k = 0; k < nw; ++k) {
        u[k] = alg.bracket(e, wbasis[k]);
        t[k] = alg.bracket(u[k], e);
    }
    CVec h;
    bool h_cartan = false;
    for (int attempt = 0; attempt < 2 && h.empty(); ++attempt) {
        bool force_cartan = (attempt == 0);
        long extra = force_cartan ? dim - rank : 0;
        Mat<Cyclo> sys(dim + extra, nw);
        std::vector<Cyclo> rhs(dim + extra, Cyclo(0L));
        for (long k = 0; k < nw; ++k)
            for (long i = 0; i < dim; ++i) sys(i, k) = t[k][i];
        for (long i = 0; i < dim; ++i) rhs[i] = e[i] * Cyclo(2L);
        if (force_cartan) {
            // root-vector coordinates of h must vanish
            for (long k = 0; k < nw; ++k)
                for (long i = rank; i < dim; ++i) sys(dim + i - rank, k) = u[k][i];
        }
        auto sol = solve_linear(sys, rhs);
        if (!sol) continue;
        h = CVec(dim, Cyclo(0L));
        for (long k = 0; k < nw; ++k)
            if (!(*sol)[k].is_zero())
                for (long i = 0; i < dim; ++i) h[i] += (*sol)[k] * u[k][i];
        h_cartan = force_cartan;
    }
    if (h.empty()) throw std::logic_error("complete_sl2: no h found (graded JM violated)");

    // f from the joint linear system [e,f] = h, [h,f] = -2f over h_{-1}
    Mat<Cyclo> sys(2 * dim, nw);
    std::vector<Cyclo> rhs(2 * dim, Cyclo(0L));
    for (long k = 0; k < nw; ++k) {
        CVec hf = alg.bracket(h, wbasis[k]);
        for (long i = 0; i < dim; ++i) {
            sys(i, k) = u[k][i];  // u_k = [e, w_k]
            sys(dim + i, k) = hf[i] + Cyclo(2L) * wbasis[k][i];
        }
    }
    for (long i = 0; i < dim; ++i) rhs[i] = h[i];
    auto sol = solve_linear(sys, rhs);
    if (!sol) throw std::logic_error("complete_sl2: no f found (graded JM violated)");
    CVec f(dim, Cyclo(0L));
    for (long k = 0; k < nw; ++k)
        if (!(*sol)[k].is_zero())
            for (long i = 0; i < dim; ++i) f[i] += (*sol)[k] * wbasis[k][i];

    CVec he = alg.bracket(h, e), hf2 = alg.bracket(h, f), ef = alg.bracket(e, f);
    for (long i = 0; i < dim; ++i) {
        if (he[i] != Cyclo(2L) * e[i]) throw std::logic_error("complete_sl2: [h,e] != 2e");
        if (hf2[i] != Cyclo(-2L) * f[i]) throw std::logic_error("complete_sl2: [h,f] != -2f");
        if (ef[i] != h[i]) throw std::logic_error("complete_sl2: [e,f] != h");
    }
    Sl2Triple triple;
    triple.e = e;
    triple.h = std::move(h);
    triple.f = std::move(f);
    triple.h_in_cartan = h_cartan;
    return triple;
}

std::vector<long> centralizer_dims(const GradedDecomposition& gd, const CVec& x, long deg) {
    std::vector<long> out(gd.m, 0);
    for (long i = 0; i < gd.m; ++i) {
        CMat blk = gd.ad_block(x, i, i + deg);
        out[i] = gd.piece_dim(i) - row_echelon(blk);
    }
    return out;
}

long centralizer_total(const GradedDecomposition& gd, const CVec& x, long deg) {
    long s = 0;
    for (long d : centralizer_dims(gd, x, deg)) s += d;
    return s;
}

std::vector<long> dynkin_label(const ChevalleyAlgebra& alg, const CVec& h) {
    long rank = alg.rank();
    for (long i = rank; i < alg.dim(); ++i)
        if (!h[i].is_zero())
            throw std::domain_error("dynkin_label: h is not in the Cartan subalgebra");
    std::vector<Rat> c(rank);
    for (long i = 0; i < rank; ++i) c[i] = h[i].to_rational();
    const RootSystem& rs = alg.root_system();
    auto value = [&](long i) {
        // alpha_i(h) = sum_j c_j <alpha_i, alpha_j^vee>
        Rat s(0);
        for (long j = 0; j < rank; ++j) s += c[j] * Rat(rs.cartan[j][i]);
        return s;
    };
    bool changed = true;
    long guard = 1000000;
    while (changed && guard-- > 0) {
        changed = false;
        for (long i = 0; i < rank; ++i) {
            Rat v = value(i);
            if (v < 0) {
                c[i] -= v;  // s_i(h) = h - alpha_i(h) h_i
                changed = true;
            }
        }
    }
    if (guard <= 0) throw std::logic_error("dynkin_label: dominance did not terminate");
    std::vector<long> label(rank);
    for (long i = 0; i < rank; ++i) {
        Rat v = value(i);
        if (v.get_den() != 1) throw std::domain_error("dynkin_label: non-integral label");
        label[i] = rat_to_long(v);
    }
    return label;
}

std::vector<long> ad_h_spectrum(const GradedDecomposition& gd, const CVec& h, long i) {
    const ChevalleyAlgebra& alg = *gd.alg;
    long rank = alg.rank();
    bool in_cartan = true;
    for (long b = rank; b < alg.dim(); ++b)
        if (!h[b].is_zero()) in_cartan = false;
    std::vector<long> spec;
    if (in_cartan && gd.inner) {
        const RootSystem& rs = alg.root_system();
        std::vector<Rat> c(rank);
        for (long b = 0; b < rank; ++b) c[b] = h[b].to_rational();
        for (long b = 0; b < alg.dim(); ++b) {
            if (gd.degree_of[b] != gd.imod(i)) continue;
            if (b < rank) {
                spec.push_back(0);
                continue;
            }
            Rat v(0);
            const auto& root = rs.roots[alg.root_of_basis(b)];
            for (long k = 0; k < rank; ++k) {
                if (!root[k]) continue;
                for (long j = 0; j < rank; ++j) v += c[j] * Rat(rs.cartan[j][k] * root[k]);
            }
            if (v.get_den() != 1) throw std::logic_error("ad_h_spectrum: non-integer eigenvalue");
            spec.push_back(rat_to_long(v));
        }
        std::sort(spec.begin(), spec.end());
        return spec;
    }
    CMat blk = gd.ad_block(h, i, i);
    integer_eigen_split(blk, [&](long r, const std::vector<CVec>& ker) {
        for (size_t q = 0; q < ker.size(); ++q) spec.push_back(r);
    });
    std::sort(spec.begin(), spec.end());
    return spec;
}

SliceRaw slodowy_raw(const GradedDecomposition& gd, const Sl2Triple& triple) {
    const ChevalleyAlgebra& alg = *gd.alg;
    SliceRaw out;
    for (long i = 0; i < gd.m; ++i) {
        CMat blk = gd.ad_block(triple.f, i, i - 1);
        auto ker = kernel_basis(blk);
        if (ker.empty()) continue;
        std::vector<CVec> kv;
        for (auto& coords : ker) {
            CVec cc(coords.begin(), coords.end());
            kv.push_back(gd.from_piece_coords(i, cc));
        }
        long n = (long)kv.size();
        // restrict ad(h) to span(kv)
        Mat<Cyclo> span_mat(alg.dim(), n);
        for (long k = 0; k < n; ++k)
            for (long b = 0; b < alg.dim(); ++b) span_mat(b, k) = kv[k][b];
        CMat rest(n, n);
        for (long k = 0; k < n; ++k) {
            CVec hv = alg.bracket(triple.h, kv[k]);
            auto sol = solve_linear(span_mat, hv);
            if (!sol) throw std::logic_error("slodowy_raw: ad(h) does not preserve z(f)");
            for (long r = 0; r < n; ++r) rest(r, k) = (*sol)[r];
        }
        integer_eigen_split(rest, [&](long r, const std::vector<CVec>& eker) {
            for (const auto& coords : eker) {
                CVec v(alg.dim(), Cyclo(0L));
                for (long k = 0; k < n; ++k)
                    if (!coords[k].is_zero())
                        for (long b = 0; b < alg.dim(); ++b) v[b] += coords[k] * kv[k][b];
                out.vectors.push_back(std::move(v));
                out.weights.push_back({2 - r, i});
            }
        });
    }
    return out;
}

namespace {

// Weighted Dynkin diagram from the ad(h) eigenvalue multiset: the dominant
// representative has labels in {0,1,2}, so match the spectrum against all
// 3^rank candidates.
std::vector<long> dynkin_label_from_spectrum(const GradedDecomposition& gd, const CVec& h) {
    const ChevalleyAlgebra& alg = *gd.alg;
    const RootSystem& rs = alg.root_system();
    long rank = rs.rank;
    std::vector<long> spec;
    for (long i = 0; i < gd.m; ++i) {
        std::vector<long> s = ad_h_spectrum(gd, h, i);
        spec.insert(spec.end(), s.begin(), s.end());
    }
    std::sort(spec.begin(), spec.end());
    // beta(h') = sum_k b_k label_k for beta = sum b_k alpha_k
    std::vector<long> label(rank, 0);
    std::function<bool(long)> rec = [&](long pos) -> bool {
        if (pos == rank) {
            std::vector<long> eigen;
            for (long r = 0; r < rs.nroots(); ++r) {
                long v = 0;
                for (long k = 0; k < rank; ++k) v += rs.roots[r][k] * label[k];
                eigen.push_back(v);
            }
            for (long k = 0; k < rank; ++k) eigen.push_back(0);
            std::sort(eigen.begin(), eigen.end());
            return eigen == spec;
        }
        for (long v = 0; v <= 2; ++v) {
            label[pos] = v;
            if (rec(pos + 1)) return true;
        }
        return false;
    };
    if (!rec(0)) throw std::logic_error("dynkin_label_from_spectrum: no dominant match");
    return label;
}

}  // namespace

FoundOrbit classify_nilpotent(const GradedDecomposition& gd, const CVec& e) {
    FoundOrbit orb;
    orb.rep = e;
    orb.triple = complete_sl2(gd, e);
    orb.data.centralizer_dims = centralizer_dims(gd, e, 1);
    orb.data.relative_dimension = orb.data.centralizer_dims[0];
    if (orb.triple.h_in_cartan) orb.data.dynkin = dynkin_label(*gd.alg, orb.triple.h);
    else orb.data.dynkin = dynkin_label_from_spectrum(gd, orb.triple.h);
    SliceRaw raw = slodowy_raw(gd, orb.triple);
    orb.data.slice_weights = raw.weights;
    std::sort(orb.data.slice_weights.begin(), orb.data.slice_weights.end());
    return orb;
}

namespace {

// deterministic support enumeration: exhaustive within budget, otherwise
// simple-root based shapes (regular and near-regular supports)
struct CandidateGen {
    const GradedDecomposition& gd;
    SearchOptions opt;
    std::vector<std::vector<long>> supports;

    CandidateGen(const GradedDecomposition& g, const SearchOptions& o) : gd(g), opt(o) {
        long n = gd.piece_dim(1);
        double count = 0, c = 1;
        for (long s = 1; s <= opt.max_support && s <= n; ++s) {
            c = c * (double)(n - s + 1) / (double)s;
            count += c;
            if (count > (double)opt.max_candidates) break;
        }
        if (count <= (double)opt.max_candidates) {
            std::vector<long> cur;
            full_rec(cur, 0, n);
        } else {
            targeted(n);
        }
    }

    void full_rec(std::vector<long>& cur, long next, long n) {
        if (!cur.empty()) supports.push_back(cur);
        if ((long)cur.size() >= opt.max_support) return;
        for (long i = next; i < n; ++i) {
            cur.push_back(i);
            full_rec(cur, i + 1, n);
            cur.pop_back();
        }
    }

    void targeted(long n) {
        const ChevalleyAlgebra& alg = *gd.alg;
        const RootSystem& rs = alg.root_system();
        if (!gd.inner)
            throw std::domain_error("search_nilpotents: pool too large for an outer grading");
        std::vector<long> simple_pos;
        std::vector<bool> is_simple(n, false);
        {
            long k = 0;
            for (long b = 0; b < alg.dim(); ++b)
                if (gd.degree_of[b] == 1) {
                    long r = alg.root_of_basis(b);
                    if (r >= 0 && rs.heights[r] == 1) {
                        simple_pos.push_back(k);
                        is_simple[k] = true;
                    }
                    ++k;
                }
        }
        std::set<std::vector<long>> seen;
        auto add = [&](std::vector<long> s) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (!s.empty() && seen.insert(s).second) supports.push_back(std::move(s));
        };
        add(simple_pos);
        // all-but-one and all-but-one plus one extra
        for (size_t j = 0; j < simple_pos.size(); ++j) {
            std::vector<long> base;
            for (size_t i = 0; i < simple_pos.size(); ++i)
                if (i != j) base.push_back(simple_pos[i]);
            add(base);
            for (long b = 0; b < n; ++b) {
                if (is_simple[b]) continue;
                std::vector<long> s = base;
                s.push_back(b);
                add(s);
            }
        }
        // full simple support plus one extra
        for (long b = 0; b < n; ++b) {
            if (is_simple[b]) continue;
            std::vector<long> s = simple_pos;
            s.push_back(b);
            add(s);
        }
        // two removed, one extra
        for (size_t j = 0; j < simple_pos.size(); ++j)
            for (size_t j2 = j + 1; j2 < simple_pos.size(); ++j2) {
                std::vector<long> base;
                for (size_t i = 0; i < simple_pos.size(); ++i)
                    if (i != j && i != j2) base.push_back(simple_pos[i]);
                add(base);
                for (long b = 0; b < n; ++b) {
                    if (is_simple[b]) continue;
                    std::vector<long> s = base;
                    s.push_back(b);
                    add(s);
                    if ((long)supports.size() >= opt.max_candidates) return;
                }
            }
        // one removed, two extras
        for (size_t j = 0; j < simple_pos.size(); ++j) {
            std::vector<long> base;
            for (size_t i = 0; i < simple_pos.size(); ++i)
                if (i != j) base.push_back(simple_pos[i]);
            for (long b1 = 0; b1 < n; ++b1) {
                if (is_simple[b1]) continue;
                for (long b2 = b1 + 1; b2 < n; ++b2) {
                    if (is_simple[b2]) continue;
                    std::vector<long> s = base;
                    s.push_back(b1);
                    s.push_back(b2);
                    add(s);
                    if ((long)supports.size() >= opt.max_candidates) return;
                }
            }
        }
    }
};

}  // namespace

std::vector<FoundOrbit> search_nilpotents(const GradedDecomposition& gd,
                                          const SearchOptions& opt) {
    const ChevalleyAlgebra& alg = *gd.alg;
    long cond = grading_conductor(gd);
    CandidateGen gen(gd, opt);
    long h0 = gd.piece_dim(0), h1 = gd.piece_dim(1);
    long dim = alg.dim();
    CycloModEnv env = make_cyclo_mod_env(cond, 0);
    CycloModEnv env2 = make_cyclo_mod_env(cond, 1);

    // mod-p images of ad(h_1 basis): h_0 -> h_1, combined per candidate
    std::vector<FpMat> adp, adp2;
    for (long k = 0; k < h1; ++k) {
        CMat blk = gd.ad_block(gd.pieces[gd.imod(1)][k], 0, 1);
        FpMat f(h1, h0), f2(h1, h0);
        for (long i = 0; i < h1; ++i)
            for (long j = 0; j < h0; ++j) {
                f(i, j) = env.reduce(blk(i, j));
                f2(i, j) = env2.reduce(blk(i, j));
            }
        adp.push_back(std::move(f));
        adp2.push_back(std::move(f2));
    }
    // full mod-p ad matrices (inner, basis-aligned): used for a cheap orbit
    // sketch that avoids re-classifying representatives of the same orbit
    std::vector<FpMat> adfull;
    std::vector<std::vector<long>> piece_idx;
    if (gd.inner) {
        piece_idx.assign(gd.m, {});
        for (long b = 0; b < dim; ++b) piece_idx[gd.degree_of[b]].push_back(b);
        for (long k = 0; k < h1; ++k) {
            CMat full = alg.ad_matrix(gd.pieces[gd.imod(1)][k]);
            FpMat f(dim, dim);
            for (long i = 0; i < dim; ++i)
                for (long j = 0; j < dim; ++j)
                    if (!full(i, j).is_zero()) f(i, j) = env.reduce(full(i, j));
            adfull.push_back(std::move(f));
        }
    }
    auto matmul_p = [&](const FpMat& a, const FpMat& b) {
        FpMat c(a.nr, b.nc);
        for (long i = 0; i < a.nr; ++i)
            for (long k = 0; k < a.nc; ++k) {
                uint64_t v = a(i, k);
                if (!v) continue;
                for (long j = 0; j < b.nc; ++j)
                    if (b(k, j))
                        c(i, j) = (uint64_t)((c(i, j) + (unsigned __int128)v * b(k, j)) % env.p);
            }
        return c;
    };

    std::map<OrbitData, FoundOrbit> found;
    std::set<std::vector<long>> sketches;
    long candidates = 0;
    for (const auto& support : gen.supports) {
        if (candidates > opt.max_candidates) break;
        for (long ct = 0; ct < opt.coeff_trials; ++ct) {
            if (++candidates > opt.max_candidates) break;
            std::vector<long> coeffs(support.size(), 1);
            if (ct > 0) {
                DetRng rng(mix_seed(opt.seed, (uint64_t)candidates * 131u + (uint64_t)ct));
                const long pool[4] = {1, -1, 2, -2};
                for (auto& cc : coeffs) cc = pool[rng.below(4)];
            }
            auto screen = [&](const std::vector<FpMat>& mats, uint64_t p) {
                FpMat f(h1, h0);
                for (size_t s = 0; s < support.size(); ++s) {
                    uint64_t cc =
                        coeffs[s] >= 0 ? (uint64_t)coeffs[s] : p - (uint64_t)(-coeffs[s]);
                    const FpMat& mk = mats[support[s]];
                    for (size_t idx = 0; idx < f.a.size(); ++idx)
                        f.a[idx] = (uint64_t)((f.a[idx] + (unsigned __int128)cc * mk.a[idx]) % p);
                }
                return h0 - rank_mod_p(std::move(f), p);
            };
            if (screen(adp, env.p) > opt.keep_reldim_max &&
                screen(adp2, env2.p) > opt.keep_reldim_max)
                continue;
            CVec coords(h1, Cyclo(0L));
            for (size_t s = 0; s < support.size(); ++s) coords[support[s]] = Cyclo(coeffs[s]);
            CVec e = gd.from_piece_coords(1, coords);
            if (!nilpotent_screen(gd, e)) continue;
            if (gd.inner) {
                FpMat A(dim, dim);
                for (size_t s = 0; s < support.size(); ++s) {
                    uint64_t cc = coeffs[s] >= 0 ? (uint64_t)coeffs[s]
                                                 : env.p - (uint64_t)(-coeffs[s]);
                    const FpMat& mk = adfull[support[s]];
                    for (size_t idx = 0; idx < A.a.size(); ++idx)
                        A.a[idx] =
                            (uint64_t)((A.a[idx] + (unsigned __int128)cc * mk.a[idx]) % env.p);
                }
                std::vector<long> sketch;
                FpMat P = A;
                for (int k = 1; k <= 3; ++k) {
                    for (long i = 0; i < gd.m; ++i) {
                        const auto& cols = piece_idx[i];
                        const auto& rows = piece_idx[(i + k) % gd.m];
                        FpMat blk((long)rows.size(), (long)cols.size());
                        for (size_t r = 0; r < rows.size(); ++r)
                            for (size_t c = 0; c < cols.size(); ++c)
                                blk((long)r, (long)c) = P(rows[r], cols[c]);
                        sketch.push_back((long)cols.size() - rank_mod_p(std::move(blk), env.p));
                    }
                    if (k < 3) P = matmul_p(A, P);
                }
                if (!sketches.insert(sketch).second) continue;
            }
            FoundOrbit orb;
            try {
                orb = classify_nilpotent(gd, e);
            } catch (const std::domain_error&) {
                continue;
            }
            if (orb.data.relative_dimension > opt.keep_reldim_max) continue;
            orb.support = support;
            orb.coeffs = coeffs;
            found.try_emplace(orb.data, std::move(orb));
        }
    }
    std::vector<FoundOrbit> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
}

std::vector<CVec> seeded_representatives(const GradedDecomposition& gd, const std::string& kind,
                                         uint64_t seed) {
    const ChevalleyAlgebra& alg = *gd.alg;
    const RootSystem& rs = alg.root_system();
    if (!gd.inner) throw std::domain_error("seeded_representatives: inner gradings only");
    if (kind == "regular") {
        CVec e = alg.zero();
        for (long i = 0; i < rs.rank; ++i) {
            std::vector<long> s(rs.rank, 0);
            s[i] = 1;
            e[alg.e_index(rs.root_index(s))] = Cyclo(1L);
        }
        return {e};
    }
    if (kind == "subregular") {
        if (gd.m != 2 || (rs.type != 'B' && rs.type != 'C'))
            throw std::domain_error("seeded_representatives: subregular recipes cover B_l/2, C_l/2");
        long l = rs.rank;
        std::vector<std::vector<long>> targets;
        if (rs.type == 'B') {
            // ab-diagram [abab...aba, a, b]: h acts on the v/w basis with
            // eigenvalues lam/mu below; h_1 = Hom(W1,W2) has spectrum mu_j - lam_i
            std::vector<long> lam, mu;
            for (long i = 1; i <= l; ++i) lam.push_back(-2 * l + 4 * i - 2);
            lam.push_back(0);
            for (long i = 1; i <= l - 1; ++i) mu.push_back(-2 * l + 4 * i);
            mu.push_back(0);
            std::vector<long> s;
            for (long x : lam)
                for (long y : mu) s.push_back(y - x);
            std::sort(s.begin(), s.end());
            targets.push_back(std::move(s));
        } else {
            // ab-diagrams [abab...ab, ab] and [abab...ab, ba]
            auto make = [&](bool first_variant) {
                std::vector<long> s;
                for (long i = 1; i <= l - 1; ++i)
                    for (long j = i; j <= l - 1; ++j) {
                        s.push_back(-4 * l + 4 * (i + j) - 2);
                        s.push_back(4 * l - 4 * (i + j) + 2);
                    }
                for (long i = 1; i <= l - 1; ++i) {
                    long v = first_variant ? (-2 * l + 4 * i - 2) : (-2 * l + 4 * i);
                    s.push_back(v);
                    s.push_back(-v);
                }
                s.push_back(2);
                s.push_back(-2);
                std::sort(s.begin(), s.end());
                return s;
            };
            targets.push_back(make(true));
            targets.push_back(make(false));
        }
        SearchOptions opt;
        opt.max_support = std::min<long>(l + 2, 6);
        opt.seed = seed;
        std::vector<FoundOrbit> orbs = search_nilpotents(gd, opt);
        std::vector<CVec> out;
        for (const auto& target : targets) {
            bool ok = false;
            for (const auto& orb : orbs) {
                if (centralizer_total(gd, orb.rep) != rs.rank + 2) continue;
                if (ad_h_spectrum(gd, orb.triple.h, 1) == target) {
                    out.push_back(orb.rep);
                    ok = true;
                    break;
                }
            }
            if (!ok) throw std::logic_error("seeded_representatives: expected spectrum not found");
        }
        return out;
    }
    throw std::domain_error("seeded_representatives: unknown kind " + kind);
}

}  // namespace vinberg
