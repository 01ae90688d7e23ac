#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "vinberg/nilpotent.hpp"
#include "vinberg/slice.hpp"
#include "vinberg/util.hpp"

using namespace vinberg;

namespace {

std::shared_ptr<ChevalleyAlgebra> make(char t, long r) {
    return std::make_shared<ChevalleyAlgebra>(build_root_system(t, r));
}

using WL = std::vector<std::pair<long, long>>;

WL printed(const GradedDecomposition& gd, const OrbitData& d) {
    WL out;
    for (auto [w, k] : d.slice_weights) out.push_back({w, ((1 - k) % gd.m + gd.m) % gd.m});
    std::sort(out.begin(), out.end());
    return out;
}

WL sorted(WL w) {
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace

TEST_CASE("trivial grading completes sl2") {
    auto alg = make('A', 1);
    GradedDecomposition gd = principal_grading(alg, {1, {}});
    CVec e = alg->root_vector(0);
    Sl2Triple t = complete_sl2(gd, e);
    CHECK(t.h == alg->basis_elem(0));
    CHECK(t.f == alg->root_vector(1));
    CHECK(t.h_in_cartan);
}

TEST_CASE("complete_sl2 rejects bad input") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, {3, {}});
    CHECK_THROWS_AS(complete_sl2(gd, alg->zero()), std::domain_error);
    // a Cartan element is not nilpotent (and not in h_1)
    CHECK_THROWS_AS(complete_sl2(gd, alg->basis_elem(0)), std::domain_error);
}

TEST_CASE("A2 Coxeter subregular representative") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, {3, {}});
    // e = e_{alpha_1} + e_{alpha_2}: support on all but one affine node
    CVec e = alg->zero();
    for (long i = 0; i < 2; ++i) {
        std::vector<long> s(2, 0);
        s[i] = 1;
        e[alg->e_index(alg->root_system().root_index(s))] = Cyclo(1L);
    }
    FoundOrbit orb = classify_nilpotent(gd, e);
    CHECK(orb.data.relative_dimension == 1);
    // the search finds it too
    SearchOptions opt;
    opt.max_support = 3;
    auto orbs = search_nilpotents(gd, opt);
    bool found_subreg = false;
    for (auto& o : orbs)
        if (o.data.relative_dimension == 1 && o.data == orb.data) found_subreg = true;
    CHECK(found_subreg);
}

TEST_CASE("F4/2 appendix fixture: three orbits, labels and weights") {
    auto alg = make('F', 4);
    GradedDecomposition gd = principal_grading(alg, {2, {}});
    SearchOptions opt;
    opt.max_support = 5;
    opt.seed = 7;
    std::vector<FoundOrbit> orbs = search_nilpotents(gd, opt);
    REQUIRE(orbs.size() == 3);
    // sorted by relative dimension, then label
    CHECK(orbs[0].data.relative_dimension == 0);
    CHECK(orbs[0].data.dynkin == std::vector<long>{2, 2, 2, 2});
    CHECK(printed(gd, orbs[0].data) == sorted({{4, 0}, {12, 0}, {16, 0}, {24, 0}}));
    CHECK(orbs[1].data.relative_dimension == 1);
    CHECK(orbs[1].data.dynkin == std::vector<long>{2, 2, 0, 2});
    CHECK(orbs[2].data.relative_dimension == 1);
    CHECK(orbs[2].data.dynkin == std::vector<long>{2, 2, 0, 2});
    WL w1 = printed(gd, orbs[1].data);
    WL w2 = printed(gd, orbs[2].data);
    WL expect_a = sorted({{6, 1}, {4, 0}, {8, 0}, {12, 0}, {12, 0}, {16, 0}});
    WL expect_b = sorted({{12, 1}, {4, 0}, {6, 0}, {8, 0}, {12, 0}, {16, 0}});
    bool match = (w1 == expect_a && w2 == expect_b) || (w1 == expect_b && w2 == expect_a);
    CHECK(match);
    // subregular: dim z_h(e) = rank + 2 on both codimension-1 orbits
    for (int i = 1; i <= 2; ++i)
        CHECK(centralizer_total(gd, orbs[i].rep) == 6);
}

TEST_CASE("triple invariants on F4/2 orbits") {
    auto alg = make('F', 4);
    GradedDecomposition gd = principal_grading(alg, {2, {}});
    SearchOptions opt;
    opt.max_support = 4;
    std::vector<FoundOrbit> orbs = search_nilpotents(gd, opt);
    for (auto& orb : orbs) {
        // z_{h_0}(e) and z_{h_0}(f) agree
        long ze = centralizer_dims(gd, orb.triple.e, 1)[0];
        long zf = centralizer_dims(gd, orb.triple.f, -1)[0];
        CHECK(ze == zf);
        // h_1 = [h_0, e] + z_{h_1}(f) as a direct sum
        CMat blk = gd.ad_block(orb.triple.e, 0, 1);
        long dim_image = row_echelon(blk);
        SliceRaw raw = slodowy_raw(gd, orb.triple);
        long zf1 = 0;
        for (auto [w, k] : raw.weights)
            if (k == 1) ++zf1;
        CHECK(dim_image + zf1 == gd.piece_dim(1));
        // any two completions give the same data (exercise the solver twice)
        FoundOrbit again = classify_nilpotent(gd, orb.rep);
        CHECK(again.data == orb.data);
    }
}

TEST_CASE("F4/8 appendix fixture: 4 codim-0 and 7 codim-1 orbits") {
    auto alg = make('F', 4);
    GradedDecomposition gd = principal_grading(alg, {8, {}});
    CHECK(gd.piece_dim(1) == 7);
    SearchOptions opt;
    opt.max_support = 7;
    opt.coeff_trials = 4;
    opt.seed = 7;
    std::vector<FoundOrbit> orbs = search_nilpotents(gd, opt);
    long c0 = 0, c1 = 0;
    for (auto& o : orbs) {
        if (o.data.relative_dimension == 0) ++c0;
        if (o.data.relative_dimension == 1) ++c1;
    }
    CHECK(c0 == 4);
    CHECK(c1 == 7);
    // orbit 5 of the appendix: weight profile with [2,1],[8,0]x2,...
    WL orbit5 = sorted({{2, 1}, {8, 0}, {8, 0}, {2, 7}, {8, 6}, {12, 6}, {8, 4}, {2, 3},
                        {4, 2}, {8, 2}});
    // orbit 10: [6,1],[4,0],[8,0],[6,7],[4,6]x2,[6,5],[4,4],[8,4],[6,3],[4,2]x2
    WL orbit10 = sorted({{6, 1}, {4, 0}, {8, 0}, {6, 7}, {4, 6}, {4, 6}, {6, 5}, {4, 4},
                         {8, 4}, {6, 3}, {4, 2}, {4, 2}});
    bool found5 = false, found10 = false;
    for (auto& o : orbs) {
        if (o.data.relative_dimension != 1) continue;
        WL w = printed(gd, o.data);
        if (w == orbit5) found5 = true;
        if (w == orbit10) found10 = true;
    }
    CHECK(found5);
    CHECK(found10);
    // exactly one codimension-0 orbit is not reduced
    long nonreduced = 0;
    for (auto& o : orbs) {
        if (o.data.relative_dimension != 0) continue;
        SliceData sd = slodowy_slice(gd, o.triple);
        if (!is_reduced(sd)) ++nonreduced;
    }
    CHECK(nonreduced == 1);
}

TEST_CASE("seeded representatives: B3/2 and C3/2") {
    {
        auto alg = make('B', 3);
        GradedDecomposition gd = principal_grading(alg, {2, {}});
        auto regs = seeded_representatives(gd, "regular");
        REQUIRE(regs.size() == 1);
        FoundOrbit reg = classify_nilpotent(gd, regs[0]);
        CHECK(reg.data.relative_dimension == 0);
        CHECK(reg.data.dynkin == std::vector<long>{2, 2, 2});
        auto subs = seeded_representatives(gd, "subregular");
        REQUIRE(subs.size() == 1);
        FoundOrbit sub = classify_nilpotent(gd, subs[0]);
        CHECK(sub.data.relative_dimension == 1);
        CHECK(centralizer_total(gd, subs[0]) == 5);  // rank + 2
        // the ab-diagram triple has h with eigenvalues -2l+4i-2 etc.
        std::vector<long> spec = ad_h_spectrum(gd, sub.triple.h, 1);
        std::vector<long> lam{-4, 0, 4, 0}, mu{-2, 2, 0};
        std::vector<long> expected;
        for (long x : lam)
            for (long y : mu) expected.push_back(y - x);
        std::sort(expected.begin(), expected.end());
        CHECK(spec == expected);
    }
    {
        auto alg = make('C', 3);
        GradedDecomposition gd = principal_grading(alg, {2, {}});
        auto subs = seeded_representatives(gd, "subregular");
        REQUIRE(subs.size() == 2);
        FoundOrbit a = classify_nilpotent(gd, subs[0]);
        FoundOrbit b = classify_nilpotent(gd, subs[1]);
        CHECK(a.data.relative_dimension == 1);
        CHECK(b.data.relative_dimension == 1);
        CHECK_FALSE(a.data == b.data);
    }
}

TEST_CASE("dynkin label needs Cartan h") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, {3, {}});
    CHECK_THROWS_AS(dynkin_label(*alg, alg->root_vector(0)), std::domain_error);
}
