#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vinberg/chevalley.hpp"
#include "vinberg/util.hpp"

using namespace vinberg;

namespace {

CVec random_int_elem(const ChevalleyAlgebra& alg, DetRng& rng, long lo = -3, long hi = 3) {
    CVec v = alg.zero();
    for (long i = 0; i < alg.dim(); ++i) v[i] = Cyclo(rng.range(lo, hi));
    return v;
}

bool jacobi_on_basis(const ChevalleyAlgebra& alg, long i, long j, long k) {
    CVec a = alg.basis_elem(i), b = alg.basis_elem(j), c = alg.basis_elem(k);
    CVec s = alg.bracket(a, alg.bracket(b, c));
    CVec t = alg.bracket(b, alg.bracket(c, a));
    CVec u = alg.bracket(c, alg.bracket(a, b));
    for (long x = 0; x < alg.dim(); ++x)
        if (!(s[x] + t[x] + u[x]).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("sl2 relations") {
    ChevalleyAlgebra alg(build_root_system('A', 1));
    CHECK(alg.dim() == 3);
    CVec e = alg.root_vector(0), f = alg.root_vector(1), h = alg.basis_elem(0);
    CHECK(alg.bracket(e, f) == h);
    CHECK(alg.bracket(h, e) == alg.bracket(h, e));
    CVec he = alg.bracket(h, e);
    for (long i = 0; i < 3; ++i) CHECK(he[i] == e[i] * Cyclo(2L));
    CVec hf = alg.bracket(h, f);
    for (long i = 0; i < 3; ++i) CHECK(hf[i] == f[i] * Cyclo(-2L));
    // ad(h) diagonal (0, 2, -2); ad(e)^3 = 0
    CMat adh = alg.ad_matrix(h);
    CHECK(adh(0, 0) == Cyclo(0L));
    CHECK(adh(1, 1) == Cyclo(2L));
    CHECK(adh(2, 2) == Cyclo(-2L));
    CHECK(alg.is_nilpotent(e));
    CHECK_FALSE(alg.is_semisimple(e));
    CHECK(alg.is_semisimple(h));
    // kappa(h, h) = 8
    CHECK(alg.killing_form(h, h) == Cyclo(8L));
    // e + f is semisimple
    CVec ef = alg.zero();
    ef[1] = Cyclo(1L);
    ef[2] = Cyclo(1L);
    CHECK(alg.is_semisimple(ef));
    CHECK_FALSE(alg.is_nilpotent(ef));
}

TEST_CASE("A2 structure constants have |N| = 1") {
    ChevalleyAlgebra alg(build_root_system('A', 2));
    const RootSystem& rs = alg.root_system();
    long a = rs.root_index({1, 0}), b = rs.root_index({0, 1});
    long n = alg.n_const(a, b);
    CHECK((n == 1 || n == -1));
}

TEST_CASE("bracket is alternating and matches ad") {
    ChevalleyAlgebra alg(build_root_system('A', 2));
    DetRng rng(7);
    for (int t = 0; t < 50; ++t) {
        CVec x = random_int_elem(alg, rng);
        CVec xx = alg.bracket(x, x);
        for (auto& c : xx) CHECK(c.is_zero());
        CVec y = random_int_elem(alg, rng);
        CVec b = alg.bracket(x, y);
        CMat ad = alg.ad_matrix(x);
        CVec b2 = mat_vec(ad, y);
        CHECK(b == b2);
    }
}

TEST_CASE("|N(a,b)| = p + 1 for all root pairs, several types") {
    for (auto [t, r] : {std::pair<char, long>{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'F', 4},
                        {'D', 4}}) {
        ChevalleyAlgebra alg{build_root_system(t, r)};
        const RootSystem& rs = alg.root_system();
        for (long a = 0; a < rs.nroots(); ++a)
            for (long b = 0; b < rs.nroots(); ++b) {
                if (b == rs.neg_index(a)) continue;
                std::vector<long> s(rs.rank);
                for (long i = 0; i < rs.rank; ++i) s[i] = rs.roots[a][i] + rs.roots[b][i];
                if (rs.root_index(s) < 0) continue;
                long n = alg.n_const(a, b);
                long expected = alg.chain_down(a, b) + 1;
                CHECK(std::abs(n) == expected);
                CHECK(alg.n_const(b, a) == -n);
                CHECK(alg.n_const(rs.neg_index(a), rs.neg_index(b)) == -n);
            }
    }
}

TEST_CASE("Jacobi identity, exhaustive for rank <= 3") {
    for (auto [t, r] : {std::pair<char, long>{'A', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        ChevalleyAlgebra alg{build_root_system(t, r)};
        long n = alg.dim();
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                for (long k = j + 1; k < n; ++k) REQUIRE(jacobi_on_basis(alg, i, j, k));
    }
}

TEST_CASE("Jacobi identity, 1000 random triples on F4") {
    ChevalleyAlgebra alg(build_root_system('F', 4));
    DetRng rng(11);
    for (int t = 0; t < 1000; ++t) {
        long i = (long)rng.below(alg.dim());
        long j = (long)rng.below(alg.dim());
        long k = (long)rng.below(alg.dim());
        REQUIRE(jacobi_on_basis(alg, i, j, k));
    }
}

TEST_CASE("Killing form properties") {
    ChevalleyAlgebra alg(build_root_system('G', 2));
    const RootSystem& rs = alg.root_system();
    // kappa(e_a, e_b) = 0 unless a + b = 0
    for (long a = 0; a < rs.nroots(); ++a)
        for (long b = 0; b < rs.nroots(); ++b) {
            Cyclo v = alg.killing_form(alg.root_vector(a), alg.root_vector(b));
            if (b != rs.neg_index(a)) CHECK(v.is_zero());
            else CHECK_FALSE(v.is_zero());
        }
    // invariance on random triples
    DetRng rng(3);
    for (int t = 0; t < 100; ++t) {
        CVec x = random_int_elem(alg, rng), y = random_int_elem(alg, rng),
             z = random_int_elem(alg, rng);
        CHECK(alg.killing_form(alg.bracket(x, y), z) == alg.killing_form(x, alg.bracket(y, z)));
    }
    // nondegeneracy (exhaustive for rank <= 4): full rank of the Gram matrix
    IMat kb = alg.killing_basis();
    CHECK(bareiss_rank(kb) == alg.dim());
}

TEST_CASE("trace of ad is zero") {
    ChevalleyAlgebra alg(build_root_system('F', 4));
    DetRng rng(5);
    for (int t = 0; t < 5; ++t) {
        CVec x = random_int_elem(alg, rng);
        CMat ad = alg.ad_matrix(x);
        Cyclo tr(0L);
        for (long i = 0; i < alg.dim(); ++i) tr += ad(i, i);
        CHECK(tr.is_zero());
    }
}

TEST_CASE("regularity predicates") {
    // E = sum of simple root vectors is regular nilpotent
    for (auto [t, r] : {std::pair<char, long>{'A', 3}, {'F', 4}, {'G', 2}}) {
        ChevalleyAlgebra alg{build_root_system(t, r)};
        const RootSystem& rs = alg.root_system();
        CVec e = alg.zero();
        for (long i = 0; i < rs.rank; ++i) {
            std::vector<long> simple(rs.rank, 0);
            simple[i] = 1;
            e[alg.e_index(rs.root_index(simple))] = Cyclo(1L);
        }
        CHECK(alg.is_nilpotent(e));
        CHECK(alg.is_regular(e));
        // zero element is not regular
        CHECK_FALSE(alg.is_regular(alg.zero()));
    }
    // F4: sum of 3 of the 4 simple root vectors is not regular; it is the
    // regular nilpotent of a B3/C3 Levi, with centralizer of dimension 10
    // (larger than the subregular value rank + 2 = 6, since the subregular
    // orbit of F4 is distinguished)
    ChevalleyAlgebra alg(build_root_system('F', 4));
    const RootSystem& rs = alg.root_system();
    CVec e = alg.zero();
    for (long i = 0; i < 3; ++i) {
        std::vector<long> simple(rs.rank, 0);
        simple[i] = 1;
        e[alg.e_index(rs.root_index(simple))] = Cyclo(1L);
    }
    CHECK_FALSE(alg.is_regular(e));
    CMat ad = alg.ad_matrix(e);
    long nullity = alg.dim() - row_echelon(ad);
    CHECK(nullity == 10);
}

TEST_CASE("nilpotent and semisimple are exclusive for nonzero elements") {
    ChevalleyAlgebra alg(build_root_system('B', 2));
    DetRng rng(23);
    for (int t = 0; t < 30; ++t) {
        CVec x = random_int_elem(alg, rng, -1, 1);
        bool zero = true;
        for (auto& c : x)
            if (!c.is_zero()) zero = false;
        if (zero) continue;
        bool both = alg.is_nilpotent(x) && alg.is_semisimple(x);
        CHECK_FALSE(both);
    }
}

TEST_CASE("pinned automorphism is a Lie algebra automorphism") {
    for (auto [t, r] : {std::pair<char, long>{'A', 3}, {'D', 4}, {'E', 6}}) {
        ChevalleyAlgebra alg{build_root_system(t, r)};
        const RootSystem& rs = alg.root_system();
        for (const auto& da : diagram_automorphisms(rs)) {
            if (da.is_identity()) continue;
            std::vector<long> s = alg.pinned_automorphism_signs(da);
            // build the matrix of vartheta and verify it preserves brackets
            auto apply = [&](const CVec& x) {
                CVec out = alg.zero();
                for (long i = 0; i < rs.rank; ++i) out[da.perm[i]] = x[i];
                for (long rt = 0; rt < rs.nroots(); ++rt) {
                    long img = alg.permute_root(da, rt);
                    out[alg.e_index(img)] = x[alg.e_index(rt)] * Cyclo(s[rt]);
                }
                return out;
            };
            DetRng rng(997);
            for (int trial = 0; trial < 20; ++trial) {
                CVec x = random_int_elem(alg, rng, -2, 2);
                CVec y = random_int_elem(alg, rng, -2, 2);
                CHECK(apply(alg.bracket(x, y)) == alg.bracket(apply(x), apply(y)));
            }
        }
    }
}
