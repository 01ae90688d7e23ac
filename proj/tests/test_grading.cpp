#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vinberg/grading.hpp"
#include "vinberg/util.hpp"
#include "vinberg/winvariants.hpp"

using namespace vinberg;

namespace {

std::shared_ptr<ChevalleyAlgebra> make(char t, long r) {
    return std::make_shared<ChevalleyAlgebra>(build_root_system(t, r));
}

GradingSpec inner(long m) { return GradingSpec{m, {}}; }

GradingSpec outer(const ChevalleyAlgebra& alg, long m, long order) {
    for (const auto& da : diagram_automorphisms(alg.root_system()))
        if (da.order == order && !da.is_identity()) return GradingSpec{m, da};
    throw std::runtime_error("no such outer automorphism");
}

std::vector<long> piece_dims(const GradedDecomposition& gd) {
    std::vector<long> out;
    for (long i = 0; i < gd.m; ++i) out.push_back(gd.piece_dim(i));
    return out;
}

}  // namespace

TEST_CASE("A2 Coxeter grading pieces") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, inner(3));
    CHECK(piece_dims(gd) == std::vector<long>{2, 3, 3});
    // h_1 spanned by the two simple root vectors and the lowest root vector
    const RootSystem& rs = alg->root_system();
    long lowest = rs.lowest_root_index();
    CHECK(gd.degree_of[alg->e_index(lowest)] == 1);
    CHECK(graded_bracket_check(gd));
}

TEST_CASE("F4 m=2 piece dims (24, 28)") {
    auto alg = make('F', 4);
    GradedDecomposition gd = principal_grading(alg, inner(2));
    CHECK(piece_dims(gd) == std::vector<long>{24, 28});
    CHECK(graded_bracket_check(gd));
    CHECK(invariant_degrees_of_B(gd) == std::vector<long>{2, 6, 8, 12});
    StabilityCertificate cert = stability_witness(gd, 64, 1);
    CHECK(cert.found);
    CHECK(cert.stabilizer_dim == 0);
    CHECK(dimension_identity_check(gd));  // 28 = 24 + 4
}

TEST_CASE("E8 m=5: dims (48,50,50,50,50), degrees {20,30}, stable") {
    auto alg = make('E', 8);
    GradedDecomposition gd = principal_grading(alg, inner(5));
    CHECK(piece_dims(gd) == std::vector<long>{48, 50, 50, 50, 50});
    CHECK(invariant_degrees_of_B(gd) == std::vector<long>{20, 30});
    StabilityCertificate cert = stability_witness(gd, 64, 1);
    CHECK(cert.found);
    CHECK(dimension_identity_check(gd));  // 50 = 48 + 2
}

TEST_CASE("E8 m=3: dims (80,84,84), degrees {12,18,24,30}") {
    auto alg = make('E', 8);
    GradedDecomposition gd = principal_grading(alg, inner(3));
    CHECK(piece_dims(gd) == std::vector<long>{80, 84, 84});
    CHECK(invariant_degrees_of_B(gd) == std::vector<long>{12, 18, 24, 30});
}

TEST_CASE("graded bracket negative control") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, inner(3));
    // move one vector from piece 1 to piece 2
    CVec moved = gd.pieces[1].back();
    gd.pieces[1].pop_back();
    gd.pieces[2].push_back(moved);
    long moved_basis = -1;
    for (long t = 0; t < gd.dim(); ++t)
        if (!moved[t].is_zero()) moved_basis = t;
    gd.degree_of[moved_basis] = 2;
    gd.pos_of_basis_[moved_basis] = (long)gd.pieces[2].size() - 1;
    for (size_t k = 0; k < gd.pieces[1].size(); ++k) {
        for (long t = 0; t < gd.dim(); ++t)
            if (!gd.pieces[1][k][t].is_zero()) gd.pos_of_basis_[t] = (long)k;
    }
    CHECK_FALSE(graded_bracket_check(gd));
}

TEST_CASE("A2 m=2 has no witness (negative control)") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, inner(2));
    StabilityCertificate cert = stability_witness(gd, 64, 1);
    CHECK_FALSE(cert.found);
    CHECK(cert.stabilizer_dim == 1);
    // deterministic given (seed, trials)
    StabilityCertificate cert2 = stability_witness(gd, 64, 1);
    CHECK(cert2.found == cert.found);
    CHECK(cert2.stabilizer_dim == cert.stabilizer_dim);
}

TEST_CASE("A2 Coxeter witness: all coordinates nonzero") {
    auto alg = make('A', 2);
    GradedDecomposition gd = principal_grading(alg, inner(3));
    StabilityCertificate cert = stability_witness(gd, 64, 1);
    CHECK(cert.found);
    // the witness has all three h_1 coordinates nonzero
    std::vector<CVec> dec = gd.decompose(cert.witness);
    for (const Cyclo& c : dec[1]) CHECK_FALSE(c.is_zero());
}

TEST_CASE("outer gradings: pieces and bracket closure") {
    {
        auto alg = make('A', 2);
        GradedDecomposition gd = principal_grading(alg, outer(*alg, 2, 2));
        CHECK(gd.piece_dim(0) + gd.piece_dim(1) == 8);
        CHECK(graded_bracket_check(gd));
        StabilityCertificate cert = stability_witness(gd, 64, 1);
        CHECK(cert.found);
        // 2A2: all degrees {2, 3} survive
        CHECK(invariant_degrees_of_B(gd) == std::vector<long>{2, 3});
        CHECK(dimension_identity_check(gd));
    }
    {
        auto alg = make('D', 4);
        GradedDecomposition gd = principal_grading(alg, outer(*alg, 3, 3));
        CHECK(graded_bracket_check(gd));
        StabilityCertificate cert = stability_witness(gd, 64, 1);
        CHECK(cert.found);
        CHECK(invariant_degrees_of_B(gd) == std::vector<long>{4, 6});
        CHECK(dimension_identity_check(gd));
    }
}

TEST_CASE("invariant degree shifts for outer types") {
    {
        // A3: odd degrees flip sign under the diagram flip
        RootSystem rs = build_root_system('A', 3);
        DiagramAutomorphism flip;
        for (const auto& da : diagram_automorphisms(rs))
            if (!da.is_identity()) flip = da;
        auto shifts = invariant_degree_shifts(rs, flip);
        REQUIRE(shifts.size() == 3);
        CHECK(shifts[0] == std::pair<long, long>{2, 0});
        CHECK(shifts[1] == std::pair<long, long>{3, 1});
        CHECK(shifts[2] == std::pair<long, long>{4, 0});
    }
    {
        // D4 triality: degree 2 and 6 fixed; the two degree-4 generators
        // carry the two nontrivial cube-root characters
        RootSystem rs = build_root_system('D', 4);
        DiagramAutomorphism tri;
        for (const auto& da : diagram_automorphisms(rs))
            if (da.order == 3) tri = da;
        auto shifts = invariant_degree_shifts(rs, tri);
        REQUIRE(shifts.size() == 4);
        CHECK(shifts[0] == std::pair<long, long>{2, 0});
        CHECK(shifts[3] == std::pair<long, long>{6, 0});
        long a1 = shifts[1].second, a2 = shifts[2].second;
        CHECK(shifts[1].first == 4);
        CHECK(shifts[2].first == 4);
        CHECK(((a1 == 1 && a2 == 2) || (a1 == 2 && a2 == 1)));
    }
    {
        // E6 flip: parity of the degree
        RootSystem rs = build_root_system('E', 6);
        DiagramAutomorphism flip;
        for (const auto& da : diagram_automorphisms(rs))
            if (!da.is_identity()) flip = da;
        auto shifts = invariant_degree_shifts(rs, flip);
        std::vector<std::pair<long, long>> expect{{2, 0}, {5, 1}, {6, 0},
                                                  {8, 0}, {9, 1}, {12, 0}};
        CHECK(shifts == expect);
    }
}

TEST_CASE("2E6 degrees of B") {
    auto alg = make('E', 6);
    GradedDecomposition gd = principal_grading(alg, outer(*alg, 2, 2));
    CHECK(invariant_degrees_of_B(gd) == std::vector<long>{2, 5, 6, 8, 9, 12});
    // m = 4: only degrees 8 and 12 survive
    GradedDecomposition gd4 = principal_grading(alg, outer(*alg, 4, 2));
    CHECK(invariant_degrees_of_B(gd4) == std::vector<long>{8, 12});
}

TEST_CASE("lem-pany identity for random x in h_{-1}") {
    auto alg = make('F', 4);
    for (long m : {2L, 3L, 4L}) {
        GradedDecomposition gd = principal_grading(alg, inner(m));
        DetRng rng(17 + m);
        for (int trial = 0; trial < 3; ++trial) {
            CVec coords((size_t)gd.piece_dim(-1), Cyclo(0L));
            for (auto& c : coords) c = Cyclo(rng.range(-2, 2));
            CVec x = gd.from_piece_coords(-1, coords);
            for (long n = 0; n < m; ++n) {
                CMat a = gd.ad_block(x, n, n - 1);
                CMat b = gd.ad_block(x, 1 - n, -n);
                long zn = gd.piece_dim(n) - row_echelon(a);
                long z1n = gd.piece_dim(1 - n) - row_echelon(b);
                CHECK(gd.piece_dim(n) - zn == gd.piece_dim(1 - n) - z1n);
            }
        }
    }
}
