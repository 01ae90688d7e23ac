#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "vinberg/rootdata.hpp"

using namespace vinberg;

TEST_CASE("A2 enumeration") {
    RootSystem rs = build_root_system('A', 2);
    CHECK(rs.nroots() == 6);
    std::vector<long> hs = rs.heights;
    std::sort(hs.begin(), hs.end());
    CHECK(hs == std::vector<long>{-2, -1, -1, 1, 1, 2});
}

TEST_CASE("root counts and Coxeter numbers") {
    struct Row {
        char t;
        long rank, nroots, maxht;
    };
    for (auto [t, rank, nroots, maxht] : {Row{'E', 8, 240, 29}, Row{'G', 2, 12, 5},
                                          Row{'F', 4, 48, 11}, Row{'B', 3, 18, 5},
                                          Row{'C', 3, 18, 5}, Row{'D', 4, 24, 5},
                                          Row{'E', 6, 72, 11}, Row{'E', 7, 126, 17},
                                          Row{'A', 4, 20, 4}}) {
        RootSystem rs = build_root_system(t, rank);
        CHECK(rs.nroots() == nroots);
        CHECK(rs.max_height() == maxht);
        CHECK(rs.coxeter_number() == maxht + 1);
    }
    CHECK_THROWS_AS(build_root_system('C', 2), std::domain_error);
    CHECK_THROWS_AS(build_root_system('X', 4), std::domain_error);
}

TEST_CASE("reflection closure is idempotent") {
    for (auto [t, r] : {std::pair<char, long>{'F', 4}, {'G', 2}, {'B', 3}}) {
        RootSystem rs = build_root_system(t, r);
        for (long i = 0; i < rs.nroots(); ++i)
            for (long j = 0; j < rs.nroots(); ++j)
                CHECK(rs.root_index(rs.reflect(rs.roots[i], rs.roots[j])) >= 0);
    }
}

TEST_CASE("invariant degrees") {
    CHECK(build_root_system('A', 2).invariant_degrees() == std::vector<long>{2, 3});
    CHECK(build_root_system('E', 6).invariant_degrees() ==
          std::vector<long>{2, 5, 6, 8, 9, 12});
    CHECK(build_root_system('E', 8).invariant_degrees() ==
          std::vector<long>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(build_root_system('F', 4).invariant_degrees() == std::vector<long>{2, 6, 8, 12});
    CHECK(build_root_system('D', 4).invariant_degrees() == std::vector<long>{2, 4, 4, 6});
    CHECK(build_root_system('D', 5).invariant_degrees() == std::vector<long>{2, 4, 5, 6, 8});
    CHECK(build_root_system('B', 4).invariant_degrees() == std::vector<long>{2, 4, 6, 8});
    // sum (d_i - 1) = number of positive roots, for every type
    for (auto [t, r] : {std::pair<char, long>{'A', 5}, {'B', 4}, {'C', 4}, {'D', 5},
                        {'E', 7}, {'F', 4}, {'G', 2}}) {
        RootSystem rs = build_root_system(t, r);
        long s = 0;
        for (long d : rs.invariant_degrees()) s += d - 1;
        CHECK(s == rs.npos);
    }
}

TEST_CASE("rho_check pairings") {
    {
        RootSystem rs = build_root_system('A', 2);
        CoweightVector rho = rho_check(rs);
        CHECK(rho.pair_root({1, 1}) == 2);
    }
    {
        RootSystem rs = build_root_system('E', 8);
        CHECK(rho_check(rs).pair_root(rs.highest_root()) == 29);
    }
    {
        RootSystem rs = build_root_system('G', 2);
        CHECK(rho_check(rs).pair_root(rs.highest_root()) == 5);
        CHECK(rs.highest_root() == std::vector<long>{3, 2});
    }
    // <alpha, rho_check> = ht(alpha) for every root
    RootSystem rs = build_root_system('F', 4);
    CoweightVector rho = rho_check(rs);
    for (long i = 0; i < rs.nroots(); ++i)
        CHECK(rho.pair_root(rs.roots[i]) == rs.heights[i]);
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(build_root_system('D', 4)).size() == 6);
    CHECK(diagram_automorphisms(build_root_system('E', 8)).size() == 1);
    CHECK(diagram_automorphisms(build_root_system('A', 3)).size() == 2);
    CHECK(diagram_automorphisms(build_root_system('E', 6)).size() == 2);
    CHECK(diagram_automorphisms(build_root_system('F', 4)).size() == 1);
    // automorphisms preserve heights
    RootSystem rs = build_root_system('D', 4);
    for (const auto& da : diagram_automorphisms(rs)) {
        for (long i = 0; i < rs.nroots(); ++i) {
            std::vector<long> img(rs.rank);
            for (long k = 0; k < rs.rank; ++k) img[da.perm[k]] = rs.roots[i][k];
            long j = rs.root_index(img);
            REQUIRE(j >= 0);
            CHECK(rs.heights[j] == rs.heights[i]);
        }
    }
}

TEST_CASE("coinvariant lattices") {
    RootSystem e8 = build_root_system('E', 8);
    // identity: free of rank 8
    std::vector<Int> id_fac = coinvariant_lattice(e8, lattice_identity(8));
    CHECK(id_fac == std::vector<Int>(8, Int(0)));
    // Coxeter element: order 30, trivial coinvariants
    std::vector<long> simples;
    for (long i = 0; i < 8; ++i) {
        std::vector<long> e(8, 0);
        e[i] = 1;
        simples.push_back(e8.root_index(e));
    }
    LatticeEndo cox = subsystem_coxeter(e8, simples);
    CHECK(endo_order(cox) == 30);
    CHECK(abs(endo_det_one_minus(cox)) == 1);
    CHECK(coinvariant_lattice(e8, cox).empty());
    // A4 x A4 Coxeter element: elliptic of order 5 with L/(1-w)L = F_5^2
    auto [a4a, a4b] = a4_a4_in_e8(e8);
    std::vector<long> both = a4a;
    both.insert(both.end(), a4b.begin(), a4b.end());
    LatticeEndo w = subsystem_coxeter(e8, both);
    CHECK(endo_order(w) == 5);
    CHECK(abs(endo_det_one_minus(w)) == 25);
    CHECK(coinvariant_lattice(e8, w) == std::vector<Int>{Int(5), Int(5)});
    // product of finite factors equals |det(1 - w)|
    {
        Int prod(1);
        for (const Int& f : coinvariant_lattice(e8, w)) prod *= f;
        CHECK(prod == abs(endo_det_one_minus(w)));
    }
    // single reflection in A1: det -1
    RootSystem a1 = build_root_system('A', 1);
    LatticeEndo s = subsystem_coxeter(a1, {0});
    CHECK(s.mat[0][0] == -1);
    // dependent selection
    RootSystem a2 = build_root_system('A', 2);
    CHECK_THROWS_AS(subsystem_coxeter(a2, {0, 1, 2}), std::domain_error);
}
