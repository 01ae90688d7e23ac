#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vinberg/scalars.hpp"
#include "vinberg/util.hpp"

using namespace vinberg;

namespace {

Cyclo random_cyclo(long m, DetRng& rng) {
    std::vector<Rat> c(euler_phi(m));
    for (auto& x : c) {
        x = Rat(rng.range(-9, 9), rng.range(1, 4));
        x.canonicalize();
    }
    return Cyclo(m, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_poly(5) == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("normalization examples") {
    // zeta_4^2 = -1
    CHECK(Cyclo::zeta(4).pow(2) == Cyclo(-1L));
    // zeta_5^4 = -1 - z - z^2 - z^3
    Cyclo z5 = Cyclo::zeta(5);
    Cyclo expect = Cyclo(-1L) - z5 - z5.pow(2) - z5.pow(3);
    CHECK(Cyclo::zeta(5).pow(4) == expect);
    // inverse of (1 - zeta_3) is (1 - zeta_3^2)/3, checked by multiplying back
    Cyclo a = Cyclo(1L) - Cyclo::zeta(3);
    Cyclo inv = a.inverse();
    CHECK(a * inv == Cyclo(1L));
    Cyclo expected_inv = (Cyclo(1L) - Cyclo::zeta(3).pow(2)) * Cyclo(Rat(1, 3));
    CHECK(inv == expected_inv);
}

TEST_CASE("zeta^m normalizes to 1") {
    for (long m : {2, 3, 4, 5, 8, 12, 30}) CHECK(Cyclo::zeta(m).pow(m) == Cyclo(1L));
}

TEST_CASE("ring axioms on random samples") {
    for (long m : {2L, 3L, 4L, 5L, 8L}) {
        DetRng rng(42 + m);
        for (int i = 0; i < 1000; ++i) {
            Cyclo a = random_cyclo(m, rng);
            Cyclo b = random_cyclo(m, rng);
            Cyclo c = random_cyclo(m, rng);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK((a * b) * b.inverse() == a);
        }
    }
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Cyclo(0L).inverse(), std::domain_error);
}

TEST_CASE("conductor reduction") {
    // zeta_6 = -zeta_3^2 lives in conductor 3
    Cyclo z6 = Cyclo::zeta(6);
    CHECK(z6.reduced().conductor() == 3);
    CHECK(z6 == Cyclo(0L) - Cyclo::zeta(3).pow(2));
    // zeta_8^2 = i has conductor 4
    CHECK(Cyclo::zeta(8).pow(2).reduced().conductor() == 4);
    // rational values reduce to conductor 1
    Cyclo r = Cyclo::zeta(5) + Cyclo(2L) - Cyclo::zeta(5);
    CHECK(r.is_rational());
    CHECK(r.to_rational() == 2);
    // zeta_3 + zeta_3^2 = -1
    CHECK((Cyclo::zeta(3) + Cyclo::zeta(3).pow(2)).to_rational() == -1);
}

TEST_CASE("cross-conductor arithmetic") {
    Cyclo x = Cyclo::zeta(3) * Cyclo::zeta(5);
    CHECK(x.conductor() == 15);
    CHECK(x == Cyclo::zeta(15, 8));  // zeta_15^5 zeta_15^3
    CHECK(x.pow(15) == Cyclo(1L));
}

TEST_CASE("rational strings") {
    CHECK(rat_str(Rat(-3, 7)) == "-3/7");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_parse("22/7") == Rat(22, 7));
}
