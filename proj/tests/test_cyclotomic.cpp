#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclotomic.hpp"

#include <random>

using namespace obs::cyc;

TEST_CASE("cyclotomic polynomial relations")
{
    // zeta_3^2 + zeta_3 + 1 = 0
    auto z3 = CycScalar::zeta(3);
    CHECK((z3 * z3 + z3 + CycScalar::rational(1)).is_zero());

    // zeta_9^3 is a primitive cube root: equals zeta_3 under the embedding
    auto z9 = CycScalar::zeta(9);
    CHECK(z9.pow(3) == z3.to_conductor(9));
    CHECK(z9.pow(3).to_conductor(3) == z3);

    // |1 + zeta_3|^2 = 1
    auto one_plus = CycScalar::rational(1) + z3;
    CHECK(one_plus.norm_abs2() == CycScalar::rational(1));
}

TEST_CASE("conjugation is an involutive ring automorphism")
{
    std::mt19937 rng(11);
    auto random_scalar = [&](long n) {
        CycScalar x(n);
        CycScalar acc(n);
        for (long k = 0; k < n; ++k) {
            long c = static_cast<long>(rng() % 7) - 3;
            if (c != 0)
                acc += CycScalar::rational(Rational(c), n) * CycScalar::zeta(n, k);
        }
        return acc;
    };
    for (long n : {3L, 9L}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto x = random_scalar(n), y = random_scalar(n);
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
            // commutativity/associativity
            auto z = random_scalar(n);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("inverse and unsupported conductor")
{
    auto x = CycScalar::rational(2) + CycScalar::zeta(9, 4);
    CHECK((x * x.inverse()) == CycScalar::rational(Rational(1), 9));
    CHECK_THROWS_AS(CycScalar::zeta(5), obs::UnsupportedConductor);
}

TEST_CASE("cyclotomic_eval lifts integer zeta-polynomials")
{
    // zeta^2 + zeta + 1 over conductor 3
    CHECK(cyclotomic_eval(3, {1, 1, 1}).is_zero());
    // zeta_9^6 + zeta_9^3 + 1 = 0
    CHECK(cyclotomic_eval(9, {1, 0, 0, 1, 0, 0, 1}).is_zero());
}

TEST_CASE("numeric embedding agrees")
{
    auto z = CycScalar::zeta(9, 2) - CycScalar::rational(Rational(1, 3), 9);
    auto c = z.to_complex();
    auto manual = std::polar(1.0, 2.0 * 2.0 * std::acos(-1.0) / 9.0) - std::complex<double>(1.0 / 3.0, 0);
    CHECK(std::abs(c - manual) < 1e-12);
}
