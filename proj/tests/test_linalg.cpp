#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linalg.hpp"

#include <random>

using namespace obs;
using namespace obs::linal;

TEST_CASE("fp rank and kernel on the stated examples")
{
    // zero 2x2 over F_3
    FpMatrix z(3, 2, 2);
    auto rk = fp_rank_kernel(z);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel_basis.size() == 2);

    // identity 4x4 over F_5
    FpMatrix id(5, 4, 4);
    for (size_t i = 0; i < 4; ++i)
        id.set(i, i, 1);
    rk = fp_rank_kernel(id);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel_basis.empty());

    // [[1,2],[2,4]] over F_5: rank 1, kernel dim 1.  Oracle: enumerate all 25 vectors.
    FpMatrix m(5, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    size_t kernel_count = 0;
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            FpVector v{a, b};
            auto img = m.apply(v);
            if (img[0] == 0 && img[1] == 0)
                ++kernel_count;
        }
    CHECK(kernel_count == 5);  // kernel has dimension 1
    rk = fp_rank_kernel(m);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel_basis.size() == 1);
    auto img = m.apply(rk.kernel_basis[0]);
    CHECK(img[0] == 0);
    CHECK(img[1] == 0);
}

TEST_CASE("fp rank equals transpose rank and kernel vectors vanish, randomized")
{
    std::mt19937 rng(20240517);
    for (long p : {3L, 5L, 7L}) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            FpMatrix m(p, rows, cols);
            for (size_t r = 0; r < rows; ++r)
                for (size_t c = 0; c < cols; ++c)
                    if (rng() % 3 == 0)
                        m.set(r, c, static_cast<long>(rng() % p));
            auto rk = fp_rank_kernel(m);
            auto rkt = fp_rank_kernel(m.transpose());
            CHECK(rk.rank == rkt.rank);
            CHECK(rk.rank + rk.kernel_basis.size() == cols);
            for (const auto& v : rk.kernel_basis) {
                auto img = m.apply(v);
                for (long x : img)
                    CHECK(x == 0);
            }
        }
    }
}

TEST_CASE("fp matrix rejects composite modulus")
{
    CHECK_THROWS_AS(FpMatrix(6, 2, 2), NonPrimeModulus);
}

TEST_CASE("smith normal form examples")
{
    // diag(2,3) -> (1,6): invariant factors via gcds of minors
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto s = smith_normal_form(m);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);

    IntMatrix zero(1, 1);
    auto s2 = smith_normal_form(zero);
    CHECK(s2.cokernel.describe() == "Z");

    IntMatrix pp(1, 1);
    pp.at(0, 0) = 5;
    auto s3 = smith_normal_form(pp);
    CHECK(s3.cokernel.describe() == "Z/5");
}

TEST_CASE("smith diag invariant under random unimodular operations")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + rng() % 3, m = 2 + rng() % 3;
        IntMatrix a(n, m);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < m; ++c)
                a.at(r, c) = static_cast<long>(rng() % 7) - 3;
        auto base = smith_normal_form(a);
        IntMatrix b = a;
        for (int op = 0; op < 6; ++op) {
            size_t i = rng() % n, j = rng() % n;
            long k1 = static_cast<long>(rng() % 5) - 2;
            if (i != j)
                for (size_t c = 0; c < m; ++c)
                    b.at(i, c) += k1 * b.at(j, c);
            size_t ci = rng() % m, cj = rng() % m;
            long k2 = static_cast<long>(rng() % 5) - 2;
            if (ci != cj)
                for (size_t r = 0; r < n; ++r)
                    b.at(r, ci) += k2 * b.at(r, cj);
        }
        auto perturbed = smith_normal_form(b);
        CHECK(base.diag == perturbed.diag);
    }
}

TEST_CASE("smith diag forms a divisibility chain")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(3, 4);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 4; ++c)
                a.at(r, c) = static_cast<long>(rng() % 13) - 6;
        auto s = smith_normal_form(a);
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i + 1] == 0)
                continue;
            REQUIRE(s.diag[i] != 0);
            CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}

TEST_CASE("p-localization")
{
    AbGroup g;
    g.generators = {"a", "b"};
    g.orders = {0, 6};
    auto l = p_localize(g, 3);
    CHECK(l.describe() == "Z + Z/3");

    AbGroup h;
    h.generators = {"a", "b"};
    h.orders = {3, 3};
    CHECK(p_localize(h, 3).describe() == "Z/3 + Z/3");

    AbGroup k;
    k.generators = {"a"};
    k.orders = {240};
    CHECK(p_localize(k, 3).describe() == "Z/3");

    // idempotent
    CHECK(p_localize(p_localize(k, 3), 3).describe() == "Z/3");
}

TEST_CASE("integer kernel lattice and solver")
{
    IntMatrix m(2, 3);
    // [[1,2,3],[2,4,6]] has rank 1, kernel rank 2
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    auto ker = kernel_lattice(m);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        Int s0 = v[0] + 2 * v[1] + 3 * v[2];
        CHECK(s0 == 0);
    }
    std::vector<Int> b{Int(3), Int(6)};
    std::vector<Int> x;
    REQUIRE(solve_integer(m, b, x));
    Int r0 = x[0] + 2 * x[1] + 3 * x[2];
    CHECK(r0 == 3);
    std::vector<Int> bad{Int(1), Int(1)};
    CHECK(!solve_integer(m, bad, x));
}

TEST_CASE("cokernel with named generators")
{
    IntMatrix m(2, 1);
    m.at(0, 0) = 0;
    m.at(1, 0) = 3;
    auto ck = cokernel(m, {"e1", "e2"});
    CHECK(ck.describe() == "Z + Z/3");
}
