#include "ring_builders.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace obs::ring {

namespace {
    std::string power(const std::string& base, long e)
    {
        if (e == 0)
            return "";
        if (e == 1)
            return base;
        return base + "^" + std::to_string(e);
    }

    std::string join_parts(const std::vector<std::string>& parts)
    {
        std::string out;
        for (const auto& s : parts) {
            if (s.empty())
                continue;
            if (!out.empty())
                out += "*";
            out += s;
        }
        return out.empty() ? "1" : out;
    }
}

std::pair<long, long> ab_normalize(long p, long a, long b)
{
    // alpha * beta^p = alpha^p * beta, rewritten toward high alpha exponents
    while (a >= 1 && b >= p) {
        a += p - 1;
        b -= p - 1;
    }
    return {a, b};
}

std::string ab_monomial_name(long a, long b)
{
    return join_parts({power("alpha", a), power("beta", b)});
}

std::string bht_monomial_name(long i, long j)
{
    return join_parts({power("v'", i), power("tau'", j)});
}

std::string bht_fp_monomial_name(bool u, long i, long j)
{
    return join_parts({u ? "u" : "", power("v", i), power("taubar", j)});
}

std::string bs1_monomial_name(long k)
{
    return k == 0 ? "1" : power("tau", k);
}

std::string xxp_monomial_name(long a, long b, int y_part)
{
    std::string tail = y_part == 1 ? "y" : (y_part == 2 ? "y'" : "");
    return join_parts({power("x", a), power("x'", b), tail});
}

namespace {

    using MutRing = std::shared_ptr<TruncatedRing>;

    MutRing make_bs1_z(long p, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BS1(" + std::to_string(p) + ")", p, cap, Domain::Z);
        for (long k = 0; 2 * k <= cap; ++k)
            r->add_monomial({bs1_monomial_name(k), 2 * k, 0});
        for (long k1 = 1; 2 * k1 <= cap; ++k1)
            for (long k2 = k1; 2 * (k1 + k2) <= cap; ++k2)
                r->set_product(bs1_monomial_name(k1), bs1_monomial_name(k2),
                               GradedElement::monomial(r, bs1_monomial_name(k1 + k2)));
        return r;
    }

    MutRing make_bs1_fp(long p, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BS1mod(" + std::to_string(p) + ")", p, cap, Domain::Fp);
        r->add_monomial({"1", 0, p});
        for (long k = 1; 2 * k <= cap; ++k)
            r->add_monomial({power("taubar", k), 2 * k, p});
        for (long k1 = 1; 2 * k1 <= cap; ++k1)
            for (long k2 = k1; 2 * (k1 + k2) <= cap; ++k2)
                r->set_product(power("taubar", k1), power("taubar", k2),
                               GradedElement::monomial(r, power("taubar", k1 + k2)));
        return r;
    }

    MutRing make_bht_z(long p, long t, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BHt(" + std::to_string(p) + "," + std::to_string(t) + ")", p,
                                                 cap, Domain::Z);
        for (long i = 0; 2 * i <= cap; ++i)
            for (long j = 0; 2 * (i + j) <= cap; ++j)
                r->add_monomial({bht_monomial_name(i, j), 2 * (i + j), i >= 1 ? p : 0});
        // complete polynomial products within the cap
        std::vector<std::pair<long, long>> monos;
        for (long i = 0; 2 * i <= cap; ++i)
            for (long j = 0; 2 * (i + j) <= cap; ++j)
                monos.emplace_back(i, j);
        for (const auto& [i1, j1] : monos) {
            if (i1 == 0 && j1 == 0)
                continue;
            for (const auto& [i2, j2] : monos) {
                if (i2 == 0 && j2 == 0)
                    continue;
                std::string a = bht_monomial_name(i1, j1), b = bht_monomial_name(i2, j2);
                if (a > b)
                    continue;
                long i = i1 + i2, j = j1 + j2;
                if (2 * (i + j) > cap)
                    continue;
                r->set_product(a, b, GradedElement::monomial(r, bht_monomial_name(i, j)));
            }
        }
        return r;
    }

    MutRing make_bht_fp(long p, long t, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BHtmod(" + std::to_string(p) + "," + std::to_string(t) + ")",
                                                 p, cap, Domain::Fp);
        for (int u = 0; u <= 1; ++u)
            for (long i = 0; u + 2 * i <= cap; ++i)
                for (long j = 0; u + 2 * (i + j) <= cap; ++j)
                    r->add_monomial({bht_fp_monomial_name(u, i, j), u + 2 * (i + j), p});
        struct M {
            int u;
            long i, j;
        };
        std::vector<M> monos;
        for (int u = 0; u <= 1; ++u)
            for (long i = 0; u + 2 * i <= cap; ++i)
                for (long j = 0; u + 2 * (i + j) <= cap; ++j)
                    monos.push_back({u, i, j});
        for (const auto& m1 : monos) {
            if (!m1.u && m1.i == 0 && m1.j == 0)
                continue;
            for (const auto& m2 : monos) {
                if (!m2.u && m2.i == 0 && m2.j == 0)
                    continue;
                std::string a = bht_fp_monomial_name(m1.u, m1.i, m1.j);
                std::string b = bht_fp_monomial_name(m2.u, m2.i, m2.j);
                if (a > b)
                    continue;
                long deg = (m1.u + m2.u) + 2 * (m1.i + m2.i + m1.j + m2.j);
                if (deg > cap)
                    continue;
                if (m1.u && m2.u) {
                    r->set_product(a, b, GradedElement(r, deg));  // u^2 = 0
                } else {
                    r->set_product(a, b, GradedElement::monomial(
                                             r, bht_fp_monomial_name(m1.u || m2.u, m1.i + m2.i, m1.j + m2.j)));
                }
            }
        }
        return r;
    }

    MutRing make_bgt_z(long p, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BGt(" + std::to_string(p) + ")", p, cap, Domain::Z);
        // alpha-beta monomials in normal form (exponent of beta < p unless alpha absent)
        std::vector<std::pair<long, long>> monos;
        for (long d = 0; 2 * d <= cap; ++d) {
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (!(b <= p - 1 || a == 0))
                    continue;
                if (a == 0 && b == 0)
                    continue;
                monos.emplace_back(a, b);
                r->add_monomial({ab_monomial_name(a, b), 2 * d, p});
            }
        }
        r->add_monomial({"1", 0, 0});
        for (long i = 2; i <= p - 1; ++i)
            r->add_monomial({"chi_" + std::to_string(i), 2 * i, i == p - 1 ? 0 : p});
        r->add_monomial({"zeta", 2 * p, 0});
        for (const auto& [a, b] : monos)
            if (2 * (p + a + b) <= cap)
                r->add_monomial({"zeta*" + ab_monomial_name(a, b), 2 * (p + a + b), p});
        if (p >= 3)
            r->add_monomial({"zeta*chi_" + std::to_string(p - 1), 4 * p - 2, 0});

        // products among alpha-beta monomials
        for (const auto& [a1, b1] : monos) {
            for (const auto& [a2, b2] : monos) {
                std::string na = ab_monomial_name(a1, b1), nb = ab_monomial_name(a2, b2);
                if (na > nb)
                    continue;
                long d = a1 + b1 + a2 + b2;
                if (2 * d > cap)
                    continue;
                auto [a, b] = ab_normalize(p, a1 + a2, b1 + b2);
                r->set_product(na, nb, GradedElement::monomial(r, ab_monomial_name(a, b)));
            }
        }
        // zeta * (alpha-beta monomial), zeta * chi_{p-1}
        for (const auto& [a, b] : monos) {
            if (2 * (p + a + b) > cap)
                continue;
            r->set_product("zeta", ab_monomial_name(a, b),
                           GradedElement::monomial(r, "zeta*" + ab_monomial_name(a, b)));
        }
        r->set_product("zeta", "chi_" + std::to_string(p - 1),
                       GradedElement::monomial(r, "zeta*chi_" + std::to_string(p - 1)));
        // chi_{p-1} against the three degree-2p monomials used by the top differential
        std::string chi = "chi_" + std::to_string(p - 1);
        r->set_product(ab_monomial_name(p, 0), chi, GradedElement::monomial(r, ab_monomial_name(2 * p - 1, 0)));
        r->set_product(ab_monomial_name(p - 1, 1), chi,
                       GradedElement::monomial(r, ab_monomial_name(2 * p - 2, 1), -1));
        r->set_product(ab_monomial_name(0, p), chi, GradedElement::monomial(r, ab_monomial_name(0, 2 * p - 1)));
        return r;
    }

    MutRing make_bgt_fp(long p, long cap)
    {
        auto r = std::make_shared<TruncatedRing>("BGtmod(" + std::to_string(p) + ")", p, cap, Domain::Fp);
        r->add_monomial({"1", 0, p});
        r->add_monomial({"y", 1, p});
        r->add_monomial({"y'", 1, p});
        std::vector<std::pair<long, long>> even;
        for (long d = 1; 2 * d <= cap; ++d) {
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (!(b <= p - 1 || a == 0))
                    continue;
                even.emplace_back(a, b);
                r->add_monomial({xxp_monomial_name(a, b, 0), 2 * d, p});
            }
        }
        for (long d = 1; d <= p - 1; ++d) {
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (!(b <= p - 1 || a == 0))
                    continue;
                r->add_monomial({xxp_monomial_name(a, b, 1), 2 * d + 1, p});
                r->add_monomial({xxp_monomial_name(a, b, 2), 2 * d + 1, p});
            }
        }
        for (long i = 2; i <= p - 1; ++i)
            r->add_monomial({"c_" + std::to_string(i), 2 * i, p});
        r->add_monomial({"z", 2 * p, p});
        for (const auto& [a, b] : even)
            if (2 * (p + a + b) <= cap && a + b <= p - 1)
                r->add_monomial({"z*" + xxp_monomial_name(a, b, 0), 2 * (p + a + b), p});
        r->add_monomial({"z*c_" + std::to_string(p - 1), 4 * p - 2, p});

        // tabled products: y/y' against low x-monomials, y'*c_{p-1}, z against x-monomials
        for (const auto& [a, b] : even) {
            if (a + b > p - 1)
                continue;
            r->set_product(xxp_monomial_name(a, b, 0), "y", GradedElement::monomial(r, xxp_monomial_name(a, b, 1)));
            r->set_product(xxp_monomial_name(a, b, 0), "y'", GradedElement::monomial(r, xxp_monomial_name(a, b, 2)));
            r->set_product(xxp_monomial_name(a, b, 0), "z",
                           GradedElement::monomial(r, "z*" + xxp_monomial_name(a, b, 0)));
        }
        r->set_product("y'", "c_" + std::to_string(p - 1),
                       GradedElement::monomial(r, xxp_monomial_name(0, p - 1, 2), -1));
        r->set_product("z", "c_" + std::to_string(p - 1),
                       GradedElement::monomial(r, "z*c_" + std::to_string(p - 1)));
        return r;
    }

}  // namespace

RingPtr RingSystem::by_id(const std::string& id) const
{
    for (const auto& [i, r] : all())
        if (i == id)
            return r;
    throw MissingTable("no ring " + id);
}

std::map<std::string, RingPtr> RingSystem::all() const
{
    std::map<std::string, RingPtr> m;
    m[bs1_z->id()] = bs1_z;
    m[bs1_fp->id()] = bs1_fp;
    m[bgt_z->id()] = bgt_z;
    m[bgt_fp->id()] = bgt_fp;
    for (const auto& r : bht_z)
        m[r->id()] = r;
    for (const auto& r : bht_fp)
        m[r->id()] = r;
    return m;
}

RingSystem build_ring_system(long p)
{
    if (!(p >= 3 && p % 2 == 1))
        throw NonPrimeModulus("ring system needs an odd prime");
    long cap = 4 * p;
    RingSystem sys;
    sys.p = p;

    auto bs1_z = make_bs1_z(p, cap);
    auto bs1_fp = make_bs1_fp(p, cap);
    auto bgt_z = make_bgt_z(p, cap);
    auto bgt_fp = make_bgt_fp(p, cap);
    std::vector<MutRing> bht_z, bht_fp;
    for (long t = 0; t <= p; ++t) {
        bht_z.push_back(make_bht_z(p, t, cap));
        bht_fp.push_back(make_bht_fp(p, t, cap));
    }

    // partners / reductions / Bocksteins
    bs1_z->set_partner(bs1_fp->id());
    bs1_fp->set_partner(bs1_z->id());
    for (long k = 0; 2 * k <= cap; ++k) {
        bs1_z->set_reduction(bs1_monomial_name(k),
                             GradedElement::monomial(bs1_fp, k == 0 ? "1" : power("taubar", k)));
        bs1_fp->set_bockstein(k == 0 ? "1" : power("taubar", k), GradedElement(bs1_z, 2 * k + 1));
    }
    for (long t = 0; t <= p; ++t) {
        bht_z[t]->set_partner(bht_fp[t]->id());
        bht_fp[t]->set_partner(bht_z[t]->id());
        for (long i = 0; 2 * i <= cap; ++i) {
            for (long j = 0; 2 * (i + j) <= cap; ++j) {
                bht_z[t]->set_reduction(bht_monomial_name(i, j),
                                        GradedElement::monomial(bht_fp[t], bht_fp_monomial_name(false, i, j)));
                bht_fp[t]->set_bockstein(bht_fp_monomial_name(false, i, j), GradedElement(bht_z[t], 2 * (i + j) + 1));
                if (2 * (i + j) + 1 <= cap)
                    bht_fp[t]->set_bockstein(bht_fp_monomial_name(true, i, j),
                                             GradedElement::monomial(bht_z[t], bht_monomial_name(i + 1, j)));
            }
        }
    }
    bgt_z->set_partner(bgt_fp->id());
    bgt_fp->set_partner(bgt_z->id());
    {
        std::vector<std::pair<long, long>> monos;
        for (long d = 1; 2 * d <= cap; ++d)
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (b <= p - 1 || a == 0)
                    monos.emplace_back(a, b);
            }
        bgt_z->set_reduction("1", GradedElement::monomial(bgt_fp, "1"));
        for (const auto& [a, b] : monos)
            bgt_z->set_reduction(ab_monomial_name(a, b), GradedElement::monomial(bgt_fp, xxp_monomial_name(a, b, 0)));
        for (long i = 2; i <= p - 1; ++i)
            bgt_z->set_reduction("chi_" + std::to_string(i), GradedElement::monomial(bgt_fp, "c_" + std::to_string(i)));
        bgt_z->set_reduction("zeta", GradedElement::monomial(bgt_fp, "z"));
        for (const auto& [a, b] : monos)
            if (2 * (p + a + b) <= cap && a + b <= p - 1)
                bgt_z->set_reduction("zeta*" + ab_monomial_name(a, b),
                                     GradedElement::monomial(bgt_fp, "z*" + xxp_monomial_name(a, b, 0)));
        bgt_z->set_reduction("zeta*chi_" + std::to_string(p - 1),
                             GradedElement::monomial(bgt_fp, "z*c_" + std::to_string(p - 1)));

        // Bockstein on the mod-p ring
        bgt_fp->set_bockstein("1", GradedElement(bgt_z, 1));
        bgt_fp->set_bockstein("y", GradedElement::monomial(bgt_z, "alpha"));
        bgt_fp->set_bockstein("y'", GradedElement::monomial(bgt_z, "beta"));
        for (const auto& [a, b] : monos) {
            bgt_fp->set_bockstein(xxp_monomial_name(a, b, 0), GradedElement(bgt_z, 2 * (a + b) + 1));
            if (a + b <= p - 1) {
                auto [na, nb] = ab_normalize(p, a + 1, b);
                bgt_fp->set_bockstein(xxp_monomial_name(a, b, 1), GradedElement::monomial(bgt_z, ab_monomial_name(na, nb)));
                auto [ma, mb] = ab_normalize(p, a, b + 1);
                bgt_fp->set_bockstein(xxp_monomial_name(a, b, 2), GradedElement::monomial(bgt_z, ab_monomial_name(ma, mb)));
            }
        }
        bgt_fp->set_bockstein("z", GradedElement(bgt_z, 2 * p + 1));
        for (long i = 2; i <= p - 1; ++i)
            bgt_fp->set_bockstein("c_" + std::to_string(i), GradedElement(bgt_z, 2 * i + 1));
    }

    // restrictions from BGt
    for (long t = 0; t <= p; ++t) {
        auto& h = bht_z[t];
        GradedElement res_alpha = t <= p - 1 ? GradedElement::monomial(h, "v'")
                                             : GradedElement(h, 2);
        GradedElement res_beta = t <= p - 1 ? GradedElement::monomial(h, "v'", t)
                                            : GradedElement::monomial(h, "v'");
        std::vector<std::pair<long, long>> monos;
        for (long d = 1; 2 * d <= cap; ++d)
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (b <= p - 1 || a == 0)
                    monos.emplace_back(a, b);
            }
        auto pow_elem = [&](const GradedElement& x, long e, long deg_one) {
            GradedElement acc = GradedElement::monomial(h, "1");
            (void)deg_one;
            for (long i = 0; i < e; ++i)
                acc = h->multiply(acc, x);
            return acc;
        };
        for (const auto& [a, b] : monos) {
            GradedElement img = h->multiply(pow_elem(res_alpha, a, 2), pow_elem(res_beta, b, 2));
            bgt_z->set_restriction(h->id(), ab_monomial_name(a, b), img);
        }
        GradedElement res_zeta = GradedElement::monomial(h, bht_monomial_name(0, p)) -
                                 GradedElement::monomial(h, bht_monomial_name(p - 1, 1));
        bgt_z->set_restriction(h->id(), "zeta", res_zeta);
        for (const auto& [a, b] : monos) {
            if (2 * (p + a + b) > cap || a + b > p - 1)
                continue;
            GradedElement img = h->multiply(res_zeta,
                                            h->multiply(pow_elem(res_alpha, a, 2), pow_elem(res_beta, b, 2)));
            bgt_z->set_restriction(h->id(), "zeta*" + ab_monomial_name(a, b), img);
        }

        // mod p restrictions
        auto& hf = bht_fp[t];
        GradedElement rx = t <= p - 1 ? GradedElement::monomial(hf, "v") : GradedElement(hf, 2);
        GradedElement rxp = t <= p - 1 ? GradedElement::monomial(hf, "v", t) : GradedElement::monomial(hf, "v");
        GradedElement ry = t <= p - 1 ? GradedElement::monomial(hf, "u") : GradedElement(hf, 1);
        GradedElement ryp = t <= p - 1 ? GradedElement::monomial(hf, "u", t) : GradedElement::monomial(hf, "u");
        bgt_fp->set_restriction(hf->id(), "y", ry);
        bgt_fp->set_restriction(hf->id(), "y'", ryp);
        auto powf = [&](const GradedElement& x, long e) {
            GradedElement acc = GradedElement::monomial(hf, "1");
            for (long i = 0; i < e; ++i)
                acc = hf->multiply(acc, x);
            return acc;
        };
        for (const auto& [a, b] : monos) {
            GradedElement img = hf->multiply(powf(rx, a), powf(rxp, b));
            bgt_fp->set_restriction(hf->id(), xxp_monomial_name(a, b, 0), img);
            if (a + b <= p - 1) {
                bgt_fp->set_restriction(hf->id(), xxp_monomial_name(a, b, 1), hf->multiply(img, ry));
                bgt_fp->set_restriction(hf->id(), xxp_monomial_name(a, b, 2), hf->multiply(img, ryp));
            }
        }
        GradedElement rz = GradedElement::monomial(hf, bht_fp_monomial_name(false, 0, p)) -
                           GradedElement::monomial(hf, bht_fp_monomial_name(false, p - 1, 1));
        bgt_fp->set_restriction(hf->id(), "z", rz);
    }
    {
        // restrictions to BS1
        std::vector<std::pair<long, long>> monos;
        for (long d = 1; 2 * d <= cap; ++d)
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                if (b <= p - 1 || a == 0)
                    monos.emplace_back(a, b);
            }
        for (const auto& [a, b] : monos) {
            bgt_z->set_restriction(bs1_z->id(), ab_monomial_name(a, b), GradedElement(bs1_z, 2 * (a + b)));
            bgt_fp->set_restriction(bs1_fp->id(), xxp_monomial_name(a, b, 0), GradedElement(bs1_fp, 2 * (a + b)));
        }
        bgt_z->set_restriction(bs1_z->id(), "zeta", GradedElement::monomial(bs1_z, power("tau", p)));
        bgt_fp->set_restriction(bs1_fp->id(), "z", GradedElement::monomial(bs1_fp, power("taubar", p)));
        bgt_fp->set_restriction(bs1_fp->id(), "y", GradedElement(bs1_fp, 1));
        bgt_fp->set_restriction(bs1_fp->id(), "y'", GradedElement(bs1_fp, 1));
        for (const auto& [a, b] : monos) {
            if (2 * (p + a + b) <= cap && a + b <= p - 1)
                bgt_z->set_restriction(bs1_z->id(), "zeta*" + ab_monomial_name(a, b),
                                       GradedElement(bs1_z, 2 * (p + a + b)));
        }
        for (long t = 0; t <= p; ++t) {
            for (long i = 0; 2 * i <= cap; ++i)
                for (long j = 0; 2 * (i + j) <= cap; ++j) {
                    GradedElement img = i >= 1 ? GradedElement(bs1_z, 2 * (i + j))
                                               : GradedElement::monomial(bs1_z, bs1_monomial_name(j));
                    bht_z[t]->set_restriction(bs1_z->id(), bht_monomial_name(i, j), img);
                }
            for (int u = 0; u <= 1; ++u)
                for (long i = 0; u + 2 * i <= cap; ++i)
                    for (long j = 0; u + 2 * (i + j) <= cap; ++j) {
                        GradedElement img = (u || i >= 1)
                                                ? GradedElement(bs1_fp, u + 2 * (i + j))
                                                : GradedElement::monomial(bs1_fp, j == 0 ? "1" : power("taubar", j));
                        bht_fp[t]->set_restriction(bs1_fp->id(), bht_fp_monomial_name(u, i, j), img);
                    }
        }
    }

    // transfers
    for (long t = 0; t <= p; ++t) {
        auto& h = bht_z[t];
        h->set_transfer(bgt_z->id(), "1", GradedElement::monomial(bgt_z, "1", p));
        for (long k = 1; 2 * k <= cap; ++k) {
            std::string target = t <= p - 1 ? ab_monomial_name(k, 0) : ab_monomial_name(0, k);
            h->set_transfer(bgt_z->id(), bht_monomial_name(k, 0),
                            GradedElement::monomial(bgt_z, target, p));
        }
        h->set_transfer(bgt_z->id(), bht_monomial_name(0, p - 1),
                        GradedElement::monomial(bgt_z, "chi_" + std::to_string(p - 1)) -
                            GradedElement::monomial(bgt_z, ab_monomial_name(p - 1, 0)));
        bs1_z->set_transfer(h->id(), "1", GradedElement::monomial(h, "1", p));
    }
    bs1_z->set_transfer(bgt_z->id(), "1", GradedElement::monomial(bgt_z, "1", p * p));
    {
        // mod-p transfer for t = p, the one used with the Bockstein identification
        auto& hf = bht_fp[p];
        hf->set_transfer(bgt_fp->id(), "1", GradedElement(bgt_fp, 0));
        for (long k = 1; 2 * k <= cap; ++k)
            hf->set_transfer(bgt_fp->id(), bht_fp_monomial_name(false, k, 0), GradedElement(bgt_fp, 2 * k));
        hf->set_transfer(bgt_fp->id(), bht_fp_monomial_name(false, 0, p - 1),
                         GradedElement::monomial(bgt_fp, "c_" + std::to_string(p - 1)) +
                             GradedElement::monomial(bgt_fp, xxp_monomial_name(p - 1, 0, 0)));
        hf->set_transfer(bgt_fp->id(), bht_fp_monomial_name(true, 0, p - 1),
                         GradedElement::monomial(bgt_fp, xxp_monomial_name(p - 1, 0, 2)) -
                             GradedElement::monomial(bgt_fp, xxp_monomial_name(0, p - 1, 2)));
    }

    sys.bs1_z = bs1_z;
    sys.bs1_fp = bs1_fp;
    sys.bgt_z = bgt_z;
    sys.bgt_fp = bgt_fp;
    for (long t = 0; t <= p; ++t) {
        sys.bht_z.push_back(bht_z[t]);
        sys.bht_fp.push_back(bht_fp[t]);
    }
    return sys;
}

namespace {
    std::string file_name_for(const std::string& id)
    {
        std::string out;
        for (char c : id) {
            if (std::isalnum(static_cast<unsigned char>(c)))
                out += c;
            else if (c == ',' || c == '(')
                out += '_';
        }
        return out + ".tbl";
    }
}

void export_ring_system(const RingSystem& sys, const std::string& directory)
{
    std::filesystem::create_directories(directory);
    for (const auto& [id, ring] : sys.all()) {
        std::ofstream out(directory + "/" + file_name_for(id), std::ios::binary);
        if (!out)
            throw IoError("cannot write ring table for " + id);
        out << ring->serialize();
    }
}

RingSystem load_ring_system(long p, const std::string& directory)
{
    RingSystem built = build_ring_system(p);  // provides the id layout
    std::map<std::string, RingPtr> loaded;
    std::map<std::string, std::string> texts;
    for (const auto& [id, _] : built.all()) {
        std::ifstream in(directory + "/" + file_name_for(id), std::ios::binary);
        if (!in)
            throw IoError("missing ring table for " + id);
        std::stringstream ss;
        ss << in.rdbuf();
        texts[id] = ss.str();
    }
    // two passes: the cross tables may reference any ring in the system
    std::map<std::string, RingPtr> empty;
    std::map<std::string, std::shared_ptr<TruncatedRing>> phase1;
    for (const auto& [id, text] : texts) {
        std::istringstream in(text);
        std::string line;
        std::shared_ptr<TruncatedRing> ring;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string word;
            ls >> word;
            if (word == "ring") {
                std::string rid, kw, dom;
                long prime, cap;
                ls >> rid >> kw >> prime >> kw >> cap >> kw >> dom;
                ring = std::make_shared<TruncatedRing>(rid, prime, cap, dom == "Z" ? Domain::Z : Domain::Fp);
            } else if (word == "basis") {
                long deg;
                std::string bar, name, colon;
                long order;
                ls >> deg >> bar >> name >> colon >> order;
                ring->add_monomial(Monomial{name, deg, order});
            } else if (word == "partner") {
                std::string pid;
                ls >> pid;
                ring->set_partner(pid);
            }
        }
        phase1[id] = ring;
    }
    for (const auto& [id, ring] : phase1)
        loaded[id] = ring;
    for (const auto& [id, text] : texts) {
        auto ring = phase1[id];
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string word;
            ls >> word;
            auto parse_arrow = [&](std::string& name, std::string& value) {
                std::string rest;
                std::getline(ls, rest);
                size_t arrow = rest.find(" -> ");
                name = rest.substr(1, arrow - 1);
                value = rest.substr(arrow + 4);
            };
            if (word == "product") {
                long deg;
                std::string bar;
                ls >> deg >> bar;
                std::string rest;
                std::getline(ls, rest);
                size_t arrow = rest.find(" -> ");
                size_t star = rest.find(" * ");
                std::string a = rest.substr(1, star - 1);
                std::string b = rest.substr(star + 3, arrow - star - 3);
                ring->set_product(a, b, ring->parse_element(rest.substr(arrow + 4), deg));
            } else if (word == "bockstein" || word == "reduce") {
                std::string bar;
                ls >> bar;
                std::string name, value;
                parse_arrow(name, value);
                auto target = loaded.at(ring->partner_id());
                long deg = ring->monomial_info(name).degree + (word == "bockstein" ? 1 : 0);
                GradedElement img = value == "0" ? ring::GradedElement(target, deg)
                                                 : target->parse_element(value, deg);
                if (word == "bockstein")
                    ring->set_bockstein(name, img);
                else
                    ring->set_reduction(name, img);
            } else if (word == "restrict" || word == "transfer") {
                std::string tid, bar;
                ls >> tid >> bar;
                std::string name, value;
                parse_arrow(name, value);
                auto target = loaded.at(tid);
                long deg = ring->monomial_info(name).degree;
                GradedElement img = value == "0" ? ring::GradedElement(target, deg)
                                                 : target->parse_element(value, deg);
                if (word == "restrict")
                    ring->set_restriction(tid, name, img);
                else
                    ring->set_transfer(tid, name, img);
            }
        }
    }
    RingSystem sys;
    sys.p = p;
    sys.bs1_z = loaded.at(built.bs1_z->id());
    sys.bs1_fp = loaded.at(built.bs1_fp->id());
    sys.bgt_z = loaded.at(built.bgt_z->id());
    sys.bgt_fp = loaded.at(built.bgt_fp->id());
    for (long t = 0; t <= p; ++t) {
        sys.bht_z.push_back(loaded.at(built.bht_z[t]->id()));
        sys.bht_fp.push_back(loaded.at(built.bht_fp[t]->id()));
    }
    (void)empty;
    return sys;
}

}  // namespace obs::ring
