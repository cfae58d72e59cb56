#include "em_tables.hpp"

#include <sstream>

namespace obs::em {

const std::vector<EMGen>& EMTable::at(long degree) const
{
    if (degree < 0 || degree > max_degree())
        throw OutOfRange("EM table degree " + std::to_string(degree));
    auto it = groups.find(degree);
    if (it == groups.end())
        throw MissingTable("EM table not tabled at degree " + std::to_string(degree));
    return it->second;
}

linal::AbGroup EMTable::group_at(long degree) const
{
    linal::AbGroup g;
    for (const auto& gen : at(degree)) {
        g.generators.push_back(gen.name);
        g.orders.push_back(gen.order);
    }
    return g;
}

std::string EMTable::serialize() const
{
    std::ostringstream out;
    out << "emtable " << (space == Space::K ? "K" : "Kp") << " prime " << p << " coeff "
        << (coeff == Coeff::Fp ? "Fp" : "Zp") << " version 1\n";
    for (const auto& [deg, gens] : groups) {
        if (gens.empty()) {
            out << "group " << deg << " | 0\n";
            continue;
        }
        for (const auto& g : gens)
            out << "group " << deg << " | " << g.name << " : " << g.order << "\n";
    }
    for (const auto& [deg, note] : notes)
        out << "note " << deg << " | " << note << "\n";
    out << "end\n";
    return out.str();
}

long generator_degree(const std::string& name, long p)
{
    // product split at top level
    size_t depth = 0;
    for (size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '(')
            ++depth;
        else if (name[i] == ')')
            --depth;
        else if (name[i] == '*' && depth == 0)
            return generator_degree(name.substr(0, i), p) + generator_degree(name.substr(i + 1), p);
    }
    if (name == "1")
        return 0;
    if (name == "i1" || name == "i2" || name == "z1" || name == "z2" || name == "zbar1" || name == "zbar2")
        return 2 * p - 1;
    if (name.size() > 2 && name.substr(0, 2) == "b(" && name.back() == ')')
        return 1 + generator_degree(name.substr(2, name.size() - 3), p);
    if (name.size() > 2 && name.substr(0, 2) == "d(" && name.back() == ')')
        return 1 + generator_degree(name.substr(2, name.size() - 3), p);
    if (name.size() > 3 && name.substr(0, 3) == "P1(" && name.back() == ')')
        return 2 * (p - 1) + generator_degree(name.substr(3, name.size() - 4), p);
    throw Error("generator_degree: cannot parse " + name);
}

namespace {
    void put(EMTable& t, long deg, std::vector<EMGen> gens)
    {
        for (const auto& g : gens) {
            long d = generator_degree(g.name, t.p);
            if (d != deg)
                throw InconsistentTables("generator " + g.name + " has degree " + std::to_string(d) +
                                         ", tabled at " + std::to_string(deg));
        }
        t.groups[deg] = std::move(gens);
    }
}

EMTable k_table(Space space, long p, Coeff coeff)
{
    if (!linal::is_prime(p) || p == 2)
        throw NonPrimeModulus("k_table needs an odd prime");
    EMTable t;
    t.space = space;
    t.coeff = coeff;
    t.p = p;
    long n = 2 * p - 1;

    if (space == Space::Kp) {
        if (coeff != Coeff::Fp)
            throw MissingTable("K_p table curated mod p only");
        put(t, 0, {{"1", p}});
        for (long i = 1; i <= n - 1; ++i)
            put(t, i, {});
        put(t, n, {{"i1", p}, {"i2", p}});
        put(t, 2 * p, {{"b(i1)", p}, {"b(i2)", p}});
        for (long i = 2 * p + 1; i <= 4 * p - 4; ++i)
            put(t, i, {});
        put(t, 4 * p - 3, {{"P1(i1)", p}, {"P1(i2)", p}});
        put(t, 4 * p - 2,
            {{"i1*i2", p}, {"b(P1(i1))", p}, {"P1(b(i1))", p}, {"b(P1(i2))", p}, {"P1(b(i2))", p}});
        put(t, 4 * p - 1,
            {{"i1*b(i2)", p},
             {"i2*b(i1)", p},
             {"b(P1(b(i1)))", p},
             {"i1*b(i1)", p},
             {"b(P1(b(i2)))", p},
             {"i2*b(i2)", p}});
        return t;
    }

    if (coeff == Coeff::Fp) {
        put(t, 0, {{"1", p}});
        for (long i = 1; i <= n - 1; ++i)
            put(t, i, {});
        put(t, n, {{"zbar1", p}, {"zbar2", p}});
        for (long i = 2 * p; i <= 4 * p - 4; ++i)
            put(t, i, {});
        put(t, 4 * p - 3, {{"P1(zbar1)", p}, {"P1(zbar2)", p}});
        put(t, 4 * p - 2, {{"zbar1*zbar2", p}, {"b(P1(zbar1))", p}, {"b(P1(zbar2))", p}});
        // degree 4p-1 is not quoted mod p; left untabled
        return t;
    }

    // integral, p-local
    put(t, 0, {{"1", 0}});
    for (long i = 1; i <= n - 1; ++i)
        put(t, i, {});
    put(t, n, {{"z1", 0}, {"z2", 0}});
    for (long i = 2 * p; i <= 4 * p - 3; ++i)
        put(t, i, {});
    put(t, 4 * p - 2, {{"z1*z2", 0}, {"d(P1(zbar1))", p}, {"d(P1(zbar2))", p}});
    put(t, 4 * p - 1, {});
    t.notes[4 * p - 1] = "no p-torsion";
    t.notes[4 * p - 3] = "torsion group, p-locally zero";
    return t;
}

ConsistencyReport bockstein_consistency(const EMTable& fp_table, const EMTable& z_table)
{
    if (fp_table.p != z_table.p || fp_table.space != z_table.space)
        throw InconsistentTables("tables over different spaces or primes");
    long p = fp_table.p;
    ConsistencyReport report;
    for (long i = 0; i <= 4 * p - 2; ++i) {
        if (!fp_table.is_tabled(i) || !z_table.is_tabled(i) || !z_table.is_tabled(i + 1))
            continue;
        auto here = z_table.group_at(i);
        auto next = z_table.group_at(i + 1);
        size_t rank_here = here.free_rank() + here.torsion_rank_at(p);
        size_t tors_next = next.torsion_rank_at(p);
        if (i + 1 == 4 * p - 1) {
            auto note = z_table.notes.find(4 * p - 1);
            if (note == z_table.notes.end() || note->second.find("no p-torsion") == std::string::npos)
                throw InconsistentTables("top degree needs the no-p-torsion flag");
            tors_next = 0;
        }
        size_t dim = fp_table.at(i).size();
        bool ok = dim == rank_here + tors_next;
        report.lines.push_back({i, dim, rank_here, tors_next, ok});
        if (!ok) {
            report.all_ok = false;
            throw InconsistentTables("degree " + std::to_string(i) + ": dim " + std::to_string(dim) +
                                     " != " + std::to_string(rank_here) + " + " + std::to_string(tors_next));
        }
    }
    report.final_delta_note =
        "delta injective on H^{4p-3}(K;F_p), forcing no p-torsion in H^{4p-1}(K;Z)";
    return report;
}

std::vector<HomologyLine> homology_dual(const EMTable& z_table, const EMTable& fp_table)
{
    long p = z_table.p;
    std::vector<HomologyLine> out;
    for (long i = 0; i <= 4 * p - 3; ++i) {
        if (!z_table.is_tabled(i) || !z_table.is_tabled(i + 1))
            continue;
        auto here = z_table.group_at(i);
        auto next = z_table.group_at(i + 1);
        linal::AbGroup h;
        for (size_t k = 0; k < here.orders.size(); ++k)
            if (here.orders[k] == 0) {
                h.orders.push_back(0);
                h.generators.push_back("dual(" + here.generators[k] + ")");
            }
        for (size_t k = 0; k < next.orders.size(); ++k)
            if (next.orders[k] != 0) {
                h.orders.push_back(next.orders[k]);
                h.generators.push_back("dual(" + next.generators[k] + ")");
            }
        size_t dim_fp = fp_table.is_tabled(i) ? fp_table.at(i).size() : 0;
        out.push_back({i, h, dim_fp});
    }
    return out;
}

}  // namespace obs::em
