#pragma once
#include "errors.hpp"
#include "linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace obs::em {

enum class Space { K, Kp };          // K(Z+Z, 2p-1) and K(Z/p+Z/p, 2p-1)
enum class Coeff { Fp, Zp };         // mod p, or integral p-local

struct EMGen {
    std::string name;  // structured: i1, zbar2, b(i1), P1(zbar1), d(P1(zbar1)), i1*i2, ...
    long order = 0;    // 0 = infinite cyclic, else p-power
};

/* Curated cohomology table of an Eilenberg-MacLane space in degrees <= 4p-1,
 * with machine-checked name/degree consistency. */
struct EMTable {
    Space space = Space::K;
    Coeff coeff = Coeff::Fp;
    long p = 3;
    std::map<long, std::vector<EMGen>> groups;  // only tabled degrees appear
    std::map<long, std::string> notes;          // e.g. "no p-torsion" at 4p-1

    long max_degree() const { return 4 * p - 1; }
    bool is_tabled(long degree) const { return groups.count(degree) > 0; }
    const std::vector<EMGen>& at(long degree) const;  // OutOfRange / MissingTable
    linal::AbGroup group_at(long degree) const;
    std::string serialize() const;
};

EMTable k_table(Space space, long p, Coeff coeff);

// Degree of a structured generator name (b adds 1, P1 adds 2(p-1), d adds 1,
// products add).  Used by the internal-consistency invariant.
long generator_degree(const std::string& name, long p);

struct ConsistencyLine {
    long degree;
    size_t dim_fp;
    size_t rank_here;   // free rank + p-torsion rank of H^deg(Z)
    size_t tors_next;   // p-torsion rank of H^{deg+1}(Z)
    bool ok;
};

struct ConsistencyReport {
    std::vector<ConsistencyLine> lines;
    std::string final_delta_note;  // forced injectivity at the top of the range
    bool all_ok = true;
};

/* Verify dim_Fp H^i(K;F_p) = p-rank H^i(K;Z) + p-rank H^{i+1}(K;Z) degree by
 * degree; throws InconsistentTables naming the failing degree. */
ConsistencyReport bockstein_consistency(const EMTable& fp_table, const EMTable& z_table);

struct HomologyLine {
    long degree;
    linal::AbGroup integral;  // p-local
    size_t dim_fp;
};

// Formal universal-coefficient dual of the cohomology tables.
std::vector<HomologyLine> homology_dual(const EMTable& z_table, const EMTable& fp_table);

}  // namespace obs::em
