#pragma once
#include "graded_ring.hpp"

namespace obs::ring {

/* All cohomology models for one odd prime, degree cap 4p:
 *   BS1     H*(BS^1)            Z[tau],   F_p[taubar]
 *   BHt(t)  H*(B Htilde_t)      Z[tau',v' | pv'=0],  F_p[taubar] (x) Lambda(u) (x) F_p[v]
 *   BGt     H*(B Gtilde_p)      curated partial tables on alpha, beta, chi_i, zeta
 * with restriction, transfer, Bockstein and mod-p reduction tables. */
struct RingSystem {
    long p = 3;
    RingPtr bs1_z, bs1_fp;
    std::vector<RingPtr> bht_z;   // index t = 0..p
    std::vector<RingPtr> bht_fp;  // index t = 0..p
    RingPtr bgt_z, bgt_fp;

    RingPtr by_id(const std::string& id) const;
    std::map<std::string, RingPtr> all() const;
};

RingSystem build_ring_system(long p);

// Monomial name helpers (canonical renderings).
std::string ab_monomial_name(long a, long b);          // alpha^a*beta^b normal form name
std::pair<long, long> ab_normalize(long p, long a, long b);
std::string bht_monomial_name(long i, long j);         // v'^i*tau'^j
std::string bht_fp_monomial_name(bool u, long i, long j);
std::string bs1_monomial_name(long k);                 // tau^k
std::string xxp_monomial_name(long a, long b, int y_part);  // x^a*x'^b[*y|*y']

// Serialize every ring of the system into a directory (one file per ring id).
void export_ring_system(const RingSystem& sys, const std::string& directory);
RingSystem load_ring_system(long p, const std::string& directory);

}  // namespace obs::ring
