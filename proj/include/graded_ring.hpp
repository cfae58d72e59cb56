#pragma once
#include "errors.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace obs::ring {

enum class Domain { Z, Fp };

struct Monomial {
    std::string name;
    long degree = 0;
    long order = 0;  // additive order; 0 = infinite cyclic
};

class TruncatedRing;
using RingPtr = std::shared_ptr<const TruncatedRing>;

/* Homogeneous element of a TruncatedRing: sparse map monomial name -> coefficient.
 * Coefficients of torsion monomials are kept reduced in [0, order). */
class GradedElement {
public:
    GradedElement() = default;
    GradedElement(RingPtr ring, long degree);

    static GradedElement monomial(RingPtr ring, const std::string& name, long coeff = 1);
    static GradedElement zero(RingPtr ring, long degree) { return GradedElement(ring, degree); }

    const RingPtr& ring() const { return ring_; }
    long degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::string, long>& terms() const { return terms_; }
    long coeff(const std::string& name) const;

    void add_term(const std::string& name, long coeff);

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator-() const;
    GradedElement operator*(long scalar) const;
    bool operator==(const GradedElement& o) const;
    bool operator!=(const GradedElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    long degree_ = 0;
    std::map<std::string, long> terms_;
};

/* Degree-capped graded ring presented by per-degree monomial bases and a
 * partial product table.  Missing products are hard errors, never guesses. */
class TruncatedRing : public std::enable_shared_from_this<TruncatedRing> {
public:
    TruncatedRing(std::string id, long prime, long cap, Domain domain);

    const std::string& id() const { return id_; }
    long prime() const { return prime_; }
    long cap() const { return cap_; }
    Domain domain() const { return domain_; }

    // --- construction (builders only) ---
    void add_monomial(const Monomial& m);
    void set_product(const std::string& a, const std::string& b, const GradedElement& value);
    void set_bockstein(const std::string& name, const GradedElement& integral_image);
    void set_reduction(const std::string& name, const GradedElement& modp_image);
    void set_restriction(const std::string& target_ring, const std::string& name, const GradedElement& image);
    void set_transfer(const std::string& target_ring, const std::string& name, const GradedElement& image);
    void set_partner(const std::string& partner_id) { partner_id_ = partner_id; }

    // --- queries ---
    const std::vector<Monomial>& basis(long degree) const;  // DegreeAboveCap beyond cap
    const Monomial& monomial_info(const std::string& name) const;
    bool has_monomial(const std::string& name) const;
    long normalize_coeff(const std::string& name, long c) const;

    bool has_product(const std::string& a, const std::string& b) const;
    GradedElement product(const std::string& a, const std::string& b) const;  // UnknownProduct

    GradedElement multiply(const GradedElement& a, const GradedElement& b) const;

    bool has_restriction(const std::string& target) const;
    GradedElement restrict_monomial(const RingPtr& target, const std::string& name) const;
    GradedElement restrict(const GradedElement& x, const RingPtr& target) const;

    bool has_transfer_entry(const std::string& target, const std::string& name) const;
    GradedElement transfer_monomial(const RingPtr& target, const std::string& name) const;
    GradedElement transfer(const GradedElement& x, const RingPtr& target) const;
    std::vector<std::string> transfer_sources(const std::string& target) const;

    GradedElement bockstein(const GradedElement& x, const RingPtr& integral_partner) const;
    GradedElement reduce(const GradedElement& x, const RingPtr& modp_partner) const;
    const std::string& partner_id() const { return partner_id_; }

    // serialization (canonical, bit-exact round trip)
    std::string serialize() const;
    static std::shared_ptr<TruncatedRing> deserialize(const std::string& text);

    GradedElement parse_element(const std::string& text, long expected_degree = -1) const;

private:
    std::string id_;
    long prime_;
    long cap_;
    Domain domain_;
    std::string partner_id_;
    std::map<long, std::vector<Monomial>> basis_;
    std::map<std::string, Monomial> by_name_;
    std::map<std::pair<std::string, std::string>, GradedElement> products_;
    std::map<std::string, GradedElement> bockstein_;
    std::map<std::string, GradedElement> reduction_;
    std::map<std::string, std::map<std::string, GradedElement>> restrictions_;
    std::map<std::string, std::map<std::string, GradedElement>> transfers_;

    friend std::shared_ptr<TruncatedRing> deserialize_with_targets(
        const std::string& text, const std::map<std::string, RingPtr>& targets);
};

/* Formal top-filtration classes (Gamma) with their tabled transfer and
 * pullback behaviour; they live in H^{4p-3} of the total spaces, not in the
 * base rings, so they are kept apart from TruncatedRing. */
struct FormalClassTable {
    long prime = 3;
    // transfer: (covering id) -> (source class -> (coeff, target class))
    struct Image {
        long coeff;
        std::string cls;
    };
    std::map<std::string, std::map<std::string, Image>> transfer;
    std::map<std::string, std::map<std::string, Image>> pullback;

    Image transfer_of(const std::string& covering, const std::string& cls) const;
    Image pullback_of(const std::string& covering, const std::string& cls) const;
};

FormalClassTable gamma_table(long p);

// Deserialize a ring whose cross-ring tables (restriction, transfer, Bockstein,
// reduction) reference already-loaded rings.
std::shared_ptr<TruncatedRing> deserialize_with_targets(const std::string& text,
                                                        const std::map<std::string, RingPtr>& targets);

}  // namespace obs::ring
