#include "graded_ring.hpp"

#include <algorithm>
#include <sstream>

namespace obs::ring {

GradedElement::GradedElement(RingPtr ring, long degree) : ring_(std::move(ring)), degree_(degree) {}

GradedElement GradedElement::monomial(RingPtr ring, const std::string& name, long coeff)
{
    const Monomial& m = ring->monomial_info(name);
    GradedElement e(ring, m.degree);
    e.add_term(name, coeff);
    return e;
}

long GradedElement::coeff(const std::string& name) const
{
    auto it = terms_.find(name);
    return it == terms_.end() ? 0 : it->second;
}

void GradedElement::add_term(const std::string& name, long coeff)
{
    const Monomial& m = ring_->monomial_info(name);
    if (m.degree != degree_)
        throw Error("GradedElement: degree mismatch for " + name);
    long c = ring_->normalize_coeff(name, terms_[name] + coeff);
    if (c == 0)
        terms_.erase(name);
    else
        terms_[name] = c;
}

GradedElement GradedElement::operator+(const GradedElement& o) const
{
    if (ring_->id() != o.ring_->id() || degree_ != o.degree_)
        throw Error("GradedElement: + mismatch");
    GradedElement r = *this;
    for (const auto& [n, c] : o.terms_)
        r.add_term(n, c);
    return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const
{
    return *this + (-o);
}

GradedElement GradedElement::operator-() const
{
    GradedElement r(ring_, degree_);
    for (const auto& [n, c] : terms_)
        r.add_term(n, -c);
    return r;
}

GradedElement GradedElement::operator*(long scalar) const
{
    GradedElement r(ring_, degree_);
    for (const auto& [n, c] : terms_)
        r.add_term(n, c * scalar);
    return r;
}

bool GradedElement::operator==(const GradedElement& o) const
{
    return ring_->id() == o.ring_->id() && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string GradedElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        if (!first)
            out << " + ";
        if (n == "1") {
            out << c;
        } else if (c == 1) {
            out << n;
        } else if (c == -1) {
            out << "-" << n;
        } else {
            out << c << "*" << n;
        }
        first = false;
    }
    return out.str();
}

TruncatedRing::TruncatedRing(std::string id, long prime, long cap, Domain domain)
    : id_(std::move(id)), prime_(prime), cap_(cap), domain_(domain)
{
}

void TruncatedRing::add_monomial(const Monomial& m)
{
    if (m.degree > cap_)
        throw DegreeAboveCap(m.name + " in " + id_);
    if (by_name_.count(m.name))
        throw Error("duplicate monomial " + m.name);
    by_name_[m.name] = m;
    basis_[m.degree].push_back(m);
}

void TruncatedRing::set_product(const std::string& a, const std::string& b, const GradedElement& value)
{
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    GradedElement v = value;
    if (a > b) {
        long da = monomial_info(a).degree, db = monomial_info(b).degree;
        if ((da % 2) && (db % 2))
            v = -v;
    }
    products_[key] = v;
}

void TruncatedRing::set_bockstein(const std::string& name, const GradedElement& img)
{
    bockstein_[name] = img;
}

void TruncatedRing::set_reduction(const std::string& name, const GradedElement& img)
{
    reduction_[name] = img;
}

void TruncatedRing::set_restriction(const std::string& target, const std::string& name, const GradedElement& img)
{
    restrictions_[target][name] = img;
}

void TruncatedRing::set_transfer(const std::string& target, const std::string& name, const GradedElement& img)
{
    transfers_[target][name] = img;
}

const std::vector<Monomial>& TruncatedRing::basis(long degree) const
{
    if (degree > cap_ || degree < 0)
        throw DegreeAboveCap(id_ + " degree " + std::to_string(degree));
    static const std::vector<Monomial> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
}

const Monomial& TruncatedRing::monomial_info(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw Error("unknown monomial " + name + " in " + id_);
    return it->second;
}

bool TruncatedRing::has_monomial(const std::string& name) const
{
    return by_name_.count(name) > 0;
}

long TruncatedRing::normalize_coeff(const std::string& name, long c) const
{
    long order = monomial_info(name).order;
    if (domain_ == Domain::Fp)
        order = prime_;
    if (order == 0)
        return c;
    long r = c % order;
    return r < 0 ? r + order : r;
}

bool TruncatedRing::has_product(const std::string& a, const std::string& b) const
{
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    return products_.count(key) > 0;
}

GradedElement TruncatedRing::product(const std::string& a, const std::string& b) const
{
    if (a == "1")
        return GradedElement::monomial(shared_from_this(), b);
    if (b == "1")
        return GradedElement::monomial(shared_from_this(), a);
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = products_.find(key);
    if (it == products_.end()) {
        long total = monomial_info(a).degree + monomial_info(b).degree;
        if (total > cap_)
            return GradedElement(shared_from_this(), total > cap_ ? cap_ : total);  // truncated to zero
        throw UnknownProduct(id_ + ": " + a + " * " + b);
    }
    GradedElement v = it->second;
    if (a > b) {
        long da = monomial_info(a).degree, db = monomial_info(b).degree;
        if ((da % 2) && (db % 2))
            v = -v;
    }
    return v;
}

GradedElement TruncatedRing::multiply(const GradedElement& a, const GradedElement& b) const
{
    if (a.ring()->id() != id_ || b.ring()->id() != id_)
        throw Error("multiply: ring mismatch");
    long total = a.degree() + b.degree();
    if (total > cap_)
        return GradedElement(shared_from_this(), cap_);  // above-cap products truncate to zero
    GradedElement r(shared_from_this(), total);
    for (const auto& [na, ca] : a.terms()) {
        for (const auto& [nb, cb] : b.terms()) {
            GradedElement pr = product(na, nb);
            r = r + pr * (ca * cb);
        }
    }
    return r;
}

bool TruncatedRing::has_restriction(const std::string& target) const
{
    return restrictions_.count(target) > 0;
}

GradedElement TruncatedRing::restrict_monomial(const RingPtr& target, const std::string& name) const
{
    if (name == "1")
        return GradedElement::monomial(target, "1");
    auto rit = restrictions_.find(target->id());
    if (rit == restrictions_.end())
        throw UnknownRestriction(id_ + " -> " + target->id());
    auto it = rit->second.find(name);
    if (it == rit->second.end())
        throw UnknownRestriction(id_ + " -> " + target->id() + ": " + name);
    return it->second;
}

GradedElement TruncatedRing::restrict(const GradedElement& x, const RingPtr& target) const
{
    GradedElement r(target, x.degree());
    for (const auto& [n, c] : x.terms())
        r = r + restrict_monomial(target, n) * c;
    return r;
}

bool TruncatedRing::has_transfer_entry(const std::string& target, const std::string& name) const
{
    auto tit = transfers_.find(target);
    return tit != transfers_.end() && tit->second.count(name) > 0;
}

GradedElement TruncatedRing::transfer_monomial(const RingPtr& target, const std::string& name) const
{
    auto tit = transfers_.find(target->id());
    if (tit == transfers_.end())
        throw UnknownTransfer(id_ + " -> " + target->id());
    auto it = tit->second.find(name);
    if (it == tit->second.end())
        throw UnknownTransfer(id_ + " -> " + target->id() + ": " + name);
    return it->second;
}

GradedElement TruncatedRing::transfer(const GradedElement& x, const RingPtr& target) const
{
    GradedElement r(target, x.degree());
    for (const auto& [n, c] : x.terms())
        r = r + transfer_monomial(target, n) * c;
    return r;
}

std::vector<std::string> TruncatedRing::transfer_sources(const std::string& target) const
{
    std::vector<std::string> out;
    auto tit = transfers_.find(target);
    if (tit == transfers_.end())
        return out;
    for (const auto& [n, _] : tit->second)
        out.push_back(n);
    return out;
}

GradedElement TruncatedRing::bockstein(const GradedElement& x, const RingPtr& partner) const
{
    GradedElement r(partner, x.degree() + 1);
    for (const auto& [n, c] : x.terms()) {
        auto it = bockstein_.find(n);
        if (it == bockstein_.end())
            throw UnknownBocksteinImage(id_ + ": " + n);
        r = r + it->second * c;
    }
    return r;
}

GradedElement TruncatedRing::reduce(const GradedElement& x, const RingPtr& partner) const
{
    GradedElement r(partner, x.degree());
    for (const auto& [n, c] : x.terms()) {
        auto it = reduction_.find(n);
        if (it == reduction_.end())
            throw UnknownBocksteinImage(id_ + " (reduction): " + n);
        r = r + it->second * c;
    }
    return r;
}

GradedElement TruncatedRing::parse_element(const std::string& text, long expected_degree) const
{
    std::string s = text;
    if (s == "0") {
        if (expected_degree < 0)
            throw Error("parse_element: cannot infer degree of 0");
        return GradedElement(shared_from_this(), expected_degree);
    }
    std::vector<std::pair<std::string, long>> terms;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        long coeff = 1;
        std::string name = term;
        if (!name.empty() && name[0] == '-') {
            coeff = -1;
            name = name.substr(1);
        }
        size_t star = name.find('*');
        bool leading_number = !name.empty() && (std::isdigit(static_cast<unsigned char>(name[0])) != 0);
        if (leading_number) {
            size_t digits = 0;
            while (digits < name.size() && std::isdigit(static_cast<unsigned char>(name[digits])))
                ++digits;
            if (digits == name.size()) {
                coeff *= std::stol(name);
                name = "1";
            } else if (name[digits] == '*') {
                coeff *= std::stol(name.substr(0, digits));
                name = name.substr(digits + 1);
            }
        }
        (void)star;
        terms.emplace_back(name, coeff);
    }
    long degree = expected_degree >= 0 ? expected_degree : monomial_info(terms.front().first).degree;
    GradedElement e(shared_from_this(), degree);
    for (const auto& [n, c] : terms)
        e.add_term(n, c);
    return e;
}

std::string TruncatedRing::serialize() const
{
    std::ostringstream out;
    out << "ring " << id_ << " prime " << prime_ << " cap " << cap_ << " domain "
        << (domain_ == Domain::Z ? "Z" : "Fp") << " version 1\n";
    if (!partner_id_.empty())
        out << "partner " << partner_id_ << "\n";
    for (const auto& [deg, monos] : basis_) {
        std::vector<Monomial> sorted = monos;
        std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) { return a.name < b.name; });
        for (const auto& m : sorted)
            out << "basis " << deg << " | " << m.name << " : " << m.order << "\n";
    }
    for (const auto& [key, val] : products_) {
        long deg = monomial_info(key.first).degree + monomial_info(key.second).degree;
        out << "product " << deg << " | " << key.first << " * " << key.second << " -> " << val.str() << "\n";
    }
    for (const auto& [name, img] : bockstein_)
        out << "bockstein | " << name << " -> " << img.str() << "\n";
    for (const auto& [name, img] : reduction_)
        out << "reduce | " << name << " -> " << img.str() << "\n";
    for (const auto& [target, table] : restrictions_)
        for (const auto& [name, img] : table)
            out << "restrict " << target << " | " << name << " -> " << img.str() << "\n";
    for (const auto& [target, table] : transfers_)
        for (const auto& [name, img] : table)
            out << "transfer " << target << " | " << name << " -> " << img.str() << "\n";
    out << "end\n";
    return out.str();
}

namespace {
    struct PendingMap {
        std::string kind;  // bockstein | reduce | restrict | transfer
        std::string target;
        std::string name;
        std::string value;
    };
}

std::shared_ptr<TruncatedRing> deserialize_with_targets(const std::string& text,
                                                        const std::map<std::string, RingPtr>& targets)
{
    std::istringstream in(text);
    std::string line;
    std::shared_ptr<TruncatedRing> ring;
    std::vector<std::tuple<long, std::string, std::string, std::string>> product_lines;
    std::vector<PendingMap> maps;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "ring") {
            std::string id, kw, domain_s;
            long prime, cap;
            ls >> id >> kw >> prime >> kw >> cap >> kw >> domain_s;
            ring = std::make_shared<TruncatedRing>(id, prime, cap, domain_s == "Z" ? Domain::Z : Domain::Fp);
        } else if (word == "partner") {
            std::string pid;
            ls >> pid;
            ring->set_partner(pid);
        } else if (word == "basis") {
            long deg;
            std::string bar, name, colon;
            long order;
            ls >> deg >> bar >> name >> colon >> order;
            ring->add_monomial(Monomial{name, deg, order});
        } else if (word == "product") {
            long deg;
            std::string bar;
            ls >> deg >> bar;
            std::string rest;
            std::getline(ls, rest);
            size_t arrow = rest.find(" -> ");
            size_t star = rest.find(" * ");
            std::string a = rest.substr(1, star - 1);
            std::string b = rest.substr(star + 3, arrow - star - 3);
            std::string val = rest.substr(arrow + 4);
            product_lines.emplace_back(deg, a, b, val);
        } else if (word == "bockstein" || word == "reduce") {
            std::string bar;
            ls >> bar;
            std::string rest;
            std::getline(ls, rest);
            size_t arrow = rest.find(" -> ");
            maps.push_back({word, "", rest.substr(1, arrow - 1), rest.substr(arrow + 4)});
        } else if (word == "restrict" || word == "transfer") {
            std::string target, bar;
            ls >> target >> bar;
            std::string rest;
            std::getline(ls, rest);
            size_t arrow = rest.find(" -> ");
            maps.push_back({word, target, rest.substr(1, arrow - 1), rest.substr(arrow + 4)});
        } else if (word == "end") {
            break;
        } else {
            throw IoError("ring file: bad line: " + line);
        }
    }
    if (!ring)
        throw IoError("ring file: missing header");
    for (const auto& [deg, a, b, val] : product_lines)
        ring->set_product(a, b, ring->parse_element(val, deg));
    for (const auto& pm : maps) {
        if (pm.kind == "bockstein" || pm.kind == "reduce" || pm.kind == "restrict" || pm.kind == "transfer") {
            const TruncatedRing* target_ring = nullptr;
            RingPtr tp;
            if (pm.kind == "bockstein" || pm.kind == "reduce") {
                tp = targets.count(ring->partner_id()) ? targets.at(ring->partner_id()) : nullptr;
            } else {
                tp = targets.count(pm.target) ? targets.at(pm.target) : nullptr;
            }
            if (!tp)
                throw MissingTable("deserialize: target ring not supplied for " + pm.kind + " " + pm.target);
            target_ring = tp.get();
            long deg = -1;
            GradedElement img = pm.value == "0" ? GradedElement(tp, 0) : tp->parse_element(pm.value, deg);
            if (pm.kind == "bockstein")
                ring->set_bockstein(pm.name, img);
            else if (pm.kind == "reduce")
                ring->set_reduction(pm.name, img);
            else if (pm.kind == "restrict")
                ring->set_restriction(pm.target, pm.name, img);
            else
                ring->set_transfer(pm.target, pm.name, img);
            (void)target_ring;
        }
    }
    return ring;
}

std::shared_ptr<TruncatedRing> TruncatedRing::deserialize(const std::string& text)
{
    return deserialize_with_targets(text, {});
}

FormalClassTable::Image FormalClassTable::transfer_of(const std::string& covering, const std::string& cls) const
{
    auto cit = transfer.find(covering);
    if (cit == transfer.end() || !cit->second.count(cls))
        throw UnknownTransfer("formal: " + covering + ": " + cls);
    return cit->second.at(cls);
}

FormalClassTable::Image FormalClassTable::pullback_of(const std::string& covering, const std::string& cls) const
{
    auto cit = pullback.find(covering);
    if (cit == pullback.end() || !cit->second.count(cls))
        throw UnknownTransfer("formal pullback: " + covering + ": " + cls);
    return cit->second.at(cls);
}

FormalClassTable gamma_table(long p)
{
    FormalClassTable t;
    t.prime = p;
    // Gamma classes live in H^{4p-3} of the associated total spaces.
    t.transfer["BHt->BGt"]["Gamma_H"] = {1, "Gamma_G"};
    t.transfer["BS1->BHt"]["Gamma_S1"] = {1, "Gamma_H"};
    t.transfer["BS1->BGt"]["Gamma_S1"] = {1, "Gamma_G"};
    t.pullback["BHt->BGt"]["Gamma_G"] = {p, "Gamma_H"};
    t.pullback["BS1->BHt"]["Gamma_H"] = {p, "Gamma_S1"};
    t.pullback["BS1->BGt"]["Gamma_G"] = {p * p, "Gamma_S1"};
    return t;
}

}  // namespace obs::ring
