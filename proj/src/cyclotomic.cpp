#include "cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace obs::cyc {

namespace {
    size_t phi_of(long n)
    {
        switch (n) {
            case 3: return 2;
            case 9: return 6;
            default: throw UnsupportedConductor(std::to_string(n));
        }
    }
}

CycScalar::CycScalar(long conductor) : conductor_(conductor), coeffs_(phi_of(conductor), Rational(0)) {}

CycScalar::CycScalar(long conductor, const Rational& q) : CycScalar(conductor)
{
    coeffs_[0] = q;
}

CycScalar CycScalar::zeta(long conductor, long power)
{
    CycScalar x(conductor);
    long k = power % conductor;
    if (k < 0)
        k += conductor;
    std::vector<Rational> raw(conductor, Rational(0));
    raw[k] = 1;
    x.reduce_degree(raw);
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        x.coeffs_[i] = raw[i];
    return x;
}

CycScalar CycScalar::rational(const Rational& q, long conductor)
{
    return CycScalar(conductor, q);
}

/* Reduce a coefficient vector of length n in-place modulo Phi_n.
 * Phi_3 = x^2 + x + 1:   x^2 = -x - 1.
 * Phi_9 = x^6 + x^3 + 1: x^6 = -x^3 - 1 (and x^7, x^8 follow). */
void CycScalar::reduce_degree(std::vector<Rational>& raw) const
{
    size_t d = phi_of(conductor_);
    for (size_t k = raw.size(); k-- > d;) {
        if (raw[k] == 0)
            continue;
        Rational c = raw[k];
        raw[k] = 0;
        // x^k = x^{k-d} * x^d with x^d = -x^{d/2} - 1
        raw[k - d] -= c;
        raw[k - d / 2] -= c;
    }
    raw.resize(d);
}

bool CycScalar::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycScalar::is_rational() const
{
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CycScalar::rational_part() const
{
    if (!is_rational())
        throw Error("CycScalar: not rational: " + str());
    return coeffs_[0];
}

CycScalar CycScalar::operator+(const CycScalar& o) const
{
    if (conductor_ != o.conductor_)
        return to_conductor(9) + o.to_conductor(9);
    CycScalar r(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const
{
    return *this + (-o);
}

CycScalar CycScalar::operator-() const
{
    CycScalar r(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = -coeffs_[i];
    return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const
{
    if (conductor_ != o.conductor_)
        return to_conductor(9) * o.to_conductor(9);
    size_t d = coeffs_.size();
    std::vector<Rational> raw(2 * d, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j] == 0)
                continue;
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    CycScalar r(conductor_);
    // may need two passes since 2d-2 can exceed n-1 relations once; reduce_degree handles any length
    r.reduce_degree(raw);
    for (size_t i = 0; i < d; ++i)
        r.coeffs_[i] = raw[i];
    return r;
}

bool CycScalar::operator==(const CycScalar& o) const
{
    return (*this - o).is_zero();
}

CycScalar CycScalar::conj() const
{
    // zeta -> zeta^{n-1}; conjugate each basis power.
    CycScalar r(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        CycScalar term = zeta(conductor_, -static_cast<long>(i));
        for (size_t j = 0; j < coeffs_.size(); ++j)
            r.coeffs_[j] += coeffs_[i] * term.coeffs_[j];
    }
    return r;
}

CycScalar CycScalar::pow(long e) const
{
    CycScalar base = *this;
    if (e < 0) {
        base = inverse();
        e = -e;
    }
    CycScalar r(conductor_, Rational(1));
    while (e > 0) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

CycScalar CycScalar::inverse() const
{
    if (is_zero())
        throw Error("CycScalar: inverse of zero");
    // Solve x * y = 1 by linear algebra over Q on the power basis.
    size_t d = coeffs_.size();
    // columns: y basis vectors; rows: resulting coefficients
    std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1, Rational(0)));
    for (size_t j = 0; j < d; ++j) {
        CycScalar col = *this * zeta(conductor_, static_cast<long>(j));
        // zeta^j for j < d is a pure basis vector except after reduction; use pow of basis idx
        for (size_t i = 0; i < d; ++i)
            mat[i][j] = col.coeffs_[i];
    }
    mat[0][d] = 1;
    // Gaussian elimination over Q
    size_t row = 0;
    std::vector<long> pivot_cols;
    for (size_t col = 0; col < d && row < d; ++col) {
        size_t sel = row;
        while (sel < d && mat[sel][col] == 0)
            ++sel;
        if (sel == d)
            continue;
        std::swap(mat[row], mat[sel]);
        Rational inv = 1 / mat[row][col];
        for (size_t c = col; c <= d; ++c)
            mat[row][c] *= inv;
        for (size_t r = 0; r < d; ++r) {
            if (r == row || mat[r][col] == 0)
                continue;
            Rational f = mat[r][col];
            for (size_t c = col; c <= d; ++c)
                mat[r][c] -= f * mat[row][c];
        }
        pivot_cols.push_back(static_cast<long>(col));
        ++row;
    }
    CycScalar y(conductor_);
    for (size_t r = 0; r < pivot_cols.size(); ++r)
        y.coeffs_[static_cast<size_t>(pivot_cols[r])] = mat[r][d];
    if (!((*this) * y == CycScalar(conductor_, Rational(1))))
        throw Error("CycScalar: inverse failed");
    return y;
}

CycScalar CycScalar::norm_abs2() const
{
    return *this * conj();
}

CycScalar CycScalar::to_conductor(long n) const
{
    if (n == conductor_)
        return *this;
    if (conductor_ == 3 && n == 9) {
        // zeta_3 = zeta_9^3
        CycScalar r(9);
        r.coeffs_[0] = coeffs_[0];
        r.coeffs_[3] = coeffs_[1];
        return r;
    }
    if (conductor_ == 9 && n == 3) {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (i != 0 && i != 3 && coeffs_[i] != 0)
                throw Error("CycScalar: element not in Q(zeta_3): " + str());
        CycScalar r(3);
        r.coeffs_[0] = coeffs_[0];
        r.coeffs_[1] = coeffs_[3];
        return r;
    }
    throw UnsupportedConductor(std::to_string(n));
}

std::complex<double> CycScalar::to_complex() const
{
    std::complex<double> z = 0;
    double angle = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        double c = coeffs_[i].get_d();
        z += c * std::polar(1.0, angle * static_cast<double>(i));
    }
    return z;
}

std::string CycScalar::str() const
{
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        Rational c = coeffs_[i];
        if (first) {
            if (i > 0 && c == -1)
                out << "-";
            else if (i == 0 || c != 1)
                out << c.get_str() << (i > 0 ? "*" : "");
        } else {
            out << (c > 0 ? " + " : " - ");
            Rational a = abs(c);
            if (i == 0 || a != 1)
                out << a.get_str() << (i > 0 ? "*" : "");
        }
        if (i == 1)
            out << "w";
        else if (i > 1)
            out << "w^" << i;
        first = false;
    }
    if (first)
        return "0";
    return out.str();
}

CycScalar cyclotomic_eval(long conductor, const std::vector<long>& zeta_power_coeffs)
{
    CycScalar r(conductor);
    for (size_t k = 0; k < zeta_power_coeffs.size(); ++k) {
        if (zeta_power_coeffs[k] == 0)
            continue;
        r += CycScalar::rational(Rational(zeta_power_coeffs[k]), conductor) * CycScalar::zeta(conductor, static_cast<long>(k));
    }
    return r;
}

}  // namespace obs::cyc
