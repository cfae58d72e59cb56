#pragma once
#include "errors.hpp"

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace obs::cyc {

using Rational = mpq_class;

/* Element of Q(zeta_n), n in {3, 9}, on the power basis 1, z, ..., z^{phi(n)-1},
 * reduced modulo the n-th cyclotomic polynomial. */
class CycScalar {
public:
    CycScalar() : conductor_(3), coeffs_(2, Rational(0)) {}
    explicit CycScalar(long conductor);
    CycScalar(long conductor, const Rational& rational_value);

    static CycScalar zeta(long conductor, long power = 1);
    static CycScalar rational(const Rational& q, long conductor = 3);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws unless is_rational()

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    CycScalar conj() const;        // complex conjugation, zeta -> zeta^{n-1}
    CycScalar pow(long e) const;
    CycScalar inverse() const;     // throws on zero
    CycScalar norm_abs2() const;   // x * conj(x)

    // Change of conductor.  3 -> 9 always embeds (zeta_3 = zeta_9^3);
    // 9 -> 3 succeeds only when the element lies in the subfield.
    CycScalar to_conductor(long n) const;

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    long conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor)

    void reduce_degree(std::vector<Rational>& raw) const;  // raw has degree < n
};

// Lift an integer polynomial sum c_k zeta^k to normal form.
CycScalar cyclotomic_eval(long conductor, const std::vector<long>& zeta_power_coeffs);

}  // namespace obs::cyc
