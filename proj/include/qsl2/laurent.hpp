#ifndef QSL2_LAURENT_HPP
#define QSL2_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qsl2 {

using Rational = mpq_class;

/// Sparse Laurent polynomial in q with rational coefficients.
/// Invariant: no stored coefficient is zero; the zero polynomial is empty.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);                       // constant c
    LaurentPoly(const Rational& c, int exp);   // c * q^exp
    static LaurentPoly q_power(int exp) { return LaurentPoly(Rational(1), exp); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    Rational coeff(int exp) const;
    const std::map<int, Rational>& terms() const { return coeffs_; }

    void set_coeff(int exp, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    LaurentPoly shifted(int k) const;               // multiply by q^k
    LaurentPoly scaled(const Rational& c) const;
    Rational eval_at_one() const;                   // sum of coefficients

    /// c*q^k + ... with integer or p/r coefficients, descending exponents.
    std::string str() const;

private:
    std::map<int, Rational> coeffs_;
};

/// Ordinary-polynomial helpers used for gcd over Q[q].  A poly is a dense
/// coefficient vector, index = exponent, no trailing zeros.
using DensePoly = std::vector<Rational>;

DensePoly to_dense(const LaurentPoly& p, int& shift_out);  // p = q^shift * dense
LaurentPoly from_dense(const DensePoly& p, int shift);
DensePoly dense_divmod(const DensePoly& a, const DensePoly& b, DensePoly& rem);
DensePoly dense_gcd(DensePoly a, DensePoly b);  // monic gcd

}  // namespace qsl2

#endif
