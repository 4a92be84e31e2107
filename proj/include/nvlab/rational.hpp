#ifndef NVLAB_RATIONAL_HPP
#define NVLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nvlab {

using Integer = boost::multiprecision::cpp_int;

/* Exact rational number. Thin wrapper over boost's cpp_rational, which keeps
 * the canonical form we rely on everywhere: gcd(num, den) = 1 and den > 0.
 * All engine arithmetic goes through this type; nothing downstream ever sees
 * floating point. */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    static Rational parse(const std::string& text);  // "p/q" or "p"

    Integer num() const { return boost::multiprecision::numerator(v_); }
    Integer den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }
    Rational inverse() const;
    Rational pow(long e) const;  // e may be negative (then *this != 0)

    std::string str() const;  // "p/q", or "p" when den == 1

  private:
    boost::multiprecision::cpp_rational v_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer binomial(long n, long k);

/* Simplest rational in the open interval (a, b), i.e. the one with the
 * smallest denominator (ties: smallest numerator magnitude). Stern-Brocot
 * style continued-fraction walk; used to recognize exactly-rational roots of
 * locus polynomials without factoring anything. */
Rational simplest_rational_between(const Rational& a, const Rational& b);

/* Decimal approximation of ln(x) for x > 0, deterministically rounded to
 * `digits` places via an exact rational atanh series (no libm, so reports
 * are byte-identical across platforms). */
std::string ln_decimal_string(const Rational& x, int digits);

}  // namespace nvlab

#endif
