#ifndef NVLAB_LAURENT_HPP
#define NVLAB_LAURENT_HPP

#include "nvlab/rational.hpp"

#include <map>
#include <string>

namespace nvlab {

/* Laurent polynomial in one variable s with exact rational coefficients,
 * stored sparsely as exponent -> coefficient. The map never holds a zero
 * coefficient, so is_zero() == empty() and equality is structural. Ordered
 * storage keeps every iteration deterministic. */
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Rational& c) { if (!c.is_zero()) coeffs_[0] = c; }
    static Laurent monomial(const Rational& c, long exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    long min_exp() const;  // requires !is_zero()
    long max_exp() const;
    long term_count() const { return (long)coeffs_.size(); }
    Rational coeff(long exp) const;
    const std::map<long, Rational>& terms() const { return coeffs_; }

    void set_coeff(long exp, const Rational& c);

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent scaled(const Rational& c) const;
    Laurent shifted(long dexp) const;  // multiply by s^dexp

    /* Divide by numeric content and s^{min_exp}: result has integer
     * coefficients with gcd 1 and lowest exponent 0, positive leading
     * coefficient. Returns the primitive part (no-op on zero). */
    Laurent primitive_part() const;

    Rational eval(const Rational& s0) const;  // s0 != 0 when min_exp < 0

    std::string str() const;  // canonical rendering, e.g. "s^2 - 3*s + 1/2"

  private:
    std::map<long, Rational> coeffs_;
};

}  // namespace nvlab

#endif
