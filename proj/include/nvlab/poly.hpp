#ifndef NVLAB_POLY_HPP
#define NVLAB_POLY_HPP

#include "nvlab/laurent.hpp"
#include "nvlab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nvlab {

/* Dense univariate polynomial over the rationals; the workhorse behind gcds,
 * exact division, Sturm chains and root isolation. coeffs()[i] is the
 * coefficient of s^i; the leading coefficient is never zero (the zero
 * polynomial has an empty vector). */
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    explicit Poly(const Rational& c) : Poly(std::vector<Rational>{c}) {}

    /* Laurent -> polynomial, discarding the s^{min_exp} unit factor. */
    static Poly from_laurent_cleared(const Laurent& p);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return (long)coeffs_.size() - 1; }  // -1 for zero
    Rational coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational lead() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;

    Laurent to_laurent() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly scaled(const Rational& c) const;

    /* Euclidean division over the field of rationals: *this = q*d + r with
     * deg r < deg d. */
    std::pair<Poly, Poly> divmod(const Poly& d) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b);        // monic gcd (or zero)
Poly squarefree_part(const Poly& p);           // p / gcd(p, p'), monic

/* Yun decomposition p = lead * prod_i f_i^i with the f_i squarefree, monic
 * and pairwise coprime; result[i-1] = f_i. */
std::vector<Poly> yun_decomposition(const Poly& p);

/* Open interval 0 < lo < hi known to contain exactly one root. */
struct RootInterval {
    Rational lo;
    Rational hi;
};

/* Number of distinct real roots of squarefree p in the open interval (a, b);
 * requires p(a) != 0 and p(b) != 0. Sturm-chain sign variation count. */
long sturm_count(const Poly& squarefree, const Rational& a, const Rational& b);

/* Disjoint isolating intervals, each of width <= max_width, one per distinct
 * positive real root of p (any multiplicity), sorted increasingly. Roots at
 * s = 0 are discarded (unit factor), negative roots ignored. */
std::vector<RootInterval> isolate_positive_roots(const Poly& p, const Rational& max_width);

/* If the unique root inside the isolating interval is rational with
 * denominator below ~2^32, return it exactly; otherwise nullopt. Uses
 * simplest-rational probing, no factorization. */
std::optional<Rational> exact_root_in(const Poly& squarefree, const RootInterval& iv);

}  // namespace nvlab

#endif
