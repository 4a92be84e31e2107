#ifndef NVLAB_SERIES_HPP
#define NVLAB_SERIES_HPP

#include "nvlab/rational.hpp"

#include <string>
#include <vector>

namespace nvlab {

/* Truncated power series in λ used for counting: coefficients for degrees
 * 0..p_max, exact rationals. Arithmetic never mixes truncation orders; that
 * is a hard error, not a silent re-truncation. */
class CountingSeries {
  public:
    CountingSeries() = default;
    explicit CountingSeries(long p_max) : coeffs_(p_max + 1, Rational(0)) {}
    explicit CountingSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    long p_max() const { return (long)coeffs_.size() - 1; }
    const Rational& coeff(long i) const { return coeffs_.at(i); }
    void set_coeff(long i, const Rational& c) { coeffs_.at(i) = c; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool integral() const;  // all coefficients integers
    bool nonnegative() const;

    friend bool operator==(const CountingSeries& a, const CountingSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;  // e.g. "1 + 2*L^2 + 2*L^4" with L = lambda

  private:
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { Add, Subtract, Multiply };

/* Truncated ring operations; both operands must share p_max (error
 * TruncationMismatch otherwise). Multiplication drops degrees > p_max. */
CountingSeries series_arith(SeriesOp op, const CountingSeries& a, const CountingSeries& b);

/* Expansion of (1 - λ²)^{-n} through degree p_max: coefficient of λ^{2k} is
 * binomial(n - 1 + k, k). The n = 0 case is the constant series 1. */
CountingSeries expand_inverse_one_minus_lambda_sq(long n, long p_max);

}  // namespace nvlab

#endif
