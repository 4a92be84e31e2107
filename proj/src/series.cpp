#include "nvlab/series.hpp"

#include "nvlab/errors.hpp"

#include <sstream>

namespace nvlab {

bool CountingSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CountingSeries::integral() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer()) return false;
    return true;
}

bool CountingSeries::nonnegative() const {
    for (const auto& c : coeffs_)
        if (c.sign() < 0) return false;
    return true;
}

std::string CountingSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (long i = 0; i <= p_max(); ++i) {
        Rational c = coeffs_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) { out << "-"; c = -c; }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool unit = (c == Rational(1));
        if (i == 0) {
            out << c.str();
        } else {
            if (!unit) out << c.str() << "*";
            out << "L";
            if (i != 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CountingSeries series_arith(SeriesOp op, const CountingSeries& a, const CountingSeries& b) {
    if (a.p_max() != b.p_max())
        fail(ErrorKind::TruncationMismatch,
             "series truncations differ (" + std::to_string(a.p_max()) + " vs " +
                 std::to_string(b.p_max()) + ")");
    long n = a.p_max();
    CountingSeries r(n);
    switch (op) {
        case SeriesOp::Add:
            for (long i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
            break;
        case SeriesOp::Subtract:
            for (long i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
            break;
        case SeriesOp::Multiply:
            for (long i = 0; i <= n; ++i) {
                Rational acc(0);
                for (long j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
                r.set_coeff(i, acc);
            }
            break;
    }
    return r;
}

CountingSeries expand_inverse_one_minus_lambda_sq(long n, long p_max) {
    if (n < 0) fail(ErrorKind::SchemaViolation, "negative torus rank");
    if (p_max < 0) fail(ErrorKind::SchemaViolation, "negative truncation");
    CountingSeries r(p_max);
    if (n == 0) {
        r.set_coeff(0, Rational(1));
        return r;
    }
    for (long k = 0; 2 * k <= p_max; ++k) r.set_coeff(2 * k, Rational(binomial(n - 1 + k, k)));
    return r;
}

}  // namespace nvlab
