#include "nvlab/rational.hpp"

#include "nvlab/errors.hpp"

#include <sstream>

namespace nvlab {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SchemaViolation: return "SchemaViolation";
        case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
        case ErrorKind::TruncationMismatch: return "TruncationMismatch";
        case ErrorKind::NegativeSeriesCoefficient: return "NegativeSeriesCoefficient";
        case ErrorKind::MissingFace: return "MissingFace";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotFlat: return "NotFlat";
        case ErrorKind::ComplexMismatch: return "ComplexMismatch";
        case ErrorKind::NotHomomorphism: return "NotHomomorphism";
        case ErrorKind::NotSimplicial: return "NotSimplicial";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::CocycleLawViolation: return "CocycleLawViolation";
        case ErrorKind::TransportIncompatible: return "TransportIncompatible";
        case ErrorKind::CocycleNotInvariant: return "CocycleNotInvariant";
        case ErrorKind::ActionNotFree: return "ActionNotFree";
        case ErrorKind::NontrivialStabilizerAction: return "NontrivialStabilizerAction";
        case ErrorKind::StabilityViolation: return "StabilityViolation";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::TruncationExceedsComputation: return "TruncationExceedsComputation";
        case ErrorKind::IndexNotDividing: return "IndexNotDividing";
        case ErrorKind::OddNovikovNonzero: return "OddNovikovNonzero";
        case ErrorKind::NonIntegerCount: return "NonIntegerCount";
    }
    return "UnknownError";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::SchemaViolation, "rational with zero denominator");
    Integer n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    Integer g = boost::multiprecision::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    v_ = boost::multiprecision::cpp_rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) fail(ErrorKind::SchemaViolation, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (v_ == 0) fail(ErrorKind::SchemaViolation, "inverse of zero");
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) fail(ErrorKind::SchemaViolation, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::SchemaViolation, "cannot parse rational '" + text + "'");
    }
}

std::string Rational::str() const {
    std::ostringstream out;
    out << num();
    if (den() != 1) out << "/" << den();
    return out.str();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer acc = 1;
    for (long i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

static Integer floor_of(const Rational& x) {
    Integer q = x.num() / x.den();  // truncation
    if (x < Rational(0) && q * x.den() != x.num()) q -= 1;
    return q;
}

Rational simplest_rational_between(const Rational& a, const Rational& b) {
    if (!(a < b)) fail(ErrorKind::SchemaViolation, "empty interval");
    if (a < Rational(0) && b > Rational(0)) return Rational(0);
    if (b <= Rational(0)) return -simplest_rational_between(-b, -a);

    // Now 0 <= a < b. Stern-Brocot / continued-fraction walk; the result has
    // minimal denominator (and numerator) among all rationals in (a, b).
    Integer n = floor_of(a);
    Integer np1 = Integer(n + 1);
    if (b > Rational(np1)) return Rational(np1);
    Rational fa = a - Rational(n);  // in [0, 1)
    Rational fb = b - Rational(n);  // in (0, 1]
    if (fa.is_zero()) {
        // interval (n, n + fb): cheapest fraction is n + 1/k
        Integer k = Integer(floor_of(fb.inverse()) + 1);
        return Rational(n) + Rational(Integer(1), k);
    }
    Rational inner = simplest_rational_between(fb.inverse(), fa.inverse());
    return Rational(n) + inner.inverse();
}

/* ln via argument reduction x = m * 2^k with m in [1, 2), then the atanh
 * series ln m = 2 * sum z^(2j+1)/(2j+1), z = (m-1)/(m+1) in [0, 1/3).
 * Everything stays rational; the final rounding is half-even at `digits`. */
static Rational ln_rational_approx(const Rational& x, int guard_digits) {
    Rational pow10 = Rational(10).pow(guard_digits);
    Rational eps = pow10.inverse();

    int k = 0;
    Rational m = x;
    while (m >= Rational(2)) { m /= Rational(2); ++k; }
    while (m < Rational(1)) { m *= Rational(2); --k; }

    auto atanh_series = [&](const Rational& z) {
        Rational term = z, acc = z;
        Rational z2 = z * z;
        for (int j = 1;; ++j) {
            term *= z2;
            Rational add = term / Rational(2 * j + 1);
            acc += add;
            if (add.abs() < eps / Rational(8)) break;
        }
        return acc;
    };

    Rational ln2 = Rational(2) * atanh_series(Rational(Integer(1), Integer(3)));
    Rational lnm = Rational(2) * atanh_series((m - Rational(1)) / (m + Rational(1)));
    return Rational(k) * ln2 + lnm;
}

std::string ln_decimal_string(const Rational& x, int digits) {
    if (x <= Rational(0)) fail(ErrorKind::NonPositiveParameter, "ln of non-positive value");
    if (x == Rational(1)) {
        std::string s = "0";
        if (digits > 0) s += "." + std::string(digits, '0');
        return s;
    }
    Rational v = ln_rational_approx(x, digits + 4);
    bool neg = v < Rational(0);
    if (neg) v = -v;
    Integer scale = Rational(10).pow(digits).num();
    // round half-even on v * 10^digits
    Rational scaled = v * Rational(scale);
    Integer ip = scaled.num() / scaled.den();
    Rational frac = scaled - Rational(ip);
    if (frac > Rational(Integer(1), Integer(2)) ||
        (frac == Rational(Integer(1), Integer(2)) && (ip % 2) != 0)) {
        ip += 1;
    }
    std::ostringstream out;
    Integer whole = ip / scale;
    Integer rem = ip % scale;
    if (neg) out << "-";
    out << whole;
    if (digits > 0) {
        std::string r = rem.str();
        out << "." << std::string(digits - (int)r.size(), '0') << r;
    }
    return out.str();
}

}  // namespace nvlab
