#include "nvlab/laurent.hpp"

#include "nvlab/errors.hpp"

#include <sstream>

namespace nvlab {

Laurent Laurent::monomial(const Rational& c, long exp) {
    Laurent p;
    if (!c.is_zero()) p.coeffs_[exp] = c;
    return p;
}

bool Laurent::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long Laurent::min_exp() const { return coeffs_.begin()->first; }
long Laurent::max_exp() const { return coeffs_.rbegin()->first; }

Rational Laurent::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Laurent::set_coeff(long exp, const Rational& c) {
    if (c.is_zero()) coeffs_.erase(exp);
    else coeffs_[exp] = c;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) r.coeffs_[e] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
    return r;
}

Laurent Laurent::shifted(long dexp) const {
    Laurent r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e + dexp] = v;
    return r;
}

Laurent Laurent::primitive_part() const {
    if (is_zero()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : coeffs_) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    Rational scale = Rational(den_lcm, num_gcd);
    if (coeffs_.rbegin()->second.sign() < 0) scale = -scale;
    return scaled(scale).shifted(-min_exp());
}

Rational Laurent::eval(const Rational& s0) const {
    if (is_zero()) return Rational(0);
    if (s0.is_zero() && min_exp() < 0)
        fail(ErrorKind::NonPositiveParameter, "Laurent evaluation at s = 0 with negative exponent");
    Rational acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * s0.pow(e);
    return acc;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first reads like maths
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        long e = it->first;
        if (first) {
            if (c.sign() < 0) { out << "-"; c = -c; }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool unit = (c == Rational(1));
        if (e == 0) {
            out << c.str();
        } else {
            if (!unit) out << c.str() << "*";
            out << "s";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

}  // namespace nvlab
