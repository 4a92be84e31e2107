#include "nvlab/poly.hpp"

#include "nvlab/errors.hpp"

#include <algorithm>

namespace nvlab {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_laurent_cleared(const Laurent& p) {
    if (p.is_zero()) return Poly();
    long lo = p.min_exp();
    std::vector<Rational> c(p.max_exp() - lo + 1);
    for (const auto& [e, v] : p.terms()) c[e - lo] = v;
    return Poly(std::move(c));
}

Rational Poly::coeff(long i) const {
    if (i < 0 || i >= (long)coeffs_.size()) return Rational(0);
    return coeffs_[i];
}

Rational Poly::lead() const {
    if (is_zero()) fail(ErrorKind::SchemaViolation, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational((long)i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Laurent Poly::to_laurent() const {
    Laurent r;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) r.set_coeff((long)i, coeffs_[i]);
    return r;
}

Poly Poly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((long)i) + b.coeff((long)i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((long)i) - b.coeff((long)i);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& c) const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorKind::SchemaViolation, "polynomial division by zero");
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(), r};
    std::vector<Rational> q(r.degree() - d.degree() + 1);
    Rational dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long k = r.degree() - d.degree();
        Rational f = r.lead() / dl;
        q[k] = f;
        // r -= f * s^k * d
        std::vector<Rational> nr = r.coeffs_;
        for (long i = 0; i <= d.degree(); ++i) nr[i + k] -= f * d.coeff(i);
        r = Poly(std::move(nr));
    }
    return {Poly(std::move(q)), r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        // normalizing monic at each step keeps coefficient bit-growth down
        y = r.is_zero() ? r : r.monic();
    }
    return x.is_zero() ? x : x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : Poly(Rational(1));
    Poly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

std::vector<Poly> yun_decomposition(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly a = p.monic();
    Poly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back(a);
        return out;
    }
    Poly w = a.divmod(g).first;        // product of distinct factors
    Poly y = a.derivative().divmod(g).first;
    Poly z = y - w.derivative();
    while (!z.is_zero()) {
        Poly f = gcd(w, z);
        out.push_back(f.monic());
        w = w.divmod(f).first;
        y = z.divmod(f).first;
        z = y - w.derivative();
    }
    out.push_back(w.monic());
    return out;
}

/* ---- Sturm machinery ---------------------------------------------------- */

static std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        const Poly& pm1 = chain[chain.size() - 2];
        const Poly& pm0 = chain.back();
        Poly r = pm1.divmod(pm0).second;
        if (r.is_zero()) break;
        Poly next = -r;
        // scaling by a positive constant preserves every sign pattern
        next = next.scaled(next.lead().abs().inverse());
        chain.push_back(next);
    }
    return chain;
}

static long sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    long var = 0;
    int prev = 0;
    for (const Poly& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long sturm_count(const Poly& squarefree, const Rational& a, const Rational& b) {
    if (!(a < b)) fail(ErrorKind::SchemaViolation, "sturm_count needs a < b");
    std::vector<Poly> chain = sturm_chain(squarefree);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

static Rational cauchy_bound(const Poly& p) {
    Rational m(0);
    Rational lead = p.lead().abs();
    for (long i = 0; i < p.degree(); ++i) {
        Rational q = p.coeff(i).abs() / lead;
        if (q > m) m = q;
    }
    return m + Rational(1);
}

std::vector<RootInterval> isolate_positive_roots(const Poly& p_in, const Rational& max_width) {
    std::vector<RootInterval> out;
    if (p_in.is_zero()) return out;

    // strip s^k so that evaluation at 0 is meaningful
    Poly p = p_in;
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly(std::move(c));
    }
    Poly sf = squarefree_part(p);
    if (sf.degree() <= 0) return out;

    std::vector<Poly> chain = sturm_chain(sf);
    auto vars = [&](const Rational& x) { return sign_variations(chain, x); };

    Rational zero(0);
    Rational bound = cauchy_bound(sf);

    struct Seg { Rational lo, hi; long count; };
    std::vector<Seg> work;
    long total = vars(zero) - vars(bound);
    if (total > 0) work.push_back({zero, bound, total});

    while (!work.empty()) {
        Seg seg = work.back();
        work.pop_back();
        if (seg.count == 0) continue;
        Rational width = seg.hi - seg.lo;
        if (seg.count == 1 && width <= max_width && seg.lo > zero) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / Rational(2);
        if (sf.eval(mid).is_zero()) {
            // landed exactly on a (rational) root: carve out a private
            // interval around it, then keep isolating on both sides
            Rational delta = width / Rational(4);
            if (delta > max_width / Rational(2)) delta = max_width / Rational(2);
            while (true) {
                Rational lo = mid - delta, hi = mid + delta;
                if (lo > seg.lo && hi < seg.hi && !sf.eval(lo).is_zero() &&
                    !sf.eval(hi).is_zero() && vars(lo) - vars(hi) == 1 && lo > zero) {
                    out.push_back({lo, hi});
                    long left = vars(seg.lo) - vars(lo);
                    long right = vars(hi) - vars(seg.hi);
                    if (left > 0) work.push_back({seg.lo, lo, left});
                    if (right > 0) work.push_back({hi, seg.hi, right});
                    break;
                }
                delta /= Rational(2);
            }
            continue;
        }
        long left = vars(seg.lo) - vars(mid);
        long right = seg.count - left;
        if (left > 0) work.push_back({seg.lo, mid, left});
        if (right > 0) work.push_back({mid, seg.hi, right});
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

std::optional<Rational> exact_root_in(const Poly& squarefree, const RootInterval& iv) {
    Rational lo = iv.lo, hi = iv.hi;
    int slo = squarefree.eval(lo).sign();
    // a squarefree isolator has a sign change across its single root
    Rational floor_width = Rational(Integer(1), Integer(1) << 64);
    while (true) {
        Rational cand = simplest_rational_between(lo, hi);
        if (squarefree.eval(cand).is_zero()) return cand;
        if (hi - lo < floor_width) return std::nullopt;
        Rational mid = (lo + hi) / Rational(2);
        int smid = squarefree.eval(mid).sign();
        if (smid == 0) return mid;
        if (smid == slo) { lo = mid; } else { hi = mid; }
    }
}

}  // namespace nvlab
