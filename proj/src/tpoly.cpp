#include "delpair/tpoly.hpp"

#include <sstream>

namespace delpair {

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::constant(Scalar s) {
    TPoly p;
    if (!s.is_zero()) p.c_.push_back(std::move(s));
    return p;
}

TPoly TPoly::monomial(Scalar c, int e) {
    TPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(e) + 1, c - c);  // zeros of matching kind
    p.c_[static_cast<size_t>(e)] = std::move(c);
    return p;
}

Scalar TPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return c_.empty() ? Scalar::integer(Int(0)) : c_[0] - c_[0];
    }
    return c_[static_cast<size_t>(i)];
}

const Scalar& TPoly::lc() const {
    if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
}

TPoly TPoly::operator+(const TPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::vector<Scalar> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.push_back(c_[i] + o.c_[i]);
        else if (i < c_.size())
            r.push_back(c_[i]);
        else
            r.push_back(o.c_[i]);
    }
    return TPoly(std::move(r));
}

TPoly TPoly::operator-() const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& s : c_) r.push_back(-s);
    return TPoly(std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, c_[0] - c_[0]);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return TPoly(std::move(r));
}

TPoly TPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return TPoly();
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return TPoly(std::move(r));
}

std::pair<TPoly, TPoly> TPoly::divrem(const TPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    TPoly q, r = *this;
    Scalar dl = d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Scalar c = r.lc() / dl;
        int e = r.degree() - d.degree();
        TPoly term = TPoly::monomial(c, e);
        q = q + term;
        r = r - term * d;
    }
    return {q, r};
}

TPoly TPoly::exact_div(const TPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return TPoly();
    // Long division where each leading-coefficient division must be exact;
    // valid for guaranteed-divisible inputs over Z as well as over fields.
    TPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Scalar c = r.lc() / d.lc();  // throws if inexact over Int
        TPoly term = TPoly::monomial(c, r.degree() - d.degree());
        q = q + term;
        r = r - term * d;
    }
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

bool TPoly::divides(const TPoly& d) const {
    try {
        (void)d.exact_div(*this);
        return true;
    } catch (const Error&) {
        return false;
    }
}

TPoly TPoly::derivative() const {
    if (c_.size() <= 1) return TPoly();
    std::vector<Scalar> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        Scalar k = c_[i];
        // multiply by i in the coefficient domain
        Scalar m = k - k;
        for (size_t j = 0; j < i; ++j) m = m + k;
        r.push_back(m);
    }
    return TPoly(std::move(r));
}

Scalar TPoly::eval(const Scalar& x) const {
    Scalar acc = x - x;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

TPoly TPoly::pow(unsigned long e) const {
    TPoly r = TPoly::constant(Scalar::integer(Int(1)));
    if (!c_.empty() && c_[0].kind() == Scalar::Kind::Fp)
        r = TPoly::constant(Scalar::fp(Int(1), c_[0].modulus()));
    TPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

TPoly TPoly::truncated(int k) const {
    if (degree() < k) return *this;
    std::vector<Scalar> r(c_.begin(), c_.begin() + k);
    return TPoly(std::move(r));
}

TPoly TPoly::shifted(const Scalar& a) const {
    // Horner: p(t + a)
    Scalar one = a.kind() == Scalar::Kind::Fp ? Scalar::fp(Int(1), a.modulus())
                                              : Scalar::integer(Int(1));
    TPoly shift(std::vector<Scalar>{a, one});
    TPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * shift + TPoly::constant(c_[i]);
    return acc;
}

TPoly TPoly::reversed(int declared_degree) const {
    if (declared_degree < degree()) throw Error("declared degree below actual degree");
    if (is_zero()) return TPoly();
    std::vector<Scalar> r(static_cast<size_t>(declared_degree) + 1, c_[0] - c_[0]);
    for (size_t i = 0; i < c_.size(); ++i)
        r[static_cast<size_t>(declared_degree) - i] = c_[i];
    return TPoly(std::move(r));
}

TPoly TPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

Int TPoly::int_content() const {
    Int g(0);
    for (const auto& s : c_) g = int_gcd(g, s.as_int());
    return g;
}

TPoly TPoly::int_primitive_part() const {
    if (is_zero()) return *this;
    Int g = int_content();
    if (lc().as_int() < 0) g = -g;
    return exact_div(TPoly::from_int(g));
}

TPoly TPoly::mod_int(const Int& m) const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& s : c_) {
        Int v;
        mpz_mod(v.get_mpz_t(), s.as_int().get_mpz_t(), m.get_mpz_t());
        r.push_back(Scalar::integer(v));
    }
    return TPoly(std::move(r));
}

TPoly TPoly::mod_int_centered(const Int& m) const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& s : c_) {
        Int v;
        mpz_mod(v.get_mpz_t(), s.as_int().get_mpz_t(), m.get_mpz_t());
        if (v * 2 > m) v -= m;
        r.push_back(Scalar::integer(v));
    }
    return TPoly(std::move(r));
}

TPoly TPoly::rat_to_int_primitive() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& s : c_) {
        Int d = s.rat().get_den();
        den = den / int_gcd(den, d) * d;
    }
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& s : c_) {
        Rat v = s.rat() * Rat(den);
        r.push_back(Scalar::integer(v.get_num()));
    }
    TPoly p(std::move(r));
    return p.int_primitive_part();
}

std::string TPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = (cs == "1") && i > 0;
        if (!unit_coeff) os << cs;
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

int TPoly::cmp(const TPoly& a, const TPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        const Scalar &x = a.c_[i], &y = b.c_[i];
        if (x == y) continue;
        if (x.kind() == Scalar::Kind::Fp)
            return x.fp_value() < y.fp_value() ? -1 : 1;
        return x.rat() < y.rat() ? -1 : 1;
    }
    return 0;
}

TPoly poly_gcd(const TPoly& a, const TPoly& b) {
    TPoly x = a, y = b;
    while (!y.is_zero()) {
        TPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

PolyXgcd poly_xgcd(const TPoly& a, const TPoly& b) {
    TPoly r0 = a, r1 = b;
    TPoly s0 = TPoly::constant(a.is_zero() ? (b.is_zero() ? Scalar::integer(Int(1)) : b.lc() / b.lc()) : a.lc() / a.lc());
    TPoly s1, t0, t1 = s0;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        TPoly s2 = s0 - q * s1;
        TPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

TPoly powmod(const TPoly& base, const Int& e, const TPoly& m) {
    TPoly r = TPoly::constant(m.lc() / m.lc());
    TPoly b = base.divrem(m).second;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * b).divrem(m).second;
        b = (b * b).divrem(m).second;
        k >>= 1;
    }
    return r;
}

}  // namespace delpair
