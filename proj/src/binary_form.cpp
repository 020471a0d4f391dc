#include "delpair/binary_form.hpp"

#include <sstream>

namespace delpair {

BaseRing BaseRing::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("base modulus is not prime");
    return {Kind::FP, p};
}

BaseRing BaseRing::prime_t(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("base modulus is not prime");
    return {Kind::FPT, p};
}

Scalar::Kind BaseRing::scalar_kind() const {
    switch (kind) {
        case Kind::ZZ: return Scalar::Kind::Int;
        case Kind::QQ:
        case Kind::QT: return Scalar::Kind::Rat;
        default: return Scalar::Kind::Fp;
    }
}

Scalar BaseRing::scalar_zero() const {
    switch (kind) {
        case Kind::ZZ: return Scalar::integer(Int(0));
        case Kind::QQ:
        case Kind::QT: return Scalar::rational(Rat(0));
        default: return Scalar::fp(Int(0), p);
    }
}

Scalar BaseRing::scalar_one() const {
    switch (kind) {
        case Kind::ZZ: return Scalar::integer(Int(1));
        case Kind::QQ:
        case Kind::QT: return Scalar::rational(Rat(1));
        default: return Scalar::fp(Int(1), p);
    }
}

std::string BaseRing::to_string() const {
    switch (kind) {
        case Kind::ZZ: return "Z";
        case Kind::QQ: return "Q";
        case Kind::FP: return "Fp:" + std::to_string(p);
        case Kind::QT: return "Q[t]";
        default: return "Fp[t]:" + std::to_string(p);
    }
}

BaseRing BaseRing::parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    if (s == "Q[t]") return rational_t();
    if (s.rfind("Fp[t]:", 0) == 0) return prime_t(std::stoull(s.substr(6)));
    if (s.rfind("Fp:", 0) == 0) return prime_field(std::stoull(s.substr(3)));
    throw SchemaError("unknown base ring: " + s);
}

BinaryForm::BinaryForm(BaseRing ring, int degree, std::vector<TPoly> coeffs)
    : ring_(ring), deg_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw Error("negative form degree");
    c_.resize(static_cast<size_t>(degree) + 1);
    for (const auto& ci : c_) {
        if (ci.is_zero()) continue;
        if (ci.coeffs()[0].kind() != ring.scalar_kind() &&
            !(ring.scalar_kind() == Scalar::Kind::Rat &&
              ci.coeffs()[0].kind() == Scalar::Kind::Int))
            throw Error("coefficient kind does not match base ring");
        if (!ring.has_t() && ci.degree() > 0)
            throw Error("t-coefficients require a k[t] base ring");
    }
}

bool BinaryForm::is_zero() const {
    for (const auto& ci : c_)
        if (!ci.is_zero()) return false;
    return true;
}

int BinaryForm::x_multiplicity() const {
    for (int i = 0; i <= deg_; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) return i;
    throw Error("zero form");
}

int BinaryForm::y_multiplicity() const {
    for (int i = deg_; i >= 0; --i)
        if (!c_[static_cast<size_t>(i)].is_zero()) return deg_ - i;
    throw Error("zero form");
}

int BinaryForm::t_degree() const {
    int d = 0;
    for (const auto& ci : c_) d = std::max(d, ci.degree());
    return d;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (!(ring_ == o.ring_)) throw Error("base ring mismatch in form product");
    std::vector<TPoly> r(static_cast<size_t>(deg_ + o.deg_) + 1);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; j <= o.deg_; ++j)
            r[static_cast<size_t>(i + j)] =
                r[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    return BinaryForm(ring_, deg_ + o.deg_, std::move(r));
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (!(ring_ == o.ring_) || deg_ != o.deg_) return false;
    for (int i = 0; i <= deg_; ++i)
        if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
    return true;
}

bool BinaryForm::operator<(const BinaryForm& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    for (int i = deg_; i >= 0; --i) {
        int c = TPoly::cmp(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

TPoly BinaryForm::dehomogenized() const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& ci : c_) {
        if (ci.degree() > 0) throw Error("cannot collapse t-coefficients to scalars");
        r.push_back(ci.is_zero() ? ring_.scalar_zero() : ci.coeffs()[0]);
    }
    return TPoly(std::move(r));
}

BinaryForm BinaryForm::homogenized(BaseRing ring, const TPoly& f, int degree) {
    std::vector<TPoly> c(static_cast<size_t>(degree) + 1);
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<size_t>(i)] = TPoly::constant(f.coeff(i));
    return BinaryForm(ring, degree, std::move(c));
}

BinaryForm BinaryForm::swapped_xy() const {
    std::vector<TPoly> r(c_.rbegin(), c_.rend());
    return BinaryForm(ring_, deg_, std::move(r));
}

BinaryForm BinaryForm::eval_t(const Scalar& a) const {
    BaseRing target = ring_.kind == BaseRing::Kind::QT ? BaseRing::rationals()
                                                       : BaseRing::prime_field(ring_.p);
    std::vector<TPoly> r;
    r.reserve(c_.size());
    for (const auto& ci : c_) r.push_back(TPoly::constant(ci.is_zero() ? target.scalar_zero() : ci.eval(a)));
    return BinaryForm(target, deg_, std::move(r));
}

BinaryForm BinaryForm::mod_prime(const Int& p) const {
    if (ring_.kind != BaseRing::Kind::ZZ) throw Error("mod_prime expects an integer form");
    if (!p.fits_ulong_p()) throw Error("prime too large for residue computations");
    BaseRing target = BaseRing::prime_field(p.get_ui());
    std::vector<TPoly> r;
    r.reserve(c_.size());
    for (const auto& ci : c_)
        r.push_back(TPoly::constant(
            Scalar::fp(ci.is_zero() ? Int(0) : ci.coeffs()[0].as_int(), target.p)));
    return BinaryForm(target, deg_, std::move(r));
}

TPoly BinaryForm::content() const {
    if (is_zero()) return TPoly();
    switch (ring_.kind) {
        case BaseRing::Kind::ZZ: {
            Int g(0);
            for (const auto& ci : c_)
                if (!ci.is_zero()) g = int_gcd(g, ci.coeffs()[0].as_int());
            return TPoly::from_int(g);
        }
        case BaseRing::Kind::QQ:
        case BaseRing::Kind::FP: {
            // over a field every nonzero element is a unit; report the top
            // nonzero coefficient so normalized() can divide it out
            for (int i = deg_; i >= 0; --i)
                if (!c_[static_cast<size_t>(i)].is_zero()) return c_[static_cast<size_t>(i)];
            return TPoly();
        }
        default: {
            TPoly g;
            for (const auto& ci : c_) g = poly_gcd(g, ci);
            return g;
        }
    }
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) throw Error("cannot normalize the zero form");
    TPoly cont = content();
    std::vector<TPoly> r;
    r.reserve(c_.size());
    for (const auto& ci : c_) r.push_back(ci.is_zero() ? ci : ci.exact_div(cont));
    BinaryForm f(ring_, deg_, std::move(r));
    // unit normalization: top nonzero coefficient positive (Z) or monic
    int top = deg_ - f.y_multiplicity();
    const TPoly& lead = f.c_[static_cast<size_t>(top)];
    if (ring_.kind == BaseRing::Kind::ZZ) {
        if (lead.coeffs()[0].as_int() < 0) {
            for (auto& ci : f.c_) ci = -ci;
        }
    } else {
        Scalar u = lead.lc().inverse();
        for (auto& ci : f.c_) ci = ci.scaled(u);
    }
    return f;
}

bool BinaryForm::is_normalized_primitive() const {
    if (is_zero()) return false;
    return *this == normalized();
}

TPoly BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
    TPoly acc;
    for (int i = 0; i <= deg_; ++i) {
        Scalar m = ring_.scalar_one();
        for (int k = 0; k < i; ++k) m = m * x;
        for (int k = i; k < deg_; ++k) m = m * y;
        acc = acc + c_[static_cast<size_t>(i)].scaled(m);
    }
    return acc;
}

std::string BinaryForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg_; i >= 0; --i) {
        const TPoly& ci = c_[static_cast<size_t>(i)];
        if (ci.is_zero()) continue;
        std::string mono;
        if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
        int ypow = deg_ - i;
        if (ypow > 0) {
            if (!mono.empty()) mono += "*";
            mono += ypow == 1 ? "y" : "y^" + std::to_string(ypow);
        }
        std::string cs = ci.to_string();
        bool neg = false;
        if (ci.degree() == 0 && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool needs_parens = ci.degree() > 0 && !mono.empty();
        bool unit = (cs == "1") && !mono.empty();
        if (needs_parens)
            os << "(" << cs << ")";
        else if (!unit)
            os << cs;
        if (!mono.empty()) {
            if (needs_parens || !unit) os << "*";
            os << mono;
        }
    }
    return os.str();
}

TPoly det_bareiss(std::vector<std::vector<TPoly>> m) {
    size_t n = m.size();
    if (n == 0) return TPoly::from_int(Int(1));
    TPoly prev = TPoly::constant(Scalar::integer(Int(1)));
    // match scalar kind of the matrix for the seed pivot
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) {
                prev = TPoly::constant(e.lc() / e.lc());
                goto seeded;
            }
    return TPoly();  // all-zero matrix
seeded:
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero()) ++swap;
            if (swap == n) return TPoly();
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                TPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.exact_div(prev);
            }
            m[i][k] = TPoly();
        }
        prev = m[k][k];
    }
    TPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

TPoly resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero()) throw Error("zero form has no resultant");
    if (!(f.ring() == g.ring())) throw Error("base ring mismatch in resultant");
    int m = f.degree(), n = g.degree();
    size_t size = static_cast<size_t>(m + n);
    if (size == 0) return TPoly::constant(f.ring().scalar_one());
    std::vector<std::vector<TPoly>> mat(size, std::vector<TPoly>(size));
    // n rows of f-coefficients (descending x powers), m rows of g's
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) mat[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            mat[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = g.coeff(n - i);
    return det_bareiss(std::move(mat));
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (!f.ring().is_field()) throw Error("form_gcd requires a field base");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int ypow = std::min(f.y_multiplicity(), g.y_multiplicity());
    TPoly d = poly_gcd(f.dehomogenized(), g.dehomogenized());
    BinaryForm h = BinaryForm::homogenized(f.ring(), d, d.degree() + ypow);
    return h.normalized();
}

}  // namespace delpair
