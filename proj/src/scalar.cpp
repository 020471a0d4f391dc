#include "delpair/scalar.hpp"

namespace delpair {

FieldTag FieldTag::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("field modulus is not prime: " + std::to_string(p));
    return FieldTag{Kind::Fp, p};
}

std::string FieldTag::to_string() const {
    return kind == Kind::Q ? std::string("Q") : "Fp:" + std::to_string(p);
}

FieldTag FieldTag::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) return prime_field(std::stoull(s.substr(3)));
    throw SchemaError("unknown field tag: " + s);
}

namespace {

std::uint64_t mod_reduce(const Int& v, std::uint64_t p) {
    Int r;
    Int pz(static_cast<unsigned long>(p));
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw Error("division by zero in prime field");
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::fp(const Int& v, std::uint64_t p) {
    Scalar s;
    s.kind_ = Kind::Fp;
    s.q_ = 0;
    s.p_ = p;
    s.v_ = mod_reduce(v, p);
    return s;
}

Scalar Scalar::zero_of(const FieldTag& f) {
    return f.kind == FieldTag::Kind::Q ? rational(Rat(0)) : fp(Int(0), f.p);
}

Scalar Scalar::one_of(const FieldTag& f) {
    return f.kind == FieldTag::Kind::Q ? rational(Rat(1)) : fp(Int(1), f.p);
}

Scalar Scalar::of_int(const Int& v, const FieldTag& f) {
    return f.kind == FieldTag::Kind::Q ? rational(Rat(v)) : fp(v, f.p);
}

bool Scalar::is_zero() const {
    return kind_ == Kind::Fp ? v_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
    return kind_ == Kind::Fp ? v_ == 1 : q_ == 1;
}

const Rat& Scalar::rat() const {
    if (kind_ == Kind::Fp) throw Error("prime-field scalar has no rational payload");
    return q_;
}

Int Scalar::as_int() const {
    if (kind_ == Kind::Fp) return Int(static_cast<unsigned long>(v_));
    if (q_.get_den() != 1) throw Error("scalar is not an integer: " + q_.get_str());
    return q_.get_num();
}

namespace {

void check_mix(const Scalar& a, const Scalar& b) {
    bool afp = a.kind() == Scalar::Kind::Fp, bfp = b.kind() == Scalar::Kind::Fp;
    if (afp != bfp) throw Error("cannot mix prime-field and rational scalars");
    if (afp && a.modulus() != b.modulus()) throw Error("prime-field modulus mismatch");
}

Scalar::Kind join(Scalar::Kind a, Scalar::Kind b) {
    return (a == Scalar::Kind::Rat || b == Scalar::Kind::Rat) ? Scalar::Kind::Rat
                                                              : Scalar::Kind::Int;
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_mix(*this, o);
    if (kind_ == Kind::Fp) {
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        Scalar r = *this;
        r.v_ = s;
        return r;
    }
    Scalar r;
    r.kind_ = join(kind_, o.kind_);
    r.q_ = q_ + o.q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_mix(*this, o);
    if (kind_ == Kind::Fp) {
        Scalar r = *this;
        r.v_ = mulmod(v_, o.v_, p_);
        return r;
    }
    Scalar r;
    r.kind_ = join(kind_, o.kind_);
    r.q_ = q_ * o.q_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_mix(*this, o);
    if (o.is_zero()) throw Error("scalar division by zero");
    if (kind_ == Kind::Fp) {
        Scalar r = *this;
        r.v_ = mulmod(v_, invmod(o.v_, p_), p_);
        return r;
    }
    Scalar r;
    r.kind_ = join(kind_, o.kind_);
    r.q_ = q_ / o.q_;
    if (r.kind_ == Kind::Int && r.q_.get_den() != 1)
        throw Error("inexact integer division of scalars");
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (kind_ == Kind::Fp) {
        r.v_ = v_ == 0 ? 0 : p_ - v_;
    } else {
        r.q_ = -q_;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if ((kind_ == Kind::Fp) != (o.kind_ == Kind::Fp)) return false;
    if (kind_ == Kind::Fp) return p_ == o.p_ && v_ == o.v_;
    return q_ == o.q_;
}

Scalar Scalar::inverse() const {
    if (kind_ == Kind::Fp) {
        Scalar r = *this;
        r.v_ = invmod(v_, p_);
        return r;
    }
    if (q_ == 0) throw Error("scalar division by zero");
    Scalar r;
    r.kind_ = Kind::Rat;
    r.q_ = Rat(1) / q_;
    return r;
}

std::string Scalar::to_string() const {
    if (kind_ == Kind::Fp) return std::to_string(v_);
    return q_.get_str();
}

}  // namespace delpair
