#pragma once

#include <cstdint>
#include <string>

#include "delpair/common.hpp"

namespace delpair {

/// Coefficient field of a polynomial ring: the rationals or a prime field.
struct FieldTag {
    enum class Kind { Q, Fp };
    Kind kind = Kind::Q;
    std::uint64_t p = 0;  // modulus when kind == Fp

    static FieldTag rationals() { return FieldTag{Kind::Q, 0}; }
    static FieldTag prime_field(std::uint64_t p);

    bool operator==(const FieldTag&) const = default;
    std::string to_string() const;
    static FieldTag parse(const std::string& s);
};

/// An exact scalar: an integer, a rational in lowest terms, or a prime-field
/// element reduced into [0, p). Arithmetic between Int and Rat promotes to
/// Rat; prime-field elements only combine when the moduli agree.
class Scalar {
  public:
    enum class Kind { Int, Rat, Fp };

    Scalar() : kind_(Kind::Int), q_(0) {}

    static Scalar integer(Int v) {
        Scalar s;
        s.kind_ = Kind::Int;
        s.q_ = Rat(std::move(v));
        return s;
    }
    static Scalar rational(Rat v) {
        Scalar s;
        s.kind_ = Kind::Rat;
        s.q_ = std::move(v);
        return s;
    }
    static Scalar fp(const Int& v, std::uint64_t p);
    static Scalar zero_of(const FieldTag& f);
    static Scalar one_of(const FieldTag& f);
    /// Embeds an integer into the given field.
    static Scalar of_int(const Int& v, const FieldTag& f);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    /// The rational payload (kinds Int and Rat only).
    const Rat& rat() const;
    /// The underlying integer (kind Int only).
    Int as_int() const;
    /// Prime-field value in [0, p) (kind Fp only).
    std::uint64_t fp_value() const { return v_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Field division; for Int kind the division must be exact.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    std::string to_string() const;

  private:
    Kind kind_;
    Rat q_;                 // Int / Rat payload
    std::uint64_t v_ = 0;   // Fp payload
    std::uint64_t p_ = 0;
};

}  // namespace delpair
