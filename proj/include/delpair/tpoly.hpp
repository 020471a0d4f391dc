#pragma once

#include <string>
#include <utility>
#include <vector>

#include "delpair/scalar.hpp"

namespace delpair {

/// Dense univariate polynomial over Scalar coefficients, normalized with no
/// trailing zero coefficients. Degree-0 polynomials double as base-ring
/// elements (integers, rationals, prime-field values); higher degrees
/// represent elements of k[t] and the univariate workhorses of
/// factorization and series code.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static TPoly constant(Scalar s);
    static TPoly from_int(const Int& v) { return constant(Scalar::integer(v)); }
    /// c * t^e
    static TPoly monomial(Scalar c, int e);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(int i) const;
    const Scalar& lc() const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator-() const;
    TPoly scaled(const Scalar& s) const;
    bool operator==(const TPoly& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const TPoly& o) const { return cmp(*this, o) != 0; }

    /// Quotient/remainder; requires invertible (field or unit) leading
    /// coefficient of the divisor.
    std::pair<TPoly, TPoly> divrem(const TPoly& d) const;
    /// Exact division; throws if the division leaves a remainder. Works over
    /// the integers as well as over fields.
    TPoly exact_div(const TPoly& d) const;
    bool divides(const TPoly& d) const;

    TPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    TPoly pow(unsigned long e) const;
    /// Coefficients of t^k and above dropped (reduction mod t^k).
    TPoly truncated(int k) const;
    /// Substitution t -> t + a (Taylor shift).
    TPoly shifted(const Scalar& a) const;
    /// t^n * p(1/t) for n = declared degree (>= degree()).
    TPoly reversed(int declared_degree) const;

    /// Monic scalar multiple (field coefficients).
    TPoly monic() const;
    /// gcd of the integer coefficients (Int scalars only), nonnegative.
    Int int_content() const;
    TPoly int_primitive_part() const;
    /// Integer coefficients reduced into [0, m).
    TPoly mod_int(const Int& m) const;
    /// Integer coefficients reduced into (-m/2, m/2].
    TPoly mod_int_centered(const Int& m) const;
    /// Rational coefficients scaled to coprime integers with positive lead.
    TPoly rat_to_int_primitive() const;

    std::string to_string(const std::string& var = "t") const;

    /// Total order usable as a map key: by degree, then coefficients.
    static int cmp(const TPoly& a, const TPoly& b);
    bool operator<(const TPoly& o) const { return cmp(*this, o) < 0; }

  private:
    void trim();
    std::vector<Scalar> c_;  // ascending powers
};

/// Monic gcd over a field.
TPoly poly_gcd(const TPoly& a, const TPoly& b);

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
struct PolyXgcd {
    TPoly g, s, t;
};
PolyXgcd poly_xgcd(const TPoly& a, const TPoly& b);

/// x^e mod m in F_p[x] by square and multiply (e may be huge).
TPoly powmod(const TPoly& base, const Int& e, const TPoly& m);

}  // namespace delpair
