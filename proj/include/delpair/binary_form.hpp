#pragma once

#include <string>
#include <vector>

#include "delpair/tpoly.hpp"

namespace delpair {

/// Base ring of a binary form: the integers, a field, or a univariate
/// polynomial ring over a field.
struct BaseRing {
    enum class Kind { ZZ, QQ, FP, QT, FPT };
    Kind kind = Kind::ZZ;
    std::uint64_t p = 0;  // modulus for FP / FPT

    static BaseRing integers() { return {Kind::ZZ, 0}; }
    static BaseRing rationals() { return {Kind::QQ, 0}; }
    static BaseRing prime_field(std::uint64_t p);
    static BaseRing rational_t() { return {Kind::QT, 0}; }
    static BaseRing prime_t(std::uint64_t p);

    bool is_field() const { return kind == Kind::QQ || kind == Kind::FP; }
    bool has_t() const { return kind == Kind::QT || kind == Kind::FPT; }
    /// Scalar kind carried by coefficient polynomials of this ring.
    Scalar::Kind scalar_kind() const;
    Scalar scalar_zero() const;
    Scalar scalar_one() const;

    bool operator==(const BaseRing&) const = default;
    std::string to_string() const;
    static BaseRing parse(const std::string& s);
};

/// Homogeneous binary form F(x,y) = sum c_i x^i y^(d-i) of formal degree d,
/// with coefficients in a base ring (degree-0 polynomials for Z and fields,
/// honest t-polynomials for k[t]). The formal degree is part of the data:
/// padding with zero leading coefficients encodes roots at y = 0.
class BinaryForm {
  public:
    BinaryForm() = default;
    BinaryForm(BaseRing ring, int degree, std::vector<TPoly> coeffs);

    const BaseRing& ring() const { return ring_; }
    int degree() const { return deg_; }
    const TPoly& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<TPoly>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Largest k with x^k dividing the form.
    int x_multiplicity() const;
    /// Largest k with y^k dividing the form.
    int y_multiplicity() const;
    /// Max t-degree over the coefficients (0 for t-free rings).
    int t_degree() const;

    BinaryForm operator*(const BinaryForm& o) const;
    bool operator==(const BinaryForm& o) const;
    bool operator<(const BinaryForm& o) const;

    /// F(x, 1) as a univariate polynomial in x; requires t-free coefficients.
    TPoly dehomogenized() const;
    /// Form built back from a univariate x-polynomial, padded to `degree`.
    static BinaryForm homogenized(BaseRing ring, const TPoly& f, int degree);
    BinaryForm swapped_xy() const;
    /// Coefficient-wise evaluation t -> a (k[t] rings), yielding a form over
    /// the underlying field.
    BinaryForm eval_t(const Scalar& a) const;
    /// Reduction of an integer form mod a prime p, yielding a form over F_p.
    BinaryForm mod_prime(const Int& p) const;

    /// Content: gcd of the coefficients in the base ring (nonnegative over Z,
    /// monic over k[t], the leading nonzero coefficient itself over fields).
    TPoly content() const;
    /// Content removed and the unit normalized (positive lead over Z, monic
    /// top coefficient over fields and k[t]).
    BinaryForm normalized() const;
    bool is_normalized_primitive() const;

    TPoly evaluate(const Scalar& x, const Scalar& y) const;

    std::string to_string() const;

  private:
    BaseRing ring_;
    int deg_ = 0;
    std::vector<TPoly> c_;
};

/// Sylvester-determinant resultant of two binary forms over a common ring,
/// computed fraction-free. Res(F,G) = (-1)^(deg F * deg G) Res(G,F); it is
/// multiplicative in each argument and vanishes exactly when the forms share
/// a root over the algebraic closure.
TPoly resultant(const BinaryForm& f, const BinaryForm& g);

/// Fraction-free determinant (Bareiss) of a square matrix over an integral
/// domain represented by TPoly entries.
TPoly det_bareiss(std::vector<std::vector<TPoly>> m);

/// gcd of two binary forms over a field base, unit-normalized; tracks shared
/// y-powers through the formal degrees.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

}  // namespace delpair
