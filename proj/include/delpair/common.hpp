#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace delpair {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (lowest terms, positive denominator) by GMP; constructors from num/den
// pairs must canonicalize explicitly.
using Int = mpz_class;
using Rat = mpq_class;

/// Base error for exact-computation failures (bad inputs, violated
/// preconditions, unsupported corners).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed problem files or text-grammar violations.
struct SchemaError : Error {
    using Error::Error;
};

/// Pair/step budget of the Groebner engine exhausted.
struct BudgetError : Error {
    using Error::Error;
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// C(n, k) for arbitrary integer n and k >= 0: product of k consecutive
/// integers ending at n, divided by k!. Integer-valued for every integer n.
Int binomial(const Int& n, unsigned long k);

bool is_prime(const Int& n);

/// Miller-Rabin with a deterministic base set valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

Int int_pow(const Int& base, unsigned long e);

/// Deterministic RNG for randomized suites. Draws use plain modulo so the
/// sequence is identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace delpair
