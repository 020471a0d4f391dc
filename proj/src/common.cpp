#include "delpair/common.hpp"

namespace delpair {

Int binomial(const Int& n, unsigned long k) {
    Int num(1);
    for (unsigned long j = 0; j < k; ++j) num *= n - static_cast<long>(j);
    Int fact(1);
    mpz_fac_ui(fact.get_mpz_t(), k);
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_u64(std::uint64_t n) {
    return is_prime(Int(static_cast<unsigned long>(n)));
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace delpair
