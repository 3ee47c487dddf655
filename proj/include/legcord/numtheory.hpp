#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace legcord::numtheory {

/// Deterministic primality test by trial division up to sqrt(n).
bool is_prime(std::int64_t n) noexcept;

/// All primes <= limit in increasing order (sieve of Eratosthenes).
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

/// pi(limit): the number of primes not exceeding limit.
std::int64_t prime_count(std::int64_t limit);

/// base^exponent mod modulus by binary exponentiation. Intermediate products
/// use 128-bit arithmetic, so every modulus representable in int64_t is safe.
/// Requires modulus >= 2 and exponent >= 0.
std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus);

/// A validated odd prime modulus. Construction checks primality and rejects 2.
class OddPrime {
public:
    explicit OddPrime(std::int64_t value);

    std::int64_t value() const noexcept { return value_; }

    friend bool operator==(const OddPrime&, const OddPrime&) noexcept = default;

private:
    std::int64_t value_;
};

/// Value of the Legendre symbol (a/p) for a coprime to p. The divisible case
/// is not representable here; callers own that branch separately.
enum class LegendreValue : int {
    nonresidue = -1,
    residue = 1,
};

constexpr int to_int(LegendreValue v) noexcept { return static_cast<int>(v); }

constexpr LegendreValue opposite(LegendreValue v) noexcept {
    return v == LegendreValue::residue ? LegendreValue::nonresidue : LegendreValue::residue;
}

/// Legendre symbol (a/p) via Euler's criterion: a^((p-1)/2) mod p.
/// The argument is reduced mod p first, so any integer is accepted.
/// Throws std::domain_error when p divides a.
LegendreValue legendre_symbol(std::int64_t a, const OddPrime& p);

/// The quadratic residues of p in [1, p-1]; exactly (p-1)/2 of them.
std::set<std::int64_t> quadratic_residues(const OddPrime& p);

/// legendre_symbol memoized over a fixed modulus: one table lookup per query
/// instead of a modular exponentiation. Values are identical to
/// legendre_symbol by construction.
class LegendreTable {
public:
    explicit LegendreTable(OddPrime p);

    const OddPrime& prime() const noexcept { return p_; }

    /// Same contract as legendre_symbol(a, prime()).
    LegendreValue at(std::int64_t a) const;

    /// -1, 0, or +1, with 0 for the divisible case. Convenient in sums.
    int sign_or_zero(std::int64_t a) const noexcept;

private:
    OddPrime p_;
    std::vector<std::int8_t> sign_;
};

} // namespace legcord::numtheory
