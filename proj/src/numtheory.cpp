#include "legcord/numtheory.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace legcord::numtheory {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

std::int64_t prime_count(std::int64_t limit) {
    return static_cast<std::int64_t>(sieve_primes(limit).size());
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exponent, std::int64_t modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("mod_pow: modulus must be at least 2");
    }
    if (exponent < 0) {
        throw std::invalid_argument("mod_pow: exponent must be non-negative");
    }
    const auto m = static_cast<unsigned __int128>(modulus);
    unsigned __int128 result = 1;
    auto b = static_cast<unsigned __int128>(((base % modulus) + modulus) % modulus);
    for (std::int64_t e = exponent; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * b % m;
        }
        b = b * b % m;
    }
    return static_cast<std::int64_t>(result);
}

OddPrime::OddPrime(std::int64_t value) : value_(value) {
    if (value < 3 || value % 2 == 0 || !is_prime(value)) {
        throw std::invalid_argument("p must be an odd prime (got " + std::to_string(value) + ")");
    }
}

LegendreValue legendre_symbol(std::int64_t a, const OddPrime& p) {
    const std::int64_t pv = p.value();
    const std::int64_t reduced = ((a % pv) + pv) % pv;
    if (reduced == 0) {
        throw std::domain_error("legendre_symbol: argument is divisible by p");
    }
    const std::int64_t r = mod_pow(reduced, (pv - 1) / 2, pv);
    assert(r == 1 || r == pv - 1);
    return r == 1 ? LegendreValue::residue : LegendreValue::nonresidue;
}

std::set<std::int64_t> quadratic_residues(const OddPrime& p) {
    std::set<std::int64_t> residues;
    for (std::int64_t a = 1; a < p.value(); ++a) {
        if (legendre_symbol(a, p) == LegendreValue::residue) {
            residues.insert(a);
        }
    }
    return residues;
}

LegendreTable::LegendreTable(OddPrime p)
    : p_(p), sign_(static_cast<std::size_t>(p.value()), 0) {
    for (std::int64_t a = 1; a < p_.value(); ++a) {
        sign_[static_cast<std::size_t>(a)] =
            static_cast<std::int8_t>(to_int(legendre_symbol(a, p_)));
    }
}

LegendreValue LegendreTable::at(std::int64_t a) const {
    const int sign = sign_or_zero(a);
    if (sign == 0) {
        throw std::domain_error("legendre_symbol: argument is divisible by p");
    }
    return sign > 0 ? LegendreValue::residue : LegendreValue::nonresidue;
}

int LegendreTable::sign_or_zero(std::int64_t a) const noexcept {
    const std::int64_t pv = p_.value();
    return sign_[static_cast<std::size_t>(((a % pv) + pv) % pv)];
}

} // namespace legcord::numtheory
