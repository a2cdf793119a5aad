#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bilform {

// Unsigned arbitrary-precision integer on base-2^32 limbs, little-endian.
// Covers exactly what the counting formulas need: subspace counts and rank
// class sizes stay exact far beyond 64 bits.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint pow(std::uint64_t base, std::uint32_t exp);

    BigUint operator+(const BigUint& rhs) const;
    BigUint operator-(const BigUint& rhs) const;  // requires *this >= rhs
    BigUint operator*(const BigUint& rhs) const;

    // Quotient by a machine-word divisor; remainder via out-parameter.
    BigUint divmod(std::uint64_t divisor, std::uint64_t& remainder) const;
    BigUint div_exact(std::uint64_t divisor) const;  // throws if it does not divide

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws if the value does not fit
    double to_double() const;
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;  // no trailing zero limbs
    void trim();
};

// Exact Gaussian binomial [a over b]_q: the number of b-dimensional subspaces
// of an a-dimensional space over a field with q elements. Computed as a
// product of integer prefixes, so every intermediate stays integral.
BigUint gaussian_binomial(std::uint32_t a, std::uint32_t b, std::uint64_t q);

}  // namespace bilform
