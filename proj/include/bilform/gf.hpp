#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bilform/errors.hpp"

namespace bilform {

// Element code: an integer in [0, q). Its base-p digits, lowest degree first,
// are the coefficients of the represented polynomial over F_p.
using code_t = std::uint32_t;

class Mat;

// Exact arithmetic for F_q, q = p^e. The modulus is the lexicographically
// smallest monic irreducible of degree e over F_p (coefficients compared
// low-degree-first), so equal (p, e) always produce the same field. Fields
// with q <= 256 carry full operation tables; larger ones compute on the fly.
// Immutable after construction and safe to share across threads.
class Field {
public:
    static constexpr std::uint64_t kDefaultQBound = std::uint64_t(1) << 16;

    static Field make(std::uint32_t p, std::uint32_t e,
                      std::uint64_t q_bound = kDefaultQBound);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    // e+1 coefficients in [0, p), lowest degree first, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    code_t add(code_t a, code_t b) const;
    code_t sub(code_t a, code_t b) const;
    code_t neg(code_t a) const;
    code_t mul(code_t a, code_t b) const;
    code_t inv(code_t a) const;  // throws on a = 0
    code_t div(code_t a, code_t b) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    Field() = default;

    std::uint32_t p_ = 0, e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;

    bool tabled_ = false;
    std::vector<code_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;

    void check(code_t a) const;
    code_t add_slow(code_t a, code_t b) const;
    code_t mul_slow(code_t a, code_t b) const;
    code_t neg_slow(code_t a) const;
    code_t inv_slow(code_t a) const;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    std::uint64_t q_bound = Field::kDefaultQBound);

// Factors q = p^e and builds the field; rejects non-prime-powers.
FieldPtr make_field_for_order(std::uint64_t q,
                              std::uint64_t q_bound = Field::kDefaultQBound);

// F_{q^t} built on top of a base field F_q, viewed as an F_q-space with basis
// {1, x, ..., x^{t-1}}. Element codes are integers in [0, q^t) whose base-q
// digits are the F_q coordinates in that basis. The modulus is the
// lexicographically smallest monic irreducible of degree t over F_q.
class ExtField {
public:
    ExtField(FieldPtr base, std::uint32_t degree,
             std::uint64_t order_bound = kDefaultEnumCap);

    const Field& base() const { return *base_; }
    const FieldPtr& base_ptr() const { return base_; }
    std::uint32_t degree() const { return t_; }
    std::uint64_t order() const { return order_; }
    // degree+1 base-field codes, lowest degree first, monic.
    const std::vector<code_t>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

    std::vector<code_t> digits(std::uint64_t a) const;
    std::uint64_t from_digits(std::span<const code_t> digits) const;

    // The t x t matrix over the base field representing multiplication by
    // alpha in the power basis; column j holds the digits of alpha * x^j.
    // alpha -> matrix is an injective ring homomorphism.
    Mat mul_matrix(std::uint64_t alpha) const;

private:
    FieldPtr base_;
    std::uint32_t t_ = 0;
    std::uint64_t order_ = 0;
    std::vector<code_t> modulus_;

    void check(std::uint64_t a) const;
};

}  // namespace bilform
