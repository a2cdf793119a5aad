#include "bilform/bignum.hpp"

#include <stdexcept>

namespace bilform {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(std::uint64_t base, std::uint32_t exp) {
    BigUint r(1);
    BigUint b(base);
    while (exp > 0) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint out;
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    out.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = carry;
        if (i < limbs_.size()) cur += limbs_[i];
        if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    if (*this < rhs) throw std::invalid_argument("BigUint subtraction would go negative");
    BigUint out;
    out.limbs_.resize(limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) cur -= rhs.limbs_[i];
        if (cur < 0) {
            cur += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    out.trim();
    return out;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigUint();
    BigUint out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint BigUint::divmod(std::uint64_t divisor, std::uint64_t& remainder) const {
    if (divisor == 0) throw std::invalid_argument("BigUint division by zero");
    BigUint out;
    out.limbs_.resize(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 32) | limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    out.trim();
    remainder = static_cast<std::uint64_t>(rem);
    return out;
}

BigUint BigUint::div_exact(std::uint64_t divisor) const {
    std::uint64_t rem = 0;
    BigUint q = divmod(divisor, rem);
    if (rem != 0) throw std::logic_error("BigUint::div_exact: division left a remainder");
    return q;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

double BigUint::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return v;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    while (!cur.is_zero()) {
        std::uint64_t rem = 0;
        cur = cur.divmod(1000000000ull, rem);
        std::string group = std::to_string(rem);
        if (!cur.is_zero()) group.insert(0, 9 - group.size(), '0');
        out.insert(0, group);
    }
    return out;
}

BigUint gaussian_binomial(std::uint32_t a, std::uint32_t b, std::uint64_t q) {
    if (b > a) throw std::invalid_argument("gaussian_binomial: b > a");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q < 2");
    BigUint g(1);
    for (std::uint32_t k = 0; k < b; ++k) {
        // prefix after step k equals [a over k+1]_q, so the divide stays exact
        g = g * (BigUint::pow(q, a - k) - BigUint(1));
        std::uint64_t den = 1;
        for (std::uint32_t j = 0; j < k + 1; ++j) {
            if (den > (~std::uint64_t(0)) / q)
                throw std::overflow_error("gaussian_binomial: denominator exceeds 64 bits");
            den *= q;
        }
        g = g.div_exact(den - 1);
    }
    return g;
}

}  // namespace bilform
