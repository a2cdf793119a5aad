#include "bilform/gf.hpp"

#include <stdexcept>

#include "bilform/mat.hpp"

namespace bilform {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t bound) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > bound / base) return 0;  // 0 marks overflow past the bound
        r *= base;
    }
    return r;
}

// Dense polynomials over F_p, coefficients low-degree-first, trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p) {
    Poly f;
    while (code) {
        f.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return f;
}

std::uint64_t code_from_poly(const Poly& f, std::uint32_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

// Remainder of f modulo a monic divisor g.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    while (f.size() >= g.size()) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * g[i] % p;
            f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers; p prime, a != 0
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    for (std::size_t dg = 1; dg <= e / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g = poly_from_code(v, p);
            g.resize(dg + 1, 0);
            g[dg] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree e over F_p, candidates ordered by the
// coefficient tuple (c0, c1, ...) compared low-degree-first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return Poly{0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f(e + 1, 0);
        f[e] = 1;
        std::uint64_t tmp = v;
        for (std::uint32_t i = e; i-- > 0;) {  // last digit of v -> c_{e-1}
            f[i] = static_cast<std::uint32_t>(tmp % p);
            tmp /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint64_t q_bound) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = checked_pow(p, e, q_bound);
    if (q == 0) throw std::invalid_argument("field order exceeds the configured bound");

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;
    f.modulus_ = smallest_irreducible(p, e);

    if (q <= 256) {
        f.tabled_ = true;
        f.add_tab_.resize(q * q);
        f.mul_tab_.resize(q * q);
        f.neg_tab_.resize(q);
        f.inv_tab_.assign(q, 0);
        for (code_t a = 0; a < q; ++a) {
            f.neg_tab_[a] = f.neg_slow(a);
            for (code_t b = 0; b < q; ++b) {
                f.add_tab_[a * q + b] = f.add_slow(a, b);
                f.mul_tab_[a * q + b] = f.mul_slow(a, b);
            }
        }
        for (code_t a = 1; a < q; ++a) {
            for (code_t b = 1; b < q; ++b) {
                if (f.mul_tab_[a * q + b] == 1) {
                    f.inv_tab_[a] = b;
                    break;
                }
            }
            if (f.inv_tab_[a] == 0) throw std::logic_error("field table has no inverse");
        }
    }
    return f;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e, std::uint64_t q_bound) {
    return std::make_shared<const Field>(Field::make(p, e, q_bound));
}

FieldPtr make_field_for_order(std::uint64_t q, std::uint64_t q_bound) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) throw std::invalid_argument("q is not a prime power");
        return make_field(static_cast<std::uint32_t>(p), e, q_bound);
    }
    return make_field(static_cast<std::uint32_t>(q), 1, q_bound);  // q prime
}

void Field::check(code_t a) const {
    if (a >= q_) throw std::invalid_argument("element code out of range for this field");
}

code_t Field::add_slow(code_t a, code_t b) const {
    code_t r = 0, mult = 1;
    while (a || b) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

code_t Field::neg_slow(code_t a) const {
    code_t r = 0, mult = 1;
    while (a) {
        r += (p_ - (a % p_)) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

code_t Field::mul_slow(code_t a, code_t b) const {
    Poly prod = poly_mul(poly_from_code(a, p_), poly_from_code(b, p_), p_);
    return static_cast<code_t>(code_from_poly(poly_rem(prod, modulus_, p_), p_));
}

code_t Field::inv_slow(code_t a) const {
    // extended Euclid in F_p[x] against the modulus
    Poly r0 = modulus_, r1 = poly_from_code(a, p_);
    Poly t0, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly quot;
        Poly rem = r0;
        trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint32_t lead =
                static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.back()) *
                                           mod_inverse(r1.back(), p_) % p_);
            std::size_t shift = rem.size() - r1.size();
            if (quot.size() < shift + 1) quot.resize(shift + 1, 0);
            quot[shift] = lead;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * r1[i] % p_;
                rem[i + shift] =
                    static_cast<std::uint32_t>((rem[i + shift] + p_ - sub) % p_);
            }
            trim(rem);
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - quot*t1)
        Poly qt = poly_mul(quot, t1, p_);
        Poly nt(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            std::uint32_t x = i < t0.size() ? t0[i] : 0;
            std::uint32_t y = i < qt.size() ? qt[i] : 0;
            nt[i] = (x + p_ - y) % p_;
        }
        trim(nt);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = nt;
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible
    if (r0.size() != 1) throw std::logic_error("inverse: modulus not irreducible");
    std::uint32_t scale = mod_inverse(r0[0], p_);
    Poly result;
    for (std::uint32_t c : t0)
        result.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * scale % p_));
    trim(result);
    return static_cast<code_t>(code_from_poly(result, p_));
}

code_t Field::add(code_t a, code_t b) const {
    check(a);
    check(b);
    return tabled_ ? add_tab_[a * q_ + b] : add_slow(a, b);
}

code_t Field::neg(code_t a) const {
    check(a);
    return tabled_ ? neg_tab_[a] : neg_slow(a);
}

code_t Field::sub(code_t a, code_t b) const { return add(a, neg(b)); }

code_t Field::mul(code_t a, code_t b) const {
    check(a);
    check(b);
    return tabled_ ? mul_tab_[a * q_ + b] : mul_slow(a, b);
}

code_t Field::inv(code_t a) const {
    check(a);
    if (a == 0) throw std::invalid_argument("division by zero in F_q");
    return tabled_ ? inv_tab_[a] : inv_slow(a);
}

code_t Field::div(code_t a, code_t b) const { return mul(a, inv(b)); }

// --- extension fields -------------------------------------------------------

namespace {

// Polynomials with base-field code coefficients, low-degree-first.
using FPoly = std::vector<code_t>;

void ftrim(FPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FPoly fpoly_mul(const FPoly& a, const FPoly& b, const Field& k) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    ftrim(r);
    return r;
}

FPoly fpoly_rem(FPoly f, const FPoly& g, const Field& k) {
    ftrim(f);
    while (f.size() >= g.size()) {
        code_t lead = f.back();  // g is monic
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[i + shift] = k.sub(f[i + shift], k.mul(lead, g[i]));
        ftrim(f);
    }
    return f;
}

bool fpoly_irreducible(const FPoly& f, const Field& k) {
    const std::size_t t = f.size() - 1;
    if (t == 0) return false;
    if (t == 1) return true;
    for (std::size_t dg = 1; dg <= t / 2; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= k.q();
        for (std::uint64_t v = 0; v < count; ++v) {
            FPoly g(dg + 1, 0);
            g[dg] = 1;
            std::uint64_t tmp = v;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<code_t>(tmp % k.q());
                tmp /= k.q();
            }
            if (fpoly_rem(f, g, k).empty()) return false;
        }
    }
    return true;
}

}  // namespace

ExtField::ExtField(FieldPtr base, std::uint32_t degree, std::uint64_t order_bound)
    : base_(std::move(base)), t_(degree) {
    if (!base_) throw std::invalid_argument("extension needs a base field");
    if (t_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    order_ = checked_pow(base_->q(), t_, order_bound);
    if (order_ == 0)
        throw cap_exceeded("extension field order exceeds the configured bound");

    if (t_ == 1) {
        modulus_ = {0, 1};  // the polynomial x
        return;
    }
    const std::uint64_t q = base_->q();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < t_; ++i) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
        FPoly f(t_ + 1, 0);
        f[t_] = 1;
        std::uint64_t tmp = v;
        for (std::uint32_t i = t_; i-- > 0;) {
            f[i] = static_cast<code_t>(tmp % q);
            tmp /= q;
        }
        if (fpoly_irreducible(f, *base_)) {
            modulus_ = f;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial over the base field");
}

void ExtField::check(std::uint64_t a) const {
    if (a >= order_) throw std::invalid_argument("element code out of range for this extension");
}

std::vector<code_t> ExtField::digits(std::uint64_t a) const {
    check(a);
    std::vector<code_t> out(t_, 0);
    const std::uint64_t q = base_->q();
    for (std::uint32_t i = 0; i < t_; ++i) {
        out[i] = static_cast<code_t>(a % q);
        a /= q;
    }
    return out;
}

std::uint64_t ExtField::from_digits(std::span<const code_t> digits) const {
    if (digits.size() != t_) throw std::invalid_argument("digit count mismatch");
    std::uint64_t code = 0;
    const std::uint64_t q = base_->q();
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= q) throw std::invalid_argument("digit out of range");
        code = code * q + digits[i];
    }
    return code;
}

std::uint64_t ExtField::add(std::uint64_t a, std::uint64_t b) const {
    std::vector<code_t> da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < t_; ++i) da[i] = base_->add(da[i], db[i]);
    return from_digits(da);
}

std::uint64_t ExtField::sub(std::uint64_t a, std::uint64_t b) const {
    std::vector<code_t> da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < t_; ++i) da[i] = base_->sub(da[i], db[i]);
    return from_digits(da);
}

std::uint64_t ExtField::mul(std::uint64_t a, std::uint64_t b) const {
    check(a);
    check(b);
    FPoly pa(digits(a)), pb(digits(b));
    ftrim(pa);
    ftrim(pb);
    FPoly r = fpoly_rem(fpoly_mul(pa, pb, *base_), modulus_, *base_);
    r.resize(t_, 0);
    return from_digits(r);
}

Mat ExtField::mul_matrix(std::uint64_t alpha) const {
    check(alpha);
    Mat m(base_, t_, t_);
    std::uint64_t basis = 1;  // code of x^j
    for (std::uint32_t j = 0; j < t_; ++j) {
        std::vector<code_t> col = digits(mul(alpha, basis));
        for (std::uint32_t i = 0; i < t_; ++i) m.at(i, j) = col[i];
        basis *= base_->q();
    }
    return m;
}

}  // namespace bilform
