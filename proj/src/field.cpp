#include "dkq/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dkq::gf {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial over F_p, coefficients lowest degree first.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a mod m (m monic), coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t v = a[shift + i] + std::uint64_t(p) * p;
                v -= std::uint64_t(lead) * m[i] % p;
                a[shift + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return out;
}

// Does m (monic, degree >= 2) have a monic divisor of degree d?
bool has_divisor_of_degree(const Poly& m, std::uint32_t d, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly div(d + 1, 0);
        std::uint64_t t = c;
        for (std::uint32_t i = 0; i < d; ++i, t /= p) div[i] = static_cast<std::uint32_t>(t % p);
        div[d] = 1;
        if (trim(poly_mod(m, div, p)) == Poly{0}) return true;
    }
    return false;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
    if (m[0] == 0) return false;  // divisible by x
    const std::uint32_t e = static_cast<std::uint32_t>(m.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= e; ++d)
        if (has_divisor_of_degree(m, d, p)) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t e, FieldLimits limits) {
    if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
    if (p == 2) throw std::invalid_argument("field: even characteristic is not supported");
    if (e < 1) throw std::invalid_argument("field: extension degree must be >= 1");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q64 *= p;
        if (q64 > limits.max_q)
            throw std::length_error("field: p^e exceeds the configured limit of " +
                                    std::to_string(limits.max_q));
    }

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<std::uint32_t>(q64);

    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        // First monic irreducible in lex order on (c0, c1, ..., c_{e-1}).
        Poly m(e + 1, 0);
        m[e] = 1;
        bool found = false;
        std::vector<std::uint32_t> digits(e, 0);
        while (!found) {
            for (std::uint32_t i = 0; i < e; ++i) m[i] = digits[i];
            if (is_irreducible(m, p)) {
                found = true;
                break;
            }
            // lex increment: least significant position is the last digit
            std::int32_t pos = static_cast<std::int32_t>(e) - 1;
            while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
            if (pos < 0) throw std::logic_error("field: no irreducible polynomial found");
        }
        f.modulus_ = m;
    }

    const std::uint32_t q = f.q_;

    // Raw multiplication on codes, used only to bootstrap the tables.
    auto decode = [&](std::uint32_t code) {
        Poly a(e, 0);
        for (std::uint32_t i = 0; i < e; ++i, code /= p) a[i] = code % p;
        return a;
    };
    auto encode = [&](const Poly& a) {
        std::uint32_t code = 0;
        for (std::uint32_t i = e; i-- > 0;) code = code * p + (i < a.size() ? a[i] : 0);
        return code;
    };
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (e == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
        return encode(poly_mod(poly_mul(decode(a), decode(b), p), f.modulus_, p));
    };
    auto raw_pow = [&](std::uint32_t a, std::uint64_t n) {
        std::uint32_t r = 1;
        while (n) {
            if (n & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            n >>= 1;
        }
        return r;
    };

    // Smallest code of multiplicative order exactly q-1.
    const auto factors = prime_factors(q - 1);
    std::uint32_t prim = 0;
    for (std::uint32_t c = 2; c < q; ++c) {
        bool ok = true;
        for (std::uint32_t ell : factors)
            if (raw_pow(c, (q - 1) / ell) == 1) { ok = false; break; }
        if (ok) { prim = c; break; }
    }
    if (prim == 0) throw std::logic_error("field: no primitive element found");
    f.primitive_ = {prim};

    f.exp_.assign(q - 1, 0);
    f.log_.assign(q, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        f.exp_[i] = acc;
        f.log_[acc] = i;
        acc = raw_mul(acc, prim);
    }
    if (acc != 1) throw std::logic_error("field: primitive element order mismatch");

    f.neg_.assign(q, 0);
    for (std::uint32_t c = 0; c < q; ++c) {
        Poly a = decode(c);
        for (auto& d : a) d = (p - d) % p;
        f.neg_[c] = encode(a);
    }

    f.trace_.assign(q, 0);
    for (std::uint32_t c = 0; c < q; ++c) {
        std::uint32_t t = 0, frob = c;
        for (std::uint32_t i = 0; i < e; ++i) {
            Poly a = decode(frob), b = decode(t);
            b.resize(e, 0);
            for (std::uint32_t d = 0; d < e; ++d) b[d] = (b[d] + a[d]) % p;
            t = encode(b);
            frob = raw_pow(frob, p);
        }
        if (t >= p) throw std::logic_error("field: trace escaped the prime subfield");
        f.trace_[c] = t;
    }

    return f;
}

Fel Field::el(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("field: element code out of range");
    return {code};
}

Fel Field::from_int(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

Fel Field::add(Fel a, Fel b) const {
    if (e_ == 1) {
        std::uint32_t s = a.code + b.code;
        return {s >= p_ ? s - p_ : s};
    }
    std::uint32_t out = 0, mult = 1;
    std::uint32_t x = a.code, y = b.code;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        out += d * mult;
        mult *= p_;
        x /= p_;
        y /= p_;
    }
    return {out};
}

Fel Field::neg(Fel a) const { return {neg_[a.code]}; }

Fel Field::sub(Fel a, Fel b) const { return add(a, {neg_[b.code]}); }

Fel Field::mul(Fel a, Fel b) const {
    if (a.code == 0 || b.code == 0) return {0};
    std::uint32_t i = log_[a.code] + log_[b.code];
    if (i >= q_ - 1) i -= q_ - 1;
    return {exp_[i]};
}

Fel Field::inv(Fel a) const {
    if (a.code == 0) throw std::domain_error("field: inverse of zero");
    std::uint32_t i = log_[a.code];
    return {exp_[i == 0 ? 0 : q_ - 1 - i]};
}

Fel Field::pow(Fel a, std::int64_t n) const {
    if (a.code == 0) return n == 0 ? one() : zero();
    std::int64_t m = n % (q_ - 1);
    if (m < 0) m += q_ - 1;
    std::uint64_t i = std::uint64_t(log_[a.code]) * std::uint64_t(m) % (q_ - 1);
    return {exp_[i]};
}

std::uint32_t Field::dlog(Fel a) const {
    if (a.code == 0) throw std::domain_error("field: dlog of zero");
    return log_[a.code];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (std::uint32_t i = 0; i <= e_; ++i) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || modulus_[i] != 1) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

}  // namespace dkq::gf
