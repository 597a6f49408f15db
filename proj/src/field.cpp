/*
   Copyright 2026 The floquetp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "floquetp/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "floquetp/errors.hpp"
#include "floquetp/polynomial.hpp"

namespace floquetp {

namespace {

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
using GPoly = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw DomainError("inverse of zero in GF(" + std::to_string(p) + ")");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(GPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

GPoly gp_sub(GPoly a, const GPoly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    trim(a);
    return a;
}

GPoly gp_mul(const GPoly& a, const GPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    GPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// a = q b + r.
void gp_divmod(GPoly a, const GPoly& b, std::uint32_t p, GPoly& q, GPoly& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (std::size_t k = a.size(); k-- >= b.size();) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a[k]) * lead_inv % p);
        if (c == 0) continue;
        q[k - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t idx = k - (b.size() - 1) + j;
            a[idx] = static_cast<std::uint32_t>((a[idx] + std::uint64_t(p - c) * b[j]) % p);
        }
        if (k == 0) break;
    }
    trim(q);
    trim(a);
    r = std::move(a);
}

GPoly gp_mod(const GPoly& a, const GPoly& b, std::uint32_t p) {
    GPoly q, r;
    gp_divmod(a, b, p, q, r);
    return r;
}

GPoly gp_gcd(GPoly a, GPoly b, std::uint32_t p) {
    while (!b.empty()) {
        GPoly r = gp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GPoly gp_powmod(GPoly base, std::uint64_t e, const GPoly& f, std::uint32_t p) {
    GPoly r{1};
    base = gp_mod(base, f, p);
    while (e) {
        if (e & 1) r = gp_mod(gp_mul(r, base, p), f, p);
        base = gp_mod(gp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Inverse of a modulo f, both over GF(p); f irreducible and a nonzero mod f.
GPoly gp_invmod(const GPoly& a, const GPoly& f, std::uint32_t p) {
    GPoly r0 = f, r1 = a, s0{}, s1{1};
    while (!r1.empty()) {
        GPoly q, r;
        gp_divmod(r0, r1, p, q, r);
        GPoly s = gp_sub(s0, gp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw DomainError("element is not invertible");
    const std::uint32_t c = inv_mod(r0[0], p);
    for (auto& v : s0) v = static_cast<std::uint32_t>(std::uint64_t(v) * c % p);
    return s0;
}

const FieldContext* resolve(const FieldElement& a, const FieldElement& b) {
    const FieldContext* ca = a.context_ptr();
    const FieldContext* cb = b.context_ptr();
    if (ca == cb) {
        if (!ca) throw DomainError("operation on an unset field element");
        return ca;
    }
    if (!ca || !cb) throw DomainError("operation on an unset field element");
    if (ca->p() == cb->p()) {
        if (ca->degree() == 1) return cb;
        if (cb->degree() == 1) return ca;
    }
    throw ContextMismatch("field elements from " + ca->describe() + " and " + cb->describe() +
                          " need an explicit embedding");
}

// Coordinates of x in ctx; x is either native or a prime-field element.
FieldElement::Coeffs lift_coeffs(const FieldElement& x, const FieldContext& ctx) {
    if (x.context_ptr() == &ctx) return FieldElement::Coeffs(x.coeffs().begin(), x.coeffs().end());
    FieldElement::Coeffs c(ctx.degree(), 0);
    c[0] = x.coeffs()[0];
    return c;
}

struct GfpCache {
    std::mutex mu;
    std::map<const FieldContext*, std::vector<std::pair<std::uint64_t, int>>> unit_factors;
    std::map<std::pair<const FieldContext*, std::uint64_t>, std::vector<FieldElement>> roots;
    std::map<std::pair<const FieldContext*, const FieldContext*>, std::vector<FieldElement>> embed_powers;
};

GfpCache& cache() {
    static GfpCache c;
    return c;
}

}  // namespace

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    GPoly f(modulus.begin(), modulus.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const int m = static_cast<int>(f.size()) - 1;
    if (m == 1) return true;
    GPoly x{0, 1};
    GPoly h = x;
    for (int i = 1; i <= m / 2; ++i) {
        h = gp_powmod(h, p, f, p);
        GPoly g = gp_gcd(f, gp_sub(h, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

class FieldRegistry {
   public:
    static const FieldContext& canonical(std::uint32_t p, int m) {
        std::lock_guard<std::mutex> lock(mutex());
        auto key = std::make_pair(p, m);
        auto it = canonical_map().find(key);
        if (it != canonical_map().end()) return *it->second;
        std::vector<std::uint32_t> mod = search(p, m);
        auto [pos, ok] = canonical_map().emplace(key, std::unique_ptr<FieldContext>(new FieldContext(p, mod, true)));
        return *pos->second;
    }

    static const FieldContext& custom(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
        const int m = static_cast<int>(modulus.size()) - 1;
        const FieldContext& canon = canonical(p, m);
        if (canon.modulus() == modulus) return canon;
        std::lock_guard<std::mutex> lock(mutex());
        auto key = std::make_pair(p, modulus);
        auto it = custom_map().find(key);
        if (it != custom_map().end()) return *it->second;
        auto [pos, ok] = custom_map().emplace(key, std::unique_ptr<FieldContext>(new FieldContext(p, modulus, false)));
        return *pos->second;
    }

   private:
    static std::mutex& mutex() {
        static std::mutex mu;
        return mu;
    }
    static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldContext>>& canonical_map() {
        static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldContext>> m;
        return m;
    }
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldContext>>&
    custom_map() {
        static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldContext>> m;
        return m;
    }

    // Candidates in lexicographic order of (c0, c1, ..., c_{m-1}); c0 != 0.
    static std::vector<std::uint32_t> search(std::uint32_t p, int m) {
        std::vector<std::uint32_t> f(m + 1, 0);
        f[m] = 1;
        f[0] = 1;
        while (true) {
            if (is_irreducible_mod_p(p, f)) return f;
            // Increment with c_{m-1} as the least significant digit.
            int i = m - 1;
            while (i >= 0) {
                if (++f[i] < p) break;
                f[i] = (i == 0) ? 1 : 0;
                --i;
            }
            if (i < 0) throw Error("no irreducible polynomial found");
        }
    }
};

FieldContext::FieldContext(std::uint32_t p, std::vector<Coeff> modulus, bool canonical)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)), canonical_(canonical) {
    size_ = big_pow(p_, static_cast<std::uint64_t>(m_));
    for (int j = 0; j < m_; ++j) {
        if (modulus_[j] != 0) reduction_.emplace_back(j, p_ - modulus_[j]);
    }
    // Frobenius table: coordinates of g^(i p) for i < m.
    frobenius_.assign(m_, std::vector<Coeff>(m_, 0));
    if (m_ == 1) {
        frobenius_[0][0] = 1;
        return;
    }
    FieldElement gp = generator().pow(static_cast<std::int64_t>(p_));
    FieldElement acc = one();
    for (int i = 0; i < m_; ++i) {
        auto c = acc.coeffs();
        frobenius_[i].assign(c.begin(), c.end());
        acc *= gp;
    }
}

bool FieldContext::has_roots_of_unity(std::uint64_t n) const {
    if (n == 0) return false;
    return unit_group_order() % n == 0;
}

FieldElement FieldContext::zero() const { return FieldElement(*this, FieldElement::Coeffs(m_, 0)); }

FieldElement FieldContext::one() const {
    FieldElement::Coeffs c(m_, 0);
    c[0] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::generator() const {
    FieldElement::Coeffs c(m_, 0);
    if (m_ == 1)
        c[0] = (p_ - modulus_[0]) % p_;
    else
        c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::from_int(std::int64_t v) const {
    FieldElement::Coeffs c(m_, 0);
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    c[0] = static_cast<std::uint32_t>(r);
    return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::from_coeffs(std::span<const std::int64_t> cs) const {
    if (static_cast<int>(cs.size()) > m_)
        throw DomainError("too many coordinates for " + describe());
    FieldElement::Coeffs c(m_, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::int64_t r = cs[i] % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        c[i] = static_cast<std::uint32_t>(r);
    }
    return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::from_index(const BigInt& index) const {
    FieldElement::Coeffs c(m_, 0);
    BigInt v = index % size_;
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> FieldContext::elements() const {
    if (size_ > (BigInt(1) << 22)) throw DomainError("refusing to enumerate " + describe());
    const auto n = static_cast<std::uint64_t>(size_);
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(from_index(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldContext::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (m_ > 1) os << "^" << m_;
    os << ") mod ";
    bool first = true;
    for (int i = m_; i >= 0; --i) {
        if (modulus_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (modulus_[i] != 1 || i == 0) os << modulus_[i];
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

const FieldContext& build_field(std::uint32_t p, int m) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw DomainError("characteristic too large");
    if (m < 1) throw DomainError("extension degree must be at least 1");
    return FieldRegistry::canonical(p, m);
}

const FieldContext& build_field_with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw DomainError("characteristic too large");
    if (modulus.size() < 2) throw DomainError("modulus must have degree at least 1");
    for (auto c : modulus)
        if (c >= p) throw DomainError("modulus coefficient out of range");
    if (modulus.back() != 1) throw DomainError("modulus must be monic");
    if (modulus.size() > 2 && !is_irreducible_mod_p(p, modulus)) throw DomainError("modulus is reducible");
    if (modulus.size() == 2 && modulus[0] == 0) throw DomainError("prime-field modulus needs a nonzero constant");
    return FieldRegistry::custom(p, modulus);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldContext& ctx, Coeffs coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ctx.degree()) throw DomainError("coordinate count does not match field degree");
    for (auto v : c_)
        if (v >= ctx.p()) throw DomainError("coordinate out of range");
}

const FieldContext& FieldElement::context() const {
    if (!ctx_) throw DomainError("unset field element");
    return *ctx_;
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::in_prime_field() const noexcept {
    return !c_.empty() && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint32_t FieldElement::prime_value() const {
    if (!in_prime_field()) throw NotInSubfield("element is not in the prime field");
    return c_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    const FieldContext* ctx = resolve(*this, o);
    if (ctx != ctx_) c_ = lift_coeffs(*this, *ctx), ctx_ = ctx;
    const std::uint32_t p = ctx->p();
    if (o.ctx_ == ctx) {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            std::uint32_t s = c_[i] + o.c_[i];
            c_[i] = s >= p ? s - p : s;
        }
    } else {
        std::uint32_t s = c_[0] + o.c_[0];
        c_[0] = s >= p ? s - p : s;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    const std::uint32_t p = context().p();
    for (auto& v : r.c_) v = v == 0 ? 0 : p - v;
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldContext* ctx = resolve(a, b);
    const std::uint32_t p = ctx->p();
    const int m = ctx->degree();
    if (a.ctx_ != b.ctx_) {
        // One side is a prime-field scalar.
        const FieldElement& big = a.ctx_ == ctx ? a : b;
        const std::uint64_t s = (a.ctx_ == ctx ? b : a).c_[0];
        FieldElement r = big;
        for (auto& v : r.c_) v = static_cast<std::uint32_t>(v * s % p);
        return r;
    }
    if (m == 1) {
        FieldElement r = a;
        r.c_[0] = static_cast<std::uint32_t>(std::uint64_t(a.c_[0]) * b.c_[0] % p);
        return r;
    }
    thread_local std::vector<std::uint64_t> buf;
    buf.assign(2 * m - 1, 0);
    const bool small = p < (1u << 16);
    for (int i = 0; i < m; ++i) {
        const std::uint64_t ai = a.c_[i];
        if (ai == 0) continue;
        for (int j = 0; j < m; ++j) {
            if (small)
                buf[i + j] += ai * b.c_[j];
            else
                buf[i + j] = (buf[i + j] + ai * b.c_[j] % p) % p;
        }
    }
    for (int k = 2 * m - 2; k >= m; --k) {
        const std::uint64_t c = buf[k] % p;
        if (c == 0) continue;
        for (auto [j, t] : ctx->reduction_) {
            if (small)
                buf[k - m + j] += c * t;
            else
                buf[k - m + j] = (buf[k - m + j] + c * t % p) % p;
        }
    }
    FieldElement r;
    r.ctx_ = ctx;
    r.c_.resize(m);
    for (int i = 0; i < m; ++i) r.c_[i] = static_cast<std::uint32_t>(buf[i] % p);
    return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }
FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this / o; }

FieldElement FieldElement::inv() const {
    const FieldContext& ctx = context();
    if (is_zero()) throw DomainError("inversion of zero in " + ctx.describe());
    const std::uint32_t p = ctx.p();
    FieldElement r = *this;
    if (ctx.degree() == 1) {
        r.c_[0] = inv_mod(c_[0], p);
        return r;
    }
    GPoly a(c_.begin(), c_.end());
    trim(a);
    GPoly f(ctx.modulus().begin(), ctx.modulus().end());
    GPoly s = gp_invmod(a, f, p);
    std::fill(r.c_.begin(), r.c_.end(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) r.c_[i] = s[i];
    return r;
}

FieldElement FieldElement::pow(std::int64_t e) const {
    const FieldContext& ctx = context();
    if (e < 0) return inv().pow(-(e + 1)) * inv();
    FieldElement r = ctx.one();
    FieldElement b = *this;
    std::uint64_t u = static_cast<std::uint64_t>(e);
    while (u) {
        if (u & 1) r *= b;
        u >>= 1;
        if (u) b *= b;
    }
    return r;
}

FieldElement FieldElement::pow(const BigInt& e) const {
    const FieldContext& ctx = context();
    if (e < 0) return inv().pow(BigInt(-e));
    FieldElement r = ctx.one();
    if (e == 0) return r;
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r *= r;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r *= *this;
    }
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    if (!a.ctx_ || !b.ctx_ || a.ctx_->p() != b.ctx_->p()) return false;
    if (a.ctx_->degree() == 1 || b.ctx_->degree() == 1) {
        return a.in_prime_field() && b.in_prime_field() && a.c_[0] == b.c_[0];
    }
    return false;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_) {
        if (!a.ctx_ || !b.ctx_) return a.ctx_ <=> b.ctx_;
        if (auto c = a.ctx_->degree() <=> b.ctx_->degree(); c != 0) return c;
    }
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    if (!x.valid()) return os << "<unset>";
    if (x.in_prime_field()) return os << x.coeffs()[0];
    os << "[";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) os << (i ? "," : "") << x.coeffs()[i];
    return os << "]";
}

// ---------------------------------------------------------------------------

FieldElement frobenius_once(const FieldElement& x) {
    const FieldContext& ctx = x.context();
    const int m = ctx.degree();
    if (m == 1) return x;
    const std::uint32_t p = ctx.p();
    std::vector<std::uint64_t> acc(m, 0);
    for (int i = 0; i < m; ++i) {
        const std::uint64_t c = x.c_[i];
        if (c == 0) continue;
        const auto& row = ctx.frobenius_[i];
        for (int j = 0; j < m; ++j) acc[j] = (acc[j] + c * row[j]) % p;
    }
    FieldElement r = x;
    for (int j = 0; j < m; ++j) r.c_[j] = static_cast<std::uint32_t>(acc[j]);
    return r;
}

FieldElement frobenius(const FieldElement& x, std::uint64_t q) {
    const FieldContext& ctx = x.context();
    const int k = prime_power_exponent(q, ctx.p());
    if (k == 0) throw DomainError(std::to_string(q) + " is not a power of the characteristic " + std::to_string(ctx.p()));
    FieldElement r = x;
    for (int i = 0; i < k % ctx.degree(); ++i) r = frobenius_once(r);
    return r;
}

std::uint64_t order_dividing(const FieldElement& x, std::uint64_t n) {
    if (x.is_zero()) throw DomainError("zero has no multiplicative order");
    if (!x.pow(static_cast<std::int64_t>(n)).is_one()) throw DomainError("element order does not divide the given bound");
    std::uint64_t ord = n;
    for (auto [q, e] : factorize(n)) {
        while (ord % q == 0 && x.pow(static_cast<std::int64_t>(ord / q)).is_one()) ord /= q;
    }
    return ord;
}

std::uint64_t multiplicative_order(const FieldElement& x) {
    const FieldContext& ctx = x.context();
    if (x.is_zero()) throw DomainError("zero has no multiplicative order");
    const BigInt n = ctx.unit_group_order();
    if (n > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw DomainError("unit group of " + ctx.describe() + " too large for order computation");
    const auto nn = static_cast<std::uint64_t>(n);
    std::vector<std::pair<std::uint64_t, int>> fac;
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().unit_factors.find(&ctx);
        if (it != cache().unit_factors.end()) fac = it->second;
    }
    if (fac.empty() && nn > 1) {
        fac = factorize(nn);
        std::lock_guard<std::mutex> lock(cache().mu);
        cache().unit_factors[&ctx] = fac;
    }
    std::uint64_t ord = nn;
    for (auto [q, e] : fac) {
        while (ord % q == 0 && x.pow(static_cast<std::int64_t>(ord / q)).is_one()) ord /= q;
    }
    return ord;
}

std::vector<FieldElement> roots_of_unity(const FieldContext& ctx, std::uint64_t n) {
    if (n == 0) throw DomainError("roots of unity need n >= 1");
    if (!ctx.has_roots_of_unity(n))
        throw DomainError(ctx.describe() + " does not contain the " + std::to_string(n) + "-th roots of unity");
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().roots.find({&ctx, n});
        if (it != cache().roots.end()) return it->second;
    }
    const BigInt cofactor = ctx.unit_group_order() / n;
    const auto primes = factorize(n);
    FieldElement zeta;
    for (std::uint64_t idx = 1;; ++idx) {
        FieldElement y = ctx.from_index(idx).pow(cofactor);
        bool primitive = true;
        for (auto [q, e] : primes) {
            if (y.pow(static_cast<std::int64_t>(n / q)).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            zeta = y;
            break;
        }
    }
    std::vector<FieldElement> roots;
    roots.reserve(n);
    FieldElement acc = ctx.one();
    for (std::uint64_t k = 0; k < n; ++k) {
        roots.push_back(acc);
        acc *= zeta;
    }
    std::sort(roots.begin(), roots.end());
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().roots[{&ctx, n}] = roots;
    return roots;
}

FieldElement primitive_root_of_unity(const FieldContext& ctx, std::uint64_t n) {
    for (const auto& r : roots_of_unity(ctx, n)) {
        if (order_dividing(r, n) == n) return r;
    }
    throw Error("no primitive root of unity found");
}

std::pair<const FieldContext*, std::vector<FieldElement>> nth_roots_of_unity(std::uint64_t n, std::uint32_t p) {
    if (n == 0) throw DomainError("roots of unity need n >= 1");
    if (n % p == 0)
        throw DomainError("the characteristic " + std::to_string(p) + " divides n = " + std::to_string(n) +
                          ": fewer than n roots of unity exist");
    const int d = static_cast<int>(multiplicative_order_mod(p, n));
    const FieldContext& ctx = build_field(p, d);
    return {&ctx, roots_of_unity(ctx, n)};
}

FieldElement trace_to_subfield(const FieldElement& x, std::uint64_t q, int r) {
    if (r < 1) throw DomainError("trace needs r >= 1");
    std::vector<FieldElement> conj{x};
    for (int i = 1; i < r; ++i) conj.push_back(frobenius(conj.back(), q));
    if (frobenius(conj.back(), q) != x)
        throw NotInSubfield("element does not lie in GF(" + std::to_string(q) + "^" + std::to_string(r) + ")");
    FieldElement sum = x.context().zero();
    for (const auto& c : conj) sum += c;
    return sum;
}

int subfield_degree(const FieldElement& x) {
    FieldElement y = frobenius_once(x);
    int r = 1;
    while (y != x) {
        y = frobenius_once(y);
        ++r;
    }
    return r;
}

bool lies_in_subfield(const FieldElement& x, std::uint64_t q) { return frobenius(x, q) == x; }

namespace {

const std::vector<FieldElement>& embedding_powers(const FieldContext& src, const FieldContext& tgt) {
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().embed_powers.find({&src, &tgt});
        if (it != cache().embed_powers.end()) return it->second;
    }
    std::vector<FieldElement> coeffs;
    for (auto c : src.modulus()) coeffs.push_back(tgt.from_int(c));
    Polynomial f(tgt, std::move(coeffs));
    auto roots = distinct_roots(f);
    if (roots.empty()) throw Error("source modulus has no root in target field");
    const FieldElement h = roots.front();
    std::vector<FieldElement> powers;
    FieldElement acc = tgt.one();
    for (int i = 0; i < src.degree(); ++i) {
        powers.push_back(acc);
        acc *= h;
    }
    std::lock_guard<std::mutex> lock(cache().mu);
    return cache().embed_powers.emplace(std::make_pair(&src, &tgt), std::move(powers)).first->second;
}

}  // namespace

FieldElement embed(const FieldElement& x, const FieldContext& target) {
    const FieldContext& src = x.context();
    if (&src == &target) return x;
    if (src.p() != target.p()) throw ContextMismatch("cannot embed across characteristics");
    if (x.in_prime_field()) return target.from_int(x.coeffs()[0]);
    if (target.degree() % src.degree() != 0)
        throw DomainError("cannot embed " + src.describe() + " into " + target.describe());
    const auto& powers = embedding_powers(src, target);
    FieldElement r = target.zero();
    for (int i = 0; i < src.degree(); ++i) {
        if (x.coeffs()[i] != 0) r += powers[i] * target.from_int(x.coeffs()[i]);
    }
    return r;
}

FieldElement restrict_to_subfield(const FieldElement& x, const FieldContext& sub) {
    const FieldContext& src = x.context();
    if (&src == &sub) return x;
    if (src.p() != sub.p()) throw ContextMismatch("cannot restrict across characteristics");
    if (sub.degree() == 1 || x.in_prime_field()) {
        if (!x.in_prime_field()) throw NotInSubfield("element is not in the prime field");
        return sub.from_int(x.coeffs()[0]);
    }
    if (src.degree() % sub.degree() != 0)
        throw NotInSubfield(sub.describe() + " is not a subfield of " + src.describe());
    const auto& powers = embedding_powers(sub, src);
    const std::uint32_t p = src.p();
    const int rows = src.degree();
    const int cols = sub.degree();
    // Solve sum_i c_i * powers[i] = x over GF(p): augmented rows x (cols + 1).
    std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) a[r][c] = powers[c].coeffs()[r];
        a[r][cols] = x.coeffs()[r];
    }
    std::vector<int> pivot_row(cols, -1);
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        const std::uint64_t inv = inv_mod(a[row][c], p);
        for (auto& v : a[row]) v = static_cast<std::uint32_t>(v * inv % p);
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const std::uint64_t f = a[r][c];
            for (int k = 0; k <= cols; ++k)
                a[r][k] = static_cast<std::uint32_t>((a[r][k] + (p - f) * a[row][k]) % p);
        }
        pivot_row[c] = row++;
    }
    for (int r = row; r < rows; ++r)
        if (a[r][cols] != 0) throw NotInSubfield("element does not lie in " + sub.describe());
    FieldElement::Coeffs out(cols, 0);
    for (int c = 0; c < cols; ++c)
        if (pivot_row[c] >= 0) out[c] = a[pivot_row[c]][cols];
    return FieldElement(sub, std::move(out));
}

const FieldContext& common_extension(const FieldContext& a, const FieldContext& b) {
    if (a.p() != b.p()) throw ContextMismatch("fields of different characteristic");
    const int m = static_cast<int>(lcm_u64(a.degree(), b.degree()));
    return build_field(a.p(), m);
}

}  // namespace floquetp
