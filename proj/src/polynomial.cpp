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

#include "floquetp/polynomial.hpp"

#include <algorithm>
#include <random>

#include "floquetp/errors.hpp"

namespace floquetp {

Polynomial::Polynomial(const FieldContext& ctx, std::vector<FieldElement> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
    for (auto& c : c_) {
        if (c.context_ptr() != ctx_) {
            if (c.valid() && c.context().p() == ctx.p() && c.in_prime_field())
                c = ctx.from_int(c.coeffs()[0]);
            else
                throw ContextMismatch("polynomial coefficient from another field");
        }
    }
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::x(const FieldContext& ctx) { return Polynomial(ctx, {ctx.zero(), ctx.one()}); }

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.context(), {c}); }

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
    return c_[i];
}

const FieldElement& Polynomial::leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
    FieldElement acc = ctx_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    const FieldElement inv = c_.back().inv();
    Polynomial r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
}

Polynomial Polynomial::derivative() const {
    std::vector<FieldElement> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ctx_->from_int(static_cast<std::int64_t>(i)));
    return Polynomial(*ctx_, std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch("polynomials over different fields");
    std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), a.ctx_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(*a.ctx_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch("polynomials over different fields");
    std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), a.ctx_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(*a.ctx_, std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch("polynomials over different fields");
    if (a.c_.empty() || b.c_.empty()) return Polynomial(*a.ctx_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(*a.ctx_, std::move(r));
}

Polynomial operator*(const FieldElement& s, const Polynomial& a) {
    std::vector<FieldElement> r = a.c_;
    for (auto& c : r) c = s * c;
    return Polynomial(*a.ctx_, std::move(r));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.ctx_ != b.ctx_) throw ContextMismatch("polynomials over different fields");
    const FieldContext& ctx = *a.ctx_;
    std::vector<FieldElement> rem = a.c_;
    const int db = b.degree();
    std::vector<FieldElement> quo(a.degree() >= db ? a.degree() - db + 1 : 0, ctx.zero());
    const FieldElement lead_inv = b.leading().inv();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        const FieldElement c = rem[k] * lead_inv;
        quo[k - db] = c;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.c_[j];
    }
    q = Polynomial(ctx, std::move(quo));
    r = Polynomial(ctx, std::move(rem));
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    Polynomial q(*a.ctx_), r(*a.ctx_);
    Polynomial::divmod(a, b, q, r);
    return q;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    Polynomial q(*a.ctx_), r(*a.ctx_);
    Polynomial::divmod(a, b, q, r);
    return r;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial powmod(const Polynomial& base, const BigInt& e, const Polynomial& mod) {
    const FieldContext& ctx = base.context();
    Polynomial r = Polynomial::constant(ctx.one()) % mod;
    if (e == 0) return r;
    Polynomial b = base % mod;
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = (r * b) % mod;
    }
    return r;
}

namespace {

// g(x) with g(x)^p = f(x); f' must vanish.
Polynomial pth_root(const Polynomial& f) {
    const FieldContext& ctx = f.context();
    const int p = static_cast<int>(ctx.p());
    std::vector<FieldElement> out;
    for (int i = 0; i <= f.degree(); i += p) {
        FieldElement c = f.coeff(i);
        // Inverse Frobenius: c^(p^(m-1)).
        for (int k = 0; k < ctx.degree() - 1; ++k) c = frobenius_once(c);
        out.push_back(c);
    }
    return Polynomial(ctx, std::move(out));
}

// Products of the irreducible factors of each degree of a squarefree monic f.
std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial f) {
    const FieldContext& ctx = f.context();
    const BigInt q = ctx.size();
    std::vector<std::pair<Polynomial, int>> out;
    const Polynomial x = Polynomial::x(ctx);
    Polynomial h = x % f;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = powmod(h, q, f);
        Polynomial g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

// Splits f, a product of distinct irreducibles of degree d, into them.
// Gives up after max_tries unproductive draws, which only happens when the
// premise is false.
void equal_degree(const Polynomial& f, int d, std::mt19937_64& rng, std::vector<Polynomial>& out, int max_tries = 400) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldContext& ctx = f.context();
    const bool odd = ctx.p() != 2;
    BigInt exponent;
    if (odd) exponent = (boost::multiprecision::pow(ctx.size(), static_cast<unsigned>(d)) - 1) / 2;
    for (int attempt = 0;; ++attempt) {
        if (attempt == max_tries) throw DomainError("polynomial is not a product of degree-" + std::to_string(d) + " factors");
        std::vector<FieldElement> coeffs;
        for (int i = 0; i < f.degree(); ++i) {
            std::vector<std::int64_t> cs(ctx.degree());
            for (auto& v : cs) v = static_cast<std::int64_t>(rng() % ctx.p());
            coeffs.push_back(ctx.from_coeffs(cs));
        }
        Polynomial a(ctx, std::move(coeffs));
        if (a.degree() < 1) continue;
        Polynomial b(ctx);
        if (odd) {
            b = powmod(a, exponent, f) - Polynomial::constant(ctx.one());
        } else {
            // Absolute trace a + a^2 + ... + a^(2^(m d - 1)) mod f.
            Polynomial t = a % f;
            b = t;
            for (int i = 1; i < ctx.degree() * d; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        }
        Polynomial g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out, max_tries);
            equal_degree(f / g, d, rng, out, max_tries);
            return;
        }
    }
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f0) {
    if (f0.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    const FieldContext& ctx = f0.context();
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = f0.monic();
    if (f.degree() == 0) return out;
    Polynomial c = gcd(f, f.derivative());
    Polynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        const int p = static_cast<int>(ctx.p());
        for (auto& [g, e] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, e * p);
    }
    return out;
}

std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f) {
    std::mt19937_64 rng(0x5eed);
    std::vector<std::pair<Polynomial, int>> out;
    for (auto& [g, e] : squarefree_decomposition(f)) {
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<Polynomial> pieces;
            equal_degree(h, d, rng, pieces);
            for (auto& piece : pieces) out.emplace_back(std::move(piece), e);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    // The same irreducible can surface from two squarefree layers; merge.
    std::vector<std::pair<Polynomial, int>> merged;
    for (auto& fe : out) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(fe);
    }
    return merged;
}

int splitting_degree(const Polynomial& f) {
    std::uint64_t l = 1;
    for (auto& [g, e] : factor(f)) l = lcm_u64(l, static_cast<std::uint64_t>(g.degree()));
    return static_cast<int>(l);
}

std::vector<FieldElement> roots_with_multiplicity(const Polynomial& f) {
    std::vector<FieldElement> out;
    for (auto& [g, e] : factor(f)) {
        if (g.degree() != 1) continue;
        const FieldElement r = -g.coeff(0);
        for (int i = 0; i < e; ++i) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> split_roots(const Polynomial& f) {
    std::mt19937_64 rng(0x5eed);
    std::vector<FieldElement> out;
    for (auto& [g, e] : squarefree_decomposition(f)) {
        std::vector<Polynomial> pieces;
        equal_degree(g, 1, rng, pieces, 64);
        for (const auto& piece : pieces) {
            const FieldElement r = -piece.coeff(0);
            for (int i = 0; i < e; ++i) out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> distinct_roots(const Polynomial& f) {
    auto all = roots_with_multiplicity(f);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::vector<FieldElement> exhaustive_roots(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial has every element as a root");
    const FieldContext& ctx = f.context();
    std::vector<FieldElement> out;
    for (const auto& x : ctx.elements()) {
        Polynomial g = f;
        const Polynomial lin(ctx, {-x, ctx.one()});
        while (g.degree() > 0 && g.evaluate(x).is_zero()) {
            out.push_back(x);
            g = g / lin;
        }
    }
    return out;
}

std::vector<FieldElement> poly_roots(std::span<const FieldElement> coeffs, const FieldContext& search_field) {
    std::vector<FieldElement> c;
    for (const auto& v : coeffs) c.push_back(embed(v, search_field));
    Polynomial f(search_field, std::move(c));
    if (f.is_zero()) throw DomainError("the zero polynomial has every element as a root");
    if (search_field.size() <= 4096) return exhaustive_roots(f);
    return roots_with_multiplicity(f);
}

}  // namespace floquetp
