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

#include "floquetp/group_algebra.hpp"

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

const FieldContext& unify(const FieldContext& a, const FieldContext& b) {
    if (&a == &b) return a;
    if (a.p() != b.p()) throw ContextMismatch("group algebra elements over different characteristics");
    if (a.degree() % b.degree() == 0) return a;
    if (b.degree() % a.degree() == 0) return b;
    throw ContextMismatch("no embedding between " + a.describe() + " and " + b.describe());
}

void check_rank(std::size_t a, std::size_t b) {
    if (a != b) throw DomainError("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

void check_trivial_on_sublattice(const TorusPoint& z, const QuotientData& q) {
    const Sublattice& sub = q.sublattice();
    for (std::size_t j = 0; j < sub.rank(); ++j)
        if (!z.evaluate(sub.generator(j)).is_one()) throw DomainError("character is not trivial on the period sublattice");
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::delta(const FieldContext& ctx, const IntVec& v) {
    return delta(ctx.one(), v);
}

GroupAlgebraElement GroupAlgebraElement::delta(const FieldElement& c, const IntVec& v) {
    GroupAlgebraElement a(c.context(), v.size());
    a.add_term(v, c);
    return a;
}

FieldElement GroupAlgebraElement::coefficient(const IntVec& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? ctx_->zero() : it->second;
}

void GroupAlgebraElement::add_term(const IntVec& lambda, const FieldElement& c) {
    check_rank(lambda.size(), rank_);
    const FieldElement v = embed(c, *ctx_);
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::shift(const IntVec& v) const {
    check_rank(v.size(), rank_);
    GroupAlgebraElement r(*ctx_, rank_);
    for (const auto& [lam, c] : terms_) r.terms_.emplace(sub(lam, v), c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::embedded(const FieldContext& target) const {
    GroupAlgebraElement r(target, rank_);
    for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, embed(c, target));
    return r;
}

std::vector<FieldElement> GroupAlgebraElement::coefficients() const {
    std::vector<FieldElement> out;
    for (const auto& [lam, c] : terms_) out.push_back(c);
    return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_rank(a.rank_, b.rank_);
    GroupAlgebraElement r = a.embedded(unify(*a.ctx_, *b.ctx_));
    for (const auto& [lam, c] : b.terms_) r.add_term(lam, c);
    return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_rank(a.rank_, b.rank_);
    GroupAlgebraElement r = a.embedded(unify(*a.ctx_, *b.ctx_));
    for (const auto& [lam, c] : b.terms_) r.add_term(lam, -c);
    return r;
}

GroupAlgebraElement operator*(const FieldElement& s, const GroupAlgebraElement& a) {
    GroupAlgebraElement r(unify(s.context(), *a.ctx_), a.rank_);
    for (const auto& [lam, c] : a.terms_) r.add_term(lam, embed(s, r.context()) * embed(c, r.context()));
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_rank(a.rank_, b.rank_);
    const FieldContext& ctx = unify(*a.ctx_, *b.ctx_);
    GroupAlgebraElement r(ctx, a.rank_);
    for (const auto& [la, ca] : a.terms_) {
        const FieldElement xa = embed(ca, ctx);
        for (const auto& [lb, cb] : b.terms_) r.add_term(add(la, lb), xa * embed(cb, ctx));
    }
    return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [lam, c] : a.terms_) {
        if (lam != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; }

FieldElement evaluate_laurent(const LaurentPoly& q, const TorusPoint& z) {
    const FieldContext& ctx = z.context();
    FieldElement r = ctx.zero();
    for (const auto& [lam, c] : q.terms()) r += embed(c, ctx) * z.evaluate(lam);
    return r;
}

FieldElement evaluate_laurent_inverse(const LaurentPoly& q, const TorusPoint& z) {
    const FieldContext& ctx = z.context();
    FieldElement r = ctx.zero();
    for (const auto& [lam, c] : q.terms()) {
        IntVec neg = lam;
        for (auto& x : neg) x = -x;
        r += embed(c, ctx) * z.evaluate(neg);
    }
    return r;
}

PeriodicFunction::PeriodicFunction(QuotientPtr q, const FieldContext& ctx, std::size_t n)
    : q_(std::move(q)), ctx_(&ctx), n_(n), values_(q_->order(), Vector(n, ctx.zero())) {}

bool PeriodicFunction::is_zero() const {
    for (const auto& v : values_)
        if (!is_zero_vector(v)) return false;
    return true;
}

PeriodicFunction PeriodicFunction::shift(const IntVec& v) const {
    PeriodicFunction r(q_, *ctx_, n_);
    for (std::size_t g = 0; g < values_.size(); ++g)
        r.values_[g] = values_[q_->index_of_point(add(q_->lift_of_index(g), v))];
    return r;
}

PeriodicFunction PeriodicFunction::embedded(const FieldContext& target) const {
    PeriodicFunction r(q_, target, n_);
    for (std::size_t g = 0; g < values_.size(); ++g) r.values_[g] = embed_vector(values_[g], target);
    return r;
}

Vector PeriodicFunction::flatten() const {
    Vector out;
    out.reserve(values_.size() * n_);
    for (const auto& v : values_) out.insert(out.end(), v.begin(), v.end());
    return out;
}

PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b) {
    if (a.q_->sublattice() != b.q_->sublattice() || a.n_ != b.n_) throw DomainError("periodic functions with different shapes");
    const FieldContext& ctx = unify(*a.ctx_, *b.ctx_);
    PeriodicFunction r = a.embedded(ctx);
    for (std::size_t g = 0; g < r.values_.size(); ++g)
        for (std::size_t i = 0; i < r.n_; ++i) r.values_[g][i] += embed(b.values_[g][i], ctx);
    return r;
}

PeriodicFunction operator*(const FieldElement& s, const PeriodicFunction& f) {
    const FieldContext& ctx = unify(s.context(), *f.ctx_);
    PeriodicFunction r = f.embedded(ctx);
    const FieldElement t = embed(s, ctx);
    for (auto& v : r.values_)
        for (auto& x : v) x = t * x;
    return r;
}

bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
    return a.q_->sublattice() == b.q_->sublattice() && a.n_ == b.n_ && a.values_ == b.values_;
}

PeriodicFunction elementary_function(const QuotientPtr& q, const TorusPoint& z, const Vector& u) {
    check_trivial_on_sublattice(z, *q);
    const FieldContext& ctx = z.context();
    PeriodicFunction f(q, ctx, u.size());
    const Vector ue = embed_vector(u, ctx);
    for (std::size_t g = 0; g < q->order(); ++g) {
        const FieldElement c = z.evaluate(q->lift_of_index(g));
        for (std::size_t i = 0; i < u.size(); ++i) f.at(g)[i] = c * ue[i];
    }
    return f;
}

PeriodicFunction character_function(const QuotientPtr& q, const TorusPoint& z) {
    return elementary_function(q, z, Vector{z.context().one()});
}

PeriodicFunction apply_convolution(const GroupAlgebraElement& a, const PeriodicFunction& f) {
    if (f.dim() != 1) throw DomainError("apply_convolution acts on scalar functions");
    check_rank(a.rank(), f.quotient().rank());
    const FieldContext& ctx = unify(a.context(), f.context());
    const QuotientData& q = f.quotient();
    PeriodicFunction r(f.quotient_ptr(), ctx, 1);
    for (std::size_t g = 0; g < q.order(); ++g) {
        FieldElement acc = ctx.zero();
        for (const auto& [v, c] : a.terms())
            acc += embed(c, ctx) * embed(f.at(q.index_of_point(sub(q.lift_of_index(g), v)))[0], ctx);
        r.at(g)[0] = acc;
    }
    return r;
}

PeriodicFunction pushforward(const GroupAlgebraElement& a, const QuotientPtr& q) {
    check_rank(a.rank(), q->rank());
    PeriodicFunction r(q, a.context(), 1);
    for (const auto& [v, c] : a.terms()) r.at(q->index_of_point(v))[0] += c;
    return r;
}

DualFunction dft_forward(const PeriodicFunction& f, const std::vector<TorusPoint>& dual) {
    const QuotientData& q = f.quotient();
    DualFunction out;
    if (dual.empty()) return out;
    const FieldContext& ctx = dual.front().context();
    const FieldElement order = ctx.from_int(static_cast<std::int64_t>(q.order() % ctx.p()));
    if (order.is_zero()) throw NotSaturated("|G| = " + std::to_string(q.order()) + " is divisible by the characteristic");
    const FieldElement inv_order = order.inv();
    const PeriodicFunction fe = f.embedded(ctx);
    for (const auto& w : dual) {
        Vector acc(f.dim(), ctx.zero());
        for (std::size_t g = 0; g < q.order(); ++g) {
            const FieldElement c = w.evaluate(q.lift_of_index(g));
            for (std::size_t i = 0; i < f.dim(); ++i) acc[i] += fe.at(g)[i] * c;
        }
        if (is_zero_vector(acc)) continue;
        for (auto& x : acc) x *= inv_order;
        out.entries.emplace_back(w, std::move(acc));
    }
    return out;
}

DualFunction dft_forward(const PeriodicFunction& f) {
    const QuotientData& q = f.quotient();
    const FieldContext& ctx = common_extension(f.context(), character_field(q, f.context().p()));
    return dft_forward(f, dual_subgroup(q, ctx));
}

PeriodicFunction dft_inverse(const DualFunction& phi, const QuotientPtr& q, const FieldContext& ctx, std::size_t n) {
    PeriodicFunction f(q, ctx, n);
    for (const auto& [w, coeffs] : phi.entries) {
        if (coeffs.size() != n) throw DomainError("dual function value has the wrong length");
        f = f + elementary_function(q, w.inverse(), coeffs);
    }
    return f;
}

}  // namespace floquetp
