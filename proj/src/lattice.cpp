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

#include "floquetp/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_square(const IntMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw DomainError("integer matrix must be square");
}

void col_axpy(IntMat& m, std::size_t dst, std::size_t src, std::int64_t k) {
    for (auto& row : m) row[dst] += k * row[src];
}

void col_swap(IntMat& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

IntMat identity_int(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    IntMat r(a.size(), IntVec(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw DomainError("vector length does not match the lattice rank");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

std::int64_t det_int(const IntMat& a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) return 1;
    // Bareiss elimination.
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * static_cast<std::int64_t>(m[n - 1][n - 1]);
}

IntMat hermite_normal_form(const IntMat& m) {
    check_square(m);
    if (det_int(m) == 0) throw DomainError("singular basis: the sublattice does not have finite index");
    IntMat h = m;
    const std::size_t s = h.size();
    for (std::size_t i = s; i-- > 0;) {
        // Gather gcd of row i over columns 0..i into column i.
        for (std::size_t j = 0; j < i; ++j) {
            while (h[i][j] != 0) {
                col_axpy(h, i, j, -(h[i][i] / h[i][j]));
                col_swap(h, i, j);
            }
        }
        if (h[i][i] < 0)
            for (auto& row : h) row[i] = -row[i];
    }
    for (std::size_t i = s; i-- > 0;)
        for (std::size_t j = i + 1; j < s; ++j) {
            const std::int64_t q = floor_div(h[i][j], h[i][i]);
            if (q != 0) col_axpy(h, j, i, -q);
        }
    return h;
}

SmithForm smith_normal_form(const IntMat& m) {
    check_square(m);
    if (det_int(m) == 0) throw DomainError("singular matrix: no finite-index Smith form");
    const std::size_t s = m.size();
    IntMat d = m, u = identity_int(s), v = identity_int(s);
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t k) {
        for (std::size_t j = 0; j < s; ++j) {
            d[dst][j] += k * d[src][j];
            u[dst][j] += k * u[src][j];
        }
    };
    for (std::size_t t = 0; t < s; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            std::size_t bi = t, bj = t;
            std::int64_t best = 0;
            for (std::size_t i = t; i < s; ++i)
                for (std::size_t j = t; j < s; ++j)
                    if (d[i][j] != 0 && (best == 0 || std::llabs(d[i][j]) < best)) {
                        best = std::llabs(d[i][j]);
                        bi = i;
                        bj = j;
                    }
            row_swap(t, bi);
            col_swap(d, t, bj);
            col_swap(v, t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < s; ++i) {
                const std::int64_t q = d[i][t] / d[t][t];
                if (q != 0) row_axpy(i, t, -q);
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < s; ++j) {
                const std::int64_t q = d[t][j] / d[t][t];
                if (q != 0) {
                    col_axpy(d, j, t, -q);
                    col_axpy(v, j, t, -q);
                }
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < s && divides; ++i)
                for (std::size_t j = t + 1; j < s; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_axpy(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < s; ++j) {
                d[t][j] = -d[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

Sublattice::Sublattice(const IntMat& basis) : h_(hermite_normal_form(basis)), index_(1) {
    for (std::size_t i = 0; i < h_.size(); ++i) index_ *= static_cast<std::uint64_t>(h_[i][i]);
}

Sublattice Sublattice::scaled(std::size_t rank, std::int64_t d) {
    if (d == 0) throw DomainError("0 Z^s does not have finite index");
    IntMat b = identity_int(rank);
    for (std::size_t i = 0; i < rank; ++i) b[i][i] = d;
    return Sublattice(b);
}

IntVec Sublattice::generator(std::size_t j) const {
    IntVec v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = h_[i][j];
    return v;
}

IntVec Sublattice::reduce(const IntVec& v) const {
    if (v.size() != rank()) throw DomainError("vector length does not match the lattice rank");
    IntVec r = v;
    for (std::size_t i = rank(); i-- > 0;) {
        const std::int64_t q = floor_div(r[i], h_[i][i]);
        if (q == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) r[k] -= q * h_[k][i];
    }
    return r;
}

bool Sublattice::contains(const IntVec& v) const {
    const IntVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

bool Sublattice::contains(const Sublattice& other) const {
    if (other.rank() != rank()) return false;
    for (std::size_t j = 0; j < rank(); ++j)
        if (!contains(other.generator(j))) return false;
    return true;
}

std::vector<IntVec> Sublattice::coset_representatives() const {
    std::vector<IntVec> out;
    IntVec cur(rank(), 0);
    for (std::uint64_t k = 0; k < index_; ++k) {
        out.push_back(cur);
        for (std::size_t i = 0; i < rank(); ++i) {
            if (++cur[i] < h_[i][i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

std::string Sublattice::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < rank(); ++j) {
            if (j) os << ',';
            os << h_[i][j];
        }
    }
    return os.str();
}

Sublattice parse_sublattice(const std::string& text, std::size_t rank) {
    auto fail = [&](const std::string& why) { throw ParseError("bad sublattice '" + text + "': " + why, 1, 1); };
    auto parse_int = [&](const std::string& tok) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + tok + "'");
        }
        if (pos != tok.size()) fail("expected an integer, got '" + tok + "'");
        return v;
    };
    if (text.find_first_of(",;") == std::string::npos) {
        std::string t = text;
        t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
        return Sublattice::scaled(rank, parse_int(t));
    }
    IntMat rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        IntVec r;
        std::stringstream cs(row);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            r.push_back(parse_int(tok));
        }
        rows.push_back(std::move(r));
    }
    if (rows.size() != rank) fail("expected " + std::to_string(rank) + " rows");
    for (const auto& r : rows)
        if (r.size() != rank) fail("expected " + std::to_string(rank) + " entries per row");
    return Sublattice(rows);
}

bool is_p_saturated(const Sublattice& sub, std::uint32_t p) { return sub.index() % p != 0; }

QuotientData::QuotientData(Sublattice sub) : sub_(std::move(sub)), smith_(smith_normal_form(sub_.basis())) {
    const std::size_t s = rank();
    for (std::size_t i = 0; i < s; ++i) d_.push_back(smith_.D[i][i]);
    // Invert U by elimination over the integers (it is unimodular).
    IntMat a = smith_.U, inv = identity_int(s);
    for (std::size_t c = 0; c < s; ++c) {
        for (std::size_t r = c + 1; r < s; ++r) {
            while (a[r][c] != 0) {
                const std::int64_t q = a[c][c] / a[r][c];
                for (std::size_t j = 0; j < s; ++j) {
                    a[c][j] -= q * a[r][j];
                    inv[c][j] -= q * inv[r][j];
                }
                std::swap(a[c], a[r]);
                std::swap(inv[c], inv[r]);
            }
        }
        if (a[c][c] < 0) {
            for (std::size_t j = 0; j < s; ++j) {
                a[c][j] = -a[c][j];
                inv[c][j] = -inv[c][j];
            }
        }
    }
    for (std::size_t c = s; c-- > 0;)
        for (std::size_t r = 0; r < c; ++r) {
            const std::int64_t q = a[r][c];
            if (q == 0) continue;
            for (std::size_t j = 0; j < s; ++j) {
                a[r][j] -= q * a[c][j];
                inv[r][j] -= q * inv[c][j];
            }
        }
    u_inv_ = std::move(inv);
    for (std::size_t k = 0; k < order(); ++k) lifts_.push_back(lift(element(k)));
}

IntVec QuotientData::project(const IntVec& lambda) const {
    IntVec g = mat_vec(smith_.U, lambda);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_pos(g[i], d_[i]);
    return g;
}

std::size_t QuotientData::index_of(const IntVec& g) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) idx = idx * static_cast<std::size_t>(d_[i]) + static_cast<std::size_t>(mod_pos(g[i], d_[i]));
    return idx;
}

IntVec QuotientData::element(std::size_t idx) const {
    IntVec g(d_.size());
    for (std::size_t i = d_.size(); i-- > 0;) {
        g[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(d_[i]));
        idx /= static_cast<std::size_t>(d_[i]);
    }
    return g;
}

IntVec QuotientData::lift(const IntVec& g) const { return mat_vec(u_inv_, g); }

QuotientPtr make_quotient(const Sublattice& sub) { return std::make_shared<const QuotientData>(sub); }

TorusPoint::TorusPoint(const FieldContext& ctx, std::vector<FieldElement> coords) : ctx_(&ctx), coords_(std::move(coords)) {
    order_ = 1;
    for (auto& c : coords_) {
        c = embed(c, ctx);
        if (c.is_zero()) throw DomainError("torus point coordinates must be nonzero");
        order_ = lcm_u64(order_, multiplicative_order(c));
    }
}

TorusPoint::TorusPoint(const FieldContext& ctx, std::vector<FieldElement> coords, std::uint64_t order, IntVec label)
    : ctx_(&ctx), coords_(std::move(coords)), order_(order), label_(std::move(label)) {}

FieldElement TorusPoint::evaluate(const IntVec& lambda) const {
    if (lambda.size() != coords_.size()) throw DomainError("vector length does not match the torus rank");
    FieldElement r = ctx_->one();
    const auto ord = static_cast<std::int64_t>(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const std::int64_t e = mod_pos(lambda[i], ord);
        if (e != 0) r *= coords_[i].pow(e);
    }
    return r;
}

TorusPoint TorusPoint::inverse() const {
    std::vector<FieldElement> c;
    for (const auto& x : coords_) c.push_back(x.inv());
    return TorusPoint(*ctx_, std::move(c), order_);
}

TorusPoint TorusPoint::embedded(const FieldContext& target) const {
    std::vector<FieldElement> c;
    for (const auto& x : coords_) c.push_back(embed(x, target));
    return TorusPoint(target, std::move(c), order_, label_);
}

TorusPoint operator*(const TorusPoint& a, const TorusPoint& b) {
    if (a.rank() != b.rank()) throw DomainError("torus rank mismatch");
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i < a.rank(); ++i) c.push_back(a.coords_[i] * b.coords_[i]);
    std::uint64_t ord = lcm_u64(a.order_, b.order_);
    // The product's order divides the lcm; tighten it.
    TorusPoint t(*a.ctx_, std::move(c), ord);
    std::uint64_t best = ord;
    for (auto [q, e] : factorize(ord)) {
        while (best % q == 0) {
            bool ok = true;
            for (const auto& x : t.coords_) ok = ok && x.pow(static_cast<std::int64_t>(best / q)).is_one();
            if (!ok) break;
            best /= q;
        }
    }
    t.order_ = best;
    return t;
}

FieldElement evaluate_character(const TorusPoint& z, const IntVec& lambda) { return z.evaluate(lambda); }

const FieldContext& character_field(const QuotientData& q, std::uint32_t p) {
    const std::uint64_t e = q.exponent();
    if (e % p == 0) throw NotSaturated("sublattice index " + std::to_string(q.order()) + " is divisible by p = " + std::to_string(p));
    return build_field(p, static_cast<int>(multiplicative_order_mod(p, e)));
}

std::vector<TorusPoint> dual_subgroup(const QuotientData& q, const FieldContext& ambient) {
    const std::uint64_t e = q.exponent();
    if (q.order() % ambient.p() != 0 && !ambient.has_roots_of_unity(e))
        throw DomainError(ambient.describe() + " lacks the " + std::to_string(e) + "-th roots of unity");
    if (q.order() % ambient.p() == 0)
        throw NotSaturated("sublattice index " + std::to_string(q.order()) + " is divisible by p = " + std::to_string(ambient.p()));
    const FieldElement zeta = primitive_root_of_unity(ambient, e);
    std::vector<FieldElement> zpow;
    FieldElement acc = ambient.one();
    for (std::uint64_t k = 0; k < e; ++k) {
        zpow.push_back(acc);
        acc *= zeta;
    }
    const std::size_t s = q.rank();
    const IntVec& d = q.invariant_factors();
    const IntMat& U = q.U();
    std::vector<TorusPoint> out;
    for (std::size_t idx = 0; idx < q.order(); ++idx) {
        const IntVec k = q.element(idx);
        std::vector<FieldElement> coords;
        for (std::size_t j = 0; j < s; ++j) {
            std::int64_t ex = 0;
            for (std::size_t i = 0; i < s; ++i)
                ex = mod_pos(ex + mod_pos(k[i] * U[i][j], d[i]) * (static_cast<std::int64_t>(e) / d[i]), static_cast<std::int64_t>(e));
            coords.push_back(zpow[static_cast<std::size_t>(ex)]);
        }
        std::uint64_t ord = 1;
        for (std::size_t i = 0; i < s; ++i)
            ord = lcm_u64(ord, static_cast<std::uint64_t>(d[i] / std::gcd(k[i], d[i])));
        out.emplace_back(ambient, std::move(coords), ord, k);
    }
    return out;
}

std::vector<TorusPoint> dual_subgroup(const Sublattice& sub, std::uint32_t p) {
    if (!is_p_saturated(sub, p))
        throw NotSaturated("sublattice of index " + std::to_string(sub.index()) + " is not saturated for p = " + std::to_string(p));
    QuotientData q(sub);
    return dual_subgroup(q, character_field(q, p));
}

int frobenius_orbit_length(const TorusPoint& z, std::uint64_t q) {
    std::vector<FieldElement> w = z.coords();
    for (int r = 1;; ++r) {
        for (auto& x : w) x = frobenius(x, q);
        if (w == z.coords()) return r;
    }
}

}  // namespace floquetp
