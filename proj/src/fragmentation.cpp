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

#include "floquetp/fragmentation.hpp"

#include <algorithm>
#include <deque>

#include "floquetp/errors.hpp"

namespace floquetp {

namespace {

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

}  // namespace

FragmentationMap::FragmentationMap(Sublattice sub) : sub_(std::move(sub)), reps_(sub_.coset_representatives()) {}

std::pair<std::size_t, IntVec> FragmentationMap::decompose(const IntVec& lambda) const {
    const IntVec r = sub_.reduce(lambda);
    // Representatives are enumerated with the first coordinate fastest.
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        idx += static_cast<std::size_t>(r[i]) * stride;
        stride *= static_cast<std::size_t>(sub_.basis()[i][i]);
    }
    return {idx, coordinates(sub(lambda, r))};
}

IntVec FragmentationMap::compose(std::size_t i, const IntVec& kappa) const {
    IntVec r = mat_vec(sub_.basis(), kappa);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += reps_.at(i)[k];
    return r;
}

IntVec FragmentationMap::coordinates(const IntVec& w) const {
    const IntMat& h = sub_.basis();
    const std::size_t s = w.size();
    IntVec k(s, 0);
    for (std::size_t i = s; i-- > 0;) {
        std::int64_t rest = w[i];
        for (std::size_t j = i + 1; j < s; ++j) rest -= h[i][j] * k[j];
        if (rest % h[i][i]) throw DomainError("vector is not in the fragmentation sublattice");
        k[i] = rest / h[i][i];
    }
    return k;
}

Sublattice FragmentationMap::inner_period(const Sublattice& big) const {
    if (!sub_.contains(big)) throw DomainError("period lattice " + big.to_string() + " is not inside " + sub_.to_string());
    const std::size_t s = big_rank();
    IntMat cols(s, IntVec(s));
    for (std::size_t j = 0; j < s; ++j) {
        const IntVec c = coordinates(big.generator(j));
        for (std::size_t i = 0; i < s; ++i) cols[i][j] = c[i];
    }
    return Sublattice(cols);
}

Sublattice FragmentationMap::outer_period(const Sublattice& inner) const {
    return Sublattice(mat_mul(sub_.basis(), inner.basis()));
}

PeriodicFunction fragment_function(const PeriodicFunction& f, const FragmentationMap& map) {
    if (f.dim() != 1) throw DomainError("fragmentation takes scalar functions");
    if (f.quotient().rank() != map.big_rank()) throw DomainError("function rank differs from the fragmentation rank");
    auto q = make_quotient(map.inner_period(f.quotient().sublattice()));
    PeriodicFunction out(q, f.context(), map.size());
    for (std::size_t g = 0; g < q->order(); ++g)
        for (std::size_t i = 0; i < map.size(); ++i) out.at(g)[i] = f(map.compose(i, q->lift_of_index(g)))[0];
    return out;
}

PeriodicFunction unfragment_function(const PeriodicFunction& f, const FragmentationMap& map) {
    if (f.dim() != map.size()) throw DomainError("vector length differs from the fragmentation index");
    if (f.quotient().rank() != map.big_rank()) throw DomainError("function rank differs from the fragmentation rank");
    auto q = make_quotient(map.outer_period(f.quotient().sublattice()));
    PeriodicFunction out(q, f.context(), 1);
    for (std::size_t g = 0; g < q->order(); ++g) {
        const auto [i, kappa] = map.decompose(q->lift_of_index(g));
        out.at(g)[0] = f(kappa)[i];
    }
    return out;
}

MatrixOperator fragment_operator(const GroupAlgebraElement& a, const FragmentationMap& map) {
    if (a.rank() != map.big_rank()) throw DomainError("operator rank differs from the fragmentation rank");
    const auto& reps = map.representatives();
    MatrixOperator out(a.context(), map.big_rank(), map.size());
    for (const auto& [v, c] : a.terms())
        for (std::size_t i = 0; i < map.size(); ++i) {
            // v = Hκ + v_i - v_j picks j from the class of v_i - v.
            const auto [j, minus_kappa] = map.decompose(sub(reps[i], v));
            IntVec kappa(minus_kappa.size());
            for (std::size_t k = 0; k < kappa.size(); ++k) kappa[k] = -minus_kappa[k];
            out.add_term(i, j, kappa, c);
        }
    return out;
}

MatrixOperator voltage_operator(const VoltageGraph& g, GraphOperatorKind kind) {
    if (!g.field) throw DomainError("voltage graph has no field");
    MatrixOperator out(*g.field, g.rank, g.vertices);
    for (const auto& e : g.edges) {
        if (e.tail >= g.vertices || e.head >= g.vertices) throw DomainError("edge endpoint out of range");
        if (e.label.size() != g.rank) throw DomainError("edge label length differs from the graph rank");
        IntVec neg(e.label.size());
        for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -e.label[k];
        out.add_term(e.head, e.tail, neg, e.weight);
        if (kind == GraphOperatorKind::laplace) out.add_term(e.head, e.head, IntVec(g.rank, 0), -e.weight);
    }
    return out;
}

VoltageGraph max_abelian_cover(const Multigraph& g, const FieldContext& field) {
    if (g.vertices == 0) throw DomainError("graph has no vertices");
    for (const auto& [u, v] : g.edges)
        if (u >= g.vertices || v >= g.vertices) throw DomainError("edge endpoint out of range");
    std::vector<bool> seen(g.vertices, false), tree(g.edges.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto [a, b] = g.edges[e];
            if (a != u && b != u) continue;
            const std::size_t w = a == u ? b : a;
            if (seen[w]) continue;
            seen[w] = true;
            tree[e] = true;
            queue.push_back(w);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw DomainError("graph is not connected");
    const std::size_t s = g.edges.size() + 1 - g.vertices;
    VoltageGraph out{&field, g.vertices, s, {}};
    std::size_t chord = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        IntVec label(s, 0), back(s, 0);
        if (!tree[e]) {
            label[chord] = 1;
            back[chord] = -1;
            ++chord;
        }
        const auto [a, b] = g.edges[e];
        out.edges.push_back({a, b, label, field.one()});
        out.edges.push_back({b, a, back, field.one()});
    }
    return out;
}

}  // namespace floquetp
