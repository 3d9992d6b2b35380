#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/poly.hpp"

namespace syzygy {

// Full reduction against an ordered list of nonzero polynomials: every term
// of the remainder is divisible by no leading term of the list.  The first
// divisor in list order is always taken, so the result is deterministic.
template <class K>
polynomial<K> normal_form(polynomial<K> f, const std::vector<polynomial<K>>& basis) {
    if (f.is_zero()) return f;
    const ring_ptr& ring = f.ring();
    polynomial<K> rem = polynomial<K>::zero(ring);
    while (!f.is_zero()) {
        const monomial& lm = f.lead_monomial();
        const K& lc = f.lead_coeff();
        bool reduced = false;
        for (const auto& g : basis) {
            if (!g.lead_monomial().divides(lm)) continue;
            K c = lc / g.lead_coeff();
            f -= g.times_term(lm.over(g.lead_monomial()), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += polynomial<K>::term(ring, lm, lc);
            f -= polynomial<K>::term(ring, lm, lc);
        }
    }
    return rem;
}

template <class K>
polynomial<K> s_polynomial(const polynomial<K>& f, const polynomial<K>& g) {
    monomial l = monomial::lcm(f.lead_monomial(), g.lead_monomial());
    K one = field_traits<K>::one();
    return f.times_term(l.over(f.lead_monomial()), one / f.lead_coeff()) -
           g.times_term(l.over(g.lead_monomial()), one / g.lead_coeff());
}

template <class K>
struct groebner_basis {
    ring_ptr ring;
    std::vector<polynomial<K>> gens;
    bool homogeneous = true;
};

namespace detail {

// Buchberger's algorithm with the product and chain criteria, normal pair
// selection by (lcm degree, i, j).  Accepts inhomogeneous input; the public
// entry point restricts to the homogeneous case models actually use.
template <class K>
std::vector<polynomial<K>> buchberger_engine(const ring_ptr& ring, std::vector<polynomial<K>> gens) {
    std::vector<polynomial<K>> g;
    for (auto& f : gens)
        if (!f.is_zero()) g.push_back(f.normalized());
    std::sort(g.begin(), g.end(), [&](const polynomial<K>& a, const polynomial<K>& b) {
        return ring->cmp(a.lead_monomial(), b.lead_monomial()) < 0;
    });

    struct pair_key {
        int deg;
        int i, j;
        bool operator<(const pair_key& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<pair_key> pending;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            monomial l = monomial::lcm(g[static_cast<std::size_t>(i)].lead_monomial(),
                                       g[static_cast<std::size_t>(j)].lead_monomial());
            pending.insert({l.deg, i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        pair_key pk = *pending.begin();
        pending.erase(pending.begin());
        const polynomial<K>& fi = g[static_cast<std::size_t>(pk.i)];
        const polynomial<K>& fj = g[static_cast<std::size_t>(pk.j)];
        monomial l = monomial::lcm(fi.lead_monomial(), fj.lead_monomial());
        if (l.deg == fi.lead_monomial().deg + fj.lead_monomial().deg) continue;
        bool chained = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!g[static_cast<std::size_t>(k)].lead_monomial().divides(l)) continue;
            pair_key a{0, std::min(pk.i, k), std::max(pk.i, k)};
            pair_key b{0, std::min(pk.j, k), std::max(pk.j, k)};
            auto in_pending = [&](pair_key key) {
                monomial m = monomial::lcm(g[static_cast<std::size_t>(key.i)].lead_monomial(),
                                           g[static_cast<std::size_t>(key.j)].lead_monomial());
                key.deg = m.deg;
                return pending.count(key) > 0;
            };
            if (!in_pending(a) && !in_pending(b)) chained = true;
        }
        if (chained) continue;
        polynomial<K> r = normal_form(s_polynomial(fi, fj), g);
        if (r.is_zero()) continue;
        g.push_back(r.normalized());
        push_pairs(static_cast<int>(g.size()) - 1);
    }

    // Minimalize, then tail-reduce each element against the others.
    std::vector<polynomial<K>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!g[j].lead_monomial().divides(g[i].lead_monomial())) continue;
            if (g[j].lead_monomial() == g[i].lead_monomial() && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<polynomial<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        polynomial<K> r = normal_form(minimal[i], others);
        check(!r.is_zero(), "minimal element reduced to zero");
        reduced.push_back(r.normalized());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const polynomial<K>& a, const polynomial<K>& b) {
        return ring->cmp(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return reduced;
}

}  // namespace detail

// Reduced Groebner basis of a homogeneous ideal in the ring's active order.
template <class K>
groebner_basis<K> buchberger(const ring_ptr& ring, const std::vector<polynomial<K>>& gens) {
    for (const auto& f : gens) {
        require(f.ring() == ring, "generator from a different ring");
        require(f.is_zero() || f.is_homogeneous(), "buchberger expects homogeneous generators");
    }
    groebner_basis<K> out;
    out.ring = ring;
    out.gens = detail::buchberger_engine(ring, gens);
    out.homogeneous = true;
    return out;
}

// Monomials of degree d outside the leading term ideal; they form a basis of
// the degree-d piece of the quotient ring.
template <class K>
std::vector<monomial> standard_monomials(const groebner_basis<K>& gb, int d) {
    std::vector<monomial> out;
    for (const auto& m : monomials_of_degree(gb.ring->nvars(), d)) {
        bool in_lt = false;
        for (const auto& g : gb.gens)
            if (g.lead_monomial().divides(m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [&](const monomial& a, const monomial& b) { return gb.ring->cmp(a, b) > 0; });
    return out;
}

// Intersection of the ideal with the subring on keep_vars, computed with an
// elimination block order.  Result lives in a fresh grevlex ring on the kept
// variables, reduced there.
template <class K>
std::pair<ring_ptr, std::vector<polynomial<K>>> eliminate(const ring_ptr& ring,
                                                          const std::vector<polynomial<K>>& gens,
                                                          std::vector<int> keep_vars) {
    std::sort(keep_vars.begin(), keep_vars.end());
    std::vector<int> dropped;
    {
        std::set<int> keep(keep_vars.begin(), keep_vars.end());
        require(keep.size() == keep_vars.size(), "duplicate kept variable");
        for (int v : keep_vars) require(v >= 0 && v < ring->nvars(), "kept variable out of range");
        for (int v = 0; v < ring->nvars(); ++v)
            if (!keep.count(v)) dropped.push_back(v);
    }

    std::vector<std::string> block_names;
    for (int v : dropped) block_names.push_back(ring->names[static_cast<std::size_t>(v)]);
    for (int v : keep_vars) block_names.push_back(ring->names[static_cast<std::size_t>(v)]);
    ring_ptr block = make_ring(block_names, order_kind::elimination_block, static_cast<int>(dropped.size()));

    // Old variable index -> position in the block ring.
    std::vector<int> pos(static_cast<std::size_t>(ring->nvars()), -1);
    for (std::size_t i = 0; i < dropped.size(); ++i) pos[static_cast<std::size_t>(dropped[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < keep_vars.size(); ++i)
        pos[static_cast<std::size_t>(keep_vars[i])] = static_cast<int>(dropped.size() + i);

    std::vector<polynomial<K>> moved;
    for (const auto& f : gens) {
        polynomial<K> h = polynomial<K>::zero(block);
        for (const auto& [m, c] : f.terms()) {
            monomial mm = monomial::one(block->nvars());
            for (std::size_t v = 0; v < m.e.size(); ++v) mm.e[static_cast<std::size_t>(pos[v])] = m.e[v];
            mm.deg = m.deg;
            h += polynomial<K>::term(block, mm, c);
        }
        moved.push_back(h);
    }

    std::vector<polynomial<K>> gb = detail::buchberger_engine(block, moved);

    std::vector<std::string> kept_names;
    for (int v : keep_vars) kept_names.push_back(ring->names[static_cast<std::size_t>(v)]);
    ring_ptr target = make_ring(kept_names);
    std::vector<polynomial<K>> kept;
    for (const auto& f : gb) {
        bool pure = true;
        for (const auto& [m, c] : f.terms())
            for (std::size_t i = 0; i < dropped.size(); ++i)
                if (m.e[i] != 0) pure = false;
        if (!pure) continue;
        polynomial<K> h = polynomial<K>::zero(target);
        for (const auto& [m, c] : f.terms()) {
            monomial mm = monomial::one(target->nvars());
            for (std::size_t i = 0; i < keep_vars.size(); ++i) mm.e[i] = m.e[dropped.size() + i];
            mm.deg = m.deg;
            h += polynomial<K>::term(target, mm, c);
        }
        kept.push_back(h);
    }
    // The block-order basis of the intersection need not be reduced for the
    // target grevlex order.
    return {target, detail::buchberger_engine(target, kept)};
}

}  // namespace syzygy
