#pragma once

#include <algorithm>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/common.hpp"

namespace syzygy {

namespace detail {

template <class K>
void trim_upoly(std::vector<K>& v) {
    while (!v.empty() && is_zero(v.back())) v.pop_back();
}

template <class K>
std::vector<K> upoly_addk(const std::vector<K>& a, const std::vector<K>& b) {
    std::vector<K> out(std::max(a.size(), b.size()), K(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    trim_upoly(out);
    return out;
}

template <class K>
std::vector<K> upoly_mulk(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> out(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    trim_upoly(out);
    return out;
}

template <class K>
std::vector<K> upoly_scalek(const std::vector<K>& a, const K& c) {
    if (is_zero(c)) return {};
    std::vector<K> out = a;
    for (auto& v : out) v = v * c;
    return out;
}

}  // namespace detail

// Hyperelliptic-type affine model y^2 = f(x) with deg f = 2g+1, so there is a
// single point at infinity; v(x) = -2 and v(y) = -(2g+1) there.  Genus 0 is
// the plain rational function field in x with v(x) = -1.
template <class K>
struct ff_curve {
    int genus = 0;
    std::vector<K> f;

    int pole_x() const { return genus == 0 ? 1 : 2; }
    int pole_y() const { return 2 * genus + 1; }
};

template <class K>
ff_curve<K> make_ff_curve(int genus) {
    ff_curve<K> c;
    c.genus = genus;
    if (genus == 1) {
        // y^2 = x^3 - x
        c.f = {K(0), K(-1), K(0), K(1)};
    } else if (genus == 2) {
        // y^2 = x^5 - x
        c.f = {K(0), K(-1), K(0), K(0), K(0), K(1)};
    } else {
        require(genus == 0, "function field backend supports genus 0, 1, 2");
    }
    return c;
}

// Element a(x) + b(x)*y of the function field, polynomial part only (these
// are exactly the functions regular away from infinity).
template <class K>
struct ff_elem {
    std::vector<K> a, b;

    bool is_zero() const { return a.empty() && b.empty(); }

    friend bool operator==(const ff_elem& u, const ff_elem& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(const ff_elem& u, const ff_elem& v) { return !(u == v); }
};

template <class K>
ff_elem<K> ff_zero() {
    return {};
}

template <class K>
ff_elem<K> ff_const(const K& c) {
    ff_elem<K> e;
    if (!is_zero(c)) e.a = {c};
    return e;
}

// x^i or x^j * y as an element.
template <class K>
ff_elem<K> ff_monomial(int xpow, bool with_y) {
    ff_elem<K> e;
    std::vector<K> v(static_cast<std::size_t>(xpow) + 1, K(0));
    v.back() = K(1);
    if (with_y)
        e.b = std::move(v);
    else
        e.a = std::move(v);
    return e;
}

template <class K>
ff_elem<K> ff_add(const ff_elem<K>& u, const ff_elem<K>& v) {
    ff_elem<K> out;
    out.a = detail::upoly_addk(u.a, v.a);
    out.b = detail::upoly_addk(u.b, v.b);
    return out;
}

template <class K>
ff_elem<K> ff_scale(const K& c, const ff_elem<K>& u) {
    ff_elem<K> out;
    out.a = detail::upoly_scalek(u.a, c);
    out.b = detail::upoly_scalek(u.b, c);
    detail::trim_upoly(out.a);
    detail::trim_upoly(out.b);
    return out;
}

template <class K>
ff_elem<K> ff_mul(const ff_curve<K>& curve, const ff_elem<K>& u, const ff_elem<K>& v) {
    check(curve.genus > 0 || (u.b.empty() && v.b.empty()), "rational function field has no y part");
    ff_elem<K> out;
    out.a = detail::upoly_addk(detail::upoly_mulk(u.a, v.a),
                               detail::upoly_mulk(detail::upoly_mulk(u.b, v.b), curve.f));
    out.b = detail::upoly_addk(detail::upoly_mulk(u.a, v.b), detail::upoly_mulk(u.b, v.a));
    return out;
}

// Pole order at the point at infinity; zero element reports a large negative
// sentinel so callers can treat it uniformly.
template <class K>
int ff_pole_order(const ff_curve<K>& curve, const ff_elem<K>& u) {
    constexpr int minus_infinity = -(1 << 28);
    int p = minus_infinity;
    if (!u.a.empty()) p = std::max(p, curve.pole_x() * (static_cast<int>(u.a.size()) - 1));
    if (!u.b.empty())
        p = std::max(p, curve.pole_x() * (static_cast<int>(u.b.size()) - 1) + curve.pole_y());
    return p;
}

// Monomial basis of the Riemann-Roch space L(N * infinity): x-powers first,
// then x^j*y powers, each in increasing degree.
template <class K>
std::vector<ff_elem<K>> ff_rr_basis(const ff_curve<K>& curve, int N) {
    std::vector<ff_elem<K>> out;
    if (N < 0) return out;
    for (int i = 0; curve.pole_x() * i <= N; ++i) out.push_back(ff_monomial<K>(i, false));
    if (curve.genus > 0)
        for (int j = 0; curve.pole_x() * j + curve.pole_y() <= N; ++j)
            out.push_back(ff_monomial<K>(j, true));
    return out;
}

// Coordinates of u in ff_rr_basis(curve, N); rejects elements outside L(N).
template <class K>
std::vector<K> ff_rr_coords(const ff_curve<K>& curve, const ff_elem<K>& u, int N) {
    check(ff_pole_order(curve, u) <= N, "element lies outside the requested Riemann-Roch space");
    std::size_t nx = 0, ny = 0;
    if (N >= 0) nx = static_cast<std::size_t>(N / curve.pole_x()) + 1;
    if (curve.genus > 0 && N >= curve.pole_y())
        ny = static_cast<std::size_t>((N - curve.pole_y()) / curve.pole_x()) + 1;
    std::vector<K> out(nx + ny, K(0));
    for (std::size_t i = 0; i < u.a.size(); ++i) out[i] = u.a[i];
    for (std::size_t j = 0; j < u.b.size(); ++j) out[nx + j] = u.b[j];
    return out;
}

template <class K>
struct ff_eval_context {
    const ff_curve<K>* curve;
    ff_elem<K> zero() const { return ff_zero<K>(); }
    ff_elem<K> one() const { return ff_const<K>(K(1)); }
    ff_elem<K> mul(const ff_elem<K>& u, const ff_elem<K>& v) const { return ff_mul(*curve, u, v); }
    ff_elem<K> add(const ff_elem<K>& u, const ff_elem<K>& v) const { return ff_add(u, v); }
    ff_elem<K> scale(const K& c, const ff_elem<K>& u) const { return ff_scale(c, u); }
};

}  // namespace syzygy
