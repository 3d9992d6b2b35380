#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/model.hpp"

namespace syzygy {

namespace detail {

using polyq = polynomial<mpq_class>;

inline polyq minor2x2(const ring_ptr& ring, int a, int b, int c, int d) {
    // Determinant of [[xa, xb], [xc, xd]].
    return polyq::variable(ring, a) * polyq::variable(ring, d) -
           polyq::variable(ring, b) * polyq::variable(ring, c);
}

// Every generator must vanish identically under the parametrization values.
template <class T, class Ctx>
void assert_parametrized(const std::vector<polyq>& gens, const std::vector<T>& vals, const Ctx& ctx,
                         const std::string& what) {
    for (const auto& g : gens) {
        T image = g.template evaluate<T>(vals, ctx);
        check(image == ctx.zero(), what + ": generator does not vanish on the parametrization");
    }
}

// Ideal of the image of P^1 -> P^r given by the Riemann-Roch basis of
// L(d * infinity) on the curve y^2 = f(x): eliminate the affine coordinates
// u, v from z_i - z_0 * b_i(u, v) together with the curve equation.  The
// image of (u, v, lambda) -> (lambda * b_0, ..., lambda * b_r) is the affine
// cone over the curve, so the eliminated ideal is prime and homogeneous.
inline std::vector<polyq> curve_ideal_by_elimination(const ff_curve<mpq_class>& curve, int d,
                                                     const ring_ptr& target) {
    auto basis = ff_rr_basis(curve, d);
    int r = static_cast<int>(basis.size()) - 1;
    check(target->nvars() == r + 1, "target ring size disagrees with the Riemann-Roch basis");

    std::vector<std::string> names{"u", "v"};
    for (int i = 0; i <= r; ++i) names.push_back(target->names[static_cast<std::size_t>(i)]);
    ring_ptr big = make_ring(names);

    auto upoly_to_poly = [&](const std::vector<mpq_class>& c, int var, const polyq& factor) {
        polyq acc = polyq::zero(big);
        polyq x = polyq::variable(big, var);
        polyq power = polyq::constant(big, 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            acc += power.scaled(c[i]);
            if (i + 1 < c.size()) power *= x;
        }
        return acc * factor;
    };
    auto elem_to_poly = [&](const ff_elem<mpq_class>& u) {
        polyq out = upoly_to_poly(u.a, 0, polyq::constant(big, 1));
        if (curve.genus > 0) out += upoly_to_poly(u.b, 0, polyq::variable(big, 1));
        return out;
    };

    std::vector<polyq> gens;
    if (curve.genus > 0) {
        polyq y = polyq::variable(big, 1);
        gens.push_back(y * y - upoly_to_poly(curve.f, 0, polyq::constant(big, 1)));
    }
    polyq lambda = polyq::variable(big, 2);
    for (int i = 1; i <= r; ++i)
        gens.push_back(polyq::variable(big, 2 + i) - lambda * elem_to_poly(basis[static_cast<std::size_t>(i)]));

    std::vector<int> keep;
    for (int i = 0; i <= r; ++i) keep.push_back(2 + i);
    auto [elim_ring, elim] = eliminate(big, gens, keep);

    std::vector<polyq> out;
    for (const auto& f : elim) {
        require(f.is_homogeneous(), "eliminated curve ideal came out non-homogeneous");
        out.push_back(parse_polynomial<mpq_class>(target, to_string(f)));
    }
    return out;
}

}  // namespace detail

inline model_ptr rational_normal_curve(int a) {
    require(a >= 2, "rational normal curve needs degree at least 2");
    require(a <= 8, "ambient cap exceeded");
    auto m = std::make_shared<embedded_model>();
    m->name = "rational_normal_curve(" + std::to_string(a) + ")";
    m->case_tag = "reg-1 family";
    m->ring = make_projective_ring(a);
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            m->generators.push_back(detail::minor2x2(m->ring, i, j, i + 1, j + 1));
    m->meta = {1, a, a - 1, 0, 1, true, 0};
    m->ff_genus = 0;

    auto curve = make_ff_curve<mpq_class>(0);
    std::vector<ff_elem<mpq_class>> vals = ff_rr_basis(curve, a);
    detail::assert_parametrized(m->generators, vals, ff_eval_context<mpq_class>{&curve}, m->name);

    finish_model(*m);
    return m;
}

inline model_ptr scroll(const std::vector<int>& degrees) {
    require(degrees.size() >= 2, "scroll needs at least two blocks");
    int total = 0;
    for (int a : degrees) {
        require(a >= 1, "scroll block degrees must be positive");
        total += a;
    }
    int k = static_cast<int>(degrees.size());
    require(total + k - 1 <= 9, "ambient cap exceeded");

    auto m = std::make_shared<embedded_model>();
    {
        std::ostringstream nm;
        nm << "scroll(";
        for (int i = 0; i < k; ++i) nm << (i ? "," : "") << degrees[static_cast<std::size_t>(i)];
        nm << ")";
        m->name = nm.str();
    }
    m->case_tag = "reg-1 family";
    m->ring = make_projective_ring(total + k - 1);

    // Column c of the 2-row matrix is (x_{off+j}, x_{off+j+1}) where block i
    // contributes columns j = 0..a_i-1 at variable offset off.
    std::vector<std::pair<int, int>> cols;
    int off = 0;
    for (int i = 0; i < k; ++i) {
        int a = degrees[static_cast<std::size_t>(i)];
        for (int j = 0; j < a; ++j) cols.emplace_back(off + j, off + j + 1);
        off += a + 1;
    }
    for (std::size_t c1 = 0; c1 < cols.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2)
            m->generators.push_back(detail::minor2x2(m->ring, cols[c1].first, cols[c2].first,
                                                     cols[c1].second, cols[c2].second));
    m->meta = {k, total, total - 1, 0, 1, true, 0};

    // Parametrization: x_{block i, j} = u_i * s^(a_i - j) * t^j.
    {
        auto pring = make_ring([&] {
            std::vector<std::string> names{"s", "t"};
            for (int i = 0; i < k; ++i) names.push_back("w" + std::to_string(i));
            return names;
        }());
        using polyq = detail::polyq;
        std::vector<polyq> vals;
        for (int i = 0; i < k; ++i) {
            int a = degrees[static_cast<std::size_t>(i)];
            for (int j = 0; j <= a; ++j) {
                monomial mono = monomial::one(pring->nvars());
                mono.e[0] = a - j;
                mono.e[1] = j;
                mono.e[static_cast<std::size_t>(2 + i)] = 1;
                mono.deg = a + 1;
                vals.push_back(polyq::term(pring, mono, 1));
            }
        }
        detail::assert_parametrized(m->generators, vals, poly_eval_context<mpq_class>{pring}, m->name);
    }

    finish_model(*m);
    return m;
}

inline model_ptr veronese_surface() {
    auto m = std::make_shared<embedded_model>();
    m->name = "veronese_surface()";
    m->case_tag = "reg-1 family";
    m->ring = make_projective_ring(5);

    // Coordinates are the entries z00,z01,z02,z11,z12,z22 of a symmetric
    // 3x3 catalecticant; the 9 minors collapse to 6 distinct quadrics.
    const int sym[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    std::vector<detail::polyq> all;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    all.push_back(detail::minor2x2(m->ring, sym[r1][c1], sym[r1][c2], sym[r2][c1], sym[r2][c2]));
    for (const auto& f : all) {
        auto n = f.normalized();
        bool seen = false;
        for (const auto& g : m->generators)
            if (g == n) seen = true;
        if (!seen) m->generators.push_back(n);
    }
    check(m->generators.size() == 6, "veronese surface should have 6 distinct minors");
    m->meta = {2, 4, 3, 0, 1, true, 0};

    {
        auto pring = make_ring({"s0", "s1", "s2"});
        using polyq = detail::polyq;
        std::vector<polyq> vals;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                vals.push_back(polyq::variable(pring, i) * polyq::variable(pring, j));
        detail::assert_parametrized(m->generators, vals, poly_eval_context<mpq_class>{pring}, m->name);
    }

    finish_model(*m);
    return m;
}

inline model_ptr quadric_hypersurface(int n) {
    require(n >= 1 && n <= 7, "quadric hypersurface dimension must be between 1 and 7");
    auto m = std::make_shared<embedded_model>();
    m->name = "quadric_hypersurface(" + std::to_string(n) + ")";
    m->case_tag = "reg-1 family";
    m->ring = make_projective_ring(n + 1);
    using polyq = detail::polyq;
    polyq q = polyq::zero(m->ring);
    int nv = n + 2;
    for (int i = 0; i + 1 < nv; i += 2) q += polyq::variable(m->ring, i) * polyq::variable(m->ring, i + 1);
    if (nv % 2 == 1) q += polyq::variable(m->ring, nv - 1) * polyq::variable(m->ring, nv - 1);
    m->generators.push_back(q);
    m->meta = {n, 2, 1, 0, 1, true, 0};
    finish_model(*m);
    return m;
}

inline model_ptr elliptic_normal_curve(int d) {
    require(d >= 4 && d <= 7, "elliptic curve degree must be between 4 and 7");
    auto m = std::make_shared<embedded_model>();
    m->name = "elliptic_normal_curve(" + std::to_string(d) + ")";
    m->case_tag = "case (1)";
    m->ring = make_projective_ring(d - 1);
    auto curve = make_ff_curve<mpq_class>(1);
    m->generators = detail::curve_ideal_by_elimination(curve, d, m->ring);
    m->meta = {1, d, d - 2, 1, 2, true, 0};
    m->ff_genus = 1;

    detail::assert_parametrized(m->generators, ff_rr_basis(curve, d), ff_eval_context<mpq_class>{&curve},
                                m->name);
    finish_model(*m);
    return m;
}

inline model_ptr hyperelliptic_curve(int g, int d) {
    require(g == 2, "hyperelliptic catalog covers genus 2");
    require(d >= 7 && d <= 8, "hyperelliptic degree must be 7 or 8");
    auto m = std::make_shared<embedded_model>();
    m->name = "hyperelliptic_curve(" + std::to_string(g) + "," + std::to_string(d) + ")";
    m->case_tag = "case (1)";
    m->ring = make_projective_ring(d - g);
    auto curve = make_ff_curve<mpq_class>(2);
    m->generators = detail::curve_ideal_by_elimination(curve, d, m->ring);
    m->meta = {1, d, d - g - 1, g, 2, true, 0};
    m->ff_genus = 2;

    detail::assert_parametrized(m->generators, ff_rr_basis(curve, d), ff_eval_context<mpq_class>{&curve},
                                m->name);
    finish_model(*m);
    return m;
}

// One seeded hyperplane section: solve a random hyperplane for its pivot
// coordinate and substitute, landing in one dimension less.
inline std::shared_ptr<embedded_model> hyperplane_section(const model_ptr& model, seeded_rng& rng) {
    using polyq = detail::polyq;
    int r = model->ambient();
    require(r >= 2, "hyperplane section needs ambient dimension at least 2");
    ring_ptr target = make_projective_ring(r - 1);

    std::vector<mpq_class> coeffs;
    int pivot = -1;
    for (int i = 0; i <= r; ++i) {
        long c = static_cast<long>(rng.range(-20, 20));
        coeffs.emplace_back(c);
        if (c != 0) pivot = i;
    }
    if (pivot < 0) {
        coeffs.back() = 1;
        pivot = r;
    }

    // Variable i keeps its slot below the pivot and shifts down above it; the
    // pivot itself becomes -(1/c_pivot) * sum of the others.
    std::vector<polyq> forms;
    for (int i = 0; i <= r; ++i) {
        if (i != pivot) {
            int slot = i < pivot ? i : i - 1;
            forms.push_back(polyq::variable(target, slot));
        } else {
            polyq acc = polyq::zero(target);
            for (int j = 0; j <= r; ++j) {
                if (j == pivot) continue;
                int slot = j < pivot ? j : j - 1;
                acc += polyq::variable(target, slot).scaled(-coeffs[static_cast<std::size_t>(j)] /
                                                            coeffs[static_cast<std::size_t>(pivot)]);
            }
            forms.push_back(acc);
        }
    }

    auto sub = std::make_shared<embedded_model>();
    sub->name = model->name + " | hyperplane";
    sub->case_tag = model->case_tag;
    sub->ring = target;
    for (auto& f : substitute_linear(model->generators, forms, target))
        if (!f.is_zero()) sub->generators.push_back(f.normalized());
    sub->meta = model->meta;
    sub->meta.n -= 1;
    sub->meta.e = (r - 1) - sub->meta.n;
    return sub;
}

// General curve section: n-1 seeded hyperplane sections, with the degree and
// sectional genus checked against the parent metadata.  Degenerate cuts are
// reseeded a bounded number of times.
inline model_ptr curve_section(const model_ptr& model, std::uint64_t seed) {
    require(model->meta.n >= 2, "curve section needs a model of dimension at least 2");
    seeded_rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        seeded_rng local = rng.split();
        model_ptr cur = model;
        bool ok = true;
        try {
            while (cur->meta.n > 1) {
                auto next = hyperplane_section(cur, local);
                next->seed = seed;
                finish_model(*next);
                cur = next;
            }
        } catch (const internal_error&) {
            ok = false;
        }
        if (!ok) continue;
        if (cur->meta.d != model->meta.d || cur->meta.g != model->meta.g) continue;
        return cur;
    }
    throw inconclusive_error("curve section stayed degenerate after reseeding: " + model->name);
}

// Recomputed invariants: everything the Hilbert polynomial of the model and
// of its general curve section certifies.  Mismatch with stored metadata is
// a construction bug.
inline model_metadata invariants(const model_ptr& model, std::uint64_t seed = 1) {
    auto hp = hilbert_polynomial(model->gb);
    model_metadata out = model->meta;
    check(hp.dimension == model->meta.n, "stored dimension is wrong: " + model->name);
    check(hp.variety_degree == model->meta.d, "stored degree is wrong: " + model->name);
    check(model->meta.e == model->ambient() - model->meta.n, "stored codimension is wrong: " + model->name);
    mpq_class g = model->meta.n == 1 ? hp.genus() : hilbert_polynomial(curve_section(model, seed)->gb).genus();
    check(g == model->meta.g, "stored sectional genus is wrong: " + model->name);
    return out;
}

// Builds a catalog model from its display name, e.g. "scroll(1,2)".
inline model_ptr build_by_name(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    require(open != std::string::npos && close != std::string::npos && close > open,
            "model name must look like constructor(args)");
    std::string ctor = text.substr(0, open);
    std::string args = text.substr(open + 1, close - open - 1);
    std::vector<int> nums;
    std::stringstream ss(args);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        nums.push_back(std::stoi(piece));
    }
    if (ctor == "rational_normal_curve" || ctor == "rnc") {
        require(nums.size() == 1, "rational_normal_curve takes one degree");
        return rational_normal_curve(nums[0]);
    }
    if (ctor == "scroll") {
        require(!nums.empty(), "scroll needs block degrees");
        return scroll(nums);
    }
    if (ctor == "veronese_surface" || ctor == "veronese") {
        require(nums.empty(), "veronese_surface takes no arguments");
        return veronese_surface();
    }
    if (ctor == "quadric_hypersurface" || ctor == "quadric") {
        require(nums.size() == 1, "quadric_hypersurface takes a dimension");
        return quadric_hypersurface(nums[0]);
    }
    if (ctor == "elliptic_normal_curve" || ctor == "elliptic") {
        require(nums.size() == 1, "elliptic_normal_curve takes a degree");
        return elliptic_normal_curve(nums[0]);
    }
    if (ctor == "hyperelliptic_curve" || ctor == "hyperelliptic") {
        require(nums.size() == 2, "hyperelliptic_curve takes genus and degree");
        return hyperelliptic_curve(nums[0], nums[1]);
    }
    throw input_error("unknown model constructor: " + ctor);
}

}  // namespace syzygy
