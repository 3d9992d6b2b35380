#pragma once

#include <map>
#include <string>
#include <vector>

#include "syzygy/catalog.hpp"
#include "syzygy/model.hpp"
#include "syzygy/sparse.hpp"

namespace syzygy {

// Graded module over the symmetric algebra on V, presented as piece
// dimensions in a degree window plus the multiplication map of every V basis
// vector from each piece to the next.
template <class K>
struct graded_module {
    std::string label;
    int q_lo = 0;
    int q_hi = 0;
    int vdim = 0;
    std::vector<std::string> v_labels;
    std::vector<int> dims;                          // piece q has dims[q - q_lo]
    std::vector<std::vector<sparse_matrix<K>>> mult;  // mult[v][q - q_lo] : piece q -> piece q+1

    int dim(int q) const {
        if (q < q_lo || q > q_hi) return 0;
        return dims[static_cast<std::size_t>(q - q_lo)];
    }

    // Multiplication by v out of piece q; valid for q_lo <= q < q_hi.
    const sparse_matrix<K>& mul(int v, int q) const {
        require(q >= q_lo && q < q_hi,
                label + ": multiplication window covers degrees [" + std::to_string(q_lo) + "," +
                    std::to_string(q_hi) + "] but degree " + std::to_string(q) + " -> " +
                    std::to_string(q + 1) + " was requested");
        return mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(q - q_lo)];
    }
};

namespace detail {

// Multiplication by different linear forms must commute piece-wise.
template <class K>
void assert_module_commutes(const graded_module<K>& M) {
    for (int v1 = 0; v1 < M.vdim; ++v1)
        for (int v2 = v1 + 1; v2 < M.vdim; ++v2)
            for (int q = M.q_lo; q + 1 < M.q_hi; ++q) {
                auto ab = compose(M.mul(v2, q + 1), M.mul(v1, q));
                auto ba = compose(M.mul(v1, q + 1), M.mul(v2, q));
                check(ab == ba, M.label + ": multiplication maps do not commute");
            }
}

}  // namespace detail

// Pieces are the standard monomials of the quotient ring; multiplication is
// polynomial multiplication followed by normal form.
template <class K>
graded_module<K> module_from_ring(const groebner_basis<K>& gb, const std::vector<polynomial<K>>& v_forms,
                                  int q_lo, int q_hi, const std::string& label) {
    require(q_lo <= q_hi, "empty module window");
    graded_module<K> M;
    M.label = label;
    M.q_lo = q_lo;
    M.q_hi = q_hi;
    M.vdim = static_cast<int>(v_forms.size());
    for (const auto& f : v_forms) {
        require(!f.is_zero() && f.is_homogeneous() && f.degree() == 1,
                label + ": V basis must consist of linear forms");
        M.v_labels.push_back(to_string(f));
    }

    std::vector<std::vector<monomial>> bases;
    std::vector<std::map<std::vector<int>, int>> index;
    for (int q = q_lo; q <= q_hi; ++q) {
        std::vector<monomial> b = q < 0 ? std::vector<monomial>{} : standard_monomials(gb, q);
        std::map<std::vector<int>, int> ix;
        for (std::size_t i = 0; i < b.size(); ++i) ix[b[i].e] = static_cast<int>(i);
        M.dims.push_back(static_cast<int>(b.size()));
        bases.push_back(std::move(b));
        index.push_back(std::move(ix));
    }

    M.mult.resize(static_cast<std::size_t>(M.vdim));
    for (int v = 0; v < M.vdim; ++v) {
        for (int q = q_lo; q < q_hi; ++q) {
            std::size_t qi = static_cast<std::size_t>(q - q_lo);
            sparse_matrix<K> A(M.dims[qi + 1], M.dims[qi]);
            for (int col = 0; col < M.dims[qi]; ++col) {
                auto prod = normal_form(
                    v_forms[static_cast<std::size_t>(v)].times_term(bases[qi][static_cast<std::size_t>(col)],
                                                                    field_traits<K>::one()),
                    gb.gens);
                for (const auto& [mono, c] : prod.terms()) {
                    auto it = index[qi + 1].find(mono.e);
                    check(it != index[qi + 1].end(), label + ": product left the standard monomial basis");
                    A.add(it->second, col, c);
                }
            }
            M.mult[static_cast<std::size_t>(v)].push_back(std::move(A));
        }
    }
    detail::assert_module_commutes(M);
    return M;
}

// Pieces are Riemann-Roch spaces L(twist + q*d) at the point at infinity;
// multiplication happens in the function field.
template <class K>
graded_module<K> module_from_ff(const ff_curve<K>& curve, int d, const std::vector<ff_elem<K>>& v_basis,
                                const std::vector<std::string>& v_labels, int twist_deg, int q_lo,
                                int q_hi, const std::string& label) {
    require(q_lo <= q_hi, "empty module window");
    graded_module<K> M;
    M.label = label;
    M.q_lo = q_lo;
    M.q_hi = q_hi;
    M.vdim = static_cast<int>(v_basis.size());
    M.v_labels = v_labels;
    check(v_labels.size() == v_basis.size(), "one label per V basis vector");
    for (const auto& v : v_basis)
        check(ff_pole_order(curve, v) <= d, label + ": V basis vector lies outside L(d)");

    std::vector<std::vector<ff_elem<K>>> bases;
    for (int q = q_lo; q <= q_hi; ++q) {
        bases.push_back(ff_rr_basis(curve, twist_deg + q * d));
        M.dims.push_back(static_cast<int>(bases.back().size()));
    }

    M.mult.resize(static_cast<std::size_t>(M.vdim));
    for (int v = 0; v < M.vdim; ++v) {
        for (int q = q_lo; q < q_hi; ++q) {
            std::size_t qi = static_cast<std::size_t>(q - q_lo);
            sparse_matrix<K> A(M.dims[qi + 1], M.dims[qi]);
            for (int col = 0; col < M.dims[qi]; ++col) {
                auto prod = ff_mul(curve, v_basis[static_cast<std::size_t>(v)],
                                   bases[qi][static_cast<std::size_t>(col)]);
                auto coords = ff_rr_coords(curve, prod, twist_deg + (q + 1) * d);
                for (std::size_t row = 0; row < coords.size(); ++row)
                    if (!is_zero(coords[row])) A.add(static_cast<int>(row), col, coords[row]);
            }
            M.mult[static_cast<std::size_t>(v)].push_back(std::move(A));
        }
    }
    detail::assert_module_commutes(M);
    return M;
}

enum class twist_tag { zero, canonical };

namespace detail {

template <class K>
polynomial<K> convert_poly(const polynomial<mpq_class>& f, const ring_ptr& ring) {
    polynomial<K> out = polynomial<K>::zero(ring);
    for (const auto& [mono, c] : f.terms()) out += polynomial<K>::term(ring, mono, field_traits<K>::from_mpq(c));
    return out;
}

// V basis of a model as linear forms on its linearly normal root.
inline std::vector<polynomial<mpq_class>> v_basis_on_root(const embedded_model& m) {
    if (!m.parent) {
        std::vector<polynomial<mpq_class>> out;
        for (int i = 0; i < m.ring->nvars(); ++i) out.push_back(polynomial<mpq_class>::variable(m.ring, i));
        return out;
    }
    return m.parent_subspace;
}

template <class K>
groebner_basis<K> gb_view(const embedded_model& m);

template <>
inline groebner_basis<mpq_class> gb_view<mpq_class>(const embedded_model& m) {
    return m.gb;
}

template <>
inline groebner_basis<fp> gb_view<fp>(const embedded_model& m) {
    return fp_view(m);
}

}  // namespace detail

// Section module R(X, B, H) = sum of H^0(X, B + qH) as a module over Sym(V),
// with V the model's (possibly incomplete) space of linear forms expressed on
// the linearly normal root.  The canonical twist is available for catalog
// curves through their function field.
namespace detail {

// V basis of a model as function field elements, via the root's coordinate
// dictionary x_i <-> ff_rr_basis entry i.
template <class K>
std::pair<std::vector<ff_elem<K>>, std::vector<std::string>> ff_v_basis(const embedded_model& m,
                                                                        const ff_curve<K>& curve) {
    const embedded_model* root = m.root();
    auto full = ff_rr_basis(curve, root->meta.d);
    std::vector<ff_elem<K>> v_basis;
    std::vector<std::string> labels;
    for (const auto& f : v_basis_on_root(m)) {
        ff_elem<K> acc = ff_zero<K>();
        for (const auto& [mono, c] : f.terms()) {
            int var = -1;
            for (std::size_t i = 0; i < mono.e.size(); ++i)
                if (mono.e[i] == 1) var = static_cast<int>(i);
            acc = ff_add(acc, ff_scale(field_traits<K>::from_mpq(c), full[static_cast<std::size_t>(var)]));
        }
        v_basis.push_back(acc);
        labels.push_back(to_string(f));
    }
    return {v_basis, labels};
}

}  // namespace detail

template <class K>
graded_module<K> section_module(const model_ptr& model, twist_tag B, int q_lo, int q_hi) {
    const embedded_model* root = model->root();
    if (B == twist_tag::zero) {
        auto gb = detail::gb_view<K>(*root);
        std::vector<polynomial<K>> forms;
        for (const auto& f : detail::v_basis_on_root(*model))
            forms.push_back(detail::convert_poly<K>(f, root->ring));
        return module_from_ring(gb, forms, q_lo, q_hi, model->name + " section module");
    }
    require(model->has_function_field(),
            "canonical twist needs a catalog curve with function field data: " + model->name);
    require(root->meta.n == 1, "canonical twist is defined for curve models");
    auto curve = make_ff_curve<K>(root->ff_genus);
    auto [v_basis, labels] = detail::ff_v_basis(*model, curve);
    int twist_deg = 2 * root->ff_genus - 2;
    return module_from_ff(curve, root->meta.d, v_basis, labels, twist_deg, q_lo, q_hi,
                          model->name + " canonical module");
}

// Same curve module built directly in the function field; used to cross-check
// the coordinate ring backend.
template <class K>
graded_module<K> section_module_ff(const model_ptr& model, int q_lo, int q_hi) {
    const embedded_model* root = model->root();
    require(model->has_function_field(), "function field backend needs a catalog curve: " + model->name);
    auto curve = make_ff_curve<K>(root->ff_genus);
    auto [v_basis, labels] = detail::ff_v_basis(*model, curve);
    return module_from_ff(curve, root->meta.d, v_basis, labels, 0, q_lo, q_hi,
                          model->name + " section module (ff)");
}

// The model's own homogeneous coordinate ring as a module over its own
// linear forms.  For a projected model this differs from the section module
// exactly by the normality defects.
template <class K>
graded_module<K> coordinate_ring_module(const model_ptr& model, int q_lo, int q_hi) {
    auto gb = detail::gb_view<K>(*model);
    std::vector<polynomial<K>> forms;
    for (int i = 0; i < model->ring->nvars(); ++i) forms.push_back(polynomial<K>::variable(model->ring, i));
    return module_from_ring(gb, forms, q_lo, q_hi, model->name + " coordinate ring");
}

// ---- exact curve cohomology ------------------------------------------------
//
// For a curve of genus g embedded by a degree-d divisor with d >= 2g-1, the
// cohomology of O_C(kH) follows from Riemann-Roch alone.

inline mpz_class h0_curve(int g, int d, int k) {
    require(d >= 2 * g - 1, "curve degree too small for closed-form cohomology");
    if (k < 0) return 0;
    if (k == 0) return 1;
    return mpz_class(k) * d - g + 1;
}

inline mpz_class h1_curve(int g, int d, int k) {
    mpz_class rr = mpz_class(k) * d - g + 1;
    return h0_curve(g, d, k) - rr;
}

// Failure of m-normality: corank of Sym^m V -> H^0(X, O_X(m)).
inline mpz_class normality_defect(const model_ptr& model, int m) {
    if (m < 0) return 0;
    mpz_class full = model->root()->series.value(m);
    mpz_class image = model->series.value(m);
    mpz_class defect = full - image;
    check(defect >= 0, "normality defect came out negative: " + model->name);
    return defect;
}

// Castelnuovo-Mumford regularity of the ideal sheaf of a curve model:
// smallest m with H^1(I_X(m-1)) = H^2(I_X(m-2)) = 0; vanishing propagates
// upward, so the scan is exact.  H^1(I_X(k)) is the k-normality defect and
// H^2(I_X(k)) = H^1(O_C(k)).
inline int sheaf_regularity_curve(const model_ptr& model) {
    require(model->meta.n == 1, "sheaf regularity scan expects a curve model");
    int g = model->meta.g, d = model->meta.d;
    for (int m = 1; m <= d + 3; ++m)
        if (normality_defect(model, m - 1) == 0 && h1_curve(g, d, m - 2) == 0) return m;
    throw inconclusive_error("regularity scan did not terminate: " + model->name);
}

// Regularity of any catalog model: curves directly; higher dimensions reduce
// to the general curve section, whose section ring has the same syzygies.
inline int sheaf_regularity(const model_ptr& model, std::uint64_t seed = 1) {
    if (model->meta.n == 1) return sheaf_regularity_curve(model);
    return sheaf_regularity_curve(curve_section(model, seed));
}

}  // namespace syzygy
