#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzygy/function_field.hpp"
#include "syzygy/groebner.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/poly.hpp"

namespace syzygy {

struct model_metadata {
    int n = 0;  // dimension
    int d = 0;  // degree
    int e = 0;  // codimension r - n
    int g = 0;  // sectional genus
    int gonality = 0;  // gonality of the general curve section; 0 when not recorded
    bool linearly_normal = true;
    int t = 0;  // codimension of V inside the full space of linear forms on X
};

struct embedded_model;
using model_ptr = std::shared_ptr<const embedded_model>;

struct embedded_model {
    std::string name;
    std::string case_tag;
    ring_ptr ring;
    std::vector<polynomial<mpq_class>> generators;
    groebner_basis<mpq_class> gb;
    hilbert_series series;
    model_metadata meta;

    // Projection bookkeeping: root is the linearly normal model this one was
    // cut out of; subspace holds the V basis as linear forms on the root.
    // Both stay empty for linearly normal models (the model is its own root).
    model_ptr parent;
    std::vector<polynomial<mpq_class>> parent_subspace;
    std::uint64_t seed = 0;

    // Curves built from an explicit affine model keep their function field
    // genus here; coordinate i of the root corresponds to entry i of
    // ff_rr_basis(curve, d).  Negative means no such backing.
    int ff_genus = -1;

    int ambient() const { return ring->nvars() - 1; }
    const embedded_model* root() const { return parent ? parent.get() : this; }
    bool has_function_field() const { return root()->ff_genus >= 0; }
};

// Computes the cached algebra and checks the metadata a model can certify
// from its own Hilbert polynomial: dimension, degree, codimension, and genus
// when the model is itself a curve.
inline void finish_model(embedded_model& m) {
    for (const auto& f : m.generators) require(f.is_homogeneous(), "model generators must be homogeneous");
    m.gb = buchberger(m.ring, m.generators);
    m.series = series_of(m.gb);
    auto hp = hilbert_polynomial(m.gb);
    check(hp.dimension == m.meta.n, "model dimension disagrees with its Hilbert polynomial");
    check(hp.variety_degree == m.meta.d, "model degree disagrees with its Hilbert polynomial");
    check(m.meta.e == m.ambient() - m.meta.n, "codimension must equal ambient minus dimension");
    if (m.meta.n == 1) check(hp.genus() == m.meta.g, "curve genus disagrees with its Hilbert polynomial");
    if (m.meta.linearly_normal) {
        check(!m.parent, "linearly normal model cannot have a projection parent");
        check(m.meta.t == 0, "linearly normal model must have t = 0");
        check(m.series.value(1) == m.ambient() + 1, "linearly normal model must span its ambient space");
    } else {
        check(m.parent != nullptr, "projected model needs its linearly normal root");
        check(static_cast<int>(m.parent_subspace.size()) == m.ambient() + 1,
              "subspace basis must have ambient + 1 forms");
    }
}

// Reduction of the model's ideal modulo the session prime.  The leading term
// ideal must match the rational one, otherwise the prime is unusable for
// this model and only the rational mode can serve as arbiter.
inline groebner_basis<fp> fp_view(const embedded_model& m) {
    std::vector<polynomial<fp>> gens;
    for (const auto& f : m.generators) {
        polynomial<fp> h = polynomial<fp>::zero(m.ring);
        for (const auto& [mono, c] : f.terms()) h += polynomial<fp>::term(m.ring, mono, field_traits<fp>::from_mpq(c));
        gens.push_back(h);
    }
    auto gb = buchberger(m.ring, gens);
    bool same = gb.gens.size() == m.gb.gens.size();
    for (std::size_t i = 0; same && i < gb.gens.size(); ++i)
        if (!(gb.gens[i].lead_monomial() == m.gb.gens[i].lead_monomial())) same = false;
    if (!same)
        throw inconclusive_error("prime " + std::to_string(fp::modulus()) +
                                 " changes the leading term ideal of " + m.name +
                                 "; rerun in rational mode");
    return gb;
}

inline nlohmann::ordered_json model_to_json(const embedded_model& m) {
    nlohmann::ordered_json j;
    j["name"] = m.name;
    j["case_tag"] = m.case_tag;
    j["ambient"] = m.ambient();
    j["variables"] = m.ring->names;
    std::vector<std::string> gens;
    for (const auto& f : m.generators) gens.push_back(to_string(f));
    j["generators"] = gens;
    j["metadata"] = {{"n", m.meta.n},
                     {"d", m.meta.d},
                     {"e", m.meta.e},
                     {"g", m.meta.g},
                     {"gonality", m.meta.gonality},
                     {"linearly_normal", m.meta.linearly_normal},
                     {"t", m.meta.t}};
    j["root"] = m.parent ? nlohmann::ordered_json(m.parent->name) : nlohmann::ordered_json(nullptr);
    std::vector<std::string> sub;
    for (const auto& f : m.parent_subspace) sub.push_back(to_string(f));
    j["parent_subspace"] = sub;
    j["seed"] = m.seed;
    j["ff_genus"] = m.ff_genus;
    return j;
}

// The resolver maps a root model name back to a constructed model, so a
// serialized projection can reattach to its linearly normal source.
inline model_ptr model_from_json(const nlohmann::ordered_json& j,
                                 const std::function<model_ptr(const std::string&)>& resolve_root) {
    auto m = std::make_shared<embedded_model>();
    m->name = j.at("name").get<std::string>();
    m->case_tag = j.at("case_tag").get<std::string>();
    m->ring = make_ring(j.at("variables").get<std::vector<std::string>>());
    require(m->ring->nvars() == j.at("ambient").get<int>() + 1, "ambient and variable count disagree");
    for (const auto& s : j.at("generators").get<std::vector<std::string>>())
        m->generators.push_back(parse_polynomial<mpq_class>(m->ring, s));
    const auto& md = j.at("metadata");
    m->meta.n = md.at("n").get<int>();
    m->meta.d = md.at("d").get<int>();
    m->meta.e = md.at("e").get<int>();
    m->meta.g = md.at("g").get<int>();
    m->meta.gonality = md.at("gonality").get<int>();
    m->meta.linearly_normal = md.at("linearly_normal").get<bool>();
    m->meta.t = md.at("t").get<int>();
    m->seed = j.at("seed").get<std::uint64_t>();
    m->ff_genus = j.at("ff_genus").get<int>();
    if (!j.at("root").is_null()) {
        m->parent = resolve_root(j.at("root").get<std::string>());
        require(m->parent != nullptr, "could not resolve the projection root model");
        for (const auto& s : j.at("parent_subspace").get<std::vector<std::string>>())
            m->parent_subspace.push_back(parse_polynomial<mpq_class>(m->parent->ring, s));
    }
    finish_model(*m);
    return m;
}

}  // namespace syzygy
