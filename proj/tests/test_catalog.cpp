#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/catalog.hpp"
#include "syzygy/section_module.hpp"

using namespace syzygy;

namespace {

std::vector<mpz_class> hf_prefix(const model_ptr& m, int upto) {
    std::vector<mpz_class> out;
    for (int d = 0; d <= upto; ++d) out.push_back(m->series.value(d));
    return out;
}

std::vector<mpz_class> z(const std::vector<long>& v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

void check_meta(const model_ptr& m, int n, int d, int e, int g) {
    CHECK(m->meta.n == n);
    CHECK(m->meta.d == d);
    CHECK(m->meta.e == e);
    CHECK(m->meta.g == g);
    CHECK(m->meta.linearly_normal);
    CHECK(m->meta.t == 0);
    CHECK(m->ambient() == n + e);
}

}  // namespace

TEST_CASE("rational normal curves") {
    auto c3 = rational_normal_curve(3);
    check_meta(c3, 1, 3, 2, 0);
    CHECK(c3->generators.size() == 3);
    CHECK(c3->case_tag == "reg-1 family");
    CHECK(hf_prefix(c3, 3) == z({1, 4, 7, 10}));
    // the twisted cubic quadrics are a Groebner basis of themselves
    auto member = parse_polynomial<mpq_class>(c3->ring, "x0*x2 - x1^2");
    CHECK(normal_form(member, c3->gb.gens).is_zero());

    auto c4 = rational_normal_curve(4);
    check_meta(c4, 1, 4, 3, 0);
    CHECK(c4->generators.size() == 6);
    CHECK(hf_prefix(c4, 2) == z({1, 5, 9}));

    auto c5 = rational_normal_curve(5);
    check_meta(c5, 1, 5, 4, 0);
    CHECK(c5->generators.size() == 10);

    CHECK_THROWS_AS(rational_normal_curve(1), input_error);
    CHECK_THROWS_AS(rational_normal_curve(9), input_error);
}

TEST_CASE("scrolls and veronese") {
    auto s12 = scroll({1, 2});
    check_meta(s12, 2, 3, 2, 0);
    CHECK(s12->generators.size() == 3);
    CHECK(s12->case_tag == "reg-1 family");

    auto s22 = scroll({2, 2});
    check_meta(s22, 2, 4, 3, 0);
    CHECK(s22->generators.size() == 6);

    auto s112 = scroll({1, 1, 2});
    check_meta(s112, 3, 4, 3, 0);

    auto v = veronese_surface();
    check_meta(v, 2, 4, 3, 0);
    CHECK(v->generators.size() == 6);
    CHECK(hf_prefix(v, 2) == z({1, 6, 15}));

    CHECK_THROWS_AS(scroll({7, 2}), input_error);
    CHECK_THROWS_AS(scroll({3}), input_error);
}

TEST_CASE("quadric hypersurfaces") {
    auto q2 = quadric_hypersurface(2);
    check_meta(q2, 2, 2, 1, 0);
    CHECK(q2->generators.size() == 1);
    CHECK(to_string(q2->generators[0]) == "x0*x1 + x2*x3");

    auto q3 = quadric_hypersurface(3);
    check_meta(q3, 3, 2, 1, 0);
    CHECK(to_string(q3->generators[0]) == "x0*x1 + x2*x3 + x4^2");

    CHECK_THROWS_AS(quadric_hypersurface(0), input_error);
}

TEST_CASE("elliptic normal curves") {
    auto e5 = elliptic_normal_curve(5);
    check_meta(e5, 1, 5, 3, 1);
    CHECK(e5->meta.gonality == 2);
    CHECK(e5->case_tag == "case (1)");
    CHECK(e5->ff_genus == 1);
    CHECK(hf_prefix(e5, 4) == z({1, 5, 10, 15, 20}));

    // quintic ideal: 5 independent quadrics
    int quadrics = 0;
    for (const auto& f : e5->gb.gens)
        if (f.degree() == 2) ++quadrics;
    CHECK(quadrics == 5);

    auto e4 = elliptic_normal_curve(4);
    check_meta(e4, 1, 4, 2, 1);
    CHECK(hf_prefix(e4, 3) == z({1, 4, 8, 12}));
    int deg2 = 0, deg3 = 0;
    for (const auto& f : e4->gb.gens) {
        if (f.degree() == 2) ++deg2;
        if (f.degree() == 3) ++deg3;
    }
    CHECK(deg2 == 2);
    CHECK(deg3 == 1);

    auto e6 = elliptic_normal_curve(6);
    check_meta(e6, 1, 6, 4, 1);
    auto e7 = elliptic_normal_curve(7);
    check_meta(e7, 1, 7, 5, 1);

    CHECK_THROWS_AS(elliptic_normal_curve(3), input_error);
    CHECK_THROWS_AS(elliptic_normal_curve(8), input_error);

    // constructors are deterministic
    auto again = elliptic_normal_curve(5);
    REQUIRE(again->generators.size() == e5->generators.size());
    for (std::size_t i = 0; i < again->generators.size(); ++i)
        CHECK(to_string(again->generators[i]) == to_string(e5->generators[i]));
}

TEST_CASE("hyperelliptic curves") {
    auto h7 = hyperelliptic_curve(2, 7);
    check_meta(h7, 1, 7, 4, 2);
    CHECK(h7->meta.gonality == 2);
    CHECK(h7->ff_genus == 2);
    CHECK(hf_prefix(h7, 4) == z({1, 6, 13, 20, 27}));

    auto h8 = hyperelliptic_curve(2, 8);
    check_meta(h8, 1, 8, 5, 2);
    CHECK(hf_prefix(h8, 4) == z({1, 7, 15, 23, 31}));

    CHECK_THROWS_AS(hyperelliptic_curve(3, 9), input_error);
    CHECK_THROWS_AS(hyperelliptic_curve(2, 6), input_error);
}

TEST_CASE("recomputed invariants match stored metadata") {
    auto m1 = invariants(elliptic_normal_curve(5));
    CHECK(m1.n == 1);
    CHECK(m1.d == 5);
    CHECK(m1.e == 3);
    CHECK(m1.g == 1);

    auto m2 = invariants(scroll({1, 2}));
    CHECK(m2.n == 2);
    CHECK(m2.d == 3);
    CHECK(m2.e == 2);
    CHECK(m2.g == 0);

    auto m3 = invariants(veronese_surface());
    CHECK(m3.n == 2);
    CHECK(m3.d == 4);
    CHECK(m3.e == 3);
    CHECK(m3.g == 0);
}

TEST_CASE("curve sections of surfaces") {
    auto s = curve_section(scroll({1, 2}), 1);
    CHECK(s->meta.n == 1);
    CHECK(s->meta.d == 3);
    CHECK(s->meta.g == 0);
    CHECK(s->ambient() == 3);

    auto t = curve_section(scroll({2, 2}), 1);
    CHECK(t->meta.n == 1);
    CHECK(t->meta.d == 4);
    CHECK(t->meta.g == 0);
    CHECK(t->ambient() == 4);

    auto c = curve_section(quadric_hypersurface(2), 1);
    CHECK(c->meta.n == 1);
    CHECK(c->meta.d == 2);
    CHECK(c->meta.g == 0);
    CHECK(c->ambient() == 2);

    auto v = curve_section(veronese_surface(), 1);
    CHECK(v->meta.n == 1);
    CHECK(v->meta.d == 4);
    CHECK(v->meta.g == 0);
}

TEST_CASE("prime field view keeps the leading term ideal") {
    auto e5 = elliptic_normal_curve(5);
    auto gfp = fp_view(*e5);
    CHECK(gfp.gens.size() == e5->gb.gens.size());
    for (int d = 0; d <= 3; ++d)
        CHECK(standard_monomials(gfp, d).size() == standard_monomials(e5->gb, d).size());

    auto h7 = hyperelliptic_curve(2, 7);
    auto hfp = fp_view(*h7);
    for (int d = 0; d <= 3; ++d)
        CHECK(standard_monomials(hfp, d).size() == standard_monomials(h7->gb, d).size());
}

TEST_CASE("model json round trip") {
    for (const auto& m : {elliptic_normal_curve(5), rational_normal_curve(4), veronese_surface()}) {
        auto j = model_to_json(*m);
        auto back = model_from_json(j, [](const std::string&) -> model_ptr { return nullptr; });
        CHECK(model_to_json(*back) == j);
        CHECK(back->series.value(2) == m->series.value(2));
    }
}

TEST_CASE("models build from display names") {
    CHECK(build_by_name("rational_normal_curve(4)")->name == "rational_normal_curve(4)");
    CHECK(build_by_name("rnc(4)")->name == "rational_normal_curve(4)");
    CHECK(build_by_name("scroll(1,2)")->meta.n == 2);
    CHECK(build_by_name("veronese()")->meta.d == 4);
    CHECK(build_by_name("quadric(3)")->meta.n == 3);
    CHECK(build_by_name("elliptic(6)")->meta.g == 1);
    CHECK(build_by_name("hyperelliptic(2,7)")->meta.g == 2);
    CHECK_THROWS_AS(build_by_name("abelian(2)"), input_error);
    CHECK_THROWS_AS(build_by_name("rnc"), input_error);
}

TEST_CASE("riemann roch spaces and curve cohomology") {
    auto g2 = make_ff_curve<mpq_class>(2);
    CHECK(ff_rr_basis(g2, 7).size() == 6);
    CHECK(ff_rr_basis(g2, 8).size() == 7);
    CHECK(ff_rr_basis(g2, 2).size() == 2);   // canonical space {1, x}
    CHECK(ff_rr_basis(g2, 1).size() == 1);
    auto g1 = make_ff_curve<mpq_class>(1);
    CHECK(ff_rr_basis(g1, 5).size() == 5);
    CHECK(ff_rr_basis(g1, 0).size() == 1);
    auto g0 = make_ff_curve<mpq_class>(0);
    CHECK(ff_rr_basis(g0, 3).size() == 4);
    CHECK(ff_rr_basis(g0, -1).empty());

    CHECK(h0_curve(1, 5, 1) == 5);
    CHECK(h0_curve(1, 5, 0) == 1);
    CHECK(h1_curve(1, 5, 0) == 1);
    CHECK(h1_curve(1, 5, 1) == 0);
    CHECK(h1_curve(2, 7, 0) == 2);
    CHECK(h1_curve(0, 3, -1) == 2);
    CHECK(h0_curve(2, 7, 2) == 13);
}

TEST_CASE("normality defects vanish on linearly normal models") {
    for (const auto& m : {elliptic_normal_curve(6), hyperelliptic_curve(2, 7), rational_normal_curve(5)})
        for (int k = 0; k <= 4; ++k) CHECK(normality_defect(m, k) == 0);
}

TEST_CASE("ideal sheaf regularity") {
    CHECK(sheaf_regularity(rational_normal_curve(3)) == 2);
    CHECK(sheaf_regularity(rational_normal_curve(5)) == 2);
    CHECK(sheaf_regularity(scroll({1, 2})) == 2);
    CHECK(sheaf_regularity(scroll({2, 2})) == 2);
    CHECK(sheaf_regularity(veronese_surface()) == 2);
    CHECK(sheaf_regularity(quadric_hypersurface(2)) == 2);
    CHECK(sheaf_regularity(elliptic_normal_curve(5)) == 3);
    CHECK(sheaf_regularity(elliptic_normal_curve(7)) == 3);
    CHECK(sheaf_regularity(hyperelliptic_curve(2, 7)) == 3);
    CHECK(sheaf_regularity(hyperelliptic_curve(2, 8)) == 3);
}

TEST_CASE("section modules expose graded pieces and multiplication") {
    auto c3 = rational_normal_curve(3);
    auto M = section_module<mpq_class>(c3, twist_tag::zero, -1, 2);
    CHECK(M.vdim == 4);
    CHECK(M.dim(-1) == 0);
    CHECK(M.dim(0) == 1);
    CHECK(M.dim(1) == 4);
    CHECK(M.dim(2) == 7);
    CHECK(M.dim(5) == 0);  // outside the window
    CHECK_THROWS_AS(M.mul(0, 2), input_error);

    // multiplication by x0 out of degree 0 hits the first basis vector
    const auto& A = M.mul(0, 0);
    CHECK(A.rows() == 4);
    CHECK(A.cols() == 1);
    CHECK(A.entry_count() == 1);

    // canonical twist of a genus 0 curve: piece q has dimension aq - 1
    auto MK = section_module<mpq_class>(c3, twist_tag::canonical, -1, 2);
    CHECK(MK.dim(0) == 0);
    CHECK(MK.dim(1) == 2);
    CHECK(MK.dim(2) == 5);

    // canonical twist of a genus 2 curve starts at the canonical space
    auto h7 = hyperelliptic_curve(2, 7);
    auto HK = section_module<mpq_class>(h7, twist_tag::canonical, -1, 1);
    CHECK(HK.dim(-1) == 0);
    CHECK(HK.dim(0) == 2);
    CHECK(HK.dim(1) == 8);

    // both backends agree on the graded dimensions
    auto F = section_module_ff<mpq_class>(c3, -1, 2);
    for (int q = -1; q <= 2; ++q) CHECK(F.dim(q) == M.dim(q));
}
