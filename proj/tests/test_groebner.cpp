#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzygy/groebner.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/poly.hpp"

using namespace syzygy;

namespace {

using polyq = polynomial<mpq_class>;

std::vector<polyq> parse_all(const ring_ptr& ring, const std::vector<std::string>& texts) {
    std::vector<polyq> out;
    for (const auto& t : texts) out.push_back(parse_polynomial<mpq_class>(ring, t));
    return out;
}

std::vector<polyq> twisted_cubic_gens(const ring_ptr& ring) {
    return parse_all(ring, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
}

}  // namespace

TEST_CASE("parse and print round trip") {
    auto ring = make_projective_ring(3);
    CHECK(to_string(parse_polynomial<mpq_class>(ring, "3*x0^2*x1 - x2^3")) == "3*x0^2*x1 - x2^3");
    CHECK(to_string(parse_polynomial<mpq_class>(ring, "-x0 + 1/2*x1")) == "-x0 + 1/2*x1");
    CHECK(to_string(parse_polynomial<mpq_class>(ring, "x0*x0*x0")) == "x0^3");
    CHECK(to_string(parse_polynomial<mpq_class>(ring, "2*x1 - x1 - x1")) == "0");
    CHECK(to_string(parse_polynomial<mpq_class>(ring, "4/2")) == "2");
    CHECK_THROWS_AS(parse_polynomial<mpq_class>(ring, "y0 + x1"), input_error);
    CHECK_THROWS_AS(parse_polynomial<mpq_class>(ring, "x0 % x1"), input_error);

    auto p = parse_polynomial<mpq_class>(ring, "x0^2 + x1*x2 + x3^2");
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 2);
    auto q = parse_polynomial<mpq_class>(ring, "x0^2 + x1");
    CHECK_FALSE(q.is_homogeneous());
}

TEST_CASE("grevlex ordering basics") {
    auto ring = make_projective_ring(2);
    auto cmp = [&](const std::string& a, const std::string& b) {
        auto pa = parse_polynomial<mpq_class>(ring, a);
        auto pb = parse_polynomial<mpq_class>(ring, b);
        return ring->cmp(pa.lead_monomial(), pb.lead_monomial());
    };
    CHECK(cmp("x0^2", "x0") > 0);           // higher degree wins
    CHECK(cmp("x0*x1", "x1*x2") > 0);       // smaller last exponent wins in a tie
    CHECK(cmp("x0^2", "x0*x1") > 0);
    CHECK(cmp("x2", "x2") == 0);

    auto p = parse_polynomial<mpq_class>(ring, "x2^2 + x0*x1");
    CHECK(to_string(p) == "x0*x1 + x2^2");  // terms stored descending
}

TEST_CASE("buchberger on spec'd small ideals") {
    auto ring = make_projective_ring(3);

    SUBCASE("single binomial is already reduced") {
        auto gens = parse_all(ring, {"x0*x2 - x1^2"});
        auto gb = buchberger(ring, gens);
        REQUIRE(gb.gens.size() == 1);
        CHECK(to_string(gb.gens[0]) == "x1^2 - x0*x2");
    }

    SUBCASE("twisted cubic minors are already a basis") {
        auto gens = twisted_cubic_gens(ring);
        auto gb = buchberger(ring, gens);
        CHECK(gb.gens.size() == 3);
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
                CHECK(normal_form(s_polynomial(gb.gens[i], gb.gens[j]), gb.gens).is_zero());
    }

    SUBCASE("x^2 and xy+y^2 gain y^3") {
        auto r2 = make_ring({"x", "y"});
        auto gens = parse_all(r2, {"x^2", "x*y + y^2"});
        auto gb = buchberger(r2, gens);
        REQUIRE(gb.gens.size() == 3);
        bool found = false;
        for (const auto& g : gb.gens)
            if (to_string(g) == "y^3") found = true;
        CHECK(found);
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
                CHECK(normal_form(s_polynomial(gb.gens[i], gb.gens[j]), gb.gens).is_zero());
    }

    SUBCASE("non-homogeneous input rejected") {
        auto gens = parse_all(ring, {"x0^2 - x1"});
        CHECK_THROWS_AS(buchberger(ring, gens), input_error);
    }
}

TEST_CASE("normal form") {
    // Declared order x > z > y so the binomial's lead is x*z.
    auto rxzy = make_ring({"x", "z", "y"});
    auto g = parse_polynomial<mpq_class>(rxzy, "x*z - y^2");
    CHECK(to_string(g) == "x*z - y^2");
    auto f = parse_polynomial<mpq_class>(rxzy, "x^2*z");
    auto nf = normal_form(f, std::vector<polyq>{g});
    CHECK(to_string(nf) == "x*y^2");
    CHECK(normal_form(nf, std::vector<polyq>{g}) == nf);  // idempotent

    auto ring = make_projective_ring(3);
    auto tc = buchberger(ring, twisted_cubic_gens(ring));
    for (const auto& g : tc.gens) CHECK(normal_form(g, tc.gens).is_zero());
    auto one = parse_polynomial<mpq_class>(ring, "1");
    CHECK(normal_form(one, tc.gens) == one);
}

TEST_CASE("standard monomials of the twisted cubic") {
    auto ring = make_projective_ring(3);
    auto gb = buchberger(ring, twisted_cubic_gens(ring));
    CHECK(standard_monomials(gb, 0).size() == 1);
    CHECK(standard_monomials(gb, 1).size() == 4);
    CHECK(standard_monomials(gb, 2).size() == 7);
    for (int d = 0; d <= 5; ++d)
        CHECK(mpz_class(standard_monomials(gb, d).size()) == hilbert_function(gb, d));
}

TEST_CASE("hilbert function values") {
    auto ring = make_projective_ring(3);
    auto free_gb = buchberger(ring, std::vector<polyq>{});
    CHECK(hilbert_function(free_gb, 2) == 10);

    auto gb = buchberger(ring, twisted_cubic_gens(ring));
    for (int m = 1; m <= 5; ++m) CHECK(hilbert_function(gb, m) == 3 * m + 1);
    CHECK(hilbert_function(gb, 0) == 1);
}

TEST_CASE("hilbert polynomial interpolation") {
    auto ring = make_projective_ring(3);

    SUBCASE("twisted cubic") {
        auto gb = buchberger(ring, twisted_cubic_gens(ring));
        auto hp = hilbert_polynomial(gb);
        CHECK(hp.dimension == 1);
        CHECK(hp.variety_degree == 3);
        CHECK(hp.genus() == 0);
        REQUIRE(hp.coeffs.size() == 2);
        CHECK(hp.coeffs[0] == 1);
        CHECK(hp.coeffs[1] == 3);
        auto ser = series_of(gb);
        for (int m = 1; m <= 8; ++m) CHECK(hp.value(m) == mpq_class(ser.value(m)));
    }

    SUBCASE("projective space itself") {
        auto gb = buchberger(ring, std::vector<polyq>{});
        auto hp = hilbert_polynomial(gb);
        CHECK(hp.dimension == 3);
        CHECK(hp.variety_degree == 1);
        for (int m = 0; m <= 6; ++m)
            CHECK(hp.value(m) == mpq_class(binomial_mpz(m + 3, 3)));
    }

    SUBCASE("whole ring modded out gives the zero polynomial") {
        auto gens = parse_all(ring, {"x0", "x1", "x2", "x3"});
        auto gb = buchberger(ring, gens);
        auto hp = hilbert_polynomial(gb);
        CHECK(hp.dimension == -1);
        CHECK(hp.value(5) == 0);
    }
}

TEST_CASE("elimination") {
    SUBCASE("affine parametrization of a parabola") {
        auto ring = make_ring({"t", "x", "y"});
        auto gens = parse_all(ring, {"x - t", "y - t^2"});
        auto [target, elim] = eliminate(ring, gens, {1, 2});
        REQUIRE(elim.size() == 1);
        CHECK(to_string(elim[0]) == "x^2 - y");
        CHECK(target->names == std::vector<std::string>{"x", "y"});
    }

    SUBCASE("twisted cubic projected into three coordinates") {
        auto ring = make_projective_ring(3);
        auto gens = twisted_cubic_gens(ring);
        auto [target, elim] = eliminate(ring, gens, {0, 2, 3});
        REQUIRE(elim.size() == 1);
        CHECK(elim[0].degree() == 3);
        CHECK(to_string(elim[0]) == "x2^3 - x0*x3^2");

        // Re-embed: the eliminated generator lies in the original ideal.
        auto gb = buchberger(ring, gens);
        auto back = parse_polynomial<mpq_class>(ring, to_string(elim[0]));
        CHECK(normal_form(back, gb.gens).is_zero());
    }

    SUBCASE("eliminating nothing returns the reduced basis") {
        auto ring = make_projective_ring(3);
        auto gens = twisted_cubic_gens(ring);
        auto gb = buchberger(ring, gens);
        auto [target, elim] = eliminate(ring, gens, {0, 1, 2, 3});
        REQUIRE(elim.size() == gb.gens.size());
        for (std::size_t i = 0; i < elim.size(); ++i)
            CHECK(to_string(elim[i]) == to_string(gb.gens[i]));
    }
}

TEST_CASE("linear substitution") {
    auto ring = make_projective_ring(3);
    auto gens = twisted_cubic_gens(ring);

    SUBCASE("identity map changes nothing") {
        std::vector<polyq> forms;
        for (int i = 0; i <= 3; ++i) forms.push_back(polyq::variable(ring, i));
        auto out = substitute_linear(gens, forms, ring);
        REQUIRE(out.size() == gens.size());
        for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == gens[i]);
    }

    SUBCASE("x3 to x0 yields a length-3 points scheme in the plane") {
        auto plane = make_projective_ring(2);
        std::vector<polyq> forms{polyq::variable(plane, 0), polyq::variable(plane, 1),
                                 polyq::variable(plane, 2), polyq::variable(plane, 0)};
        auto out = substitute_linear(gens, forms, plane);
        for (const auto& f : out) CHECK(f.is_homogeneous());
        auto gb = buchberger(plane, out);
        auto hp = hilbert_polynomial(gb);
        CHECK(hp.dimension == 0);
        CHECK(hp.variety_degree == 3);
    }

    SUBCASE("non-linear image rejected") {
        auto plane = make_projective_ring(2);
        std::vector<polyq> forms{polyq::variable(plane, 0), polyq::variable(plane, 1),
                                 polyq::variable(plane, 2),
                                 parse_polynomial<mpq_class>(plane, "x0^2")};
        CHECK_THROWS_AS(substitute_linear(gens, forms, plane), input_error);
        forms[3] = polyq::zero(plane);
        CHECK_THROWS_AS(substitute_linear(gens, forms, plane), input_error);
    }
}

TEST_CASE("elimination block order sorts dropped variables first") {
    auto ring = make_ring({"u", "x", "y"}, order_kind::elimination_block, 1);
    auto p = parse_polynomial<mpq_class>(ring, "u + x^5");
    CHECK(to_string(p) == "u + x^5");  // any power of u dominates kept variables
}
