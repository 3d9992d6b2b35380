#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "syzygy/catalog.hpp"
#include "syzygy/verify.hpp"

using namespace syzygy;

TEST_CASE("status semantics of the verification report") {
    verification_report rep;
    rep.theorem = "demo";
    rep.model = "demo model";
    rep.hypotheses.push_back({"always", true, false, ""});
    rep.conclusions.push_back({"first", true, false, ""});
    rep.conclusions.push_back({"second", true, true, "note"});
    rep.finalize();
    CHECK(rep.status == "pass");

    rep.conclusions[1].holds = false;
    rep.finalize();
    CHECK(rep.status == "fail");

    rep.hypotheses[0].holds = false;
    rep.finalize();
    CHECK(rep.status == "hypothesis-not-met");

    auto j = verification_to_json(rep);
    CHECK(j["theorem"] == "demo");
    CHECK(j["status"] == "hypothesis-not-met");
    CHECK(j["hypotheses"].size() == 1);
    CHECK(j["conclusions"][1]["catalog_asserted"] == true);
    auto text = render_verification(rep);
    CHECK(text.find("status: hypothesis-not-met") != std::string::npos);
    CHECK(text.find("[NO] always") != std::string::npos);
}

TEST_CASE("minimal degree characterization") {
    auto rep = verify_minimal_degree(rational_normal_curve(4));
    CHECK(rep.status == "pass");
    CHECK(rep.conclusions.size() == 3);

    auto quad = verify_minimal_degree(quadric_hypersurface(2));
    CHECK(quad.status == "pass");

    auto ell = verify_minimal_degree(elliptic_normal_curve(5));
    CHECK(ell.status == "pass");
    CHECK(ell.conclusions.size() == 1);
    CHECK(ell.conclusions[0].note.find("reg=3") != std::string::npos);
}

TEST_CASE("property nk for linearly normal models") {
    auto rep = verify_thm12_linearly_normal(elliptic_normal_curve(5), 2);
    CHECK(rep.status == "pass");
    CHECK(rep.conclusions.size() == 1);
    CHECK(rep.conclusions[0].note == "N_2");

    auto out = verify_thm12_linearly_normal(elliptic_normal_curve(5), 3);
    CHECK(out.status == "hypothesis-not-met");
    CHECK(out.conclusions.empty());

    auto hyp = verify_thm12_linearly_normal(hyperelliptic_curve(2, 7), 2);
    CHECK(hyp.status == "pass");

    CHECK_THROWS_AS(verify_thm12_linearly_normal(elliptic_normal_curve(5), 0), input_error);
}

TEST_CASE("row ranges of projected curves") {
    auto rep = verify_thm12_projected(elliptic_normal_curve(5), 1, 7);
    CHECK(rep.status == "pass");
    CHECK(rep.seed_chain.size() == 1);
    CHECK(rep.conclusions.size() == 7);
    for (const auto& c : rep.conclusions) CHECK(c.holds);

    auto small = verify_thm12_projected(elliptic_normal_curve(4), 1, 7);
    CHECK(small.status == "hypothesis-not-met");

    CHECK_THROWS_AS(verify_thm12_projected(elliptic_normal_curve(5), 0, 7), input_error);
}

TEST_CASE("row ranges after a double projection") {
    auto rep = verify_thm12_projected(elliptic_normal_curve(6), 2, 11);
    CHECK(rep.status == "pass");
    CHECK(rep.seed_chain.size() == 2);
}

TEST_CASE("regularity bound for projections") {
    auto rep = verify_thm13_bound(elliptic_normal_curve(5), 1, 7);
    CHECK(rep.status == "pass");
    bool saw_bound = false;
    for (const auto& c : rep.conclusions)
        if (c.note.find("reg=3, bound=3") != std::string::npos) saw_bound = true;
    CHECK(saw_bound);

    auto child = random_subspace(elliptic_normal_curve(5), 1, 7).child;
    auto bad = verify_thm13_bound(child, 1, 3);
    CHECK(bad.status == "hypothesis-not-met");
}

TEST_CASE("regularity bound after a double projection") {
    auto rep = verify_thm13_bound(elliptic_normal_curve(6), 2, 11);
    CHECK(rep.status == "pass");
    bool saw_missing = false;
    for (const auto& c : rep.conclusions)
        if (c.note.find("d-e-g-1=2") != std::string::npos) saw_missing = c.holds;
    CHECK(saw_missing);
}

TEST_CASE("hyperplane sections preserve the table") {
    auto rep = verify_prop32_prop33(scroll({1, 2}), 3);
    CHECK(rep.status == "pass");
    CHECK(rep.seed_chain == std::vector<std::uint64_t>{3});

    auto ver = verify_prop32_prop33(veronese_surface(), 3);
    CHECK(ver.status == "pass");

    auto curve = verify_prop32_prop33(elliptic_normal_curve(5), 3);
    CHECK(curve.status == "hypothesis-not-met");
}

TEST_CASE("verification reports serialize") {
    auto rep = verify_minimal_degree(rational_normal_curve(3));
    auto j = verification_to_json(rep);
    CHECK(j["status"] == "pass");
    CHECK(j["model"] == "rational_normal_curve(3)");
    CHECK(j["hypotheses"][1]["catalog_asserted"] == true);
    auto text = render_verification(rep);
    CHECK(text.find("status: pass") != std::string::npos);
    CHECK(text.find("[ok]") != std::string::npos);
}
