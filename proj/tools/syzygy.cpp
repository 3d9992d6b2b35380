#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syzygy/catalog.hpp"
#include "syzygy/verify.hpp"

using namespace syzygy;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_hypothesis = 2;
constexpr int exit_conclusion = 3;
constexpr int exit_inconclusive = 4;

struct model_options {
    std::string family;
    int d = -1;
    int g = -1;
    int n = -1;
    std::string a;
};

void add_model_options(CLI::App* cmd, model_options& mo, bool required) {
    auto* pos = cmd->add_option(
        "family", mo.family,
        "model family: rational-normal-curve, scroll, veronese-surface, quadric, "
        "elliptic-normal-curve, hyperelliptic-curve, or a catalog name like scroll(1,2)");
    if (required) pos->required();
    cmd->add_option("--d", mo.d, "degree of the embedding");
    cmd->add_option("--g", mo.g, "genus (hyperelliptic-curve)");
    cmd->add_option("--n", mo.n, "dimension (quadric)");
    cmd->add_option("--a", mo.a, "scroll block degrees, comma separated");
}

model_ptr resolve_model(const model_options& mo) {
    require(!mo.family.empty(), "a model family is required");
    if (mo.family.find('(') != std::string::npos) return build_by_name(mo.family);
    if (mo.family == "rational-normal-curve") {
        require(mo.d >= 1, "rational-normal-curve needs --d");
        return rational_normal_curve(mo.d);
    }
    if (mo.family == "scroll") {
        require(!mo.a.empty(), "scroll needs --a, e.g. --a 1,2");
        std::vector<int> degs;
        std::stringstream ss(mo.a);
        std::string piece;
        while (std::getline(ss, piece, ','))
            if (!piece.empty()) degs.push_back(std::stoi(piece));
        return scroll(degs);
    }
    if (mo.family == "veronese-surface") return veronese_surface();
    if (mo.family == "quadric") {
        require(mo.n >= 1, "quadric needs --n");
        return quadric_hypersurface(mo.n);
    }
    if (mo.family == "elliptic-normal-curve") {
        require(mo.d >= 1, "elliptic-normal-curve needs --d");
        return elliptic_normal_curve(mo.d);
    }
    if (mo.family == "hyperelliptic-curve") {
        require(mo.g >= 2, "hyperelliptic-curve needs --g");
        require(mo.d >= 1, "hyperelliptic-curve needs --d");
        return hyperelliptic_curve(mo.g, mo.d);
    }
    throw input_error("unknown model family: " + mo.family);
}

bool parse_field(const std::string& field) {
    if (field == "q") return false;
    if (field.rfind("fp:", 0) == 0) {
        fp::set_modulus(std::stoull(field.substr(3)));
        return true;
    }
    throw input_error("--field takes q or fp:<prime>");
}

void check_format(const std::string& format) {
    require(format == "pretty" || format == "json" || format == "csv",
            "--format takes pretty, json, or csv");
}

std::string render_grid(int p_max, int q_lo, int q_max, const std::function<std::string(int, int)>& cell) {
    std::size_t width = 3;
    for (int q = q_lo; q <= q_max; ++q)
        for (int p = 0; p <= p_max; ++p) width = std::max(width, cell(p, q).size());
    std::ostringstream out;
    out << "  q\\p";
    for (int p = 0; p <= p_max; ++p) out << "  " << std::setw(static_cast<int>(width)) << p;
    out << "\n";
    for (int q = q_lo; q <= q_max; ++q) {
        out << "  " << std::setw(3) << q;
        for (int p = 0; p <= p_max; ++p)
            out << "  " << std::setw(static_cast<int>(width)) << cell(p, q);
        out << "\n";
    }
    return out.str();
}

std::string table_cell(const betti_table& T, int p, int q) {
    long v = T.at(p, q);
    return v == 0 ? "." : std::to_string(v);
}

void print_model_summary(const model_ptr& m, std::ostream& out) {
    out << "model: " << m->name << "\n";
    out << "ambient P^" << m->ambient() << ", dim " << m->meta.n << ", deg " << m->meta.d
        << ", codim " << m->meta.e << ", sectional genus " << m->meta.g << "\n";
    out << "linearly normal: " << (m->meta.linearly_normal ? "yes" : "no");
    if (m->meta.t > 0) out << " (t = " << m->meta.t << ")";
    out << "\n";
    if (m->meta.gonality > 0) out << "gonality: " << m->meta.gonality << "\n";
    out << "hilbert function:";
    for (int q = 0; q <= 4; ++q) out << " " << m->series.value(q);
    out << " ...\n";
    std::map<int, int> by_degree;
    for (const auto& f : m->generators) by_degree[f.degree()] += 1;
    out << "ideal generators:";
    if (by_degree.empty()) out << " none";
    bool first = true;
    for (const auto& [deg, count] : by_degree) {
        out << (first ? " " : ", ") << count << " of degree " << deg;
        first = false;
    }
    out << "\n";
}

nlohmann::ordered_json steps_to_json(const std::vector<projection_step>& steps) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json js;
        js["parent"] = s.parent_name;
        js["child"] = s.child_name;
        js["center"] = s.center;
        js["seed"] = s.seed;
        a.push_back(js);
    }
    return a;
}

void print_steps(const std::vector<projection_step>& steps, std::ostream& out) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out << "step " << i + 1 << ": project " << steps[i].parent_name << " from center [";
        for (std::size_t j = 0; j < steps[i].center.size(); ++j)
            out << (j ? ":" : "") << steps[i].center[j];
        out << "] (seed " << steps[i].seed << ")\n";
    }
}

int run_build(const model_options& mo, const std::string& format) {
    check_format(format);
    auto m = resolve_model(mo);
    if (format == "json") {
        std::cout << model_to_json(*m).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n"
                  << "name," << m->name << "\n"
                  << "dim," << m->meta.n << "\n"
                  << "deg," << m->meta.d << "\n"
                  << "codim," << m->meta.e << "\n"
                  << "genus," << m->meta.g << "\n"
                  << "gonality," << m->meta.gonality << "\n"
                  << "linearly_normal," << (m->meta.linearly_normal ? 1 : 0) << "\n"
                  << "t," << m->meta.t << "\n";
    } else {
        print_model_summary(m, std::cout);
    }
    return exit_ok;
}

int run_project(const model_options& mo, int t, std::uint64_t seed, const std::string& format) {
    check_format(format);
    auto root = resolve_model(mo);
    auto res = random_subspace(root, t, seed);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["seed"] = seed;
        j["steps"] = steps_to_json(res.steps);
        j["model"] = model_to_json(*res.child);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "# seed " << seed << "\n";
        std::cout << "step,parent,child,step_seed,center\n";
        for (std::size_t i = 0; i < res.steps.size(); ++i) {
            const auto& s = res.steps[i];
            std::cout << i + 1 << "," << s.parent_name << "," << s.child_name << "," << s.seed << ",";
            for (std::size_t j = 0; j < s.center.size(); ++j) std::cout << (j ? ":" : "") << s.center[j];
            std::cout << "\n";
        }
    } else {
        std::cout << "seed: " << seed << "\n";
        print_steps(res.steps, std::cout);
        print_model_summary(res.child, std::cout);
    }
    return exit_ok;
}

template <class K>
betti_table table_for(const model_ptr& m, const std::string& twist, int p_max, int q_max) {
    if (twist == "ring") return betti_of_coordinate_ring<K>(m, p_max, q_max);
    if (twist == "canonical") return betti_of<K>(m, twist_tag::canonical, p_max, q_max);
    require(twist == "zero", "--twist takes zero, canonical, or ring");
    return betti_of<K>(m, twist_tag::zero, p_max, q_max);
}

int run_betti(const model_options& mo, int t, std::uint64_t seed, const std::string& twist,
              int p_max, int q_max, const std::string& field, const std::string& format) {
    check_format(format);
    bool modular = parse_field(field);
    auto m = resolve_model(mo);
    std::vector<projection_step> steps;
    if (t > 0) {
        auto res = random_subspace(m, t, seed);
        m = res.child;
        steps = res.steps;
    }
    int pm = p_max >= 0 ? p_max : m->meta.e + (twist == "ring" ? 2 : 1);
    int qm = q_max >= 0 ? q_max : 3;
    betti_table T = modular ? table_for<fp>(m, twist, pm, qm) : table_for<mpq_class>(m, twist, pm, qm);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["model"] = T.model_name;
        j["twist"] = T.twist;
        j["v"] = T.v_descriptor;
        j["field"] = T.field;
        j["p_max"] = T.p_max;
        j["q_max"] = T.q_max;
        if (!steps.empty()) {
            j["seed"] = seed;
            j["steps"] = steps_to_json(steps);
        }
        j["rows"] = T.k;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    if (format == "csv") {
        if (!steps.empty()) std::cout << "# seed " << seed << "\n";
        std::cout << "q\\p";
        for (int p = 0; p <= T.p_max; ++p) std::cout << "," << p;
        std::cout << "\n";
        for (int q = 0; q <= T.q_max; ++q) {
            std::cout << q;
            for (int p = 0; p <= T.p_max; ++p) std::cout << "," << T.at(p, q);
            std::cout << "\n";
        }
        return exit_ok;
    }
    if (!steps.empty()) {
        std::cout << "seed: " << seed << "\n";
        print_steps(steps, std::cout);
    }
    std::cout << "betti table of " << T.model_name << " (twist " << T.twist << ", V " << T.v_descriptor
              << ", field " << T.field << ")\n";
    std::cout << render_grid(T.p_max, 0, T.q_max, [&](int p, int q) { return table_cell(T, p, q); });
    try {
        int r = regularity_from_table(T);
        if (twist == "ring")
            std::cout << "regularity of the ideal sheaf from the table: " << r + 1 << "\n";
        else
            std::cout << "regularity of the module from the table: " << r << "\n";
    } catch (const inconclusive_error&) {
        std::cout << "regularity: not certified at this q_max, raise --qmax\n";
    }
    return exit_ok;
}

int status_code(const std::string& status) {
    if (status == "pass") return exit_ok;
    if (status == "hypothesis-not-met") return exit_hypothesis;
    return exit_conclusion;
}

int emit_verification(const verification_report& rep, const std::string& format) {
    if (format == "json") {
        std::cout << verification_to_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "kind,name,holds,catalog_asserted,note\n";
        auto rows = [&](const char* kind, const std::vector<check_item>& v) {
            for (const auto& c : v)
                std::cout << kind << ",\"" << c.name << "\"," << (c.holds ? 1 : 0) << ","
                          << (c.catalog_asserted ? 1 : 0) << ",\"" << c.note << "\"\n";
        };
        rows("hypothesis", rep.hypotheses);
        rows("conclusion", rep.conclusions);
        std::cout << "status,," << rep.status << ",,\n";
    } else {
        std::cout << render_verification(rep);
    }
    return status_code(rep.status);
}

int run_verify(const std::string& theorem, model_options mo, int k, int t, std::uint64_t seed,
               const std::string& field, const std::string& format) {
    check_format(format);
    bool modular = parse_field(field);
    if (mo.family.empty()) {
        if (theorem == "mindeg") mo.family = "rational_normal_curve(4)";
        else if (theorem == "prop33") mo.family = "scroll(1,2)";
        else mo.family = "elliptic_normal_curve(5)";
        if (format == "pretty") std::cout << "model: " << mo.family << " (default)\n";
    }
    auto m = resolve_model(mo);
    verification_report rep;
    if (theorem == "mindeg") {
        rep = modular ? verify_minimal_degree<fp>(m) : verify_minimal_degree(m);
    } else if (theorem == "thm12ln") {
        rep = modular ? verify_thm12_linearly_normal<fp>(m, k) : verify_thm12_linearly_normal(m, k);
    } else if (theorem == "thm12proj") {
        require(!modular, "thm12proj verification runs in rational mode");
        rep = verify_thm12_projected(m, t, seed);
        if (format == "pretty") std::cout << "seed: " << seed << "\n";
    } else if (theorem == "thm13") {
        require(!modular, "thm13 verification runs in rational mode");
        rep = verify_thm13_bound(m, t, seed);
        if (format == "pretty") std::cout << "seed: " << seed << "\n";
    } else if (theorem == "prop33") {
        rep = modular ? verify_prop32_prop33<fp>(m, seed) : verify_prop32_prop33(m, seed);
        if (format == "pretty") std::cout << "seed: " << seed << "\n";
    } else {
        throw input_error("--theorem takes mindeg, thm12ln, thm12proj, thm13, or prop33");
    }
    return emit_verification(rep, format);
}

std::string predicted_mark(const cell_prediction& c) {
    if (c.predicted == predict_status::zero) return ".";
    if (c.predicted == predict_status::undecided) return "?";
    return c.predicted_dim >= 0 ? std::to_string(c.predicted_dim) : "+";
}

int run_report(const model_options& mo, int t, std::uint64_t seed, const std::string& format) {
    check_format(format);
    auto root = resolve_model(mo);
    auto rep = row_determination_procedure(root, t, seed);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["model"] = rep.model_name;
        j["seed"] = rep.seed;
        j["consistent"] = rep.all_consistent;
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& st : rep.steps)
            for (const auto& c : st.cells) {
                nlohmann::ordered_json jc;
                jc["cell"] = {c.p, c.q};
                jc["twist"] = c.twist;
                jc["predicted"] = to_string(c.predicted);
                jc["computed"] = c.computed;
                jc["rule"] = c.rule;
                if (c.predicted_dim >= 0) jc["predicted_dim"] = c.predicted_dim;
                jc["seed"] = st.step.seed;
                jc["consistent"] = c.consistent;
                cells.push_back(jc);
            }
        j["cells"] = cells;
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    if (format == "csv") {
        std::cout << "# seed " << seed << "\n";
        std::cout << "step,p,q,twist,predicted,rule,predicted_dim,computed,consistent,step_seed\n";
        for (std::size_t i = 0; i < rep.steps.size(); ++i)
            for (const auto& c : rep.steps[i].cells)
                std::cout << i + 1 << "," << c.p << "," << c.q << "," << c.twist << ","
                          << to_string(c.predicted) << "," << c.rule << "," << c.predicted_dim << ","
                          << c.computed << "," << (c.consistent ? 1 : 0) << ","
                          << rep.steps[i].step.seed << "\n";
        return exit_ok;
    }
    std::cout << "row determination for " << rep.model_name << ", t = " << t << "\n";
    std::cout << "seed: " << seed << "\n";
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
        const auto& st = rep.steps[i];
        std::cout << "step " << i + 1 << ": " << st.step.parent_name << " -> " << st.step.child_name
                  << " (seed " << st.step.seed << ")\n";
        int pm = 0, qm = 0, ql = 3;
        for (const auto& c : st.cells)
            if (c.twist == "zero") {
                pm = std::max(pm, c.p);
                qm = std::max(qm, c.q);
                ql = std::min(ql, c.q);
            }
        std::cout << "predicted weight rows (zero twist; '?' left undetermined by the rules):\n";
        std::cout << render_grid(pm, ql, qm, [&](int p, int q) -> std::string {
            for (const auto& c : st.cells)
                if (c.p == p && c.q == q && c.twist == "zero") return predicted_mark(c);
            return "?";
        });
        for (const auto& c : st.cells) {
            std::cout << "  (" << c.p << "," << c.q << ")";
            if (c.twist != "zero") std::cout << "[" << c.twist << "]";
            std::cout << " predicted " << to_string(c.predicted) << " by " << c.rule;
            if (c.predicted_dim >= 0) std::cout << ", dim " << c.predicted_dim;
            std::cout << ", computed " << c.computed << (c.consistent ? "" : "  MISMATCH") << "\n";
        }
    }
    std::cout << "consistent: " << (rep.all_consistent ? "yes" : "no") << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"koszul cohomology and syzygy tables of catalog varieties"};
    app.require_subcommand(1);

    model_options build_mo, project_mo, betti_mo, verify_mo, report_mo;
    std::string build_format = "pretty", project_format = "pretty", betti_format = "pretty";
    std::string verify_format = "pretty", report_format = "pretty";
    std::string betti_field = "q", verify_field = "q";
    std::string betti_twist = "zero", theorem;
    std::uint64_t project_seed = 1, betti_seed = 1, verify_seed = 1, report_seed = 1;
    int project_t = 1, betti_t = 0, verify_t = 1, report_t = 1, verify_k = 2;
    int betti_pmax = -1, betti_qmax = -1;

    auto* cmd_build = app.add_subcommand("build", "construct a catalog model and print its summary");
    add_model_options(cmd_build, build_mo, true);
    cmd_build->add_option("--format", build_format, "pretty, json, or csv");

    auto* cmd_project = app.add_subcommand("project", "project a model away from random points");
    add_model_options(cmd_project, project_mo, true);
    cmd_project->add_option("--t", project_t, "number of one-point projections");
    cmd_project->add_option("--seed", project_seed, "seed for the centers");
    cmd_project->add_option("--format", project_format, "pretty, json, or csv");

    auto* cmd_betti = app.add_subcommand("betti", "compute a syzygy table");
    add_model_options(cmd_betti, betti_mo, true);
    cmd_betti->add_option("--t", betti_t, "project away from this many random points first");
    cmd_betti->add_option("--seed", betti_seed, "seed for the centers");
    cmd_betti->add_option("--twist", betti_twist, "zero, canonical, or ring");
    cmd_betti->add_option("--pmax", betti_pmax, "largest homological index (default e+1)");
    cmd_betti->add_option("--qmax", betti_qmax, "largest weight (default 3)");
    cmd_betti->add_option("--field", betti_field, "q or fp:<prime>");
    cmd_betti->add_option("--format", betti_format, "pretty, json, or csv");

    auto* cmd_verify = app.add_subcommand("verify", "check a statement on a model instance");
    cmd_verify->add_option("--theorem", theorem, "mindeg, thm12ln, thm12proj, thm13, or prop33")
        ->required();
    add_model_options(cmd_verify, verify_mo, false);
    cmd_verify->add_option("--k", verify_k, "syzygy step for thm12ln");
    cmd_verify->add_option("--t", verify_t, "projection codimension for thm12proj and thm13");
    cmd_verify->add_option("--seed", verify_seed, "seed for random choices");
    cmd_verify->add_option("--field", verify_field, "q or fp:<prime>");
    cmd_verify->add_option("--format", verify_format, "pretty, json, or csv");

    auto* cmd_report = app.add_subcommand("report", "row determination report for a projected curve");
    add_model_options(cmd_report, report_mo, true);
    cmd_report->add_option("--t", report_t, "number of one-point projections");
    cmd_report->add_option("--seed", report_seed, "seed for the centers");
    cmd_report->add_option("--format", report_format, "pretty, json, or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_build->parsed()) return run_build(build_mo, build_format);
        if (cmd_project->parsed()) return run_project(project_mo, project_t, project_seed, project_format);
        if (cmd_betti->parsed())
            return run_betti(betti_mo, betti_t, betti_seed, betti_twist, betti_pmax, betti_qmax,
                             betti_field, betti_format);
        if (cmd_verify->parsed())
            return run_verify(theorem, verify_mo, verify_k, verify_t, verify_seed, verify_field,
                              verify_format);
        if (cmd_report->parsed()) return run_report(report_mo, report_t, report_seed, report_format);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const inconclusive_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const internal_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return exit_inconclusive;
    }
    return exit_usage;
}
