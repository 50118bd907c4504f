// Command-line front end: construction commands for the exact artifacts and
// the full verification suite with machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hcw/bispherical.hpp"
#include "hcw/cartanweyl.hpp"
#include "hcw/cayley.hpp"
#include "hcw/hurwitz.hpp"
#include "hcw/json_io.hpp"
#include "hcw/ksmap.hpp"
#include "hcw/laplace.hpp"
#include "hcw/param.hpp"
#include "hcw/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

hcw::ParamVector parse_rationals(const std::string& csv) {
    hcw::ParamVector u;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) u.push_back(hcw::Rational::from_string(item));
    return u;
}

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << text << "\n";
}

void emit_json(const GlobalOpts& g, const json& j) { write_output(g, j.dump(2)); }

json report_to_json(const hcw::verify::Report& rep) {
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back({{"name", c.name},
                         {"passed", c.passed},
                         {"residual_summary", c.residual_summary},
                         {"elapsed_ms", c.elapsed_ms}});
    return {{"suite", rep.suite},
            {"version", rep.version},
            {"seed", rep.seed},
            {"cases", std::move(cases)}};
}

std::string report_to_text(const hcw::verify::Report& rep) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : rep.cases) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.residual_summary
           << ") [" << c.elapsed_ms << " ms]\n";
        if (!c.passed) ++failed;
    }
    os << (failed == 0 ? "all cases passed" : std::to_string(failed) + " case(s) failed");
    return os.str();
}

hcw::param::AngleSet parse_angles(const std::string& spec) {
    hcw::param::AngleSet a;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--angles", "expected key=value pairs");
        std::string key = item.substr(0, eq);
        double value = std::stod(item.substr(eq + 1));
        if (key == "r") a.r = value;
        else if (key == "theta") a.theta = value;
        else if (key == "psi") a.psi = value;
        else if (key == "phi") a.phi = value;
        else if (key == "eta") a.eta = value;
        else if (key == "chi") a.chi = value;
        else if (key == "thetap") a.theta_p = value;
        else if (key == "psip") a.psi_p = value;
        else throw CLI::ValidationError("--angles", "unknown angle " + key);
    }
    return a;
}

json doubles_to_json(const std::vector<double>& v) {
    json out = json::array();
    for (double d : v) out.push_back(d);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact constructions and verifications for the orthogonal-group "
                 "matrix families"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for randomized checks");
    app.add_option("--format", g.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", g.out, "write output to a file instead of stdout");

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "build a Hurwitz matrix");
    int hur_n = 8;
    std::string hur_u;
    hur->add_option("--n", hur_n, "dimension: 2, 4, 8 or 16")->required();
    hur->add_option("--u", hur_u, "comma-separated rational parameters (default: symbolic)");

    // cayley
    auto* cay = app.add_subcommand("cayley", "scaled Cayley transform of the skew minor");
    int cay_n = 3;
    std::string cay_u;
    bool cay_orthonormal = false, cay_symbolic = false;
    cay->add_option("--n", cay_n, "dimension: 2, 3, 5, 7 or 9")->required();
    cay->add_option("--u", cay_u, "comma-separated rational parameters");
    cay->add_flag("--orthonormal", cay_orthonormal, "divide by |u|^2 (floating point output)");
    cay->add_flag("--symbolic", cay_symbolic, "print the symbolic matrix");

    // ksmap
    auto* ks = app.add_subcommand("ksmap", "quadratic sphere map");
    int ks_n = 3;
    std::string ks_side = "right", ks_u;
    bool ks_symbolic = false;
    ks->add_option("--n", ks_n, "target dimension: 3, 5 or 9")->required();
    ks->add_option("--side", ks_side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    ks->add_option("--u", ks_u, "comma-separated rational parameters");
    ks->add_flag("--symbolic", ks_symbolic, "print the component polynomials");

    // laplace-verify
    auto* lap = app.add_subcommand("laplace-verify", "Laplacian factorization check");
    int lap_n = 3, lap_degree = 3;
    std::string lap_side = "right";
    lap->add_option("--n", lap_n, "target dimension: 2, 3, 5 or 9")->required();
    lap->add_option("--side", lap_side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    lap->add_option("--degree", lap_degree, "harmonic degree cap (<= 3)");

    // param
    auto* par = app.add_subcommand("param", "angle parameterizations");
    std::string par_target = "r4r3", par_angles;
    bool par_verify = false;
    int par_trials = 200;
    par->add_option("--target", par_target, "r4r3 or r8r5")
        ->check(CLI::IsMember({"r4r3", "r8r5"}));
    par->add_option("--angles", par_angles,
                    "k=v pairs: r,theta,psi,phi,eta,chi,thetap,psip");
    par->add_flag("--verify", par_verify, "run the round-trip verification");
    par->add_option("--trials", par_trials, "number of random trials for --verify");

    // cartan
    auto* car = app.add_subcommand("cartan", "generating matrices and their generators");
    int car_n = 8;
    std::string car_emit;
    car->add_option("--n", car_n, "dimension: 4, 8 or 16")->required();
    car->add_option("--emit", car_emit, "write the generator set to this path");

    // so5-table
    auto* so5 = app.add_subcommand("so5-table", "ten-generator commutator table");

    // bispherical
    auto* bis = app.add_subcommand("bispherical", "rotation-product identity check");
    int bis_l1 = 1, bis_l2 = 1, bis_trials = 25;
    bis->add_option("--l1", bis_l1, "first order (<= 2)");
    bis->add_option("--l2", bis_l2, "second order (<= 2)");
    bis->add_option("--trials", bis_trials, "random angle triples");

    // verify-all
    auto* ver = app.add_subcommand("verify-all", "run every verification suite");

    // emit
    auto* emit = app.add_subcommand("emit", "write a named artifact as JSON");
    std::string emit_target, emit_side = "right";
    int emit_n = 8, emit_m = 2;
    emit->add_option("--target", emit_target,
                     "hurwitz | cayley | ksmap-symbolic | generators | so5-table | hadamard")
        ->required();
    emit->add_option("--n", emit_n, "dimension for matrix targets");
    emit->add_option("--m", emit_m, "order exponent for hadamard");
    emit->add_option("--side", emit_side, "left or right for ksmap-symbolic");

    for (CLI::App* s : {hur, cay, ks, lap, par, car, so5, bis, ver, emit}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // nonzero parse problems are usage errors
    }

    if (hur->parsed()) {
        if (hur_u.empty()) {
            emit_json(g, hcw::poly_matrix_to_json(hcw::hurwitz::build_hurwitz_symbolic(hur_n)));
        } else {
            emit_json(g, hcw::matrix_to_json(hcw::hurwitz::build_hurwitz(hur_n,
                                                                         parse_rationals(hur_u))));
        }
        return 0;
    }

    if (cay->parsed()) {
        if (cay_symbolic || cay_u.empty()) {
            const auto& o = hcw::cayley::cayley_transform_symbolic(cay_n);
            json j = hcw::poly_matrix_to_json(o.matrix);
            j["scale_sq"] = o.scale_sq.to_string();
            emit_json(g, j);
            return 0;
        }
        auto o = hcw::cayley::cayley_transform(cay_n, parse_rationals(cay_u));
        if (cay_orthonormal) {
            json rows = json::array();
            for (int i = 0; i < o.dim; ++i) {
                json row = json::array();
                for (int j2 = 0; j2 < o.dim; ++j2)
                    row.push_back((o.matrix.at(i, j2) / o.scale_sq).to_double());
                rows.push_back(std::move(row));
            }
            emit_json(g, {{"dim", o.dim}, {"rows", std::move(rows)}});
        } else {
            json j = hcw::matrix_to_json(o.matrix);
            j["scale_sq"] = o.scale_sq.to_string();
            emit_json(g, j);
        }
        return 0;
    }

    if (ks->parsed()) {
        auto side = ks_side == "left" ? hcw::ksmap::Side::left : hcw::ksmap::Side::right;
        const auto& m = hcw::ksmap::map_for(ks_n, side);
        if (ks_symbolic || ks_u.empty()) {
            emit_json(g, hcw::quadratic_map_to_json(m));
        } else {
            auto x = hcw::ksmap::apply_map(m, parse_rationals(ks_u));
            emit_json(g, hcw::rationals_to_json(x));
        }
        return 0;
    }

    if (lap->parsed()) {
        auto side = lap_side == "left" ? hcw::ksmap::Side::left : hcw::ksmap::Side::right;
        auto harmonics = hcw::laplace::harmonic_monomial_suite(lap_n, lap_degree);
        json reports = json::array();
        bool all = true;
        for (const auto& f : harmonics) {
            auto rep = hcw::laplace::verify_factorization(lap_n, side, f);
            json j = {{"n", rep.n},
                      {"side", hcw::ksmap::side_name(rep.side)},
                      {"f", rep.test_poly.to_string()},
                      {"passed", rep.passed}};
            if (!rep.passed) j["residual"] = rep.residual.to_string();
            all = all && rep.passed;
            reports.push_back(std::move(j));
        }
        emit_json(g, reports);
        return all ? 0 : 1;
    }

    if (par->parsed()) {
        if (par_verify) {
            auto ck = hcw::param::verify_cayley_klein_roundtrip(par_trials, g.seed, 1e-10, 1e-12);
            auto r8 = hcw::param::verify_r8_roundtrip(par_trials, g.seed + 1, 1e-10, 1e-12);
            json j = {{"r4r3",
                       {{"trials", ck.trials},
                        {"max_residual", ck.max_residual},
                        {"max_norm_residual", ck.max_norm_residual},
                        {"passed", ck.passed},
                        {"note", ck.note}}},
                      {"r8r5",
                       {{"trials", r8.trials},
                        {"max_residual", r8.max_residual},
                        {"max_norm_residual", r8.max_norm_residual},
                        {"passed", r8.passed},
                        {"note", r8.note}}}};
            emit_json(g, j);
            return (ck.passed && r8.passed) ? 0 : 1;
        }
        hcw::param::AngleSet a = parse_angles(par_angles);
        if (par_target == "r4r3") {
            auto u = hcw::param::cayley_klein(a);
            json j = {{"u", doubles_to_json(u)},
                      {"x_left", doubles_to_json(
                                     hcw::ksmap::apply_map(hcw::ksmap::last_row_map(3), u))},
                      {"x_right", doubles_to_json(hcw::ksmap::apply_map(
                                      hcw::ksmap::last_column_map(3), u))}};
            emit_json(g, j);
        } else {
            auto u = hcw::param::param_r8(a);
            json j = {{"u", doubles_to_json(u)},
                      {"x", doubles_to_json(
                                hcw::ksmap::apply_map(hcw::ksmap::last_row_map(5), u))},
                      {"target", doubles_to_json(hcw::param::spherical_target(a))}};
            emit_json(g, j);
        }
        return 0;
    }

    if (car->parsed()) {
        auto set = hcw::cartanweyl::generators_from_generating_matrices(car_n);
        auto table = hcw::cartanweyl::commutator_table(set);
        json j = hcw::generator_set_to_json(set, table);
        if (!car_emit.empty()) {
            std::ofstream f(car_emit);
            if (!f) throw std::runtime_error("cannot open " + car_emit);
            f << j.dump(2) << "\n";
        } else {
            emit_json(g, j);
        }
        return 0;
    }

    if (so5->parsed()) {
        auto set = hcw::cartanweyl::so5_generators();
        auto table = hcw::cartanweyl::commutator_table(set);
        if (g.format == "text") {
            std::ostringstream os;
            for (const auto& e : table.entries) {
                os << "[" << set.labels[e.a] << ", " << set.labels[e.b] << "] =";
                bool any = false;
                for (size_t k = 0; k < e.coeffs.size(); ++k) {
                    if (e.coeffs[k].is_zero()) continue;
                    os << " " << (any ? "+ " : "") << e.coeffs[k].to_string() << "*"
                       << set.labels[k];
                    any = true;
                }
                if (!any) os << " 0";
                os << "\n";
            }
            write_output(g, os.str());
        } else {
            emit_json(g, hcw::generator_set_to_json(set, table));
        }
        return table.closed ? 0 : 1;
    }

    if (bis->parsed()) {
        auto rep = hcw::bispherical::verify_bispherical_product(bis_l1, bis_l2, bis_trials,
                                                                g.seed);
        json j = {{"l1", rep.l1},
                  {"l2", rep.l2},
                  {"trials", rep.trials},
                  {"max_residual", rep.max_residual},
                  {"passed", rep.max_residual < 1e-10}};
        emit_json(g, j);
        return rep.max_residual < 1e-10 ? 0 : 1;
    }

    if (ver->parsed()) {
        auto rep = hcw::verify::run_all(g.seed);
        if (g.format == "text") write_output(g, report_to_text(rep));
        else emit_json(g, report_to_json(rep));
        return rep.all_passed() ? 0 : 1;
    }

    if (emit->parsed()) {
        if (emit_target == "hurwitz") {
            emit_json(g, hcw::poly_matrix_to_json(hcw::hurwitz::build_hurwitz_symbolic(emit_n)));
        } else if (emit_target == "cayley") {
            const auto& o = hcw::cayley::cayley_transform_symbolic(emit_n);
            json j = hcw::poly_matrix_to_json(o.matrix);
            j["scale_sq"] = o.scale_sq.to_string();
            emit_json(g, j);
        } else if (emit_target == "ksmap-symbolic") {
            auto side = emit_side == "left" ? hcw::ksmap::Side::left : hcw::ksmap::Side::right;
            emit_json(g, hcw::quadratic_map_to_json(hcw::ksmap::map_for(emit_n, side)));
        } else if (emit_target == "generators") {
            auto set = hcw::cartanweyl::generators_from_generating_matrices(emit_n);
            auto table = hcw::cartanweyl::commutator_table(set);
            emit_json(g, hcw::generator_set_to_json(set, table));
        } else if (emit_target == "so5-table") {
            auto set = hcw::cartanweyl::so5_generators();
            auto table = hcw::cartanweyl::commutator_table(set);
            emit_json(g, hcw::generator_set_to_json(set, table));
        } else if (emit_target == "hadamard") {
            emit_json(g, hcw::matrix_to_json(hcw::cartanweyl::hadamard_sylvester(emit_m)));
        } else {
            std::cerr << "unknown emit target: " << emit_target << "\n";
            return 2;
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
