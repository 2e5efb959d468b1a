// Command line front end: radius | omega | check | extremal | ms | sweep.
// Standard output carries JSON or CSV only; diagnostics go to stderr.
// Exit codes: 0 success / bound holds, 1 bound violated, 2 usage or input
// error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "numrad/extremal.hpp"
#include "numrad/matrix.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/pattern.hpp"
#include "numrad/radius.hpp"
#include "numrad/simplex.hpp"
#include "numrad/verify.hpp"

namespace {

using numrad::Complex;
using numrad::ComplexMatrix;

nlohmann::json vector_pairs(const std::vector<Complex>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

int run_radius(const std::string& file) {
    const ComplexMatrix a = numrad::load_matrix(file);
    const numrad::RadiusResult r = numrad::numerical_radius(a);
    nlohmann::json j;
    j["value"] = r.value;
    j["theta_star"] = r.theta_star;
    j["witness"] = vector_pairs(r.witness.coords);
    j["iterations"] = r.iterations;
    std::cout << j.dump() << '\n';
    return 0;
}

int run_omega(const std::string& file, double tol) {
    const ComplexMatrix a = numrad::load_matrix(file);
    nlohmann::json j;
    j["n"] = a.order();
    j["omega"] = numrad::omega_exact(numrad::extract_pattern(a, tol));
    std::cout << j.dump() << '\n';
    return 0;
}

int run_check(const std::string& file, const std::string& bound, int restarts,
              std::uint64_t seed) {
    const ComplexMatrix a = numrad::load_matrix(file);
    const numrad::BoundId id = numrad::bound_id_from_string(bound);
    numrad::BoundReport report;
    switch (id) {
        case numrad::BoundId::theorem1: report = numrad::check_theorem1(a); break;
        case numrad::BoundId::theorem2: report = numrad::check_theorem2(a); break;
        case numrad::BoundId::lemma1: report = numrad::check_lemma1(a, restarts, seed); break;
        case numrad::BoundId::turan: report = numrad::check_turan_edge_bound(a); break;
        case numrad::BoundId::ms:
            throw std::invalid_argument("check supports theorem1|theorem2|lemma1|turan");
    }
    std::cout << numrad::report_to_json(report) << '\n';
    return report.holds ? 0 : 1;
}

int run_extremal(const std::string& kind, int n, int r, const std::string& out, double c_re,
                 double c_im) {
    ComplexMatrix a(1);
    if (kind == "partite") {
        a = numrad::turan_partite_filled(n, r);
    } else if (kind == "clique") {
        a = numrad::clique_plus_isolated(n, r);
    } else if (kind == "proposition") {
        // Canonical equality configuration: support on the first r vertices
        // with |x_i|^2 = 1/r, remaining vertices in the zero class.
        if (r < 2 || r > n) throw std::invalid_argument("proposition requires 2 <= r <= n");
        std::vector<Complex> coords(static_cast<std::size_t>(n), Complex(0.0, 0.0));
        for (int i = 0; i < r; ++i) coords[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(double(r));
        std::vector<int> partition(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < r; ++i) partition[static_cast<std::size_t>(i)] = i + 1;
        const Complex c(c_re, c_im);
        a = numrad::proposition_matrix(partition, numrad::UnitVector::checked(coords), c);
    } else {
        throw std::invalid_argument("unknown extremal kind: " + kind);
    }
    if (out.empty())
        std::cout << numrad::matrix_to_json(a) << '\n';
    else
        numrad::save_matrix(a, out);
    return 0;
}

int run_ms(const std::string& file, int restarts, std::uint64_t seed) {
    const ComplexMatrix a = numrad::load_matrix(file);
    const numrad::MSResult r = numrad::general_simplex_max(a, restarts, seed);
    nlohmann::json j;
    j["value"] = r.value;
    j["argmax"] = r.argmax.coords;
    j["restarts_used"] = r.restarts_used;
    j["converged"] = r.converged;
    std::cout << j.dump() << '\n';
    return 0;
}

int run_sweep(const std::string& ensemble, int n, double density, int trials,
              std::uint64_t seed, const std::string& bound, const std::string& out,
              int forced_omega, int restarts) {
    numrad::EnsembleSpec spec;
    spec.kind = numrad::ensemble_kind_from_string(ensemble);
    spec.n = n;
    spec.density = density;
    spec.trials = trials;
    spec.seed = seed;
    if (forced_omega > 0) spec.forced_omega = forced_omega;
    const numrad::BoundId id = numrad::bound_id_from_string(bound);
    const numrad::SweepResult result = numrad::sweep(spec, id, restarts);

    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open output file: " + out);
    csv << numrad::reports_to_csv(result.reports);
    if (!csv) throw std::runtime_error("failed writing report file: " + out);
    csv.close();

    std::cout << numrad::summary_to_json(result.summary, id) << '\n';
    return result.summary.violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical radius, zero-pattern clique numbers, and the sharp bounds relating them"};
    app.require_subcommand(1);

    std::string file;
    std::string bound = "theorem1";
    std::string kind;
    std::string out;
    std::string ensemble;
    double tol = numrad::kFloatPatternTol;
    double density = 0.5;
    double c_re = 1.0, c_im = 0.0;
    int n = 0, r = 0, trials = 0, forced_omega = 0, restarts = 20;
    std::uint64_t seed = 0;

    auto* radius = app.add_subcommand("radius", "numerical radius of a matrix file");
    radius->add_option("file", file, "matrix JSON file")->required();

    auto* omega = app.add_subcommand("omega", "zero-pattern clique number of a matrix file");
    omega->add_option("file", file, "matrix JSON file")->required();
    omega->add_option("--tol", tol, "pattern tolerance");

    auto* check = app.add_subcommand("check", "verify a bound on a matrix file");
    check->add_option("file", file, "matrix JSON file")->required();
    check->add_option("--bound", bound, "theorem1|theorem2|lemma1|turan")->required();
    check->add_option("--restarts", restarts, "simplex solver restarts");
    check->add_option("--seed", seed, "simplex solver seed");

    auto* extremal = app.add_subcommand("extremal", "write an extremal construction");
    extremal->add_option("--kind", kind, "partite|clique|proposition")->required();
    extremal->add_option("-n", n, "matrix order")->required();
    extremal->add_option("-r", r, "clique number / class count")->required();
    extremal->add_option("--out", out, "output file (stdout when omitted)");
    extremal->add_option("--c-re", c_re, "Re(c) for proposition matrices");
    extremal->add_option("--c-im", c_im, "Im(c) for proposition matrices");

    auto* ms = app.add_subcommand("ms", "simplex maximum of <Ax,x> for a 0/1 matrix file");
    ms->add_option("file", file, "matrix JSON file")->required();
    ms->add_option("--restarts", restarts, "replicator restarts");
    ms->add_option("--seed", seed, "replicator seed");

    auto* sweep = app.add_subcommand("sweep", "run a bound over a random ensemble");
    sweep->add_option("--ensemble", ensemble,
                      "hermitian_gaussian|complex_gaussian|zero_one_random|pattern_planted")
        ->required();
    sweep->add_option("-n", n, "matrix order")->required();
    sweep->add_option("--density", density, "edge density for 0/1 ensembles");
    sweep->add_option("--trials", trials, "number of matrices")->required();
    sweep->add_option("--seed", seed, "ensemble seed");
    sweep->add_option("--bound", bound, "theorem1|theorem2|lemma1|turan|ms")->required();
    sweep->add_option("--out", out, "CSV report path")->required();
    sweep->add_option("--forced-omega", forced_omega, "planted clique size (pattern_planted)");
    sweep->add_option("--restarts", restarts, "simplex solver restarts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (radius->parsed()) return run_radius(file);
        if (omega->parsed()) return run_omega(file, tol);
        if (check->parsed()) return run_check(file, bound, restarts, seed);
        if (extremal->parsed()) return run_extremal(kind, n, r, out, c_re, c_im);
        if (ms->parsed()) return run_ms(file, restarts, seed);
        if (sweep->parsed())
            return run_sweep(ensemble, n, density, trials, seed, bound, out, forced_omega,
                             restarts);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
