#include "numrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "numrad/extremal.hpp"
#include "numrad/pattern.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"
#include "numrad/simplex.hpp"

namespace numrad {

namespace {

constexpr double kPreconditionTol = 1e-12;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_zero_one_zero_diagonal(const ComplexMatrix& a) {
    if (!is_zero_one(a) || !has_zero_diagonal(a, 0.0))
        throw std::invalid_argument("not a 0/1 zero-diagonal matrix");
}

void require_symmetric_adjacency(const ComplexMatrix& a) {
    require_zero_one_zero_diagonal(a);
    if (!is_hermitian(a, 0.0))
        throw std::invalid_argument("not a symmetric 0/1 adjacency matrix");
}

BoundReport make_report(BoundId id, double lhs, double rhs, int n, int omega, double frob_sq,
                        double eta_or_value) {
    BoundReport report;
    report.bound_id = id;
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    report.holds = report.slack >= -kHoldsTol;
    report.degenerate = omega == 1;
    report.params = BoundParams{n, omega, frob_sq, eta_or_value};
    return report;
}

std::uint64_t solver_stream(std::uint64_t seed, int trial) {
    // Distinct from the generator substream for the same trial.
    return substream_seed(seed ^ 0x736F6C766572ULL, static_cast<std::uint64_t>(trial));
}

}  // namespace

std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::theorem1: return "theorem1";
        case BoundId::theorem2: return "theorem2";
        case BoundId::lemma1: return "lemma1";
        case BoundId::turan: return "turan";
        case BoundId::ms: return "ms";
    }
    throw std::logic_error("unknown bound id");
}

BoundId bound_id_from_string(const std::string& name) {
    if (name == "theorem1") return BoundId::theorem1;
    if (name == "theorem2") return BoundId::theorem2;
    if (name == "lemma1") return BoundId::lemma1;
    if (name == "turan") return BoundId::turan;
    if (name == "ms") return BoundId::ms;
    throw std::invalid_argument("unknown bound id: " + name);
}

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::hermitian_gaussian: return "hermitian_gaussian";
        case EnsembleKind::complex_gaussian: return "complex_gaussian";
        case EnsembleKind::zero_one_random: return "zero_one_random";
        case EnsembleKind::pattern_planted: return "pattern_planted";
    }
    throw std::logic_error("unknown ensemble kind");
}

EnsembleKind ensemble_kind_from_string(const std::string& name) {
    if (name == "hermitian_gaussian") return EnsembleKind::hermitian_gaussian;
    if (name == "complex_gaussian") return EnsembleKind::complex_gaussian;
    if (name == "zero_one_random") return EnsembleKind::zero_one_random;
    if (name == "pattern_planted") return EnsembleKind::pattern_planted;
    throw std::invalid_argument("unknown ensemble kind: " + name);
}

BoundReport check_theorem1(const ComplexMatrix& a) {
    if (!is_hermitian(a, kPreconditionTol)) throw std::invalid_argument("not Hermitian");
    if (!has_zero_diagonal(a, kPreconditionTol)) throw std::invalid_argument("nonzero diagonal");
    const int n = a.order();
    const int omega = omega_exact(extract_pattern(a, kFloatPatternTol));
    const double frob_sq = frobenius_norm_sq(a);
    const RadiusResult radius = numerical_radius(a);
    BoundReport report = make_report(BoundId::theorem1, radius.value * radius.value,
                                     (1.0 - 1.0 / omega) * frob_sq, n, omega, frob_sq,
                                     radius.value);
    report.witness = radius.witness.coords;
    return report;
}

BoundReport check_theorem2(const ComplexMatrix& a) {
    if (!has_zero_diagonal(a, kPreconditionTol)) throw std::invalid_argument("nonzero diagonal");
    const int n = a.order();
    const int omega = omega_exact(extract_pattern(a, kFloatPatternTol));
    const double frob_sq = frobenius_norm_sq(a);
    const RadiusResult radius = numerical_radius(a);
    BoundReport report = make_report(
        BoundId::theorem2, radius.value * radius.value,
        (1.0 - 1.0 / (2.0 * omega) - 1.0 / (2.0 * n)) * frob_sq, n, omega, frob_sq, radius.value);
    report.witness = radius.witness.coords;
    return report;
}

BoundReport check_lemma1(const ComplexMatrix& a, int solver_restarts, std::uint64_t seed) {
    require_zero_one_zero_diagonal(a);
    const int n = a.order();
    const int omega = omega_exact(extract_pattern(a, 0.0));
    // Saturation keeps omega and never lowers the maximum; the saturated
    // matrix is the sharpest instance of the bound.
    const ComplexMatrix saturated = saturate(a);
    const MSResult ms = general_simplex_max(saturated, solver_restarts, seed);
    BoundReport report =
        make_report(BoundId::lemma1, ms.value, lemma1_bound(omega, n), n, omega,
                    frobenius_norm_sq(saturated), ms.value);
    report.witness.reserve(ms.argmax.coords.size());
    for (double v : ms.argmax.coords) report.witness.emplace_back(v, 0.0);
    return report;
}

BoundReport check_turan_edge_bound(const ComplexMatrix& a) {
    require_symmetric_adjacency(a);
    const int n = a.order();
    const int omega = omega_exact(extract_pattern(a, 0.0));
    const double frob_sq = frobenius_norm_sq(a);
    const double edges = frob_sq / 2.0;
    return make_report(BoundId::turan, edges, (1.0 - 1.0 / omega) * n * n / 2.0, n, omega,
                       frob_sq, edges);
}

BoundReport check_ms(const ComplexMatrix& a, int solver_restarts, std::uint64_t seed) {
    require_symmetric_adjacency(a);
    const int n = a.order();
    const int omega = omega_exact(extract_pattern(a, 0.0));
    const MSResult ms = replicator_max(a, solver_restarts, seed);
    BoundReport report = make_report(BoundId::ms, ms.value, ms_bound_symmetric(omega), n, omega,
                                     frobenius_norm_sq(a), ms.value);
    report.witness.reserve(ms.argmax.coords.size());
    for (double v : ms.argmax.coords) report.witness.emplace_back(v, 0.0);
    return report;
}

namespace {

void validate_spec(const EnsembleSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("ensemble requires n >= 2");
    if (spec.trials < 1) throw std::invalid_argument("ensemble requires trials >= 1");
    if (!(spec.density >= 0.0 && spec.density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");
    if (spec.kind == EnsembleKind::pattern_planted) {
        if (!spec.forced_omega)
            throw std::invalid_argument("pattern_planted requires forced_omega");
        if (*spec.forced_omega < 1 || *spec.forced_omega > spec.n)
            throw std::invalid_argument("forced_omega infeasible: must lie in [1, n]");
    }
}

ComplexMatrix planted_pattern(int n, int target, double density, Rng& rng) {
    ComplexMatrix a(n);
    for (int i = 0; i < target; ++i)
        for (int j = 0; j < target; ++j)
            if (i != j) a(i, j) = 1.0;

    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j >= target) candidates.emplace_back(i, j);
    // Fisher-Yates with the trial substream.
    for (std::size_t k = candidates.size(); k > 1; --k) {
        const std::size_t pick = rng.next_u64() % k;
        std::swap(candidates[k - 1], candidates[pick]);
    }
    for (auto [i, j] : candidates) {
        if (rng.uniform01() >= density) continue;
        a(i, j) = 1.0;
        a(j, i) = 1.0;
        if (omega_exact(extract_pattern(a, 0.0)) > target) {
            a(i, j) = 0.0;
            a(j, i) = 0.0;
        }
    }
    return a;
}

}  // namespace

ComplexMatrix generate_one(const EnsembleSpec& spec, int trial) {
    validate_spec(spec);
    if (trial < 0 || trial >= spec.trials) throw std::invalid_argument("trial out of range");
    Rng rng(substream_seed(spec.seed, static_cast<std::uint64_t>(trial)));
    const int n = spec.n;

    switch (spec.kind) {
        case EnsembleKind::hermitian_gaussian: {
            ComplexMatrix g(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
            ComplexMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) a(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
            return a;
        }
        case EnsembleKind::complex_gaussian: {
            ComplexMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) a(i, j) = rng.complex_gaussian();
            return a;
        }
        case EnsembleKind::zero_one_random: {
            ComplexMatrix a(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && rng.uniform01() < spec.density) a(i, j) = 1.0;
            return a;
        }
        case EnsembleKind::pattern_planted:
            return planted_pattern(n, *spec.forced_omega, spec.density, rng);
    }
    throw std::logic_error("unknown ensemble kind");
}

std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec) {
    validate_spec(spec);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(spec.trials));
    for (int t = 0; t < spec.trials; ++t) out.push_back(generate_one(spec, t));
    return out;
}

SweepResult sweep(const EnsembleSpec& spec, BoundId bound, int solver_restarts) {
    validate_spec(spec);

    const bool planted = spec.kind == EnsembleKind::pattern_planted;
    bool applicable = false;
    switch (bound) {
        case BoundId::theorem1:
            applicable = spec.kind == EnsembleKind::hermitian_gaussian || planted;
            break;
        case BoundId::theorem2:
            applicable = true;
            break;
        case BoundId::lemma1:
            applicable = spec.kind == EnsembleKind::zero_one_random || planted;
            break;
        case BoundId::turan:
        case BoundId::ms:
            applicable = planted;
            break;
    }
    if (!applicable)
        throw std::invalid_argument("bound " + to_string(bound) +
                                    " is not applicable to ensemble " + to_string(spec.kind));

    SweepResult result;
    result.reports.reserve(static_cast<std::size_t>(spec.trials));
    double slack_sum = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
        const ComplexMatrix a = generate_one(spec, t);
        BoundReport report;
        switch (bound) {
            case BoundId::theorem1: report = check_theorem1(a); break;
            case BoundId::theorem2: report = check_theorem2(a); break;
            case BoundId::lemma1:
                report = check_lemma1(a, solver_restarts, solver_stream(spec.seed, t));
                break;
            case BoundId::turan: report = check_turan_edge_bound(a); break;
            case BoundId::ms:
                report = check_ms(a, solver_restarts, solver_stream(spec.seed, t));
                break;
        }
        report.seed = spec.seed;
        report.trial = t;
        slack_sum += report.slack;
        if (!report.holds) ++result.summary.violations;
        if (t == 0 || report.slack < result.summary.min_slack)
            result.summary.min_slack = report.slack;
        result.reports.push_back(std::move(report));
    }
    result.summary.trials = spec.trials;
    result.summary.mean_slack = slack_sum / spec.trials;
    return result;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "bound_id,n,omega,frob_sq,lhs,rhs,slack,holds,degenerate,seed,trial\n";
    for (const BoundReport& r : reports) {
        out << to_string(r.bound_id) << ',' << r.params.n << ',' << r.params.omega << ','
            << fmt17(r.params.frob_sq) << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ','
            << fmt17(r.slack) << ',' << (r.holds ? "true" : "false") << ','
            << (r.degenerate ? "true" : "false") << ',' << r.seed << ',' << r.trial << '\n';
    }
    return out.str();
}

std::vector<BoundReport> reports_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "bound_id,n,omega,frob_sq,lhs,rhs,slack,holds,degenerate,seed,trial")
        throw std::invalid_argument("bad CSV header");
    std::vector<BoundReport> reports;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 11) throw std::invalid_argument("bad CSV row: " + line);
        auto parse_bool = [](const std::string& s) {
            if (s == "true") return true;
            if (s == "false") return false;
            throw std::invalid_argument("bad CSV boolean: " + s);
        };
        BoundReport r;
        r.bound_id = bound_id_from_string(fields[0]);
        r.params.n = std::stoi(fields[1]);
        r.params.omega = std::stoi(fields[2]);
        r.params.frob_sq = std::stod(fields[3]);
        r.lhs = std::stod(fields[4]);
        r.rhs = std::stod(fields[5]);
        r.slack = std::stod(fields[6]);
        r.holds = parse_bool(fields[7]);
        r.degenerate = parse_bool(fields[8]);
        r.seed = std::stoull(fields[9]);
        r.trial = std::stoi(fields[10]);
        r.params.eta_or_value = r.lhs;
        reports.push_back(std::move(r));
    }
    return reports;
}

namespace {

nlohmann::json report_json_object(const BoundReport& r, bool with_witness) {
    nlohmann::json j;
    j["bound_id"] = to_string(r.bound_id);
    j["n"] = r.params.n;
    j["omega"] = r.params.omega;
    j["frob_sq"] = r.params.frob_sq;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["holds"] = r.holds;
    j["degenerate"] = r.degenerate;
    j["seed"] = r.seed;
    j["trial"] = r.trial;
    if (with_witness && !r.witness.empty()) {
        nlohmann::json w = nlohmann::json::array();
        for (const Complex& z : r.witness) w.push_back({z.real(), z.imag()});
        j["witness"] = std::move(w);
    }
    return j;
}

BoundReport report_from_json_object(const nlohmann::json& j) {
    BoundReport r;
    r.bound_id = bound_id_from_string(j.at("bound_id").get<std::string>());
    r.params.n = j.at("n").get<int>();
    r.params.omega = j.at("omega").get<int>();
    r.params.frob_sq = j.at("frob_sq").get<double>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.slack = j.at("slack").get<double>();
    r.holds = j.at("holds").get<bool>();
    r.degenerate = j.at("degenerate").get<bool>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trial = j.at("trial").get<int>();
    r.params.eta_or_value = r.lhs;
    if (j.contains("witness"))
        for (const auto& pair : j.at("witness"))
            r.witness.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return r;
}

}  // namespace

std::string reports_to_json(const std::vector<BoundReport>& reports, bool with_witness) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BoundReport& r : reports) arr.push_back(report_json_object(r, with_witness));
    return arr.dump();
}

std::vector<BoundReport> reports_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report JSON parse error: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
    std::vector<BoundReport> reports;
    for (const auto& j : arr) reports.push_back(report_from_json_object(j));
    return reports;
}

std::string report_to_json(const BoundReport& report, bool with_witness) {
    return report_json_object(report, with_witness).dump();
}

std::string summary_to_json(const SweepSummary& summary, BoundId bound) {
    nlohmann::json j;
    j["bound_id"] = to_string(bound);
    j["trials"] = summary.trials;
    j["min_slack"] = summary.min_slack;
    j["mean_slack"] = summary.mean_slack;
    j["violations"] = summary.violations;
    return j.dump();
}

}  // namespace numrad
