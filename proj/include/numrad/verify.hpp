#ifndef NUMRAD_VERIFY_HPP
#define NUMRAD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"

// Bound checkers producing machine-readable reports, the seeded random
// matrix ensembles, and sweeps over them.

namespace numrad {

enum class BoundId { theorem1, theorem2, lemma1, turan, ms };

std::string to_string(BoundId id);
BoundId bound_id_from_string(const std::string& name);

// Slack below -kHoldsTol counts as a violation.
inline constexpr double kHoldsTol = 1e-8;

struct BoundParams {
    int n = 0;
    int omega = 0;
    double frob_sq = 0.0;
    double eta_or_value = 0.0;
};

struct BoundReport {
    BoundId bound_id = BoundId::theorem1;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;           // rhs - lhs
    bool holds = false;           // slack >= -kHoldsTol
    bool degenerate = false;      // omega == 1
    BoundParams params;
    std::vector<Complex> witness; // empty when the check has none
    std::uint64_t seed = 0;       // sweep provenance, 0 outside sweeps
    int trial = 0;
};

// eta^2 <= (1 - 1/omega) |A|^2 for Hermitian zero-diagonal A.
BoundReport check_theorem1(const ComplexMatrix& a);

// eta^2 <= (1 - 1/(2 omega) - 1/(2n)) |A|^2 for zero-diagonal A.
BoundReport check_theorem2(const ComplexMatrix& a);

// Simplex maximum of the saturated matrix against 1 - 1/(2 omega) - 1/(2n).
// The reported frob_sq/witness describe the saturated matrix actually
// maximized; omega is unchanged by saturation.
BoundReport check_lemma1(const ComplexMatrix& a, int solver_restarts = 20,
                         std::uint64_t seed = 0);

// Edge count m <= (1 - 1/omega) n^2 / 2 for symmetric 0/1 adjacency input.
BoundReport check_turan_edge_bound(const ComplexMatrix& a);

// Replicator value against 1 - 1/omega for symmetric 0/1 adjacency input.
BoundReport check_ms(const ComplexMatrix& a, int solver_restarts = 20, std::uint64_t seed = 0);

enum class EnsembleKind { hermitian_gaussian, complex_gaussian, zero_one_random, pattern_planted };

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& name);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::hermitian_gaussian;
    int n = 2;
    double density = 0.5;
    std::optional<int> forced_omega;  // pattern_planted only
    int trials = 1;
    std::uint64_t seed = 0;
};

// Trial k depends only on (seed, k): identical regardless of which other
// trials are generated.
ComplexMatrix generate_one(const EnsembleSpec& spec, int trial);
std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec);

struct SweepSummary {
    int trials = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    int violations = 0;
};

struct SweepResult {
    std::vector<BoundReport> reports;
    SweepSummary summary;
};

// Runs the bound over every trial of the ensemble. Throws on combinations
// whose hypotheses the ensemble cannot satisfy (e.g. theorem1 on
// complex_gaussian).
SweepResult sweep(const EnsembleSpec& spec, BoundId bound, int solver_restarts = 20);

// CSV with the exact header
//   bound_id,n,omega,frob_sq,lhs,rhs,slack,holds,degenerate,seed,trial
// and one row per report; numbers carry 17 significant digits.
std::string reports_to_csv(const std::vector<BoundReport>& reports);
std::vector<BoundReport> reports_from_csv(const std::string& text);

// JSON array of objects with the same fields plus optional witness.
std::string reports_to_json(const std::vector<BoundReport>& reports, bool with_witness = true);
std::vector<BoundReport> reports_from_json(const std::string& text);

std::string report_to_json(const BoundReport& report, bool with_witness = true);
std::string summary_to_json(const SweepSummary& summary, BoundId bound);

}  // namespace numrad

#endif
