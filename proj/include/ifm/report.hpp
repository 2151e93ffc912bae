#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifm/dicke.hpp"
#include "ifm/interferometer.hpp"
#include "ifm/montecarlo.hpp"

namespace ifm {

// Everything one pipeline run produces: the staged trace, the detector
// distribution, the post-selected object states (absent where the outcome
// cannot occur), the which-region correlation, and the photon-object
// entanglement by both routes.
struct RunReport {
  double alpha{};
  double beta{};
  double gamma{};
  double delta{};
  StageTrace<double> trace;
  DetectorDistribution<double> probabilities;
  std::array<std::optional<ObjectVector<double>>, 3> conditional;  // by Outcome
  double correlation{};
  EntanglementValue<double> entanglement;
};

// Validates CLI-style real inputs (alpha, beta in [0, 1], squares summing to
// one within 1e-9, gamma in [0, 1]), renormalizes, and runs the pipeline.
RunReport build_run_report(double alpha, double beta, double gamma);

enum class SweepKind { Alpha, Gamma };

// One sweep sample: the swept parameter, both entropy routes, and the
// sweep-specific auxiliary column (correlation for alpha sweeps, the dark
// detector probability for gamma sweeps).
struct SweepRow {
  double parameter{};
  double closed_form{};
  double numeric{};
  double auxiliary{};
};

// Uniform grids over [0, 1] with `points` samples, endpoints included.
std::vector<SweepRow> sweep_alpha_rows(int points);
std::vector<SweepRow> sweep_gamma_rows(int points);

struct DickeReport {
  double alpha{};
  double beta{};
  DickeState<double> state;
  double null_probability{};
  // Absent when the free-probe branch has vanishing probability, in which
  // case conditioning on a null result is meaningless.
  std::optional<TargetVector<double>> target;
  double entanglement_closed{};
  double entanglement_numeric{};
};

DickeReport build_dicke_report(double alpha, double beta);

// Runs the pipeline, samples n detector outcomes from the final distribution,
// and tallies them with per-outcome z-scores.
TallyReport<double> run_sample(double alpha, double beta, double gamma,
                               std::int64_t n, std::uint64_t seed);

// Locale-independent scientific notation with 17 significant digits.
std::string format_number(double value);

void write_run_csv(std::ostream& os, const RunReport& report);
void write_run_json(std::ostream& os, const RunReport& report);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     SweepKind kind);
void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows,
                      SweepKind kind);
void write_tally_csv(std::ostream& os, const TallyReport<double>& tally);
void write_tally_json(std::ostream& os, const TallyReport<double>& tally,
                      std::uint64_t seed);
void write_dicke_csv(std::ostream& os, const DickeReport& report);
void write_dicke_json(std::ostream& os, const DickeReport& report);

}  // namespace ifm
