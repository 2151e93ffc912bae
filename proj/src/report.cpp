#include "ifm/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "ifm/version.hpp"
#include "json.hpp"

namespace ifm {

namespace {

// CLI inputs are real and within [0, 1]; their squares must sum to one only
// loosely — loose enough that amplitudes typed to eight significant digits
// (0.70710678 for 1/sqrt(2)) are accepted — after which we renormalize.
constexpr double kInputSumTol = 1e-7;

void check_amplitude_pair(double alpha, double beta, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidConfigError(std::string(what) +
                             ": alpha and beta must be real values in [0, 1]");
  }
  const double s = alpha * alpha + beta * beta;
  if (std::abs(s - 1.0) > kInputSumTol) {
    throw InvalidConfigError(std::string(what) + ": alpha^2 + beta^2 = " +
                             format_number(s) + " must equal 1 within 1e-07");
  }
}

EVConfig<double> checked_ev_config(double alpha, double beta) {
  check_amplitude_pair(alpha, beta, "run");
  const double n = std::sqrt(alpha * alpha + beta * beta);
  return {Complex<double>(alpha / n), Complex<double>(beta / n)};
}

DickeConfig<double> checked_dicke_config(double alpha, double beta) {
  check_amplitude_pair(alpha, beta, "dicke");
  const double n = std::sqrt(alpha * alpha + beta * beta);
  return {Complex<double>(alpha / n), Complex<double>(beta / n)};
}

void write_stage_csv(std::ostream& os, const char* stage,
                     const JointState<double>& s) {
  for (int i = 0; i < kJointDim; ++i) {
    const std::string key = std::string(stage) + "_" + label(photon_of(i)) +
                            "_" + label(object_of(i));
    os << key << "_re," << format_number(s[i].real()) << '\n';
    os << key << "_im," << format_number(s[i].imag()) << '\n';
  }
}

nlohmann::json stage_json(const JointState<double>& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < kJointDim; ++i) {
    arr.push_back({{"photon", label(photon_of(i))},
                   {"object", label(object_of(i))},
                   {"re", s[i].real()},
                   {"im", s[i].imag()}});
  }
  return arr;
}

template <typename Vector>
nlohmann::json vector_json(const Vector& v,
                           const char* const* labels) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(
        {{"basis", labels[i]}, {"re", v[i].real()}, {"im", v[i].imag()}});
  }
  return arr;
}

nlohmann::json meta_json(const char* command) {
  return {{"command", command}, {"version", kVersion}};
}

}  // namespace

RunReport build_run_report(double alpha, double beta, double gamma) {
  const EVConfig<double> cfg = checked_ev_config(alpha, beta);
  const auto spec = InteractionSpec<double>::from_gamma(gamma);

  RunReport rep;
  rep.alpha = cfg.alpha.real();
  rep.beta = cfg.beta.real();
  rep.gamma = spec.gamma.real();
  rep.delta = spec.delta.real();
  rep.trace = run_ev(cfg, spec);
  rep.probabilities = detector_probabilities(rep.trace.psi_final);
  for (const Outcome o : kOutcomes) {
    try {
      rep.conditional[static_cast<std::size_t>(o)] =
          conditional_object_state(rep.trace.psi_final, o);
    } catch (const ZeroProbabilityError&) {
      // Outcome cannot occur; leave the slot empty.
    }
  }
  rep.correlation = correlation_c(cfg);
  rep.entanglement.closed_form = closed_form_entanglement(cfg, spec);
  rep.entanglement.numeric =
      entanglement_entropy(rep.trace.psi_final, Subsystem::Photon);
  return rep;
}

std::vector<SweepRow> sweep_alpha_rows(int points) {
  if (points < 2) {
    throw Error("sweep-alpha: points must be >= 2, got " +
                std::to_string(points));
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(points - 1);
    const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    const EVConfig<double> cfg{Complex<double>(a), Complex<double>(b)};
    const EntanglementValue<double> e = entanglement_alpha(cfg);
    rows.push_back({a, e.closed_form, e.numeric, correlation_c(cfg)});
  }
  return rows;
}

std::vector<SweepRow> sweep_gamma_rows(int points) {
  if (points < 2) {
    throw Error("sweep-gamma: points must be >= 2, got " +
                std::to_string(points));
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  const EVConfig<double> cfg{Complex<double>(0), Complex<double>(1)};
  for (int i = 0; i < points; ++i) {
    const double g = static_cast<double>(i) / static_cast<double>(points - 1);
    const EntanglementValue<double> e = entanglement_gamma(g);
    const StageTrace<double> t =
        run_ev(cfg, InteractionSpec<double>::from_gamma(g));
    rows.push_back(
        {g, e.closed_form, e.numeric, detector_probabilities(t.psi_final).p_dd});
  }
  return rows;
}

DickeReport build_dicke_report(double alpha, double beta) {
  const DickeConfig<double> cfg = checked_dicke_config(alpha, beta);

  DickeReport rep;
  rep.alpha = cfg.alpha.real();
  rep.beta = cfg.beta.real();
  rep.state = dicke_state(cfg);
  rep.null_probability = std::norm(cfg.alpha);
  try {
    const NullResult<double> null = condition_on_null(rep.state);
    rep.target = null.target;
    rep.null_probability = null.probability;
  } catch (const ZeroProbabilityError&) {
    // Null results never happen for this preparation; report the (zero)
    // probability and no conditioned target.
  }
  rep.entanglement_closed = dicke_entanglement(cfg);
  rep.entanglement_numeric = dicke_entanglement_numeric(rep.state);
  return rep;
}

TallyReport<double> run_sample(double alpha, double beta, double gamma,
                               std::int64_t n, std::uint64_t seed) {
  const EVConfig<double> cfg = checked_ev_config(alpha, beta);
  const auto spec = InteractionSpec<double>::from_gamma(gamma);
  const StageTrace<double> t = run_ev(cfg, spec);
  const DetectorDistribution<double> dist =
      detector_probabilities(t.psi_final);
  return frequency_check(sample_outcomes(dist, n, seed), dist);
}

std::string format_number(double value) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific, 16);
  return std::string(buf.data(), res.ptr);
}

void write_run_csv(std::ostream& os, const RunReport& report) {
  os << "field,value\n";
  os << "alpha," << format_number(report.alpha) << '\n';
  os << "beta," << format_number(report.beta) << '\n';
  os << "gamma," << format_number(report.gamma) << '\n';
  os << "delta," << format_number(report.delta) << '\n';
  write_stage_csv(os, "psi0", report.trace.psi0);
  write_stage_csv(os, "psi1", report.trace.psi1);
  write_stage_csv(os, "psi2", report.trace.psi2);
  write_stage_csv(os, "psi3", report.trace.psi3);
  write_stage_csv(os, "psi_final", report.trace.psi_final);
  os << "p_ld," << format_number(report.probabilities.p_ld) << '\n';
  os << "p_dd," << format_number(report.probabilities.p_dd) << '\n';
  os << "p_abs," << format_number(report.probabilities.p_abs) << '\n';
  os << "correlation," << format_number(report.correlation) << '\n';
  os << "entropy_closed," << format_number(report.entanglement.closed_form)
     << '\n';
  os << "entropy_numeric," << format_number(report.entanglement.numeric)
     << '\n';
  for (const Outcome o : kOutcomes) {
    const auto& cond = report.conditional[static_cast<std::size_t>(o)];
    if (!cond) {
      continue;
    }
    for (int i = 0; i < kObjectDim; ++i) {
      const std::string key =
          std::string("cond_") + label(o) + "_" + label(kObjectStates[i]);
      os << key << "_re," << format_number((*cond)[i].real()) << '\n';
      os << key << "_im," << format_number((*cond)[i].imag()) << '\n';
    }
  }
}

void write_run_json(std::ostream& os, const RunReport& report) {
  nlohmann::json j;
  j["meta"] = meta_json("run");
  j["config"] = {{"alpha", report.alpha},
                 {"beta", report.beta},
                 {"gamma", report.gamma},
                 {"delta", report.delta}};
  j["stages"] = {{"psi0", stage_json(report.trace.psi0)},
                 {"psi1", stage_json(report.trace.psi1)},
                 {"psi2", stage_json(report.trace.psi2)},
                 {"psi3", stage_json(report.trace.psi3)},
                 {"psi_final", stage_json(report.trace.psi_final)}};
  j["probabilities"] = {{"p_ld", report.probabilities.p_ld},
                        {"p_dd", report.probabilities.p_dd},
                        {"p_abs", report.probabilities.p_abs}};
  j["correlation"] = report.correlation;
  j["entropy_closed"] = report.entanglement.closed_form;
  j["entropy_numeric"] = report.entanglement.numeric;
  nlohmann::json cond;
  static constexpr std::array<const char*, 4> kObjectLabels = {"GX", "GY",
                                                               "EX", "EY"};
  for (const Outcome o : kOutcomes) {
    const auto& c = report.conditional[static_cast<std::size_t>(o)];
    cond[label(o)] =
        c ? vector_json(*c, kObjectLabels.data()) : nlohmann::json(nullptr);
  }
  j["conditional"] = cond;
  os << j.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     SweepKind kind) {
  os << (kind == SweepKind::Alpha
             ? "alpha,entropy_closed,entropy_numeric,correlation"
             : "gamma,entropy_closed,entropy_numeric,p_dd")
     << '\n';
  for (const SweepRow& r : rows) {
    os << format_number(r.parameter) << ',' << format_number(r.closed_form)
       << ',' << format_number(r.numeric) << ',' << format_number(r.auxiliary)
       << '\n';
  }
}

void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows,
                      SweepKind kind) {
  const bool alpha = kind == SweepKind::Alpha;
  nlohmann::json j;
  j["meta"] = meta_json(alpha ? "sweep-alpha" : "sweep-gamma");
  j["meta"]["points"] = rows.size();
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{alpha ? "alpha" : "gamma", r.parameter},
                   {"entropy_closed", r.closed_form},
                   {"entropy_numeric", r.numeric},
                   {alpha ? "correlation" : "p_dd", r.auxiliary}});
  }
  j["rows"] = arr;
  os << j.dump(2) << '\n';
}

void write_tally_csv(std::ostream& os, const TallyReport<double>& tally) {
  os << "outcome,count,empirical,expected,z_score\n";
  for (const Outcome o : kOutcomes) {
    const auto k = static_cast<std::size_t>(o);
    os << label(o) << ',' << tally.counts[k] << ','
       << format_number(tally.empirical[k]) << ','
       << format_number(tally.expected[k]) << ','
       << format_number(tally.z_scores[k]) << '\n';
  }
}

void write_tally_json(std::ostream& os, const TallyReport<double>& tally,
                      std::uint64_t seed) {
  nlohmann::json j;
  j["meta"] = meta_json("sample");
  j["meta"]["n"] = tally.n;
  j["meta"]["seed"] = seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const Outcome o : kOutcomes) {
    const auto k = static_cast<std::size_t>(o);
    arr.push_back({{"outcome", label(o)},
                   {"count", tally.counts[k]},
                   {"empirical", tally.empirical[k]},
                   {"expected", tally.expected[k]},
                   {"z_score", tally.z_scores[k]}});
  }
  j["outcomes"] = arr;
  j["pass"] = tally.pass;
  os << j.dump(2) << '\n';
}

void write_dicke_csv(std::ostream& os, const DickeReport& report) {
  os << "field,value\n";
  os << "alpha," << format_number(report.alpha) << '\n';
  os << "beta," << format_number(report.beta) << '\n';
  for (int i = 0; i < 4; ++i) {
    os << "state_" << kDickeBasisLabels[static_cast<std::size_t>(i)] << "_re,"
       << format_number(report.state[i].real()) << '\n';
    os << "state_" << kDickeBasisLabels[static_cast<std::size_t>(i)] << "_im,"
       << format_number(report.state[i].imag()) << '\n';
  }
  os << "null_probability," << format_number(report.null_probability) << '\n';
  if (report.target) {
    for (int i = 0; i < 2; ++i) {
      os << "target_" << kTargetBasisLabels[static_cast<std::size_t>(i)]
         << "_re," << format_number((*report.target)[i].real()) << '\n';
      os << "target_" << kTargetBasisLabels[static_cast<std::size_t>(i)]
         << "_im," << format_number((*report.target)[i].imag()) << '\n';
    }
  }
  os << "entanglement_closed," << format_number(report.entanglement_closed)
     << '\n';
  os << "entanglement_numeric," << format_number(report.entanglement_numeric)
     << '\n';
}

void write_dicke_json(std::ostream& os, const DickeReport& report) {
  nlohmann::json j;
  j["meta"] = meta_json("dicke");
  j["config"] = {{"alpha", report.alpha}, {"beta", report.beta}};
  j["state"] = vector_json(report.state, kDickeBasisLabels.data());
  j["null_probability"] = report.null_probability;
  j["target"] = report.target
                    ? vector_json(*report.target, kTargetBasisLabels.data())
                    : nlohmann::json(nullptr);
  j["entanglement_closed"] = report.entanglement_closed;
  j["entanglement_numeric"] = report.entanglement_numeric;
  os << j.dump(2) << '\n';
}

}  // namespace ifm
