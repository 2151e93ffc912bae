// Command-line front end: runs the interferometer pipeline and the collision
// model, sweeps the closed-form/numeric entanglement curves, and Monte Carlo
// samples detector statistics. Exit codes: 0 success (and statistical pass),
// 1 statistical failure in `sample`, 2 invalid input, 3 output I/O failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ifm/report.hpp"
#include "ifm/version.hpp"

namespace {

// Writes through the given writer to stdout or to --out. Returns the process
// exit code: 0 on success, 3 when the sink cannot be opened or written.
int emit(const std::string& out,
         const std::function<void(std::ostream&)>& writer) {
  if (out == "-") {
    writer(std::cout);
    std::cout.flush();
    return std::cout ? 0 : 3;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open '" << out << "' for writing\n";
    return 3;
  }
  writer(os);
  os.flush();
  if (!os) {
    std::cerr << "error: failed while writing '" << out << "'\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Staged Mach-Zehnder interaction-free measurement simulator: pipeline "
      "runs, entanglement sweeps, collision-model conditioning, and detector "
      "sampling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ifm::kVersion);

  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int points = 101;
  std::int64_t n = 100000;
  std::uint64_t seed = 42;
  std::string out = "-";
  std::string format = "csv";

  const auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "output path, '-' for stdout")
        ->capture_default_str();
  };
  const auto add_alpha_beta = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "amplitude on region X")->required();
    cmd->add_option("--beta", beta, "amplitude on region Y")->required();
  };

  CLI::App* run = app.add_subcommand(
      "run",
      "single pipeline run: staged states, detector probabilities, "
      "post-selected object states, correlation, entanglement");
  add_alpha_beta(run);
  run->add_option("--gamma", gamma, "object transparency in [0, 1]")
      ->capture_default_str();
  add_output_options(run);

  CLI::App* sweep_alpha = app.add_subcommand(
      "sweep-alpha",
      "entanglement and dark-click correlation across preparations, for the "
      "fully absorbing object");
  sweep_alpha->add_option("--points", points, "grid size over [0, 1]")
      ->capture_default_str();
  add_output_options(sweep_alpha);

  CLI::App* sweep_gamma = app.add_subcommand(
      "sweep-gamma",
      "entanglement and dark-click probability across transparencies, for "
      "the object prepared in the photon arm");
  sweep_gamma->add_option("--points", points, "grid size over [0, 1]")
      ->capture_default_str();
  add_output_options(sweep_gamma);

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo detector draws with a binomial frequency check");
  add_alpha_beta(sample);
  sample->add_option("--gamma", gamma, "object transparency in [0, 1]")
      ->capture_default_str();
  sample->add_option("--n", n, "number of trials")->capture_default_str();
  sample->add_option("--seed", seed, "generator seed")->capture_default_str();
  add_output_options(sample);

  CLI::App* dicke = app.add_subcommand(
      "dicke",
      "two-particle collision state, null-result conditioning, entanglement");
  add_alpha_beta(dicke);
  add_output_options(dicke);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  try {
    if (run->parsed()) {
      const ifm::RunReport report = ifm::build_run_report(alpha, beta, gamma);
      return emit(out, [&](std::ostream& os) {
        json ? ifm::write_run_json(os, report) : ifm::write_run_csv(os, report);
      });
    }
    if (sweep_alpha->parsed()) {
      const auto rows = ifm::sweep_alpha_rows(points);
      return emit(out, [&](std::ostream& os) {
        json ? ifm::write_sweep_json(os, rows, ifm::SweepKind::Alpha)
             : ifm::write_sweep_csv(os, rows, ifm::SweepKind::Alpha);
      });
    }
    if (sweep_gamma->parsed()) {
      const auto rows = ifm::sweep_gamma_rows(points);
      return emit(out, [&](std::ostream& os) {
        json ? ifm::write_sweep_json(os, rows, ifm::SweepKind::Gamma)
             : ifm::write_sweep_csv(os, rows, ifm::SweepKind::Gamma);
      });
    }
    if (sample->parsed()) {
      const ifm::TallyReport<double> tally =
          ifm::run_sample(alpha, beta, gamma, n, seed);
      const int rc = emit(out, [&](std::ostream& os) {
        json ? ifm::write_tally_json(os, tally, seed)
             : ifm::write_tally_csv(os, tally);
      });
      if (rc != 0) {
        return rc;
      }
      return tally.pass ? 0 : 1;
    }
    if (dicke->parsed()) {
      const ifm::DickeReport report = ifm::build_dicke_report(alpha, beta);
      return emit(out, [&](std::ostream& os) {
        json ? ifm::write_dicke_json(os, report)
             : ifm::write_dicke_csv(os, report);
      });
    }
  } catch (const ifm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
