#pragma once

// Shared helpers for the test binaries: reproducible random states, synthetic
// Hermitian matrices with known spectra, subprocess capture for CLI tests,
// and small CSV parsing utilities.

#include <sys/wait.h>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ifm/qstate.hpp"
#include "ifm/rng.hpp"

namespace ifm_test {

// Standard normal deviates via Box-Muller on splitmix64, so random-state
// tests are reproducible from their seed alone.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = rng_.uniform01();
    } while (u1 == 0.0);
    const double u2 = rng_.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    have_ = true;
    return r * std::cos(angle);
  }

  std::complex<double> next_complex() { return {next(), next()}; }

 private:
  ifm::SplitMix64 rng_;
  bool have_ = false;
  double cached_ = 0.0;
};

inline ifm::JointState<double> random_joint_state(Gaussian& g) {
  ifm::JointState<double> v;
  for (int i = 0; i < ifm::kJointDim; ++i) {
    v[i] = g.next_complex();
  }
  return ifm::make_state(v);
}

// Normalized complex pair (for EVConfig / InteractionSpec / DickeConfig).
inline std::pair<std::complex<double>, std::complex<double>>
random_amplitude_pair(Gaussian& g) {
  std::complex<double> a;
  std::complex<double> b;
  do {
    a = g.next_complex();
    b = g.next_complex();
  } while (std::norm(a) + std::norm(b) == 0.0);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

// Haar-ish unitary from the QR decomposition of a Gaussian complex matrix;
// distribution details are irrelevant here, unitarity is what matters.
inline Eigen::MatrixXcd random_unitary(int n, Gaussian& g) {
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m(r, c) = g.next_complex();
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ();
}

// Hermitian matrix with a prescribed spectrum: U diag(lambda) U^dagger.
inline Eigen::MatrixXcd hermitian_with_spectrum(const Eigen::VectorXd& lambda,
                                                Gaussian& g) {
  const Eigen::MatrixXcd u =
      random_unitary(static_cast<int>(lambda.size()), g);
  return u * lambda.cast<std::complex<double>>().asDiagonal() * u.adjoint();
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command capturing stdout; stderr passes through to the test
// log. Returns the process exit code (or -1 if it died on a signal).
inline CommandResult run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  CommandResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

// Path of the CLI binary under test: IFM_CLI env override, else the
// build-time location baked in by CMake.
inline std::string cli_path() {
  if (const char* env = std::getenv("IFM_CLI")) {
    return env;
  }
#ifdef IFM_CLI_PATH
  return IFM_CLI_PATH;
#else
  throw std::runtime_error("IFM_CLI is not set and no build-time path known");
#endif
}

struct TempDir {
  std::string path;

  TempDir() {
    char tmpl[] = "/tmp/ifm_test_XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path = tmpl;
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto end = line.find(',', start);
    if (end == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

// Raw value of a `key,value` row in a field,value-style CSV.
inline std::string csv_field_raw(const std::string& csv,
                                 const std::string& key) {
  for (const std::string& line : split_lines(csv)) {
    const auto fields = split_fields(line);
    if (fields.size() == 2 && fields[0] == key) {
      return fields[1];
    }
  }
  throw std::runtime_error("CSV field not found: " + key);
}

inline bool csv_has_field(const std::string& csv, const std::string& key) {
  for (const std::string& line : split_lines(csv)) {
    const auto fields = split_fields(line);
    if (fields.size() == 2 && fields[0] == key) {
      return true;
    }
  }
  return false;
}

inline double csv_field_value(const std::string& csv, const std::string& key) {
  return std::stod(csv_field_raw(csv, key));
}

}  // namespace ifm_test
