#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ifm/interferometer.hpp"
#include "ifm/rng.hpp"

namespace ifm {

// A distribution whose components stray beyond this from summing to one is
// rejected rather than silently renormalized.
inline constexpr double kDistributionSumTol = 1e-10;

// Two-sided z-score bound for the frequency check. At 4 sigma a correct
// sampler fails one run in ~16000 per outcome, rare enough that a red run
// points at a real defect rather than luck.
inline constexpr double kZThreshold = 4.0;

template <typename Scalar>
void validate(const DetectorDistribution<Scalar>& dist) {
  const std::array<Scalar, 3> p = {dist.p_ld, dist.p_dd, dist.p_abs};
  Scalar sum = 0;
  for (const Scalar v : p) {
    if (!(v >= Scalar(0) && v <= Scalar(1))) {  // NaN fails both comparisons
      throw InvalidDistributionError(
          "detector distribution: component " +
          std::to_string(static_cast<double>(v)) + " is outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - Scalar(1)) > Scalar(kDistributionSumTol)) {
    throw InvalidDistributionError(
        "detector distribution: components sum to " +
        std::to_string(static_cast<double>(sum)) + ", expected 1");
  }
}

// One simulated detection event.
struct TrialRecord {
  Outcome outcome{};
  std::int64_t index{};
};

// Empirical tally of a sample run against its expected distribution, with
// per-outcome binomial z-scores. Array order matches Outcome: LD, DD, ABS.
template <typename Scalar>
struct TallyReport {
  std::int64_t n{};
  std::array<std::int64_t, 3> counts{};
  std::array<Scalar, 3> empirical{};
  std::array<Scalar, 3> expected{};
  std::array<Scalar, 3> z_scores{};
  bool pass{};
};

// Draws n outcomes by inverse-CDF over the fixed ordering (LD, DD, ABS),
// one uniform deviate per trial. The same (distribution, n, seed) triple
// reproduces the same record sequence exactly.
template <typename Scalar>
std::vector<TrialRecord> sample_outcomes(const DetectorDistribution<Scalar>& dist,
                                         std::int64_t n, std::uint64_t seed) {
  validate(dist);
  if (n < 1) {
    throw Error("sample_outcomes: trial count must be >= 1, got " +
                std::to_string(n));
  }
  const double c1 = static_cast<double>(dist.p_ld);
  const double c2 = c1 + static_cast<double>(dist.p_dd);
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  SplitMix64 rng(seed);
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    const Outcome o = u < c1 ? Outcome::LD
                             : (u < c2 ? Outcome::DD : Outcome::ABS);
    records.push_back({o, i});
  }
  return records;
}

// Tallies records against the expected distribution. For each outcome with
// expected probability p strictly inside (0, 1) the binomial z-score
//   z = (empirical - p) sqrt(n) / sqrt(p (1 - p))
// is computed; degenerate outcomes (p = 0 or 1) score zero since any
// deviation there is impossible under a correct sampler and would instead
// show up in the other components. Passes when every |z| < 4.
template <typename Scalar>
TallyReport<Scalar> frequency_check(const std::vector<TrialRecord>& records,
                                    const DetectorDistribution<Scalar>& dist) {
  validate(dist);
  if (records.empty()) {
    throw Error("frequency_check: no records to tally");
  }
  TallyReport<Scalar> rep;
  rep.n = static_cast<std::int64_t>(records.size());
  for (const TrialRecord& r : records) {
    ++rep.counts[static_cast<std::size_t>(r.outcome)];
  }
  rep.expected = {dist.p_ld, dist.p_dd, dist.p_abs};
  const Scalar sqrt_n = std::sqrt(static_cast<Scalar>(rep.n));
  rep.pass = true;
  for (std::size_t k = 0; k < 3; ++k) {
    rep.empirical[k] =
        static_cast<Scalar>(rep.counts[k]) / static_cast<Scalar>(rep.n);
    const Scalar p = rep.expected[k];
    Scalar z = 0;
    if (p > Scalar(0) && p < Scalar(1)) {
      z = (rep.empirical[k] - p) * sqrt_n / std::sqrt(p * (Scalar(1) - p));
    }
    rep.z_scores[k] = z;
    if (!(std::abs(z) < Scalar(kZThreshold))) {
      rep.pass = false;
    }
  }
  return rep;
}

}  // namespace ifm
