#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "okalab/complex_poly.hpp"

namespace okalab {

/// Pass/fail tally of one numeric identity over a batch of samples.
/// max_error is the largest normalized residual seen.
struct VerificationRecord {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  double max_error = 0.0;
  double tolerance = 0.0;

  /// Records one normalized residual; it passes when <= tolerance.
  void add(double error);
  bool ok() const { return checked > 0 && checked == passed; }
};

/// Sum of counts, max of errors.
VerificationRecord aggregate(std::string name, std::span<const VerificationRecord> records);

/// Seed from the OKALAB_SEED environment variable, or `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 0x6f6b61);

/// Random polynomial of total degree exactly 3 in `num_vars` variables with
/// coefficients uniform in the square [-1, 1] + [-1, 1] i.
PolyMap random_cubic(std::mt19937_64& rng, int num_vars);

/// Residence identity, pi-compatibility with the equivalence relation,
/// base-point identity of tilde_sigma0, U_1/U_2 transition consistency,
/// well-definedness on equivalent representatives and the concrete
/// embedding 1 - g y = e^z, over `samples` random points with random cubic g.
std::vector<VerificationRecord> covering_suite(std::uint64_t seed, int samples);

/// Fibre spray identity 1 - g s_2 = e^{t g}(1 - g y), base point s(x,y,0) =
/// (x,y), and d s_2/dt(0) = g y - 1 by central differences.
std::vector<VerificationRecord> fibre_suite(std::uint64_t seed, int samples);

}  // namespace okalab
