#pragma once

// Randomized verification: sample representations, decode them back to
// components, rebuild conjugators, and reconstruct the incidence structure
// from samples near the ends of the irreducible arcs.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tkchar/components.hpp"
#include "tkchar/rep_builder.hpp"
#include "tkchar/su2.hpp"
#include "tkchar/word.hpp"

namespace tkchar {

/// SplitMix64 used as a counter-based generator.
///
/// Stream (seed, id) starts at state = mix(seed) ^ mix(id + 0x9E3779B97F4A7C15)
/// and each draw returns mix(state += 0x9E3779B97F4A7C15), where mix is the
/// SplitMix64 finalizer. Uniforms take the top 53 bits; normals use
/// Box-Muller. Every sample index gets its own stream, so results do not
/// depend on how samples are split across threads.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double uniform();       ///< [0, 1)
  double uniform_open();  ///< (0, 1)
  double normal();
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Haar-random element of SU(2): a normalized 4D Gaussian.
UnitaryMatrixd haar_unitary(SampleStream& rng);

struct SampleConfig {
  explicit SampleConfig(GroupParams p) : params(p) {}

  GroupParams params;
  std::int64_t sample_count = 1;
  std::uint64_t seed = 0;
  double reducible_fraction = 0.2;
  std::vector<Word> words = default_words();
  double tol = kDefaultTol;
  unsigned threads = 1;
};

struct Sample {
  RepPaird rep;
  ComponentId source;  ///< canonical component the draw was built on
  double parameter;    ///< t for Irr, raw angle of t for Red
  int raw_index;       ///< raw reducible chart index (Red only)
};

/// One draw: reducible with probability reducible_fraction (uniform raw
/// index, uniform t on the circle), otherwise a uniform irreducible component
/// with t uniform in (0, 1); then both matrices are conjugated by a Haar
/// element.
Sample sample_pair(const SampleConfig& cfg, SampleStream& rng);

/// The draw for sample number `index` of the configured run.
Sample sample_at(const SampleConfig& cfg, std::uint64_t index);

struct ClassifiedPoint {
  ComponentId id;
  /// Irr: t in (0, 1). Red: node_angle of the canonical parameter, i.e. the
  /// centered angle in [0, pi] on interval nodes (s = 2 cos) and the angle of
  /// t in [0, 2 pi) on circle nodes.
  double coordinate;
  std::complex<double> t;  ///< canonical reducible parameter (Red only)
  double relation_residual;
  double classification_residual;
};

/// Decode a pair with A^m = B^n (residual below 1e-6) to its component and
/// intrinsic coordinate. Conjugation invariant.
///
/// Irreducible pairs: k and k' by nearest admissible trace 2 cos(pi k/m),
/// with ambiguity radius half the smallest gap between consecutive values
/// 2 cos(pi j/m), j = 0..m; t = r/(r - 1) from the eigenvector cross-ratio.
/// Reducible pairs: the index from lambda^a mu^{-b} = xi^i, folded i ~ -i,
/// and t from the chart.
///
/// Throws AmbiguityError, NoSolutionError (traces off the variety, parity
/// mismatch), DegenerateError, or std::invalid_argument for a broken relation.
ClassifiedPoint classify(const GroupParams& p, const Mat2d& A, const Mat2d& B,
                         double tol = kDefaultTol);
ClassifiedPoint classify(const GroupParams& p, const RepPaird& rep, double tol = kDefaultTol);

/// Half the smallest gap between consecutive 2 cos(pi j/m), j = 0..m.
double trace_decode_radius(int m);

/// P in SU(2) with P A P^{-1} = A2, P B P^{-1} = B2, found by aligning the
/// eigenbases of A and A2 and fixing the remaining diagonal phase with B.
/// Empty when the characters differ on the default words by more than 1e-8
/// or the construction leaves a residual of 1e-7 or more. Throws
/// std::invalid_argument when either pair is reducible.
std::optional<UnitaryMatrixd> find_conjugator(const RepPaird& first, const RepPaird& second,
                                              double tol = kDefaultTol);

/// Largest |chi_1(w) - chi_2(w)| over the words.
double character_distance(const RepPaird& first, const RepPaird& second,
                          const std::vector<Word>& words = default_words());

struct EndpointObservation {
  std::int64_t samples = 0;
  std::set<int> nodes;      ///< canonical indices reached
  double max_error = 0.0;   ///< angle error against the graph endpoint, same node
  bool any_mismatch = false;
};

struct EmpiricalSummary {
  explicit EmpiricalSummary(GroupParams p) : params(p) {}

  GroupParams params;
  std::uint64_t seed = 0;
  std::int64_t sample_count = 0;
  double reducible_fraction = 0.0;
  std::vector<std::string> words;
  std::map<ComponentId, std::int64_t> counts;
  std::int64_t classification_failures = 0;
  double max_relation_residual = 0.0;
  double max_classification_residual = 0.0;
  std::map<IrrId, std::array<EndpointObservation, 2>> endpoints;  ///< [r = 0, r = -inf]

  bool components_agree = false;
  bool endpoints_agree = false;
  bool connected = false;
  bool clean = false;

  int observed_reducible() const;
  int observed_irreducible() const;
  bool ok() const { return components_agree && endpoints_agree && connected && clean; }
};

/// Near-limit irreducible samples have t below this or above 1 minus it.
inline constexpr double kNearLimit = 0.02;

/// Classify every sample, count components, and match samples near the ends
/// of each arc to their limiting reducible characters; compare with
/// build_graph. Identical output for any thread count.
EmpiricalSummary empirical_structure(const SampleConfig& cfg);

/// "tkchar-verify/1" document.
std::string to_json(const EmpiricalSummary& summary);

}  // namespace tkchar
