#pragma once

// Independent checks: a floating-point winding number computed from the angle
// sum, the parity of K4 winding vectors, and randomized fuzzers for the odd
// sum and the K5-45 difference.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "winding/graph_drawing.hpp"
#include "winding/polyline.hpp"

namespace winding {

/// (1 / 2 pi) times the sum of the oriented angles subtended at p by the
/// edges of c, in doubles. Throws PointOnCurve (checked exactly).
double winding_oracle(const Cycle& c, const Pt& p);

/// True iff the winding vector of the K4 drawing has odd sum.
bool check_parity(const Drawing& d);

enum class FuzzKind { k4_parity, k5_pm1 };

std::string to_string(FuzzKind kind);
/// Accepts "k4_parity" / "k4" and "k5_pm1" / "k5m45".
std::optional<FuzzKind> parse_fuzz_kind(const std::string& s);

/// The graph sampled by a fuzz kind and the sampler settings used for it.
Graph fuzz_graph(FuzzKind kind);
SamplerParams fuzz_sampler_params(FuzzKind kind);

/// Seed of sample `index` in a run seeded with `seed` (splitmix64).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct FuzzFailure {
  std::uint64_t seed;  // sample seed, replayable with run_sample
  std::string summary;
  long observed;
};

struct FuzzReport {
  FuzzKind kind;
  long samples_attempted = 0;
  long samples_accepted = 0;
  std::vector<FuzzFailure> failures;
  double elapsed = 0.0;  // seconds

  std::string str() const;
};

struct SampleOutcome {
  long attempts;
  long observed;  // winding-vector sum, or the K5-45 difference
  bool holds;
  std::string summary;
};

/// Draws and checks a single sample.
SampleOutcome run_sample(FuzzKind kind, std::uint64_t sample_seed);

/// Checks `count` samples; deterministic in (kind, count, seed) whatever the
/// number of workers (0 picks the hardware concurrency).
FuzzReport fuzz(FuzzKind kind, long count, std::uint64_t seed, unsigned workers = 0);

/// Replay file: one line `seed<TAB>graph_kind<TAB>observed` per failure.
std::string replay_text(const FuzzReport& report);

struct ReplayEntry {
  std::uint64_t seed;
  FuzzKind kind;
  long observed;
};
/// Throws SchemaError on a malformed line.
std::vector<ReplayEntry> parse_replay(const std::string& text);

}  // namespace winding
