#pragma once

// Property sweeps shared by the unit tests and the acceptance binary. Each
// sweep returns counters so callers decide what counts as a pass.

#include "pcm/embeddings.hpp"
#include "pcm/transforms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct TransformSweep {
    long samples = 0;
    long disc_failures = 0;
    long elliptic_samples = 0;
    long elliptic_failures = 0;
    long min_fixed_digits = 1L << 30;  // over elliptic-unramified samples
    long scale_failures = 0;
    long undecided = 0;  // precision too low to classify; skipped
    std::vector<std::string> notes;
};

/// Random matrices with rational entries over Q_p.
TransformSweep transform_sweep(long p, long count, long precision, std::uint64_t seed);

struct AffineSweep {
    long forward_pairs = 0;
    long forward_failures = 0;
    long converse_pairs = 0;
    long converse_failures = 0;
    std::vector<std::string> notes;
};

/// Shared fixed points versus gamma' = lambda I + mu gamma, in both directions.
AffineSweep affine_sweep(long p, long count, long precision, std::uint64_t seed);

/// True when the two fixed-point lists agree as sets.
bool same_fixed_points(const std::vector<pcm::FixedPoint>& u, const std::vector<pcm::FixedPoint>& v);

struct BijectionSweep {
    long reps = 0;
    long round_trip_failures = 0;
    long optimality_mismatches = 0;
    long template_failures = 0;
    std::vector<std::string> notes;
};

/// Round trips over every representation of -m^2 D_K by N_{O',3} at level <= kmax
/// for the built-in order.
BijectionSweep bijection_sweep(const pcm::Integer& d, const pcm::Integer& m, const pcm::Integer& p, int kmax,
                               long precision);

}  // namespace props
