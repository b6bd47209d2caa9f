#pragma once

#include <cstdint>
#include <vector>

#include "krein/fusion.hpp"

namespace krein {

struct RandomFamilyOptions {
  /// Largest rapidity of the random J-unitary boosts applied to the rotated
  /// canonical decomposition. Zero keeps M+ and M- inside K+ and K-.
  double max_boost = 0.0;
  /// Require the member dimensions of each sign to cover the matching
  /// inertia count, so the aggregate spans are maximal.
  bool force_frame = true;
};

/// Random family: `positive` members inside a randomly rotated maximal
/// uniformly positive subspace and `negative` members inside the negative
/// one, dims[i] giving the dimension of member i (positives first). Weights
/// are log-uniform in [0.5, 2]. Deterministic for a fixed seed. Throws
/// InfeasibleRequest.
Family random_family(const Space& s, std::size_t positive,
                     std::size_t negative, const std::vector<std::size_t>& dims,
                     std::uint64_t seed, const RandomFamilyOptions& options = {});

}  // namespace krein
