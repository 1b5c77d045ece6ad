#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "fitems/algorithms.hpp"
#include "fitems/core.hpp"

namespace fitems {

enum class FamilyId { E, W, W_prime, half_half, eager_killer, competitive_adversary };

std::string_view to_string(FamilyId family);
std::optional<FamilyId> parse_family(std::string_view text);
// Families that need no adversary target.
std::span<const FamilyId> fixed_families();
// Whether the family is defined at length n.
bool family_valid(FamilyId family, std::size_t n);

// All generators return canonical item ids (first occurrence order) with the
// conventional names attached for text output.

// a, a, then n-2 copies of b. n >= 3.
Sequence gen_E(std::size_t n);
// a1,a0,a2,a0,...; odd n ends with a_ceil(n/2). n >= 2.
Sequence gen_W(std::size_t n);
// a1..a_ceil(n/2) then floor(n/2) copies of a0. n >= 2.
Sequence gen_W_prime(std::size_t n);
// ceil(n/2) copies of a0 then floor(n/2) distinct items. n >= 2.
Sequence gen_half_half(std::size_t n);
// a,a,a1,a2,a3,a,a4,a,...: a on every second step after start-up, with one
// extra trailing a for odd n. n >= 4.
Sequence gen_eager_killer(std::size_t n);

// Adaptive lower-bound construction against a deterministic one-slot
// algorithm. Probes the algorithm on two distinct items, then commits: the
// repeated item x is whichever of a1, a2 the algorithm did not keep. The
// stream is n - sqrt(n) distinct items followed by sqrt(n) copies of x.
// Requires a perfect square n >= 4.
Sequence gen_competitive_adversary(const OnlineStep& target, std::size_t n);
Sequence gen_competitive_adversary(AlgorithmId target, std::size_t n);

// Dispatcher used by the CLI; `target` is required for the adversary.
Sequence generate(FamilyId family, std::size_t n, std::optional<AlgorithmId> target = std::nullopt);

// Exact integer square root when n is a perfect square.
std::optional<std::size_t> exact_sqrt(std::size_t n);

}  // namespace fitems
