#pragma once

#include <cstdint>
#include <random>

#include "goeritz/goeritz.hpp"
#include "goeritz/width.hpp"

namespace goeritz {

/// Deterministic generator used by every seeded suite.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n) that is reproducible across standard libraries.
inline int uniform_below(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

/// Uniform length in [0, max_len], then independent uniform generators with
/// random signs.
GoeritzWord random_goeritz_word(Rng& rng, int genus, int max_len);

/// Raw (not necessarily reduced) letters over a_1..b_g with the given length.
std::vector<Letter> random_surface_letters(Rng& rng, int genus, int len);

/// Valid schedule built from random nested and sequential blocks with at
/// most `max_blocks` opening events.
Schedule random_schedule(Rng& rng, int genus, int max_blocks);

}  // namespace goeritz
