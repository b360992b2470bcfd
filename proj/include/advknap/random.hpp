#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace advknap {

/// Mersenne twister seeded from several 64-bit keys through std::seed_seq.
/// Both engine and seed_seq are fully specified by the standard, so streams
/// are identical on every platform.
std::mt19937_64 make_rng(std::initializer_list<std::uint64_t> keys);

/// Uniform draw from [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace advknap
