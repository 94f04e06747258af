#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parity/graph.hpp"

namespace parity {

enum class GenKind { XMonotone, ConvexPath, ConvexGraph, Zigzag, Spiral };

std::optional<GenKind> parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

/// Collinearity is only checked up to this size; larger outputs rely on the
/// coordinate range making collinear triples improbable.
inline constexpr std::size_t kGeneralPositionCheckLimit = 2000;

/// Zigzag outputs are post-checked with the naive visibility graph, so their
/// size is capped.
inline constexpr std::size_t kZigzagLimit = 512;

/// Deterministic in (kind, n, seed). Vertex labels are a seeded permutation
/// and R is a seeded subset of even size. Throws GenerationError when the
/// family property cannot be met.
Instance generate(GenKind kind, std::size_t n, std::uint64_t seed);

/// Number of connected components of Vis(G).
std::size_t vis_components(const PlaneGraph& g);

}  // namespace parity
