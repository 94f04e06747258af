#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "parity/graph.hpp"

namespace parity {

/// Instance fields as read, before validation.
struct RawInstance {
  std::vector<Point> points;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::int64_t> unhappy;
};

RawInstance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& file, const ValidationOptions& options = {});

/// Canonical form: edges as [i,j] with i<j, arrays sorted, compact, one line.
std::string instance_to_json(const Instance& inst);

EdgeSet parse_happy_set(const std::string& text);
std::string happy_set_to_json(const EdgeSet& h);

std::vector<Vertex> parse_cycle(const std::string& text);
std::string cycle_to_json(const std::vector<Vertex>& order);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, const std::string& text);

/// FNV-1a over the canonical JSON.
std::uint64_t instance_digest(const Instance& inst);

}  // namespace parity
