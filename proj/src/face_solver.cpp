#include "parity/face_solver.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace parity {
namespace {

void check_shape(const FaceInstance& f) {
  const std::size_t k = f.ring.size();
  if (k < 3) throw SizeError("a face needs at least 3 vertices");
  if (f.unhappy.size() != k || f.edge_in_g.size() != k) {
    throw StructureError("face flags do not match the ring length");
  }
}

std::size_t count_unhappy(const std::vector<std::uint8_t>& flags) {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

std::vector<std::size_t> absent_edges(const FaceInstance& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.edge_in_g.size(); ++i) {
    if (!f.edge_in_g[i]) out.push_back(i);
  }
  return out;
}

// Closed boundary, chords only, k >= 4.
bool cycle_feasible(const std::vector<std::uint8_t>& unhappy) {
  const std::size_t k = unhappy.size();
  const std::size_t r = count_unhappy(unhappy);
  if (r == 0) return true;
  if (r % 2 == 1 || k == 3) return false;
  const std::size_t happy = k - r;
  if (happy >= 3) return true;
  if (happy < 2) return false;
  std::array<std::size_t, 2> h{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!unhappy[i]) h[j++] = i;
  }
  const std::size_t gap = h[1] - h[0];
  return gap != 1 && gap != k - 1;
}

// Positions are ring positions; the caller maps them to vertex ids.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> cycle_construct(
    const std::vector<Vertex>& ring, const std::vector<std::uint8_t>& unhappy) {
  const std::size_t k = unhappy.size();
  if (!cycle_feasible(unhappy)) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (count_unhappy(unhappy) == 0) return out;

  auto next = [k](std::size_t i) { return (i + 1) % k; };
  auto prev = [k](std::size_t i) { return (i + k - 1) % k; };

  std::optional<std::size_t> center;
  for (std::size_t i = 0; i < k; ++i) {
    if (!unhappy[next(i)] && !unhappy[prev(i)] && (!center || ring[i] < ring[*center])) {
      center = i;
    }
  }
  if (center) {
    for (std::size_t i = 0; i < k; ++i) {
      if (unhappy[i] && i != *center) out.emplace_back(*center, i);
    }
    return out;
  }

  std::vector<std::size_t> heads;
  for (std::size_t i = 0; i < k; ++i) {
    if (unhappy[i] && !unhappy[next(i)]) heads.push_back(i);
  }
  if (heads.size() < 2) throw std::logic_error("double star needs two anchors");
  std::partial_sort(heads.begin(), heads.begin() + 2, heads.end(),
                    [&](std::size_t a, std::size_t b) { return ring[a] < ring[b]; });
  const std::size_t u = heads[0];
  const std::size_t w = heads[1];

  std::size_t on_u_side = 0;
  for (std::size_t i = next(u); i != w; i = next(i)) {
    if (unhappy[i]) {
      out.emplace_back(u, i);
      ++on_u_side;
    }
  }
  for (std::size_t i = next(w); i != u; i = next(i)) {
    if (unhappy[i]) out.emplace_back(w, i);
  }
  if (on_u_side % 2 == 0) out.emplace_back(u, w);
  return out;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> triangle_construct(
    const FaceInstance& f) {
  const std::vector<std::size_t> absent = absent_edges(f);
  const std::size_t subsets = std::size_t{1} << absent.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::array<std::uint8_t, 3> parity{};
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t b = 0; b < absent.size(); ++b) {
      if (mask >> b & 1) {
        const std::size_t i = absent[b];
        parity[i] ^= 1;
        parity[(i + 1) % 3] ^= 1;
        chosen.emplace_back(i, (i + 1) % 3);
      }
    }
    if (parity[0] == f.unhappy[0] && parity[1] == f.unhappy[1] && parity[2] == f.unhappy[2]) {
      return chosen;
    }
  }
  return std::nullopt;
}

// Makes one endpoint of each of two absent edges happy by toggling the edge,
// choosing the endpoints non-adjacent, then closes with the cycle construction.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> anchored(const FaceInstance& f,
                                                                          std::size_t a,
                                                                          std::size_t b) {
  const std::size_t k = f.ring.size();
  const std::array<std::size_t, 2> e1{a, (a + 1) % k};
  const std::array<std::size_t, 2> e2{b, (b + 1) % k};
  auto in = [](const std::array<std::size_t, 2>& e, std::size_t x) {
    return e[0] == x || e[1] == x;
  };
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> best;
  for (std::size_t v1 : e1) {
    if (in(e2, v1)) continue;
    for (std::size_t v2 : e2) {
      if (in(e1, v2)) continue;
      const std::size_t gap = v1 > v2 ? v1 - v2 : v2 - v1;
      if (gap == 1 || gap == k - 1) continue;

      std::vector<std::uint8_t> target = f.unhappy;
      std::vector<std::pair<std::size_t, std::size_t>> extra;
      if (target[v1]) {
        target[e1[0]] ^= 1;
        target[e1[1]] ^= 1;
        extra.emplace_back(e1[0], e1[1]);
      }
      if (target[v2]) {
        target[e2[0]] ^= 1;
        target[e2[1]] ^= 1;
        extra.emplace_back(e2[0], e2[1]);
      }
      auto h = cycle_construct(f.ring, target);
      if (!h) throw std::logic_error("two happy non-adjacent vertices must suffice");
      h->insert(h->end(), extra.begin(), extra.end());
      if (!best || h->size() < best->size()) best = std::move(h);
    }
  }
  return best;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> construct_local(
    const FaceInstance& f) {
  check_shape(f);
  const std::size_t k = f.ring.size();
  if (k == 3) return triangle_construct(f);
  if (count_unhappy(f.unhappy) % 2 == 1) return std::nullopt;

  const std::vector<std::size_t> absent = absent_edges(f);
  if (absent.empty()) return cycle_construct(f.ring, f.unhappy);

  if (absent.size() == 1) {
    const std::size_t s = absent[0];
    const std::size_t t = (s + 1) % k;
    if (auto h = cycle_construct(f.ring, f.unhappy)) return h;
    std::vector<std::uint8_t> toggled = f.unhappy;
    toggled[s] ^= 1;
    toggled[t] ^= 1;
    auto h = cycle_construct(f.ring, toggled);
    if (h) h->emplace_back(s, t);
    return h;
  }

  if (auto h = cycle_construct(f.ring, f.unhappy)) return h;
  // Anchor pairs are drawn from the first few gaps; at most three gaps touch a
  // happy vertex here, so five always leave a cheap choice.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> best;
  const std::size_t limit = std::min<std::size_t>(absent.size(), 5);
  for (std::size_t x = 0; x < limit; ++x) {
    for (std::size_t y = x + 1; y < limit; ++y) {
      if (auto h = anchored(f, absent[x], absent[y]); h && (!best || h->size() < best->size())) {
        best = std::move(h);
      }
    }
  }
  if (!best) throw std::logic_error("no non-adjacent anchors on two absent edges");
  return best;
}

}  // namespace

bool face_feasible(const FaceInstance& f) {
  check_shape(f);
  const std::size_t k = f.ring.size();
  if (k == 3) return triangle_construct(f).has_value();
  const std::size_t r = count_unhappy(f.unhappy);
  if (r % 2 == 1) return false;

  const std::vector<std::size_t> absent = absent_edges(f);
  if (absent.empty()) return cycle_feasible(f.unhappy);
  if (absent.size() == 1) {
    const std::size_t s = absent[0];
    const std::size_t t = (s + 1) % k;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != s && i != t && !f.unhappy[i]) return true;
    }
    return false;
  }
  return true;
}

std::optional<std::vector<Edge>> face_construct(const FaceInstance& f) {
  const bool feasible = face_feasible(f);
  auto local = construct_local(f);
  if (feasible != local.has_value()) {
    throw std::logic_error("face construction disagrees with its feasibility test");
  }
  if (!local) return std::nullopt;
  std::vector<Edge> out;
  out.reserve(local->size());
  for (const auto& [i, j] : *local) out.emplace_back(f.ring[i], f.ring[j]);
  return out;
}

}  // namespace parity
