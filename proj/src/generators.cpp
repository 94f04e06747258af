#include "parity/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "parity/path_solver.hpp"

namespace parity {
namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::int64_t> distinct_sorted(Rng& rng, std::size_t n, std::int64_t range) {
  std::vector<std::int64_t> out;
  while (out.size() < n) {
    while (out.size() < n) out.push_back(uniform(rng, 0, range - 1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

// Valtr's construction: random integer convex polygon, vertices CCW.
std::vector<Point> convex_polygon(Rng& rng, std::size_t n, std::int64_t range) {
  auto split = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> parts;
    std::int64_t upper = v.front();
    std::int64_t lower = v.front();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (rng() & 1) {
        parts.push_back(v[i] - upper);
        upper = v[i];
      } else {
        parts.push_back(lower - v[i]);
        lower = v[i];
      }
    }
    parts.push_back(v.back() - upper);
    parts.push_back(lower - v.back());
    return parts;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto dx = split(distinct_sorted(rng, n, range));
    auto dy = split(distinct_sorted(rng, n, range));
    std::shuffle(dy.begin(), dy.end(), rng);
    std::vector<Point> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = {dx[i], dy[i]};
    auto upper = [](const Point& v) { return v.y > 0 || (v.y == 0 && v.x > 0); };
    std::sort(vec.begin(), vec.end(), [&](const Point& a, const Point& b) {
      if (upper(a) != upper(b)) return upper(a);
      return cross_sign(a.x, a.y, b.x, b.y) == Orientation::CCW;
    });
    bool parallel = false;
    for (std::size_t i = 0; i < n && !parallel; ++i) {
      const Point& a = vec[i];
      const Point& b = vec[(i + 1) % n];
      parallel = cross_sign(a.x, a.y, b.x, b.y) != Orientation::CCW;
    }
    if (parallel) continue;
    std::vector<Point> pts(n);
    Point at{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      pts[i] = at;
      at = {at.x + vec[i].x, at.y + vec[i].y};
    }
    return pts;
  }
  throw GenerationError("could not draw a strictly convex polygon");
}

std::vector<std::int64_t> even_subset(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> in(n, 0);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    in[v] = rng() & 1;
    count += in[v];
  }
  if (count % 2 == 1) in[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))] ^= 1;
  std::vector<std::int64_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v]) out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

// Relabels vertices by a seeded permutation, draws R and validates.
Instance finish(Rng& rng, const std::vector<Point>& pts, const std::vector<Edge>& edges) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Point> out_pts(n);
  for (std::size_t v = 0; v < n; ++v) out_pts[label[v]] = pts[v];
  std::vector<std::pair<std::int64_t, std::int64_t>> out_edges;
  out_edges.reserve(edges.size());
  for (const Edge& e : edges) {
    out_edges.emplace_back(static_cast<std::int64_t>(label[e.u]), static_cast<std::int64_t>(label[e.v]));
  }
  ValidationOptions opt;
  opt.check_general_position = n <= kGeneralPositionCheckLimit;
  return validate_instance(out_pts, out_edges, even_subset(rng, n), opt);
}

std::vector<Edge> path_edges(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

bool general_position(const std::vector<Point>& pts) {
  return pts.size() > kGeneralPositionCheckLimit || !find_collinear_triple(pts);
}

Instance xmonotone(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto xs = distinct_sorted(rng, n, std::int64_t{1} << 30);
    std::vector<Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {xs[i], uniform(rng, 0, (std::int64_t{1} << 30) - 1)};
    if (general_position(pts)) return finish(rng, pts, path_edges(n));
  }
  throw GenerationError("could not place x-monotone points in general position");
}

Instance convex_path(Rng& rng, std::size_t n) {
  const auto poly = convex_polygon(rng, n, std::int64_t{1} << 40);
  const std::size_t start = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = poly[(start + i) % n];
  return finish(rng, pts, path_edges(n));
}

Instance convex_graph(Rng& rng, std::size_t n) {
  const auto pts = convex_polygon(rng, n, std::int64_t{1} << 40);
  std::vector<Edge> all;
  for (std::size_t i = 0; i < n; ++i) all.emplace_back(i, (i + 1) % n);
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, n - 1}};
  while (!todo.empty()) {
    const auto [i, j] = todo.back();
    todo.pop_back();
    if (j - i < 2) continue;
    const std::size_t k = static_cast<std::size_t>(
        uniform(rng, static_cast<std::int64_t>(i) + 1, static_cast<std::int64_t>(j) - 1));
    if (k - i >= 2) all.emplace_back(i, k);
    if (j - k >= 2) all.emplace_back(k, j);
    todo.emplace_back(i, k);
    todo.emplace_back(k, j);
  }
  std::vector<Edge> kept;
  for (const Edge& e : all) {
    if (rng() & 1) kept.push_back(e);
  }
  return finish(rng, pts, kept);
}

// Two columns on outward-bulging parabolas; the path alternates sides going
// up, so every segment between non-consecutive levels crosses a rung.
Instance zigzag(Rng& rng, std::size_t n) {
  if (n > kZigzagLimit) {
    throw GenerationError("zigzag is limited to " + std::to_string(kZigzagLimit) + " vertices");
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::int64_t c = uniform(rng, 1, 4);
    const std::int64_t step = uniform(rng, 5, 50);
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t half_width = 4 * c * nn * nn + uniform(rng, 1000, 100000);
    std::vector<Point> pts(n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t d = 2 * static_cast<std::int64_t>(k) - (nn - 1);
      const std::int64_t bulge = c * d * d;
      const std::int64_t x = k % 2 == 0 ? -half_width + bulge : half_width - bulge;
      pts[k] = {x, static_cast<std::int64_t>(k) * step};
    }
    if (!general_position(pts)) continue;
    Instance inst = finish(rng, pts, path_edges(n));
    if (vis_components(inst.graph) >= 2) return inst;
  }
  throw GenerationError("zigzag visibility graph stayed connected");
}

// A comb: bottoms on a convex arc, tall peaks between them, and two top
// corners. Each peak is a reflex vertex of the top pocket whose edge
// extensions run almost vertically into the top hull edge.
Instance spiral(Rng& rng, std::size_t n) {
  if (n < 5) throw GenerationError("spiral needs at least 5 vertices");
  const std::size_t extra = n % 2 == 0 ? 1 : 0;
  const std::size_t k = (n - 3 - extra) / 2;
  const std::size_t bottoms = k + 1 + extra;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const std::int64_t s = uniform(rng, 1000, 2000);
    const std::int64_t alpha = uniform(rng, 1, 8);
    const std::int64_t beta = uniform(rng, 1, 8);
    const std::int64_t height = std::int64_t{1} << 40;
    const std::int64_t top = height + (std::int64_t{1} << 20) + uniform(rng, 0, 1 << 16);
    const auto center = static_cast<std::int64_t>(bottoms) - 1;
    auto bottom = [&](std::size_t i) {
      const std::int64_t t = 2 * static_cast<std::int64_t>(i) - center;
      return Point{t * s, alpha * t * t};
    };
    auto peak = [&](std::size_t i) {
      const std::int64_t t = 2 * static_cast<std::int64_t>(i) + 1 - center;
      return Point{t * s, height - beta * t * t};
    };
    std::vector<Point> pts;
    pts.push_back({bottom(0).x - s / 4, top});
    pts.push_back(bottom(0));
    if (extra) pts.push_back(bottom(1));
    for (std::size_t i = extra; i + 1 < bottoms; ++i) {
      pts.push_back(peak(i));
      pts.push_back(bottom(i + 1));
    }
    pts.push_back({bottom(bottoms - 1).x + s / 4, top});
    if (pts.size() != n) throw std::logic_error("spiral vertex count mismatch");
    if (!general_position(pts)) continue;
    Instance inst = finish(rng, pts, path_edges(n));
    if (!is_pseudoconvex(inst.graph)) continue;
    bool reflex = false;
    for (const Pocket& p : pockets(inst.graph)) reflex = reflex || !p.reflex.empty();
    if (reflex) return inst;
  }
  throw GenerationError("could not build a pseudoconvex spiral with a reflex vertex");
}

}  // namespace

std::optional<GenKind> parse_gen_kind(const std::string& name) {
  if (name == "xmonotone") return GenKind::XMonotone;
  if (name == "convex-path") return GenKind::ConvexPath;
  if (name == "convex-graph") return GenKind::ConvexGraph;
  if (name == "zigzag") return GenKind::Zigzag;
  if (name == "spiral") return GenKind::Spiral;
  return std::nullopt;
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::XMonotone: return "xmonotone";
    case GenKind::ConvexPath: return "convex-path";
    case GenKind::ConvexGraph: return "convex-graph";
    case GenKind::Zigzag: return "zigzag";
    case GenKind::Spiral: return "spiral";
  }
  return "unknown";
}

Instance generate(GenKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw GenerationError("generators need n >= 2");
  Rng rng(seed ^ (static_cast<std::uint64_t>(kind) + 1) * 0x9e3779b97f4a7c15ULL);
  switch (kind) {
    case GenKind::XMonotone: return xmonotone(rng, n);
    case GenKind::ConvexPath:
      if (n < 3) throw GenerationError("convex-path needs n >= 3");
      return convex_path(rng, n);
    case GenKind::ConvexGraph:
      if (n < 3) throw GenerationError("convex-graph needs n >= 3");
      return convex_graph(rng, n);
    case GenKind::Zigzag: return zigzag(rng, n);
    case GenKind::Spiral: return spiral(rng, n);
  }
  throw GenerationError("unknown generator kind");
}

std::size_t vis_components(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : visibility_graph(g)) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace parity
