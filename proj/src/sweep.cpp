#include "parity/sweep.hpp"

#include <algorithm>
#include <set>

namespace parity {
namespace {

bool conflicting(SegmentRelation r) {
  return r == SegmentRelation::ProperCross || r == SegmentRelation::Touching;
}

class Sweep {
 public:
  Sweep(std::span<const Point> points, std::span<const IndexedSegment> segments)
      : points_(points) {
    left_.reserve(segments.size());
    right_.reserve(segments.size());
    for (const auto& s : segments) {
      Point a = points[s.a];
      Point b = points[s.b];
      if (b < a) std::swap(a, b);
      left_.push_back(a);
      right_.push_back(b);
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> run() {
    const std::size_t m = left_.size();
    if (auto dup = find_duplicate()) return dup;

    struct Event {
      Point at;
      int kind;  // 0 = segment ends here, 1 = segment starts here
      std::size_t seg;
    };
    std::vector<Event> events;
    events.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (left_[i] == right_[i]) continue;
      events.push_back({left_[i], 1, i});
      events.push_back({right_[i], 0, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
      if (x.at != y.at) return x.at < y.at;
      return x.kind < y.kind;
    });

    std::set<std::size_t, Below> status(Below{this});
    std::vector<std::set<std::size_t, Below>::iterator> where(m, status.end());

    for (const Event& ev : events) {
      if (ev.kind == 0) {
        auto it = where[ev.seg];
        auto next = std::next(it);
        if (it != status.begin() && next != status.end()) {
          if (test(*std::prev(it), *next)) return found_;
        }
        status.erase(it);
        where[ev.seg] = status.end();
      } else {
        auto [it, inserted] = status.insert(ev.seg);
        if (found_) return found_;
        if (!inserted) return std::pair{*it, ev.seg};
        where[ev.seg] = it;
        if (it != status.begin() && test(*std::prev(it), ev.seg)) return found_;
        auto next = std::next(it);
        if (next != status.end() && test(ev.seg, *next)) return found_;
      }
    }
    return std::nullopt;
  }

 private:
  struct Below {
    Sweep* sweep;
    bool operator()(std::size_t i, std::size_t j) const { return sweep->below(i, j); }
  };

  // Whether segment i lies below segment j at the current sweep position.
  // Both are assumed active; a collinear contact is recorded as a conflict.
  bool below(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const Point& li = left_[i];
    const Point& lj = left_[j];
    Orientation o;
    bool flip = false;
    if (li == lj) {
      o = orient(li, right_[i], right_[j]);
    } else if (lj < li) {
      o = orient(lj, right_[j], li);
      flip = true;
    } else {
      o = orient(li, right_[i], lj);
    }
    if (o == Orientation::Collinear) {
      if (!found_) found_ = std::pair{std::min(i, j), std::max(i, j)};
      return i < j;
    }
    return flip ? o == Orientation::CW : o == Orientation::CCW;
  }

  bool test(std::size_t i, std::size_t j) {
    const Segment si{left_[i], right_[i]};
    const Segment sj{left_[j], right_[j]};
    if (conflicting(classify(si, sj))) {
      found_ = std::pair{std::min(i, j), std::max(i, j)};
      return true;
    }
    return false;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_duplicate() const {
    std::vector<std::size_t> idx(left_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (left_[a] != left_[b]) return left_[a] < left_[b];
      if (right_[a] != right_[b]) return right_[a] < right_[b];
      return a < b;
    });
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (left_[idx[k]] == left_[idx[k - 1]] && right_[idx[k]] == right_[idx[k - 1]]) {
        return std::pair{std::min(idx[k], idx[k - 1]), std::max(idx[k], idx[k - 1])};
      }
    }
    return std::nullopt;
  }

  std::span<const Point> points_;
  std::vector<Point> left_;
  std::vector<Point> right_;
  std::optional<std::pair<std::size_t, std::size_t>> found_;
};

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_conflict(
    std::span<const Point> points, std::span<const IndexedSegment> segments) {
  Sweep sweep(points, segments);
  return sweep.run();
}

std::vector<std::pair<std::size_t, std::size_t>> all_conflicts(
    std::span<const Point> points, std::span<const IndexedSegment> segments, std::size_t limit) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment si{points[segments[i].a], points[segments[i].b]};
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const Segment sj{points[segments[j].a], points[segments[j].b]};
      if (conflicting(classify(si, sj))) {
        out.emplace_back(i, j);
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

}  // namespace parity
