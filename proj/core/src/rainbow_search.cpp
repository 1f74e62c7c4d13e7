#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"

namespace rainbow {
namespace {

/// Colors re-indexed densely to 0..k-1 so the used-color set is a bitmask.
class DenseColors {
 public:
  explicit DenseColors(const ColoredGraph& g) : index_(g.vertex_count()) {
    auto palette = g.colors();
    words_ = (palette.size() + 63) / 64;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (const auto& inc : g.neighbors(v)) {
        auto it = std::lower_bound(palette.begin(), palette.end(), inc.color);
        index_[v].push_back(static_cast<std::uint32_t>(it - palette.begin()));
      }
    }
  }

  std::uint32_t at(Vertex v, std::size_t slot) const { return index_[v][slot]; }
  std::size_t words() const { return words_; }

 private:
  std::vector<std::vector<std::uint32_t>> index_;
  std::size_t words_ = 0;
};

/// Depth-first extension of a partial path, keeping the on-path vertices and
/// the used colors. One instance per thread.
class PathWalker {
 public:
  PathWalker(const ColoredGraph& g, const DenseColors& dense)
      : g_(g), dense_(dense), on_path_(g.vertex_count(), 0), used_(std::max<std::size_t>(dense.words(), 1), 0) {}

  void reset(Vertex start) {
    while (!path_.empty()) pop();
    path_.push_back(start);
    on_path_[start] = 1;
  }

  Vertex tip() const { return path_.back(); }
  std::size_t edges() const { return colors_.size(); }
  bool on_path(Vertex v) const { return on_path_[v] != 0; }
  bool color_used(std::uint32_t c) const { return (used_[c >> 6] >> (c & 63)) & 1U; }
  const std::vector<Vertex>& vertices() const { return path_; }
  const std::vector<Color>& colors() const { return colors_; }

  /// Walks every rainbow extension of the current path by `remaining` edges.
  /// `allow(next)` filters candidate vertices; `leaf()` runs on completion and
  /// returns true to stop the whole walk.
  template <class Allow, class Leaf>
  bool extend(int remaining, const Allow& allow, const Leaf& leaf) {
    if (remaining == 0) return leaf();
    const Vertex t = tip();
    const auto nbrs = g_.neighbors(t);
    for (std::size_t slot = 0; slot < nbrs.size(); ++slot) {
      const Vertex next = nbrs[slot].neighbor;
      const std::uint32_t c = dense_.at(t, slot);
      if (on_path_[next] || color_used(c) || !allow(next, remaining)) continue;
      push(next, nbrs[slot].color, c);
      bool stop = extend(remaining - 1, allow, leaf);
      pop();
      if (stop) return true;
    }
    return false;
  }

  /// Color of the edge tip -- v, plus whether it is still unused.
  std::optional<Color> closing_color(Vertex v, std::uint32_t* dense_out) const {
    const Vertex t = tip();
    const auto nbrs = g_.neighbors(t);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
    if (it == nbrs.end() || it->neighbor != v) return std::nullopt;
    *dense_out = dense_.at(t, static_cast<std::size_t>(it - nbrs.begin()));
    return it->color;
  }

 private:
  void push(Vertex v, Color color, std::uint32_t dense) {
    path_.push_back(v);
    colors_.push_back(color);
    dense_stack_.push_back(dense);
    on_path_[v] = 1;
    used_[dense >> 6] |= std::uint64_t{1} << (dense & 63);
  }

  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
    if (!dense_stack_.empty()) {
      auto d = dense_stack_.back();
      used_[d >> 6] &= ~(std::uint64_t{1} << (d & 63));
      dense_stack_.pop_back();
      colors_.pop_back();
    }
  }

  const ColoredGraph& g_;
  const DenseColors& dense_;
  std::vector<char> on_path_;
  std::vector<std::uint64_t> used_;
  std::vector<Vertex> path_;
  std::vector<Color> colors_;
  std::vector<std::uint32_t> dense_stack_;
};

constexpr auto kAny = [](Vertex, int) { return true; };

RainbowWitness make_witness(const Pattern& p, const PathWalker& w) {
  return RainbowWitness{p, w.vertices(), w.colors()};
}

/// Cycles rooted at `start`: walk ℓ-1 edges, then close back to `start`.
/// With `min_rooted`, every other vertex must exceed `start`.
template <class Leaf>
bool walk_cycles(PathWalker& walker, Vertex start, int length, bool min_rooted, const Leaf& leaf) {
  walker.reset(start);
  auto allow = [&](Vertex next, int) { return !min_rooted || next > start; };
  return walker.extend(length - 1, allow, [&] {
    std::uint32_t dense = 0;
    auto closing = walker.closing_color(start, &dense);
    if (!closing || walker.color_used(dense)) return false;
    return leaf(*closing);
  });
}

}  // namespace

std::optional<RainbowWitness> find_rainbow(const ColoredGraph& g, const Pattern& p,
                                           std::optional<Anchor> anchor) {
  const std::size_t n = g.vertex_count();
  if (anchor) {
    if (anchor->vertex >= n) {
      throw PreconditionError("anchor " + std::to_string(anchor->vertex) +
                              " out of range for n=" + std::to_string(n));
    }
    if (anchor->role == AnchorRole::Endpoint && p.is_cycle()) {
      throw PreconditionError("endpoint anchoring is only defined for path patterns");
    }
  }
  if (p.vertex_count() > n) return std::nullopt;

  DenseColors dense(g);
  PathWalker walker(g, dense);
  std::optional<RainbowWitness> found;

  if (p.is_cycle()) {
    auto record = [&](Color closing) {
      found = make_witness(p, walker);
      found->colors.push_back(closing);
      return true;
    };
    if (anchor) {
      walk_cycles(walker, anchor->vertex, p.length(), false, record);
      return found;
    }
    for (Vertex s = 0; s < n && !found; ++s) walk_cycles(walker, s, p.length(), true, record);
    return found;
  }

  auto record = [&] {
    found = make_witness(p, walker);
    return true;
  };
  if (!anchor) {
    for (Vertex s = 0; s < n && !found; ++s) {
      walker.reset(s);
      walker.extend(p.length(), kAny, record);
    }
    return found;
  }
  if (anchor->role == AnchorRole::Endpoint) {
    walker.reset(anchor->vertex);
    walker.extend(p.length(), kAny, record);
    return found;
  }

  // Path member: lexicographic scan, pruned by distance to the anchor.
  const Vertex a = anchor->vertex;
  const auto dist = bfs_distances(g, a);
  auto allow = [&](Vertex next, int remaining) {
    if (walker.on_path(a) || next == a) return true;
    return dist[next] >= 0 && dist[next] <= remaining - 1;
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    if (dist[s] < 0 || dist[s] > p.length()) continue;
    walker.reset(s);
    walker.extend(p.length(), allow, [&] { return walker.on_path(a) && record(); });
  }
  return found;
}

bool is_rainbow_free(const ColoredGraph& g, const Pattern& p) {
  return !find_rainbow(g, p).has_value();
}

namespace {

std::uint64_t count_from(const ColoredGraph& g, const DenseColors& dense, const Pattern& p,
                         Vertex first, Vertex stride) {
  PathWalker walker(g, dense);
  std::uint64_t total = 0;
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  for (Vertex s = first; s < n; s += stride) {
    if (p.is_cycle()) {
      walk_cycles(walker, s, p.length(), true, [&](Color) {
        const auto& vs = walker.vertices();
        if (vs[1] < vs.back()) ++total;
        return false;
      });
    } else {
      walker.reset(s);
      walker.extend(p.length(), kAny, [&] {
        if (walker.vertices().front() < walker.vertices().back()) ++total;
        return false;
      });
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_rainbow(const ColoredGraph& g, const Pattern& p, unsigned jobs) {
  if (p.vertex_count() > g.vertex_count()) return 0;
  DenseColors dense(g);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(g.vertex_count())));
  if (jobs == 1) return count_from(g, dense, p, 0, 1);

  std::vector<std::uint64_t> partial(jobs, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] { partial[t] = count_from(g, dense, p, t, jobs); });
    }
  }
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

void for_each_rainbow(const ColoredGraph& g, const Pattern& p,
                      const std::function<bool(const RainbowWitness&)>& visit) {
  if (p.vertex_count() > g.vertex_count()) return;
  DenseColors dense(g);
  PathWalker walker(g, dense);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    bool stop = false;
    if (p.is_cycle()) {
      stop = walk_cycles(walker, s, p.length(), true, [&](Color closing) {
        const auto& vs = walker.vertices();
        if (vs[1] > vs.back()) return false;
        auto w = make_witness(p, walker);
        w.colors.push_back(closing);
        return !visit(w);
      });
    } else {
      walker.reset(s);
      stop = walker.extend(p.length(), kAny, [&] {
        if (walker.vertices().front() > walker.vertices().back()) return false;
        return !visit(make_witness(p, walker));
      });
    }
    if (stop) return;
  }
}

std::vector<Vertex> rainbow_c5_membership(const ColoredGraph& g) {
  const auto c5 = Pattern::cycle(5);
  std::vector<char> member(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (member[v]) continue;
    if (auto w = find_rainbow(g, c5, Anchor{v, AnchorRole::Member})) {
      for (Vertex x : w->vertices) member[x] = 1;
    }
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (member[v]) result.push_back(v);
  }
  return result;
}

bool validate_witness(const ColoredGraph& g, const RainbowWitness& w) {
  const auto& p = w.pattern;
  if (w.vertices.size() != p.vertex_count()) return false;
  if (w.colors.size() != static_cast<std::size_t>(p.length())) return false;
  for (Vertex v : w.vertices) {
    if (v >= g.vertex_count()) return false;
  }
  auto vs = w.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  auto cs = w.colors;
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    Vertex a = w.vertices[i];
    Vertex b = w.vertices[(i + 1) % w.vertices.size()];
    auto c = g.color_between(a, b);
    if (!c || *c != w.colors[i]) return false;
  }
  return true;
}

std::string format_witness(const RainbowWitness& w) {
  std::ostringstream out;
  out << "witness " << (w.pattern.is_path() ? "path" : "cycle") << ' ' << w.pattern.length()
      << ':';
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    out << ' ' << w.vertices[i];
    if (i < w.colors.size()) out << " -" << w.colors[i] << '-';
  }
  if (w.pattern.is_cycle() && !w.vertices.empty()) out << ' ' << w.vertices.front();
  return out.str();
}

}  // namespace rainbow
