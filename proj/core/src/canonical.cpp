#include "rainbow/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

SmallGraph::SmallGraph(std::size_t n) : n_(n), rows_(n, 0) {
  if (n > kMaxSmallGraphVertices) {
    throw PreconditionError("small graphs support at most " +
                            std::to_string(kMaxSmallGraphVertices) + " vertices");
  }
}

std::size_t SmallGraph::degree(Vertex v) const noexcept {
  return static_cast<std::size_t>(std::popcount(rows_[v]));
}

void SmallGraph::add_edge(Vertex a, Vertex b) {
  if (a == b || a >= n_ || b >= n_) throw PreconditionError("bad edge for small graph");
  if (has_edge(a, b)) return;
  rows_[a] |= 1U << b;
  rows_[b] |= 1U << a;
  ++edges_;
}

void SmallGraph::remove_edge(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_ || !has_edge(a, b)) return;
  rows_[a] &= ~(1U << b);
  rows_[b] &= ~(1U << a);
  --edges_;
}

std::vector<std::pair<Vertex, Vertex>> SmallGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t SmallGraph::code() const noexcept {
  std::uint64_t c = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) c = (c << 1) | ((rows_[u] >> v) & 1U);
  }
  return c;
}

SmallGraph SmallGraph::relabeled(const std::vector<Vertex>& labeling) const {
  SmallGraph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.add_edge(labeling[u], labeling[v]);
    }
  }
  return out;
}

namespace {

using Partition = std::vector<std::vector<Vertex>>;
using VertexPair = std::pair<Vertex, Vertex>;

VertexPair ordered(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Coarsest equitable refinement; cell order depends only on structure.
Partition refine(const SmallGraph& g, Partition cells) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) cell_of[v] = c;
    }
    std::map<std::vector<std::size_t>, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> signature(cells.size() + 1, 0);
      signature[0] = cell_of[v];
      std::uint32_t row = g.row(v);
      while (row) {
        const auto w = static_cast<Vertex>(std::countr_zero(row));
        row &= row - 1;
        ++signature[cell_of[w] + 1];
      }
      groups[signature].push_back(v);
    }
    if (groups.size() == cells.size()) return cells;
    Partition next;
    next.reserve(groups.size());
    for (auto& [sig, members] : groups) next.push_back(std::move(members));
    cells = std::move(next);
  }
}

struct Search {
  explicit Search(const SmallGraph& graph) : g(graph) {}

  const SmallGraph& g;
  bool have_best = false;
  std::uint64_t best_code = 0;
  std::vector<Vertex> best_labeling;
  std::vector<std::vector<Vertex>> best_leaves;

  void leaf(const Partition& cells) {
    std::vector<Vertex> labeling(g.vertex_count());
    for (std::size_t c = 0; c < cells.size(); ++c) labeling[cells[c].front()] = static_cast<Vertex>(c);
    const std::uint64_t code = g.relabeled(labeling).code();
    if (!have_best || code > best_code) {
      have_best = true;
      best_code = code;
      best_labeling = labeling;
      best_leaves.clear();
    }
    if (code == best_code) best_leaves.push_back(std::move(labeling));
  }

  void descend(const Partition& cells) {
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const std::vector<Vertex>& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    for (Vertex v : cells[t]) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[t]) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      descend(refine(g, std::move(child)));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
  CanonicalForm form;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    form.automorphisms.emplace_back();
    return form;
  }
  Partition unit(1);
  for (Vertex v = 0; v < n; ++v) unit[0].push_back(v);

  Search search(g);
  search.descend(refine(g, std::move(unit)));

  form.code = search.best_code;
  form.labeling = search.best_labeling;
  std::vector<Vertex> inverse(n);
  for (Vertex v = 0; v < n; ++v) inverse[form.labeling[v]] = v;
  for (const auto& other : search.best_leaves) {
    std::vector<Vertex> sigma(n);
    for (Vertex v = 0; v < n; ++v) sigma[v] = inverse[other[v]];
    form.automorphisms.push_back(std::move(sigma));
  }
  std::sort(form.automorphisms.begin(), form.automorphisms.end());
  return form;
}

GraphEnumerator::GraphEnumerator(std::size_t n) : n_(n) {
  if (n > kMaxSmallGraphVertices) {
    throw PreconditionError("enumeration supports at most " +
                            std::to_string(kMaxSmallGraphVertices) + " vertices");
  }
  levels_.push_back({SmallGraph(n)});
}

const std::vector<SmallGraph>& GraphEnumerator::level(std::size_t m) {
  if (m > max_edges()) {
    throw PreconditionError("no graphs with " + std::to_string(m) + " edges on " +
                            std::to_string(n_) + " vertices");
  }
  while (levels_.size() <= m) levels_.push_back(augment(levels_.back()));
  return levels_[m];
}

std::size_t GraphEnumerator::generated() const noexcept {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

std::vector<SmallGraph> GraphEnumerator::augment(const std::vector<SmallGraph>& parents) const {
  std::vector<SmallGraph> children;
  for (const auto& parent : parents) {
    const auto parent_form = canonical_form(parent);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = a + 1; b < n_; ++b) {
        if (parent.has_edge(a, b)) continue;
        // one non-edge per Aut(parent) orbit: keep the least image
        bool least = true;
        for (const auto& sigma : parent_form.automorphisms) {
          if (ordered(sigma[a], sigma[b]) < VertexPair{a, b}) {
            least = false;
            break;
          }
        }
        if (!least) continue;

        SmallGraph child = parent;
        child.add_edge(a, b);
        const auto form = canonical_form(child);
        // canonical deletion: the edge with the largest canonical label pair
        VertexPair best_labels{0, 0};
        VertexPair deletion{0, 0};
        for (auto [u, v] : child.edges()) {
          const auto labels = ordered(form.labeling[u], form.labeling[v]);
          if (labels >= best_labels) {
            best_labels = labels;
            deletion = {u, v};
          }
        }
        bool accept = false;
        for (const auto& sigma : form.automorphisms) {
          if (ordered(sigma[deletion.first], sigma[deletion.second]) == VertexPair{a, b}) {
            accept = true;
            break;
          }
        }
        if (accept) children.push_back(child.relabeled(form.labeling));
      }
    }
  }
  std::sort(children.begin(), children.end(),
            [](const SmallGraph& x, const SmallGraph& y) { return x.code() < y.code(); });
  return children;
}

}  // namespace rainbow
