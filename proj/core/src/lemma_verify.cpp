#include "rainbow/lemma_verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "rainbow/errors.hpp"
#include "rainbow/graph_ops.hpp"

namespace rainbow {
namespace {

constexpr std::size_t kHighDegree = 6;

constexpr std::array<LemmaId, 7> kAllLemmas{
    LemmaId::CycleAverage, LemmaId::Neighbor,  LemmaId::P4Endpoint, LemmaId::Distance2,
    LemmaId::P3Endpoint,   LemmaId::Pairing,   LemmaId::MainTheorem,
};

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

void require_proper(const ColoredGraph& g) {
  if (!is_proper(g)) throw DomainError("coloring is not proper");
}

void require_p5_free(const ColoredGraph& g) {
  if (auto w = find_rainbow(g, Pattern::path(5))) {
    throw DomainError("graph contains a rainbow P5 (" + format_witness(*w) + ")");
  }
}

void require_min_degree3(const ColoredGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) {
      throw DomainError("minimum degree " + std::to_string(g.degree(v)) + " < 3 at vertex " +
                        std::to_string(v));
    }
  }
}

void require_heavy_components(const ColoredGraph& g) {
  for (const auto& c : degree_summary(g).components) {
    if (c.avg_degree <= 5) {
      throw DomainError("component containing vertex " + std::to_string(c.vertices.front()) +
                        " has average degree " + to_string(c.avg_degree) + " <= 5");
    }
  }
}

/// Hypotheses shared by the V''-neighborhood statements.
void require_standing(const ColoredGraph& g) {
  require_proper(g);
  require_p5_free(g);
  require_min_degree3(g);
}

std::vector<char> c5_flags(const ColoredGraph& g) {
  std::vector<char> flags(g.vertex_count(), 0);
  for (Vertex v : rainbow_c5_membership(g)) flags[v] = 1;
  return flags;
}

RainbowWitness c5_through(const ColoredGraph& g, Vertex v) {
  return *find_rainbow(g, Pattern::cycle(5), Anchor{v, AnchorRole::Member});
}

LemmaReport pass(LemmaId id, std::size_t checked) {
  LemmaReport r;
  r.id = id;
  r.instances_checked = checked;
  return r;
}

LemmaReport violation(LemmaId id, std::size_t checked, LemmaViolation v) {
  LemmaReport r = pass(id, checked);
  r.status = LemmaStatus::Violation;
  r.violation = std::move(v);
  return r;
}

bool has_c5(const ColoredGraph& g, Vertex v) {
  return find_rainbow(g, Pattern::cycle(5), Anchor{v, AnchorRole::Member}).has_value();
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::CycleAverage: return "cycle-average";
    case LemmaId::Neighbor: return "neighbor";
    case LemmaId::P4Endpoint: return "p4-endpoint";
    case LemmaId::Distance2: return "distance2";
    case LemmaId::P3Endpoint: return "p3-endpoint";
    case LemmaId::Pairing: return "pairing";
    case LemmaId::MainTheorem: return "main";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
  for (auto id : kAllLemmas) {
    if (lemma_name(id) == name) return id;
  }
  return std::nullopt;
}

std::span<const LemmaId> all_lemmas() { return kAllLemmas; }

std::string_view status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Violation: return "violation";
    case LemmaStatus::DomainError: return "domain-error";
  }
  return "?";
}

std::string format_report(const LemmaReport& r) {
  std::ostringstream out;
  out << "lemma " << lemma_name(r.id) << ' ' << status_name(r.status)
      << " checked=" << r.instances_checked;
  if (r.violation) {
    out << " witness=" << r.violation->detail;
    for (const auto& c : r.violation->certificates) out << " | " << format_witness(c);
  }
  if (r.status == LemmaStatus::DomainError) out << " reason=" << r.reason;
  return out.str();
}

VertexPartition partition_by_rainbow_c5(const ColoredGraph& g) {
  VertexPartition p;
  const auto flags = c5_flags(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) (flags[v] ? p.in_c5 : p.out_c5).push_back(v);
  return p;
}

LemmaReport check_cycle_lemma(const ColoredGraph& g) {
  require_proper(g);
  require_p5_free(g);
  const auto in_c5 = rainbow_c5_membership(g);
  if (in_c5.empty()) return pass(LemmaId::CycleAverage, 0);
  const Rational avg = average_degree(g, in_c5);
  if (avg <= 5) return pass(LemmaId::CycleAverage, in_c5.size());

  LemmaViolation v;
  v.vertices = in_c5;
  for (Vertex x : in_c5) v.certificates.push_back(c5_through(g, x));
  v.detail = "average degree over V' is " + to_string(avg) + " > 5, V'={" + join(in_c5) + "}";
  return violation(LemmaId::CycleAverage, in_c5.size(), std::move(v));
}

LemmaReport check_neighbor_lemma(const ColoredGraph& g) {
  require_standing(g);
  const auto in_c5 = c5_flags(g);
  std::size_t checked = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_c5[v] || g.degree(v) < kHighDegree) continue;
    ++checked;
    for (const auto& inc : g.neighbors(v)) {
      if (!in_c5[inc.neighbor]) continue;
      LemmaViolation bad;
      bad.vertices = {v, inc.neighbor};
      bad.certificates = {c5_through(g, inc.neighbor)};
      bad.detail = "v=" + std::to_string(v) + " has neighbor u=" + std::to_string(inc.neighbor) +
                   " on a rainbow C5";
      return violation(LemmaId::Neighbor, checked, std::move(bad));
    }
  }
  return pass(LemmaId::Neighbor, checked);
}

LemmaReport check_p4_endpoint_lemma(const ColoredGraph& g) {
  require_standing(g);
  const auto in_c5 = c5_flags(g);
  std::size_t checked = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_c5[v] || g.degree(v) < kHighDegree) continue;
    ++checked;
    if (auto w = find_rainbow(g, Pattern::path(4), Anchor{v, AnchorRole::Endpoint})) {
      LemmaViolation bad;
      bad.vertices = {v};
      bad.certificates = {*w};
      bad.detail = "v=" + std::to_string(v) + " ends a rainbow P4";
      return violation(LemmaId::P4Endpoint, checked, std::move(bad));
    }
  }
  return pass(LemmaId::P4Endpoint, checked);
}

LemmaReport check_distance2_corollary(const ColoredGraph& g) {
  require_standing(g);
  const auto in_c5 = c5_flags(g);
  std::size_t checked = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_c5[v] || g.degree(v) < kHighDegree) continue;
    const auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (dist[u] != 2 || g.degree(u) < kHighDegree) continue;
      ++checked;
      if (!in_c5[u]) continue;
      LemmaViolation bad;
      bad.vertices = {v, u};
      bad.certificates = {c5_through(g, u)};
      bad.detail = "u=" + std::to_string(u) + " at distance 2 from v=" + std::to_string(v) +
                   " lies on a rainbow C5";
      return violation(LemmaId::Distance2, checked, std::move(bad));
    }
  }
  return pass(LemmaId::Distance2, checked);
}

std::vector<Vertex> vertices_without_rainbow_p3_end(const ColoredGraph& g) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!find_rainbow(g, Pattern::path(3), Anchor{v, AnchorRole::Endpoint})) result.push_back(v);
  }
  return result;
}

LemmaReport check_p3_endpoint_lemma(const ColoredGraph& g) {
  require_standing(g);
  require_heavy_components(g);
  const auto missing = vertices_without_rainbow_p3_end(g);
  if (missing.empty()) return pass(LemmaId::P3Endpoint, g.vertex_count());
  LemmaViolation bad;
  bad.vertices = {missing.front()};
  bad.detail = "v=" + std::to_string(missing.front()) + " ends no rainbow P3";
  return violation(LemmaId::P3Endpoint, g.vertex_count(), std::move(bad));
}

namespace {

std::optional<LocalPairing> pairing_with_flags(const ColoredGraph& g, Vertex v,
                                               const std::vector<char>& in_c5) {
  auto is_high = [&](Vertex x) { return !in_c5[x] && g.degree(x) >= kHighDegree; };

  std::vector<Vertex> candidates;
  for (const auto& inc : g.neighbors(v)) {
    const Vertex u = inc.neighbor;
    if (in_c5[u] || g.degree(u) > 5) continue;
    bool exclusive = true;
    for (const auto& w : g.neighbors(u)) {
      if (w.neighbor != v && is_high(w.neighbor)) {
        exclusive = false;
        break;
      }
    }
    if (exclusive) candidates.push_back(u);
  }

  // sum of the r smallest degrees among candidates[from..]
  auto cheapest = [&](std::size_t from, std::size_t r) {
    std::vector<std::size_t> ds;
    for (std::size_t i = from; i < candidates.size(); ++i) ds.push_back(g.degree(candidates[i]));
    std::sort(ds.begin(), ds.end());
    return std::accumulate(ds.begin(), ds.begin() + static_cast<std::ptrdiff_t>(r), std::size_t{0});
  };

  const std::size_t dv = g.degree(v);
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    // need dv + sum <= 5(k+1)
    if (5 * (k + 1) < dv) continue;
    std::size_t budget = 5 * (k + 1) - dv;
    if (cheapest(0, k) > budget) continue;
    LocalPairing pairing{v, {}};
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
      const std::size_t still_needed = k - slot - 1;
      for (std::size_t i = next; i < candidates.size(); ++i) {
        const std::size_t d = g.degree(candidates[i]);
        if (candidates.size() - i - 1 < still_needed) break;
        if (d <= budget && cheapest(i + 1, still_needed) <= budget - d) {
          pairing.leaves.push_back(candidates[i]);
          budget -= d;
          next = i + 1;
          break;
        }
      }
    }
    return pairing;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalPairing> find_local_pairing(const ColoredGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  require_proper(g);
  require_p5_free(g);
  if (g.degree(v) < kHighDegree) {
    throw DomainError("vertex " + std::to_string(v) + " has degree " +
                      std::to_string(g.degree(v)) + " < 6");
  }
  const auto in_c5 = c5_flags(g);
  if (in_c5[v]) throw DomainError("vertex " + std::to_string(v) + " lies on a rainbow C5");
  return pairing_with_flags(g, v, in_c5);
}

LemmaReport check_pairing_ledger(const ColoredGraph& g) {
  require_proper(g);
  require_p5_free(g);
  const auto in_c5 = c5_flags(g);
  std::vector<int> owner(g.vertex_count(), -1);
  std::size_t checked = 0;
  bool covered = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_c5[v] || g.degree(v) < kHighDegree) continue;
    ++checked;
    auto pairing = pairing_with_flags(g, v, in_c5);
    if (!pairing) {
      covered = false;
      continue;
    }
    std::vector<Vertex> members = pairing->leaves;
    members.push_back(v);
    for (Vertex x : members) {
      if (owner[x] >= 0) {
        LemmaViolation bad;
        bad.vertices = {x, v, static_cast<Vertex>(owner[x])};
        bad.detail = "vertex " + std::to_string(x) + " lies in the pairings of " +
                     std::to_string(owner[x]) + " and " + std::to_string(v);
        return violation(LemmaId::Pairing, checked, std::move(bad));
      }
      owner[x] = static_cast<int>(v);
    }
  }
  if (covered) {
    std::vector<Vertex> out_c5;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!in_c5[v]) out_c5.push_back(v);
    }
    std::size_t degree_sum = 0;
    for (Vertex v : out_c5) degree_sum += g.degree(v);
    if (degree_sum > 5 * out_c5.size()) {
      LemmaViolation bad;
      bad.vertices = out_c5;
      bad.detail = "pairings cover H(V'') but the degree sum over V'' is " +
                   std::to_string(degree_sum) + " > 5*" + std::to_string(out_c5.size());
      return violation(LemmaId::Pairing, checked, std::move(bad));
    }
  }
  return pass(LemmaId::Pairing, checked);
}

LemmaReport check_main_theorem(const ColoredGraph& g) {
  require_proper(g);
  require_p5_free(g);
  auto survivors = preprocess_with_ids(g);
  if (survivors.graph.empty()) return pass(LemmaId::MainTheorem, 1);
  LemmaViolation bad;
  bad.vertices = survivors.original;
  bad.detail = "preprocessing leaves " + std::to_string(survivors.graph.vertex_count()) +
               " vertices with average degree " + to_string(average_degree(survivors.graph)) +
               ": {" + join(survivors.original) + "}";
  return violation(LemmaId::MainTheorem, 1, std::move(bad));
}

LemmaReport run_lemma(LemmaId id, const ColoredGraph& g) {
  try {
    switch (id) {
      case LemmaId::CycleAverage: return check_cycle_lemma(g);
      case LemmaId::Neighbor: return check_neighbor_lemma(g);
      case LemmaId::P4Endpoint: return check_p4_endpoint_lemma(g);
      case LemmaId::Distance2: return check_distance2_corollary(g);
      case LemmaId::P3Endpoint: return check_p3_endpoint_lemma(g);
      case LemmaId::Pairing: return check_pairing_ledger(g);
      case LemmaId::MainTheorem: return check_main_theorem(g);
    }
  } catch (const DomainError& e) {
    LemmaReport r;
    r.id = id;
    r.status = LemmaStatus::DomainError;
    r.reason = e.what();
    return r;
  }
  throw PreconditionError("unknown lemma id");
}

bool revalidate(const ColoredGraph& g, const LemmaReport& r) {
  if (r.status != LemmaStatus::Violation) return true;
  if (!r.violation) return false;
  const auto& bad = *r.violation;
  for (const auto& c : bad.certificates) {
    if (!validate_witness(g, c)) return false;
  }
  auto contains = [](const RainbowWitness& w, Vertex x) {
    return std::find(w.vertices.begin(), w.vertices.end(), x) != w.vertices.end();
  };
  auto high_outside = [&](Vertex v) { return g.degree(v) >= kHighDegree && !has_c5(g, v); };

  switch (r.id) {
    case LemmaId::CycleAverage: {
      if (bad.certificates.size() != bad.vertices.size()) return false;
      for (std::size_t i = 0; i < bad.vertices.size(); ++i) {
        const auto& c = bad.certificates[i];
        if (!c.pattern.is_cycle() || c.pattern.length() != 5 || !contains(c, bad.vertices[i])) {
          return false;
        }
      }
      return average_degree(g, bad.vertices) > 5;
    }
    case LemmaId::Neighbor: {
      if (bad.vertices.size() != 2 || bad.certificates.size() != 1) return false;
      const Vertex v = bad.vertices[0], u = bad.vertices[1];
      const auto& c = bad.certificates[0];
      return g.has_edge(v, u) && high_outside(v) && c.pattern == Pattern::cycle(5) && contains(c, u);
    }
    case LemmaId::P4Endpoint: {
      if (bad.vertices.size() != 1 || bad.certificates.size() != 1) return false;
      const auto& c = bad.certificates[0];
      return high_outside(bad.vertices[0]) && c.pattern == Pattern::path(4) &&
             c.vertices.front() == bad.vertices[0];
    }
    case LemmaId::Distance2: {
      if (bad.vertices.size() != 2 || bad.certificates.size() != 1) return false;
      const Vertex v = bad.vertices[0], u = bad.vertices[1];
      const auto& c = bad.certificates[0];
      return high_outside(v) && g.degree(u) >= kHighDegree && bfs_distances(g, v)[u] == 2 &&
             c.pattern == Pattern::cycle(5) && contains(c, u);
    }
    case LemmaId::P3Endpoint:
      return bad.vertices.size() == 1 &&
             !find_rainbow(g, Pattern::path(3), Anchor{bad.vertices[0], AnchorRole::Endpoint});
    case LemmaId::Pairing:
      return !bad.vertices.empty();
    case LemmaId::MainTheorem: {
      const auto sub = induced_subgraph(g, bad.vertices).graph;
      const auto summary = degree_summary(sub);
      return !sub.empty() && sub.min_degree() >= 3 &&
             std::all_of(summary.components.begin(), summary.components.end(),
                         [](const ComponentSummary& c) { return c.avg_degree > 5; });
    }
  }
  return false;
}

}  // namespace rainbow
