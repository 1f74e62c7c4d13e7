#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

// Falsification harnesses for the structural statements about properly
// colored rainbow-P5-free graphs. Every check throws DomainError when the
// instance lies outside the statement's hypotheses; run_lemma() turns that
// into a DomainError status instead.

enum class LemmaId {
  CycleAverage,  // average degree over V' is at most 5
  Neighbor,      // v in V'' with d(v) >= 6 has N(v) inside V''
  P4Endpoint,    // ... and is not the endpoint of a rainbow P4
  Distance2,     // ... and every u at distance 2 with d(u) >= 6 is in V''
  P3Endpoint,    // every vertex ends a rainbow P3 when components are heavy
  Pairing,       // disjoint local pairings and the degree ledger over V''
  MainTheorem,   // preprocessing leaves nothing
};

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view name);
std::span<const LemmaId> all_lemmas();

enum class LemmaStatus { Pass, Violation, DomainError };
std::string_view status_name(LemmaStatus s);

struct LemmaViolation {
  std::vector<Vertex> vertices;                // offending vertices, most specific first
  std::vector<RainbowWitness> certificates;    // rainbow copies backing the claim
  std::string detail;
};

struct LemmaReport {
  LemmaId id = LemmaId::MainTheorem;
  LemmaStatus status = LemmaStatus::Pass;
  std::size_t instances_checked = 0;
  std::optional<LemmaViolation> violation;
  std::string reason;  // domain-error explanation
};

/// "lemma <id> <pass|violation|domain-error> checked=<k> [witness=...]"
std::string format_report(const LemmaReport& r);

/// V = V' ∪ V'' where V' is the set of vertices on some rainbow C5.
struct VertexPartition {
  std::vector<Vertex> in_c5;
  std::vector<Vertex> out_c5;
};
VertexPartition partition_by_rainbow_c5(const ColoredGraph& g);

/// A high-degree vertex of V'' with a neighbor set whose joint average
/// degree is at most 5.
struct LocalPairing {
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const LocalPairing&, const LocalPairing&) = default;
};

LemmaReport check_cycle_lemma(const ColoredGraph& g);
LemmaReport check_neighbor_lemma(const ColoredGraph& g);
LemmaReport check_p4_endpoint_lemma(const ColoredGraph& g);
LemmaReport check_distance2_corollary(const ColoredGraph& g);
LemmaReport check_p3_endpoint_lemma(const ColoredGraph& g);
LemmaReport check_pairing_ledger(const ColoredGraph& g);
LemmaReport check_main_theorem(const ColoredGraph& g);

/// Smallest leaf set first, lexicographically least among equal sizes.
/// Leaves u satisfy: u in V'', d(u) <= 5, and v is u's only neighbor in
/// H(V'') = {x in V'' : d(x) >= 6}.
///
/// Requires a proper, rainbow-P5-free g, v in V'' and d(v) >= 6.
std::optional<LocalPairing> find_local_pairing(const ColoredGraph& g, Vertex v);

/// Dispatches to the check for `id`; DomainError becomes a report status.
LemmaReport run_lemma(LemmaId id, const ColoredGraph& g);

/// Re-derives a violation from scratch with the rainbow-search primitives.
/// True for reports without a violation.
bool revalidate(const ColoredGraph& g, const LemmaReport& r);

/// Unguarded scan: vertices that are not the endpoint of any rainbow P3.
std::vector<Vertex> vertices_without_rainbow_p3_end(const ColoredGraph& g);

}  // namespace rainbow
