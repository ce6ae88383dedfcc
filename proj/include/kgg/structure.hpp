#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kgg/parallel.hpp"
#include "kgg/path.hpp"

namespace kgg {

enum class Verdict { holds, fails, unknown_up_to_bound };

std::string_view to_string(Verdict v);

struct SourcesReport {
  Verdict verdict = Verdict::holds;
  /// A vertex lacking incoming edges of `color`, when the verdict is FAILS.
  std::optional<std::pair<VertexId, int>> counterexample;
};

SourcesReport has_no_sources(const KGraph& g);

struct AperiodicityWitness {
  Path a, b, u;
};

struct AperiodicityReport {
  Verdict verdict = Verdict::holds;  // never FAILS
  Degree pair_bound, witness_bound;
  std::size_t pairs_examined = 0;
  std::vector<AperiodicityWitness> witnesses;
  std::vector<std::pair<Path, Path>> missing;  // pairs without a witness
};

/// For every a != b with a common source vertex and d(a), d(b) <= pair_bound,
/// search u with d(u) <= witness_bound (smallest total first) such that a u and
/// b u have no common extension. HOLDS up to bound when every pair has one.
AperiodicityReport aperiodicity_scan(const KGraph& g, const Degree& pair_bound, const Degree& witness_bound,
                                     Exec exec = Exec::parallel);

/// Re-checks one witness directly from the definitions.
bool verify_witness(const KGraph& g, const AperiodicityWitness& w);

struct CofinalityReport {
  Verdict verdict = Verdict::holds;
  /// For HOLDS: path[e][f] has range e and source f, for every ordered pair.
  std::vector<std::vector<Path>> connecting;
  /// For FAILS: vertex e and vertex t such that no path from t (or anything
  /// reachable from t) ranges at e, so e C d(x) is empty for every x in the
  /// sink component of t.
  std::optional<std::pair<VertexId, VertexId>> counterexample;
};

/// HOLDS when every vertex reaches every other vertex in the skeleton; FAILS
/// when some vertex cannot be reached from a sink strongly connected component
/// (one closed under following edges to their sources); UNKNOWN otherwise.
CofinalityReport cofinality_check(const KGraph& g);

/// Shortest skeleton path with range e and source f, as a Path.
std::optional<Path> connecting_path(const KGraph& g, VertexId e, VertexId f);

enum class Simplicity { simple_up_to_bounds, not_decided, fails };

std::string_view to_string(Simplicity s);

struct SimplicityReport {
  Simplicity verdict = Simplicity::simple_up_to_bounds;
  SourcesReport sources;
  CofinalityReport cofinality;
  AperiodicityReport aperiodicity;
  /// Some vertex has at least two paths of a degree <= (1,...,1): the monoid is
  /// countably infinite rather than a finite symmetric inverse monoid.
  bool infinite = false;
};

SimplicityReport simplicity_verdict(const KGraph& g, const Degree& pair_bound, const Degree& witness_bound,
                                    Exec exec = Exec::parallel);

}  // namespace kgg
