#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gausscode/gf2.hpp"
#include "gausscode/interlace.hpp"
#include "gausscode/word.hpp"

namespace gausscode {

// Simple graph plus a set of looped vertices. A vertex is a neighbor of
// itself exactly when it is looped; the adjacency-with-loops matrix is
// base.adjacency + diagonal(loops).
struct LoopedGraph {
    SimpleGraph base;
    BitVec loops;

    int vertex_count() const { return base.vertex_count(); }
    Gf2Matrix adjacency_with_loops() const;

    friend bool operator==(const LoopedGraph&, const LoopedGraph&) = default;
};

// Property P(A): every vertex has even degree, and for each pair of distinct
// vertices u, v the number of common neighbors is odd exactly when u and v
// are adjacent and A contains both or neither. Evaluated by a direct
// quadratic scan of neighborhoods; no matrix arithmetic.
// Throws InvalidInput when a.size() != g.vertex_count().
bool satisfies_property_p(const SimpleGraph& g, const BitVec& a);

// True iff for every pair of not necessarily distinct vertices u, v the
// looped neighborhoods satisfy: |n(u) & n(v)| is odd exactly when v is a
// neighbor of u. Evaluated by neighborhood counting, not matrix products.
bool is_orthoprojection(const LoopedGraph& lg);

// A vertex subset A whose diagonal matrix D_A makes M + D_A idempotent.
struct DiagonalLift {
    BitVec subset;

    Gf2Diagonal diagonal() const { return subset; }

    friend bool operator==(const DiagonalLift&, const DiagonalLift&) = default;
};

enum class FailureKind {
    OddDegreeVertex,
    OddCommonNeighborsNonAdjacent,
    ParityConflict,
};

struct Failure {
    FailureKind kind;
    std::vector<int> vertices;  // one vertex, a pair, or a conflict cycle

    friend bool operator==(const Failure&, const Failure&) = default;
};

std::string failure_kind_name(FailureKind k);

// The full solution set of diagonals D with M + D idempotent, stored
// compactly: when feasible it is base XOR any union of component masks,
// 2^(component count) subsets in total.
struct LiftSolution {
    bool feasible = false;
    BitVec base;
    std::vector<BitVec> components;  // ordered by smallest member vertex
    std::optional<Failure> failure;

    int component_count() const { return static_cast<int>(components.size()); }
    // 2^(component count); only valid when component_count() <= 63.
    std::uint64_t count() const;
    // The k-th lift in the fixed enumeration order (bit j of k flips
    // component j relative to base).
    DiagonalLift lift_at(std::uint64_t k) const;
};

// Decision procedure: a diagonal D makes M + D idempotent iff
//   (1) every vertex degree is even (diagonal of M^2 vanishes),
//   (2) every non-adjacent distinct pair has an even number of common
//       neighbors (off-diagonal of M^2 vanishes off the edge set), and
//   (3) for each edge uv, d_u XOR d_v = 1 XOR (M^2)_uv,
// solved per connected component by breadth-first parity propagation.
// The recorded failure is the first violation in the deterministic scan
// order: vertices by index, then pairs lexicographically, then the first
// conflicting cycle met by the propagation.
LiftSolution solve_lifts(const SimpleGraph& g);

inline constexpr int kFindLiftsComponentLimit = 24;

// Materializes every lift in enumeration order. Throws LimitExceeded when
// the graph has more than kFindLiftsComponentLimit components.
std::vector<DiagonalLift> find_lifts(const SimpleGraph& g);

inline constexpr int kMaxReportWitnesses = 64;

// Verdict for one word: Realizable with the witness lifts of its
// interlacement graph (truncated to kMaxReportWitnesses, exact count kept),
// or NotRealizable with a structured reason.
struct RealizabilityReport {
    DoubleOccurrenceWord word;
    DoubleOccurrenceWord canonical;
    bool realizable = false;
    int component_count = 0;
    std::uint64_t witness_count = 0;  // 2^component_count when realizable and <= 63 components
    std::vector<DiagonalLift> witnesses;
    std::optional<Failure> failure;
};

RealizabilityReport decide_realizable(const DoubleOccurrenceWord& w);

// JSON object {word, canonical, n, verdict, witness_count, witnesses, failure}.
std::string report_to_json(const RealizabilityReport& r, bool pretty = false);
RealizabilityReport report_from_json(const std::string& text);

// DOT export with loops drawn as self-edges.
std::string to_dot(const LoopedGraph& lg);

}  // namespace gausscode
