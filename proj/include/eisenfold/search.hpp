#pragma once

// Enumeration of good colorings, fold-count minimization and the eta sweep
// over the partial order beta <= beta' iff b <= b'.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eisenfold/coloring.hpp"

namespace eisenfold {

// Face order used by every depth-first search: breadth-first from the star
// of the first degree-2 vertex, always completing the vertex star with the
// most faces already placed.
std::vector<int> search_face_order(const QuotientComplex& c);

// Calls visit for every good coloring exactly once (both global color
// choices), in a deterministic order; visit returns false to stop early.
// Returns the number of colorings visited.
std::uint64_t for_each_good_coloring(const QuotientComplex& c,
                                     const std::function<bool(const std::vector<Color>&)>& visit);

struct Enumeration {
  std::vector<FaceColoring> colorings;
  bool truncated = false;
};
Enumeration enumerate_good_colorings(ComplexPtr c, std::uint64_t cap);

// Move that inverts a BWBWBW star around a degree-6 vertex.
bool swap_applicable(const FaceColoring& col, int v);
std::int64_t swap_fold_delta(const FaceColoring& col, int v);
FaceColoring vertex_swap(const FaceColoring& col, int v);  // DomainError when inapplicable

enum class SearchMode { Exact, Anytime };
enum class SearchStatus { ProvedOptimal, Incumbent };

struct SearchOptions {
  SearchMode mode = SearchMode::Exact;
  double time_limit_seconds = 0;  // 0: unlimited
  std::uint64_t node_limit = 0;   // 0: unlimited (branch-and-bound nodes)
  unsigned threads = 0;           // 0: hardware concurrency; EISENFOLD_THREADS caps it
  std::uint64_t seed = 1;
  // Anytime mode: annealing moves per restart and number of restarts.
  std::uint64_t anneal_moves = 200000;
  int restarts = 24;
  // Branch-and-bound share of the anytime budget (nodes), 0 to skip.
  std::uint64_t anytime_bnb_nodes = 2000000;
  std::string checkpoint_path;  // empty: no checkpointing
  bool resume = false;
};

struct SearchReport {
  LatticePoint beta;
  SearchMode mode = SearchMode::Exact;
  SearchStatus status = SearchStatus::Incumbent;
  std::int64_t best_fold = 0;
  std::optional<FaceColoring> best_coloring;
  std::int64_t proven_lower_bound = 0;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0;
  unsigned threads = 1;
  std::string note;
};

SearchReport min_fold_search(ComplexPtr c, const SearchOptions& options = {});

// Worker count after applying EISENFOLD_THREADS.
unsigned effective_threads(unsigned requested);

struct IeEntry {
  LatticePoint beta;
  BigRational eta;
  std::int64_t competitors = 0;
  std::vector<LatticePoint> violations;  // beta' with eta(C(beta')) <= eta(C(beta))
  LatticePoint closest;                  // competitor with the smallest eta
  BigRational closest_eta;
};

struct IeSweepOptions {
  bool construct = true;  // build every C(beta'); the layer formula is always cross-checked
  unsigned threads = 0;
};

// For each beta and every primitive beta' != beta (canonical 1 <= a' <= b')
// with b(beta) <= b' < b_max, checks eta(C(beta)) < eta(C(beta')).
std::vector<IeEntry> ie_sweep(const std::vector<LatticePoint>& betas, std::int64_t b_max,
                              const IeSweepOptions& options = {});
std::vector<LatticePoint> fibonacci_betas(const std::vector<int>& indices);

}  // namespace eisenfold
