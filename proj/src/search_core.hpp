#pragma once

// Backtracking state shared by the serial and OpenMP search kernels.

#include <atomic>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <random>
#include <vector>

#include "lalab/search.hpp"

namespace lalab::detail {

struct Budget {
  std::uint64_t limit = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::ostream* progress = nullptr;
  std::uint64_t every = 0;
  std::uint64_t next_report = 0;
  std::mutex report_mutex;
};

// Edge order: complete vertices as early as possible, then stay connected,
// then prefer high degree sum.
std::vector<int> edge_order(const Graph& g);

// Candidate labels per depth. Descending when seed is 0, else shuffled.
std::vector<std::vector<Int>> value_orders(int q, std::uint64_t seed);

// Node cap for restart r in randomized mode.
std::uint64_t restart_cap(int r);

bool randomized_mode(const Graph& g, const SearchOptions& opt);
// Parity balance is impossible with a vertex of odd degree.
bool parity_hopeless(const Graph& g, const SearchOptions& opt);

class Searcher {
 public:
  Searcher(const Graph& g, const std::vector<int>& order, const SearchOptions& opt,
           Budget& budget);

  // Runs the search. Returns true when a labeling was found; otherwise
  // exhausted() tells whether the tree was fully explored.
  bool run(const std::vector<std::vector<Int>>& values, std::uint64_t local_cap = 0);

  bool exhausted() const { return !aborted_; }
  const std::vector<Int>& labels() const { return labels_; }
  std::uint64_t local_nodes() const { return local_total_; }

 private:
  bool dfs(int k);
  bool tick();
  bool clashes(int v) const;
  bool feasible(int v) const;
  bool parity_ok(int v) const;
  void add_color(Int s);
  void remove_color(Int s);

  const Graph& g_;
  const std::vector<int>& order_;
  const SearchOptions& opt_;
  Budget& budget_;
  const std::vector<std::vector<Int>>* values_ = nullptr;

  int q_;
  std::vector<Int> labels_;
  std::vector<char> used_;
  std::vector<Int> sum_;
  std::vector<int> remaining_, odd_, even_;
  std::vector<std::pair<Int, int>> colors_;
  int free_odd_ = 0, free_even_ = 0;

  bool aborted_ = false;
  std::uint64_t pending_ = 0, local_total_ = 0, local_cap_ = 0;
  int deepest_ = -1;
  int deepest_colors_ = 0;
};

EdgeLabeling finish(const Graph& g, const std::vector<Int>& labels, const SearchOptions& opt);

}  // namespace lalab::detail
