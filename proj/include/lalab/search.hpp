#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

#include "lalab/labeling.hpp"

namespace lalab {

enum class SearchStatus { found, proven_none, budget_exhausted };

const char* to_string(SearchStatus s);

struct SearchOptions {
  int max_colors = 3;
  bool require_parity = false;
  std::uint64_t node_limit = 10'000'000;
  std::uint64_t seed = 0;
  int workers = 1;
  int exhaustive_limit = 16;  // larger graphs use randomized restarts
  std::ostream* progress = nullptr;
  std::uint64_t progress_every = 1'000'000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  std::optional<EdgeLabeling> labeling;
  std::uint64_t nodes = 0;
};

SearchResult search_local_antimagic(const Graph& g, const SearchOptions& opt);

struct ChiLaResult {
  int value = 0;
  bool proven = false;
  EdgeLabeling witness;
};

// Exhaustive for |E| <= edge_limit.
ChiLaResult chi_la_exact(const Graph& g, int edge_limit = 10,
                         std::uint64_t node_limit = 100'000'000);

}  // namespace lalab
