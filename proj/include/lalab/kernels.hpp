#pragma once

#include <vector>

#include "lalab/labeling.hpp"
#include "lalab/search.hpp"

namespace lalab::kernels {

// Serial reference implementations.
SearchResult search_serial(const Graph& g, const SearchOptions& opt);
std::vector<VerificationReport> verify_batch_serial(const std::vector<EdgeLabeling>& ls);

// OpenMP versions. The search splits on the first edge's values in
// exhaustive mode and runs independent restarts otherwise.
SearchResult search_omp(const Graph& g, const SearchOptions& opt);
std::vector<VerificationReport> verify_batch_omp(const std::vector<EdgeLabeling>& ls,
                                                 int workers = 0);

}  // namespace lalab::kernels
