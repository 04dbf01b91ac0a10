#include <omp.h>

#include <memory>

#include "lalab/kernels.hpp"
#include "search_core.hpp"

namespace lalab::kernels {

namespace {

struct Branch {
  bool found = false;
  bool exhausted = false;
  std::vector<Int> labels;
};

}  // namespace

SearchResult search_omp(const Graph& g, const SearchOptions& opt) {
  if (g.size() == 0 || detail::parity_hopeless(g, opt)) return search_serial(g, opt);
  const int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();
  const std::vector<int> order = detail::edge_order(g);
  detail::Budget budget;
  budget.limit = opt.node_limit;
  budget.progress = opt.progress;
  budget.every = opt.progress_every;
  budget.next_report = opt.progress_every;
  SearchResult out;

  if (!detail::randomized_mode(g, opt)) {
    const auto values = detail::value_orders(g.size(), opt.seed);
    const std::vector<Int> roots = values[0];
    std::vector<Branch> branches(roots.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      if (budget.stop.load()) continue;
      auto local = values;
      local[0] = {roots[b]};
      detail::Searcher s(g, order, opt, budget);
      branches[b].found = s.run(local);
      branches[b].exhausted = s.exhausted();
      if (branches[b].found) {
        branches[b].labels = s.labels();
        budget.stop = true;
      }
    }
    out.nodes = budget.nodes;
    bool all_done = true;
    for (auto& br : branches) {
      if (br.found) {
        out.status = SearchStatus::found;
        out.labeling = detail::finish(g, br.labels, opt);
        return out;
      }
      all_done = all_done && br.exhausted;
    }
    out.status = all_done ? SearchStatus::proven_none : SearchStatus::budget_exhausted;
    return out;
  }

  std::atomic<int> next{0};
  std::vector<Int> winner;
  std::mutex winner_mutex;
#pragma omp parallel num_threads(workers)
  {
    detail::Searcher s(g, order, opt, budget);
    while (!budget.stop.load() && budget.nodes.load() < budget.limit) {
      int r = next++;
      auto values = detail::value_orders(g.size(), opt.seed * 1'000'003ULL + r + 1);
      if (s.run(values, detail::restart_cap(r))) {
        std::lock_guard<std::mutex> lock(winner_mutex);
        if (winner.empty()) winner = s.labels();
        budget.stop = true;
      }
    }
  }
  out.nodes = budget.nodes;
  if (!winner.empty()) {
    out.status = SearchStatus::found;
    out.labeling = detail::finish(g, winner, opt);
  } else {
    out.status = SearchStatus::budget_exhausted;
  }
  return out;
}

std::vector<VerificationReport> verify_batch_omp(const std::vector<EdgeLabeling>& ls,
                                                 int workers) {
  std::vector<VerificationReport> out(ls.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::size_t i = 0; i < ls.size(); ++i) out[i] = verify(ls[i]);
  return out;
}

}  // namespace lalab::kernels
