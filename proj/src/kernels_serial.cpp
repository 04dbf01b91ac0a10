#include "lalab/kernels.hpp"
#include "search_core.hpp"

namespace lalab::kernels {

SearchResult search_serial(const Graph& g, const SearchOptions& opt) {
  SearchResult out;
  if (detail::parity_hopeless(g, opt)) {
    out.status = SearchStatus::proven_none;
    return out;
  }
  const std::vector<int> order = detail::edge_order(g);
  detail::Budget budget;
  budget.limit = opt.node_limit;
  budget.progress = opt.progress;
  budget.every = opt.progress_every;
  budget.next_report = opt.progress_every;
  detail::Searcher s(g, order, opt, budget);

  if (!detail::randomized_mode(g, opt)) {
    bool found = s.run(detail::value_orders(g.size(), opt.seed));
    out.nodes = budget.nodes;
    if (found) {
      out.status = SearchStatus::found;
      std::vector<Int> labels = s.labels();
      out.labeling = detail::finish(g, labels, opt);
    } else {
      out.status = s.exhausted() ? SearchStatus::proven_none : SearchStatus::budget_exhausted;
    }
    return out;
  }

  for (int r = 0; budget.nodes < budget.limit; ++r) {
    auto values = detail::value_orders(g.size(), opt.seed * 1'000'003ULL + r + 1);
    if (s.run(values, detail::restart_cap(r))) {
      out.status = SearchStatus::found;
      out.labeling = detail::finish(g, s.labels(), opt);
      out.nodes = budget.nodes;
      return out;
    }
  }
  out.nodes = budget.nodes;
  out.status = SearchStatus::budget_exhausted;
  return out;
}

std::vector<VerificationReport> verify_batch_serial(const std::vector<EdgeLabeling>& ls) {
  std::vector<VerificationReport> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(verify(l));
  return out;
}

}  // namespace lalab::kernels
