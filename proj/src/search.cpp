#include "lalab/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lalab/bounds.hpp"
#include "lalab/error.hpp"
#include "lalab/kernels.hpp"
#include "search_core.hpp"

namespace lalab {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::proven_none: return "none";
    case SearchStatus::budget_exhausted: return "budget";
  }
  return "unknown";
}

namespace detail {

std::vector<int> edge_order(const Graph& g) {
  const int q = g.size();
  std::vector<int> rem(g.order()), order;
  std::vector<char> touched(g.order(), 0), taken(q, 0);
  for (int v = 0; v < g.order(); ++v) rem[v] = g.degree(v);
  for (int step = 0; step < q; ++step) {
    int best = -1;
    std::tuple<int, int, int> best_key{-1, -1, -1};
    for (int e = 0; e < q; ++e) {
      if (taken[e]) continue;
      auto [u, v] = g.edges()[e];
      std::tuple<int, int, int> key{(rem[u] == 1) + (rem[v] == 1), touched[u] + touched[v],
                                    g.degree(u) + g.degree(v)};
      if (key > best_key) {
        best_key = key;
        best = e;
      }
    }
    taken[best] = 1;
    order.push_back(best);
    auto [u, v] = g.edges()[best];
    --rem[u];
    --rem[v];
    touched[u] = touched[v] = 1;
  }
  return order;
}

std::vector<std::vector<Int>> value_orders(int q, std::uint64_t seed) {
  std::vector<Int> desc(q);
  std::iota(desc.rbegin(), desc.rend(), Int{1});
  std::vector<std::vector<Int>> out(q, desc);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto& v : out)
      for (int i = q - 1; i > 0; --i) std::swap(v[i], v[rng() % static_cast<unsigned>(i + 1)]);
  }
  return out;
}

std::uint64_t restart_cap(int r) {
  double cap = 20'000.0;
  for (int i = 0; i < r && cap < 5e7; ++i) cap *= 1.3;
  return static_cast<std::uint64_t>(cap);
}

bool randomized_mode(const Graph& g, const SearchOptions& opt) {
  return g.size() > opt.exhaustive_limit;
}

bool parity_hopeless(const Graph& g, const SearchOptions& opt) {
  if (!opt.require_parity) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2) return true;
  return false;
}

Searcher::Searcher(const Graph& g, const std::vector<int>& order, const SearchOptions& opt,
                   Budget& budget)
    : g_(g), order_(order), opt_(opt), budget_(budget), q_(g.size()) {}

bool Searcher::run(const std::vector<std::vector<Int>>& values, std::uint64_t local_cap) {
  values_ = &values;
  local_cap_ = local_cap;
  aborted_ = false;
  pending_ = local_total_ = 0;
  labels_.assign(q_, 0);
  used_.assign(q_ + 1, 0);
  sum_.assign(g_.order(), 0);
  remaining_.resize(g_.order());
  odd_.assign(g_.order(), 0);
  even_.assign(g_.order(), 0);
  colors_.clear();
  free_odd_ = (q_ + 1) / 2;
  free_even_ = q_ / 2;
  for (int v = 0; v < g_.order(); ++v) {
    remaining_[v] = g_.degree(v);
    if (remaining_[v] == 0) add_color(0);
  }
  if (static_cast<int>(colors_.size()) > opt_.max_colors) return false;
  bool found = dfs(0);
  budget_.nodes += pending_;
  pending_ = 0;
  return found;
}

bool Searcher::tick() {
  ++local_total_;
  if (++pending_ >= 256) {
    std::uint64_t total = budget_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (budget_.progress && budget_.every && total >= budget_.next_report) {
      std::lock_guard<std::mutex> lock(budget_.report_mutex);
      if (total >= budget_.next_report) {
        *budget_.progress << "nodes=" << total << " best_colors=" << deepest_colors_ << "\n";
        budget_.next_report = total + budget_.every;
      }
    }
    if (total >= budget_.limit || budget_.stop.load(std::memory_order_relaxed)) aborted_ = true;
  }
  if (local_cap_ && local_total_ >= local_cap_) aborted_ = true;
  return !aborted_;
}

void Searcher::add_color(Int s) {
  for (auto& [c, n] : colors_)
    if (c == s) {
      ++n;
      return;
    }
  colors_.emplace_back(s, 1);
}

void Searcher::remove_color(Int s) {
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].first == s) {
      if (--colors_[i].second == 0) {
        colors_[i] = colors_.back();
        colors_.pop_back();
      }
      return;
    }
}

// v just received its last edge.
bool Searcher::clashes(int v) const {
  for (int w : g_.neighbors(v))
    if (w != v && remaining_[w] == 0 && sum_[w] == sum_[v]) return true;
  return false;
}

bool Searcher::parity_ok(int v) const {
  if (!opt_.require_parity) return true;
  const int half = g_.degree(v) / 2;
  return half - odd_[v] <= free_odd_ && half - even_[v] <= free_even_;
}

// With every colour already in use, an open vertex must land on one of them.
bool Searcher::feasible(int v) const {
  if (remaining_[v] == 0 || static_cast<int>(colors_.size()) < opt_.max_colors) return true;
  const int k = remaining_[v];
  Int lo = sum_[v], hi = sum_[v];
  int taken = 0;
  for (int x = 1; x <= q_ && taken < k; ++x)
    if (!used_[x]) lo += x, ++taken;
  taken = 0;
  for (int x = q_; x >= 1 && taken < k; --x)
    if (!used_[x]) hi += x, ++taken;
  for (auto [c, n] : colors_) {
    if (c < lo || c > hi) continue;
    bool clash = false;
    for (int w : g_.neighbors(v))
      if (remaining_[w] == 0 && sum_[w] == c) {
        clash = true;
        break;
      }
    if (!clash) return true;
  }
  return false;
}

bool Searcher::dfs(int k) {
  if (k > deepest_) {
    deepest_ = k;
    deepest_colors_ = static_cast<int>(colors_.size());
  }
  if (k == q_) return true;
  const int e = order_[k];
  const auto [u, v] = g_.edges()[e];
  for (Int x : (*values_)[k]) {
    if (used_[x]) continue;
    if (!tick()) return false;
    const bool is_odd = x & 1;
    if (opt_.require_parity) {
      auto& cnt_u = is_odd ? odd_[u] : even_[u];
      auto& cnt_v = is_odd ? odd_[v] : even_[v];
      if (2 * (cnt_u + 1) > g_.degree(u) || 2 * (cnt_v + 1) > g_.degree(v)) continue;
    }
    used_[x] = 1;
    labels_[e] = x;
    (is_odd ? free_odd_ : free_even_)--;
    (is_odd ? odd_[u] : even_[u])++;
    (is_odd ? odd_[v] : even_[v])++;
    sum_[u] += x;
    sum_[v] += x;
    --remaining_[u];
    --remaining_[v];

    bool ok = true;
    int added = 0;  // bit 0: u's colour added, bit 1: v's
    if (remaining_[u] == 0) {
      ok = !clashes(u);
      if (ok) {
        add_color(sum_[u]);
        added |= 1;
      }
    }
    if (ok && remaining_[v] == 0) {
      ok = !clashes(v);
      if (ok) {
        add_color(sum_[v]);
        added |= 2;
      }
    }
    ok = ok && static_cast<int>(colors_.size()) <= opt_.max_colors && parity_ok(u) &&
         parity_ok(v) && feasible(u) && feasible(v);
    if (ok && dfs(k + 1)) return true;

    if (added & 2) remove_color(sum_[v]);
    if (added & 1) remove_color(sum_[u]);
    ++remaining_[u];
    ++remaining_[v];
    sum_[u] -= x;
    sum_[v] -= x;
    (is_odd ? odd_[u] : even_[u])--;
    (is_odd ? odd_[v] : even_[v])--;
    (is_odd ? free_odd_ : free_even_)++;
    labels_[e] = 0;
    used_[x] = 0;
    if (aborted_) return false;
  }
  return false;
}

EdgeLabeling finish(const Graph& g, const std::vector<Int>& labels, const SearchOptions& opt) {
  EdgeLabeling l(g, labels);
  VerificationReport r = verify(l);
  if (!r.is_bijective || !r.is_local_antimagic || r.color_count > opt.max_colors ||
      (opt.require_parity && !r.parity_balanced))
    throw Error(ErrorKind::ConstructionUnsound, "search produced an invalid labeling");
  return l;
}

}  // namespace detail

SearchResult search_local_antimagic(const Graph& g, const SearchOptions& opt) {
  if (opt.max_colors < 1) throw Error(ErrorKind::InvalidParameter, "max_colors must be >= 1");
  return opt.workers > 1 ? kernels::search_omp(g, opt) : kernels::search_serial(g, opt);
}

ChiLaResult chi_la_exact(const Graph& g, int edge_limit, std::uint64_t node_limit) {
  if (g.size() > edge_limit)
    throw Error(ErrorKind::SizeLimit, "exact search limited to " + std::to_string(edge_limit) +
                                          " edges");
  ChiLaResult out;
  out.proven = true;
  const int start = std::max(1, chromatic_number(g));
  for (int t = start; t <= std::max(start, g.order()); ++t) {
    SearchOptions opt;
    opt.max_colors = t;
    opt.node_limit = node_limit;
    opt.exhaustive_limit = edge_limit;
    SearchResult r = search_local_antimagic(g, opt);
    if (r.status == SearchStatus::budget_exhausted) out.proven = false;
    if (r.status == SearchStatus::found) {
      out.value = t;
      out.witness = *r.labeling;
      return out;
    }
  }
  throw Error(ErrorKind::NoSuchObject, "no local antimagic labeling exists");
}

}  // namespace lalab
