// Serial vs OpenMP timings for the search and batch verification kernels.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <random>

#include "lalab/kernels.hpp"

using namespace lalab;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<EdgeLabeling> random_labelings(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeLabeling> out;
  for (int i = 0; i < count; ++i) {
    int n = 20 + static_cast<int>(rng() % 20);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) edges.emplace_back(u, v);
    std::vector<Int> labels(edges.size());
    for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = static_cast<Int>(e) + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    out.emplace_back(Graph(n, edges), labels);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int workers = argc > 1 ? std::atoi(argv[1]) : 0;

  struct Case {
    const char* name;
    Graph g;
    int colors;
    bool parity;
  };
  std::vector<Case> cases = {{"octahedron/3/parity", octahedron(), 3, true},
                             {"prism3/3", prism(3), 3, false},
                             {"cycle7/2 (none)", cycle(7), 2, false},
                             {"prism5/3", prism(5), 3, false}};
  std::printf("%-22s %10s %10s %8s %8s\n", "search", "serial_s", "omp_s", "serial", "omp");
  for (auto& c : cases) {
    SearchOptions opt;
    opt.max_colors = c.colors;
    opt.require_parity = c.parity;
    opt.workers = workers;
    SearchResult rs, ro;
    double ts = seconds([&] { rs = kernels::search_serial(c.g, opt); });
    double to = seconds([&] { ro = kernels::search_omp(c.g, opt); });
    std::printf("%-22s %10.4f %10.4f %8s %8s\n", c.name, ts, to, to_string(rs.status),
                to_string(ro.status));
  }

  auto batch = random_labelings(2000, 7);
  std::vector<VerificationReport> a, b;
  double ts = seconds([&] { a = kernels::verify_batch_serial(batch); });
  double to = seconds([&] { b = kernels::verify_batch_omp(batch, workers); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i)
    same = a[i].is_local_antimagic == b[i].is_local_antimagic && a[i].colors == b[i].colors;
  std::printf("%-22s %10.4f %10.4f %8s\n", "verify_batch(2000)", ts, to, same ? "agree" : "DIFFER");
  return same ? 0 : 1;
}
