#include <doctest.h>

#include <algorithm>
#include <set>

#include "lalab/constructions.hpp"
#include "lalab/error.hpp"
#include "lalab/fixtures.hpp"
#include "oracles.hpp"

using namespace lalab;

namespace {

EdgeLabeling mg() { return from_matrix(fixtures::two_c4_union()); }
EdgeLabeling mh() { return from_matrix(fixtures::two_c3_union()); }
EdgeLabeling c4_cyclic() {
  return EdgeLabeling(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {1, 2, 3, 4});
}

std::set<Int> as_set(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

void check_against_oracle(const ConstructionCertificate& c) {
  auto o = oracle::adjacency_scan(c.labeling.graph(), c.labeling.labels());
  CHECK(o.local_antimagic);
  CHECK(o.sums == c.predicted_sums);
  CHECK(o.sums == c.report.sums);
  CHECK(o.colors == c.report.color_count);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Index;
}

}  // namespace

TEST_CASE("expand_copies on the two-triangle labeling") {
  auto c = expand_copies(mh(), 7);
  CHECK(c.labeling.graph().order() == 35);
  CHECK(c.report.is_bijective);
  for (int i = 0; i < 7; ++i) {
    std::vector<Int> block(c.report.sums.begin() + 5 * i, c.report.sums.begin() + 5 * i + 5);
    CHECK(block == std::vector<Int>{43, 43, 57, 57, 58});
  }
  const int base = 6 * 5;
  CHECK(c.labeling.label(base + 0, base + 2) == 36);
  CHECK(c.labeling.label(base + 0, base + 4) == 7);
  CHECK(c.report.color_count <= verify(mh()).color_count);
  check_against_oracle(c);
}

TEST_CASE("expand_copies edge cases") {
  auto one = expand_copies(mh(), 1);
  CHECK(one.labeling.labels() == mh().labels());

  auto three = expand_copies(c4_cyclic(), 3);
  CHECK(std::vector<Int>(three.report.sums.begin(), three.report.sums.begin() + 4) ==
        std::vector<Int>{13, 7, 13, 19});
  check_against_oracle(three);

  for (int p = 1; p <= 9; ++p) {
    auto c = expand_copies(c4_cyclic(), p);
    for (int i = 1; i < p; ++i)
      CHECK(std::equal(c.report.sums.begin(), c.report.sums.begin() + 4,
                       c.report.sums.begin() + 4 * i));
  }

  CHECK(kind_of([] { expand_copies(EdgeLabeling(path(3), {1, 2}), 2); }) ==
        ErrorKind::ConditionViolation);
  try {
    expand_copies(EdgeLabeling(path(3), {1, 2}), 2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("parity balance at 0") != std::string::npos);
  }
}

TEST_CASE("expand_null_fiber") {
  auto c = expand_null_fiber(mg(), 5);
  CHECK(as_set(c.report.sums) == std::set<Int>{1005, 1130, 1760});
  CHECK(c.labeling.graph().size() == 8 * 25);
  CHECK(c.report.is_bijective);
  check_against_oracle(c);

  auto one = expand_null_fiber(mg(), 1);
  CHECK(one.labeling.labels() == mg().labels());

  // K2 labeled {1} is not local antimagic, so neither is K_{3,3} with all sums 15
  EdgeLabeling k2(path(2), {1});
  EdgeLabeling k33 = null_fiber_labeling(k2, 3);
  CHECK(as_set(induced_sums(k33)) == std::set<Int>{15});
  CHECK(verify(k33).is_bijective);
  CHECK(kind_of([&] { expand_null_fiber(k2, 3); }) == ErrorKind::ConstructionUnsound);

  for (int n : {2, 3, 4, 6}) {
    CAPTURE(n);
    auto f = expand_null_fiber(mg(), n);
    check_against_oracle(f);
  }
  CHECK(kind_of([] { expand_null_fiber(EdgeLabeling(path(4), {3, 1, 2}), 3); }) ==
        ErrorKind::ConditionViolation);
  CHECK(kind_of([] { expand_null_fiber(EdgeLabeling(path(3), {1, 3}), 3); }) ==
        ErrorKind::ConditionViolation);
}

TEST_CASE("lower blocks are transposes of upper blocks") {
  EdgeLabeling g = mg();
  const int n = 4;
  auto c = expand_null_fiber(g, n);
  IntMatrix omega = fiber_matrix(n);
  const Graph& gg = g.graph();
  for (int e = 0; e < gg.size(); ++e) {
    auto [u, v] = gg.edges()[e];
    Int base = (g.label(e) - 1) * n * n;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Int want = gg.position(u) < gg.position(v) ? omega(x, y) : omega(y, x);
        CHECK(c.labeling.label(u * n + x, v * n + y) == base + want);
      }
  }
}

TEST_CASE("compose_lexi reproduces the two one-point unions") {
  auto c = compose_lexi(mg(), mh());
  CHECK(c.labeling.graph().order() == 35);
  CHECK(c.labeling.graph().size() == 242);
  CHECK(c.report.colors ==
        std::vector<Int>{1468, 1482, 1483, 1593, 1607, 1608, 2643, 2657, 2658});
  CHECK(c.report.is_local_antimagic);
  CHECK(c.report.color_count <= verify(mg()).color_count * verify(mh()).color_count);
  // 1468 = 43 + 1005 + deg 2 * 5 * 42
  CHECK(c.report.sums[0] == 43 + 1005 + 2 * 5 * 42);
  check_against_oracle(c);
}

TEST_CASE("compose_lexi small cases") {
  auto trivial = compose_lexi(mg(), EdgeLabeling(null_graph(1), {}));
  CHECK(trivial.labeling.labels() == mg().labels());

  // Both ends of K2 carry sum 1, so (0,x) and (1,x) collide.
  EdgeLabeling k2(path(2), {1});
  EdgeLabeling raw = lexi_labeling(k2, c4_cyclic());
  CHECK(raw.graph().order() == 8);
  CHECK(raw.graph().size() == 24);
  CHECK(verify(raw).is_bijective);
  auto scan = oracle::adjacency_scan(raw.graph(), raw.labels());
  CHECK_FALSE(scan.local_antimagic);
  CHECK(scan.sums[0] == 75);
  CHECK(scan.sums[4] == 75);
  try {
    compose_lexi(k2, c4_cyclic());
    FAIL("collision not reported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstructionUnsound);
    CHECK(std::string(e.what()).find("share sum 75") != std::string::npos);
  }

  // a pair that does compose: C4 labeled as above over the two-4-cycle union
  auto gc4 = compose_lexi(mg(), c4_cyclic());
  check_against_oracle(gc4);
  CHECK(gc4.report.color_count <= verify(mg()).color_count * 3);

  auto fiber2 = compose_lexi(mg(), EdgeLabeling(null_graph(2), {}));
  check_against_oracle(fiber2);

  CHECK(kind_of([] { compose_lexi(mg(), EdgeLabeling(path(3), {1, 2})); }) ==
        ErrorKind::ConditionViolation);
}

TEST_CASE("join guide matrix uses every magnitude once per flavour") {
  for (int n = 1; n <= 12; ++n) {
    GuideMatrix g = join_guide(n);
    std::multiset<Int> plain, boxed;
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 2 * n; ++j) (g(r, j).offset ? plain : boxed).insert(g(r, j).magnitude);
    std::multiset<Int> want;
    for (Int a = 2; a <= 2 * n + 1; ++a) want.insert(a);
    CHECK(plain == want);
    CHECK(boxed == want);
  }
}

TEST_CASE("join construction sweep") {
  for (int m = 2; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const Int M = m, N = n;
      IntMatrix b = join_block(m, n, false);
      auto rs = row_sums(b);
      for (int r = 1; r <= m; ++r) {
        CHECK(rs[r - 1] == 4 * term(M, 2 * N - 1, Direction::descending, r) +
                               4 * M * N * N - 10 * M * N + 10 * M + N - 2);
        CHECK(rs[m + r - 1] == 4 * term(M, 2 * N + 1, Direction::descending, r) +
                                   4 * M * N * N + 2 * M * N - 6 * M + N - 2);
      }
      for (int r = 1; r < m; ++r) {
        CHECK(rs[r - 1] - rs[r] == 4);
        CHECK(rs[m + r - 1] - rs[m + r] == 4);
      }
      IntMatrix rot = join_block(m, n, true);
      CHECK(rot(0, 0) == 2 * M + 1);
      for (int r = 1; r < m; ++r) CHECK(rot(r, 0) == 4 * M + 1 - 2 * r);

      if (m == 4 && n == 3) continue;
      auto c = label_join_cycle_null(m, n);
      JoinSums s = join_predicted_sums(m, n);
      CHECK(c.report.colors.size() == 3);
      CHECK(as_set(c.report.sums) == std::set<Int>{s.odd_cycle, s.even_cycle, s.null_side});
      CHECK(c.report.sums[0] == s.odd_cycle);
      CHECK(c.report.sums[1] == s.even_cycle);
      CHECK(c.report.sums[2 * m] == s.null_side);
      CHECK(c.report.parity_balanced);
      CHECK(c.report.is_bijective);
    }
}

TEST_CASE("join examples") {
  auto c68 = label_join_cycle_null(3, 4);
  CHECK(join_block(3, 4, true) == fixtures::c6_o8_block());
  CHECK(as_set(c68.report.sums) == std::set<Int>{191, 311, 183});
  CHECK(c68.report.sums[6] == 183);
  check_against_oracle(c68);

  auto c86 = label_join_cycle_null(4, 3);
  CHECK(c86.report.sums[0] == 202);
  CHECK(c86.report.sums[1] == 206);
  CHECK(c86.report.sums[8] == 260);
  CHECK(c86.report.parity_balanced);
  CHECK(c86.labeling.label(0, 1) == 1);
  CHECK(c86.labeling.label(1, 2) == 8);
  CHECK(c86.labeling.label(7, 0) == 6);
  check_against_oracle(c86);

  auto c42 = label_join_cycle_null(2, 1);
  CHECK(as_set(c42.report.sums) == std::set<Int>{18, 26, 34});
  Int total = 0;
  for (Int s : c42.report.sums) total += s;
  CHECK(total == 156);
  check_against_oracle(c42);

  CHECK(kind_of([] { label_join_cycle_null(1, 2); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { label_join_cycle_null(2, 0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("patch block is the 8x6 fixture plus 8 up to swaps inside columns") {
  IntMatrix omega = fixtures::rect_8x6();
  IntMatrix patch = fixtures::c8_o6_block();
  for (int j = 0; j < 6; ++j) {
    std::multiset<Int> a, b;
    for (int i = 0; i < 8; ++i) {
      a.insert(omega(i, j) + 8);
      b.insert(patch(i, j));
    }
    CHECK(a == b);
  }
}
