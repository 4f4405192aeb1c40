#include <doctest.h>

#include <random>

#include "partcat/errors.hpp"
#include "partcat/prob_vec.hpp"
#include "partcat/sampling.hpp"
#include "partcat/transform.hpp"
#include "support.hpp"

using namespace partcat;
using partcat::testing::R;
using partcat::testing::uniform;
using partcat::testing::V;
using partcat::testing::tail_ratio_oracle;

namespace {

ProbVec mix(const ProbVec& a, const ProbVec& b, const Rat& t) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(t * a[i] + (1 - t) * b[i]);
  return ProbVec(std::move(out));
}

}  // namespace

TEST_CASE("max_prob worked examples") {
  ProbVec x = V({"0.6", "0.2", "0.2"});
  ProbVec y = V({"0.5", "0.4", "0.1"});
  CHECK(max_prob(x, y) == R("4/5"));
  CHECK(max_prob(y, y) == 1);
  ProbVec c = V({"0.65", "0.35"});
  CHECK(max_prob(tensor(x, c), tensor(y, c)) == R("122/135"));
}

TEST_CASE("max_prob zero tails and padding") {
  // y has a zero tail: E_4(y) = 0 imposes nothing
  CHECK(max_prob(V({"0.4", "0.4", "0.1", "0.1"}), V({"0.5", "0.25", "0.25", "0"})) == R("4/5"));
  CHECK(max_prob(V({"0.5", "0.5"}), V({"1", "0"})) == 1);
  CHECK(max_prob(V({"1", "0"}), V({"0.5", "0.5"})) == 0);
  // shorter vector is zero-padded
  CHECK(max_prob(V({"0.5", "0.5"}), V({"0.5", "0.5", "0"})) == 1);
  CHECK(max_prob(V({"0.5", "0.5"}), V({"1/3", "1/3", "1/3"})) == 0);
  // unsorted input
  CHECK(max_prob(V({"0.2", "0.6", "0.2"}), V({"0.1", "0.4", "0.5"})) == R("4/5"));
}

TEST_CASE("critical_set examples") {
  auto l1 = critical_set(V({"0.6", "0.2", "0.2"}), V({"0.5", "0.4", "0.1"}));
  CHECK(l1.indices == std::vector<std::size_t>{2});
  CHECK(l1.p_star == R("4/5"));
  CHECK(l1.hypothesis_holds);

  auto l2 = critical_set(V({"0.6", "0.2", "0.2"}), V({"0.5", "0.3", "0.2"}));
  CHECK(l2.indices == std::vector<std::size_t>{2});
  CHECK(l2.p_star == R("4/5"));
  CHECK(l2.hypothesis_holds);

  ProbVec y = V({"0.5", "0.3", "0.2"});
  auto l3 = critical_set(y, y);
  CHECK(l3.p_star == 1);
  CHECK_FALSE(l3.hypothesis_holds);
  CHECK(l3.indices == std::vector<std::size_t>{2});

  // two interior indices attaining the minimum
  auto l4 = critical_set(V({"0.7", "0.15", "0.09", "0.06"}), V({"0.4", "0.3", "0.2", "0.1"}));
  CHECK(l4.p_star == R("1/2"));
  CHECK(l4.indices == std::vector<std::size_t>{2, 3});
  CHECK(l4.hypothesis_holds);
}

TEST_CASE("analyze_transform") {
  auto rep = analyze_transform(V({"0.6", "0.2", "0.2"}), V({"0.5", "0.4", "0.1"}));
  CHECK(rep.p == R("4/5"));
  CHECK_FALSE(rep.deterministic);
  REQUIRE(rep.last_ratio.has_value());
  CHECK(*rep.last_ratio == 2);
  auto det = analyze_transform(V({"0.5", "0.3", "0.2"}), V({"0.6", "0.3", "0.1"}));
  CHECK(det.deterministic);
  CHECK(det.p == 1);
  auto inf = analyze_transform(V({"0.5", "0.5"}), V({"1", "0"}));
  CHECK_FALSE(inf.last_ratio.has_value());
}

TEST_CASE("catalysis_hypothesis") {
  CHECK(catalysis_hypothesis(V({"0.6", "0.2", "0.2"}), V({"0.5", "0.4", "0.1"})));
  CHECK(catalysis_hypothesis(V({"0.6", "0.2", "0.2"}), V({"0.5", "0.3", "0.2"})));
  CHECK_FALSE(catalysis_hypothesis(V({"0.5", "0.3", "0.2"}), V({"0.5", "0.3", "0.2"})));
  // P attained at l = n: P = x_n / y_n
  CHECK_FALSE(catalysis_hypothesis(V({"0.5", "0.4", "0.1"}), V({"0.4", "0.4", "0.2"})));
}

TEST_CASE("s_membership examples") {
  ProbVec x = V({"0.6", "0.2", "0.2"});
  ProbVec y = V({"0.5", "0.4", "0.1"});
  CHECK(s_membership(x, y, R("4/5")));
  CHECK_FALSE(s_membership(x, y, R("81/100")));
  CHECK(s_membership(V({"1", "0", "0"}), y, 0));
  CHECK_THROWS_AS(s_membership(x, y, R("2")), PreconditionError);
}

TEST_CASE("s_extreme_points examples") {
  auto pts = s_extreme_points(V({"0.5", "0.4", "0.1"}), R("1/2"));
  REQUIRE(pts.size() == 6);
  CHECK(pts.front() == V({"0.05", "0.2", "0.75"}));
  CHECK(pts.back() == V({"0.75", "0.2", "0.05"}));
  CHECK(s_extreme_points(V({"0.5", "0.25", "0.25"}), 1).size() == 3);
  CHECK(s_extreme_points(uniform(4), 1).size() == 1);
}

TEST_CASE("max_prob agrees with the suffix-sum oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    ProbVec x = random_prob_vec(rng, 1 + trial % 5, 20);
    ProbVec y = random_prob_vec(rng, 1 + (trial / 5) % 5, 20);
    CHECK(max_prob(x, y) == tail_ratio_oracle(x, y));
  }
}

TEST_CASE("Nielsen equivalence") {
  std::mt19937_64 rng(102);
  int deterministic = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 4;
    ProbVec x = random_prob_vec(rng, n, 12);
    ProbVec y = random_prob_vec(rng, n, 12);
    bool maj = is_majorized(x, y);
    deterministic += maj;
    CHECK((max_prob(x, y) == 1) == maj);
    CHECK(analyze_transform(x, y).deterministic == maj);
  }
  CHECK(deterministic > 0);
}

TEST_CASE("concavity in x") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    ProbVec x = random_prob_vec(rng, n, 20);
    ProbVec x2 = random_prob_vec(rng, n, 20);
    ProbVec y = random_prob_vec(rng, n, 20);
    for (const char* t : {"1/4", "1/2", "3/4"}) {
      Rat tt = R(t);
      CHECK(max_prob(mix(x, x2, tt), y) >= tt * max_prob(x, y) + (1 - tt) * max_prob(x2, y));
    }
  }
}

TEST_CASE("direct-sum and tensor bounds") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t m = 1 + trial % 4;
    ProbVec x = random_prob_vec(rng, n, 16);
    ProbVec y = random_prob_vec(rng, n, 16);
    ProbVec x2 = random_prob_vec(rng, m, 16);
    ProbVec y2 = random_prob_vec(rng, m, 16);
    Rat p1 = max_prob(x, y);
    Rat p2 = max_prob(x2, y2);
    Rat w = rat(1 + trial % 3, 4);
    ProbVec xs = direct_sum(x.scaled(w), x2.scaled(1 - w));
    ProbVec ys = direct_sum(y.scaled(w), y2.scaled(1 - w));
    CHECK(max_prob(xs, ys) >= std::min(p1, p2));
    CHECK(max_prob(tensor(x, x2), tensor(y, y2)) >= p1 * p2);
  }
}

TEST_CASE("S membership is a step in lambda") {
  std::mt19937_64 rng(105);
  const std::vector<Rat> grid = {0, R("1/10"), R("1/4"), R("1/3"), R("1/2"), R("2/3"), R("3/4"), R("9/10"), 1};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    ProbVec x = random_prob_vec(rng, n, 15);
    ProbVec y = random_prob_vec(rng, n, 15);
    Rat p = max_prob(x, y);
    for (const Rat& lam : grid) CHECK(s_membership(x, y, lam) == (lam <= p));
    CHECK(s_membership(x, y, p));
    if (p < 1) {
      // every λ in (P, 1) rejects x ∉ S(y)
      CHECK_FALSE(s_membership(x, y, (p + 1) / 2));
      CHECK_FALSE(s_membership(x, y, p + (1 - p) / 1000));
    }
  }
}

TEST_CASE("S sets shrink as lambda grows") {
  std::mt19937_64 rng(106);
  const std::vector<Rat> grid = {R("1/5"), R("1/2"), R("3/4"), 1};
  for (int trial = 0; trial < 60; ++trial) {
    ProbVec y = random_prob_vec(rng, 2 + trial % 3, 15);
    for (std::size_t a = 0; a < grid.size(); ++a) {
      for (std::size_t b = a; b < grid.size(); ++b) {
        for (const ProbVec& v : s_extreme_points(y, grid[b])) CHECK(s_membership(v, y, grid[a]));
      }
    }
  }
}

TEST_CASE("critical set certificate") {
  std::mt19937_64 rng(107);
  int with_hypothesis = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 3;
    ProbVec x = random_prob_vec(rng, n, 20);
    ProbVec y = random_prob_vec(rng, n, 20);
    CriticalSet cs = critical_set(x, y);
    ProbVec xs = sort_desc(x);
    ProbVec ys = sort_desc(y);
    CHECK(cs.p_star == max_prob(x, y));
    for (std::size_t l = 2; l < n; ++l) {
      bool in_l = std::find(cs.indices.begin(), cs.indices.end(), l) != cs.indices.end();
      if (in_l) {
        CHECK(tail_sum(xs, l) == cs.p_star * tail_sum(ys, l));
      } else {
        CHECK(tail_sum(xs, l) > cs.p_star * tail_sum(ys, l));
      }
    }
    CHECK(std::is_sorted(cs.indices.begin(), cs.indices.end()));
    if (cs.hypothesis_holds) {
      ++with_hypothesis;
      CHECK_FALSE(cs.indices.empty());
    }
  }
  CHECK(with_hypothesis > 50);
}
