#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "argonto/preferences.hpp"
#include "argonto/semantics.hpp"

using namespace argonto;

namespace {

DefeatGraph make_graph(int n, const std::vector<std::pair<int, int>>& defeats) {
  DefeatGraph g;
  g.n = n;
  g.defeats = defeats;
  std::sort(g.defeats.begin(), g.defeats.end());
  g.defeats.erase(std::unique(g.defeats.begin(), g.defeats.end()), g.defeats.end());
  g.defeaters_of.resize(static_cast<size_t>(n));
  for (const auto& [a, b] : g.defeats) g.defeaters_of[static_cast<size_t>(b)].push_back(a);
  return g;
}

// Reference implementation by exhaustive subset enumeration: a set is a
// complete extension when it is conflict-free and contains exactly the
// arguments it defends.
std::vector<std::vector<int>> brute_force_complete(const DefeatGraph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool conflict = false;
    for (const auto& [a, b] : g.defeats)
      if ((mask & (1u << a)) && (mask & (1u << b))) {
        conflict = true;
        break;
      }
    if (conflict) continue;
    bool complete = true;
    for (int a = 0; a < n && complete; ++a) {
      bool defended = true;
      for (int d : g.defeaters_of[static_cast<size_t>(a)]) {
        bool countered = false;
        for (int c : g.defeaters_of[static_cast<size_t>(d)])
          if (mask & (1u << c)) {
            countered = true;
            break;
          }
        if (!countered) {
          defended = false;
          break;
        }
      }
      complete = defended == ((mask & (1u << a)) != 0);
    }
    if (!complete) continue;
    std::vector<int> ext;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) ext.push_back(a);
    out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> brute_force(const DefeatGraph& g, Semantics s) {
  auto complete = brute_force_complete(g);
  if (s == Semantics::Complete) return complete;
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < complete.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < complete.size() && keep; ++j) {
      if (i == j) continue;
      bool i_in_j = complete[i].size() < complete[j].size() &&
                    std::includes(complete[j].begin(), complete[j].end(),
                                  complete[i].begin(), complete[i].end());
      bool j_in_i = complete[j].size() < complete[i].size() &&
                    std::includes(complete[i].begin(), complete[i].end(),
                                  complete[j].begin(), complete[j].end());
      // Grounded keeps the least extension, preferred the maximal ones.
      if (s == Semantics::Grounded && j_in_i) keep = false;
      if (s == Semantics::Preferred && i_in_j) keep = false;
    }
    if (keep) out.push_back(complete[i]);
  }
  return out;
}

DefeatGraph random_graph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size_dist(1, max_n);
  int n = size_dist(rng);
  std::uniform_real_distribution<double> edge(0.0, 1.0);
  double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
  std::vector<std::pair<int, int>> defeats;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && edge(rng) < density) defeats.emplace_back(a, b);
  return make_graph(n, defeats);
}

}  // namespace

TEST_CASE("an empty graph has the single empty-or-full extension") {
  DefeatGraph g = make_graph(3, {});
  auto gr = enumerate_extensions(g, Semantics::Grounded);
  auto co = enumerate_extensions(g, Semantics::Complete);
  auto pr = enumerate_extensions(g, Semantics::Preferred);
  std::vector<std::vector<int>> all{{0, 1, 2}};
  CHECK(gr == all);
  CHECK(co == all);
  CHECK(pr == all);
}

TEST_CASE("no arguments at all still yields one empty extension") {
  DefeatGraph g = make_graph(0, {});
  CHECK(enumerate_extensions(g, Semantics::Grounded) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Complete) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Preferred) ==
        std::vector<std::vector<int>>{{}});
}

TEST_CASE("a defeat chain reinstates the far end") {
  DefeatGraph g = make_graph(3, {{0, 1}, {1, 2}});
  std::vector<std::vector<int>> expected{{0, 2}};
  CHECK(enumerate_extensions(g, Semantics::Grounded) == expected);
  CHECK(enumerate_extensions(g, Semantics::Complete) == expected);
  CHECK(enumerate_extensions(g, Semantics::Preferred) == expected);
}

TEST_CASE("mutual defeat splits the semantics apart") {
  DefeatGraph g = make_graph(2, {{0, 1}, {1, 0}});
  CHECK(enumerate_extensions(g, Semantics::Grounded) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Complete) ==
        std::vector<std::vector<int>>{{}, {0}, {1}});
  CHECK(enumerate_extensions(g, Semantics::Preferred) ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("a self-defeating argument is never accepted") {
  DefeatGraph g = make_graph(2, {{0, 0}, {0, 1}});
  CHECK(enumerate_extensions(g, Semantics::Grounded) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Complete) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Preferred) ==
        std::vector<std::vector<int>>{{}});
}

TEST_CASE("an odd cycle leaves everything undecided") {
  DefeatGraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(enumerate_extensions(g, Semantics::Complete) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_extensions(g, Semantics::Preferred) ==
        std::vector<std::vector<int>>{{}});
}

TEST_CASE("an even cycle plus a bystander") {
  // 0 and 1 defeat each other; both defeat 2. Accepting either side
  // reinstates nothing for 2.
  DefeatGraph g = make_graph(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
  CHECK(enumerate_extensions(g, Semantics::Complete) ==
        std::vector<std::vector<int>>{{}, {0}, {1}});
  CHECK(enumerate_extensions(g, Semantics::Preferred) ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("labelling search agrees with brute force on random graphs") {
  std::mt19937 rng(20250819);
  for (int trial = 0; trial < 400; ++trial) {
    DefeatGraph g = random_graph(rng, 10);
    INFO("trial " << trial << ", n=" << g.n);
    CHECK(enumerate_extensions(g, Semantics::Complete) ==
          brute_force(g, Semantics::Complete));
    CHECK(enumerate_extensions(g, Semantics::Grounded) ==
          brute_force(g, Semantics::Grounded));
    CHECK(enumerate_extensions(g, Semantics::Preferred) ==
          brute_force(g, Semantics::Preferred));
  }
}

TEST_CASE("the grounded extension is the least complete extension") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DefeatGraph g = random_graph(rng, 10);
    auto gr = enumerate_extensions(g, Semantics::Grounded);
    REQUIRE(gr.size() == 1);
    for (const auto& ext : enumerate_extensions(g, Semantics::Complete)) {
      CHECK(std::includes(ext.begin(), ext.end(), gr[0].begin(), gr[0].end()));
    }
  }
}

TEST_CASE("every extension is conflict-free") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    DefeatGraph g = random_graph(rng, 10);
    for (Semantics s : {Semantics::Complete, Semantics::Grounded, Semantics::Preferred}) {
      for (const auto& ext : enumerate_extensions(g, s)) {
        for (int a : ext)
          for (int b : ext) CHECK_FALSE(g.defeat(a, b));
      }
    }
  }
}

TEST_CASE("preferred extensions are exactly the maximal complete ones") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    DefeatGraph g = random_graph(rng, 10);
    auto complete = enumerate_extensions(g, Semantics::Complete);
    auto preferred = enumerate_extensions(g, Semantics::Preferred);
    for (const auto& p : preferred) {
      bool strictly_contained = false;
      for (const auto& c : complete)
        if (c.size() > p.size() &&
            std::includes(c.begin(), c.end(), p.begin(), p.end()))
          strictly_contained = true;
      CHECK_FALSE(strictly_contained);
    }
    CHECK_FALSE(preferred.empty());
  }
}

TEST_CASE("the node budget cuts off oversized searches") {
  // Mutual defeat forces the search to branch, so a budget of one node
  // cannot cover the recursion.
  DefeatGraph g = make_graph(2, {{0, 1}, {1, 0}});
  SemanticsLimits limits;
  limits.node_budget = 1;
  CHECK_THROWS_AS(enumerate_extensions(g, Semantics::Complete, limits), BudgetError);
}

TEST_CASE("justification aggregates membership across extensions") {
  auto flags = justify(3, {{0, 1}, {0, 2}});
  CHECK(flags[0].sceptical);
  CHECK(flags[0].credulous);
  CHECK_FALSE(flags[1].sceptical);
  CHECK(flags[1].credulous);
  CHECK_FALSE(flags[2].sceptical);
  CHECK(flags[2].credulous);
}
