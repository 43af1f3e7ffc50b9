#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "doctest.h"
#include "eisenfold/search.hpp"

using namespace eisenfold;

namespace {

EisensteinInt E(long a, long b) { return {BigInt(a), BigInt(b)}; }

bool brute_good(const QuotientComplex& c, const std::vector<Color>& col) {
  std::vector<int> black(c.vertex_count(), 0), deg(c.vertex_count(), 0);
  for (int f = 0; f < c.face_count(); ++f)
    for (int v : c.face_vertices()[f]) {
      ++deg[v];
      black[v] += col[f] == Color::Black;
    }
  for (int v = 0; v < c.vertex_count(); ++v)
    if ((2 * black[v] - deg[v]) % 3 != 0) return false;
  return true;
}

std::int64_t brute_folds(const QuotientComplex& c, const std::vector<Color>& col) {
  std::int64_t n = 0;
  for (int f = 0; f < c.face_count(); ++f)
    for (int s = 0; s < 3; ++s) n += col[f] != col[c.glued({f, s}).face];
  return n / 2;
}

// All 2^F colorings, filtered by the vertex condition.
std::set<std::vector<Color>> brute_good_set(const QuotientComplex& c) {
  const int F = c.face_count();
  std::set<std::vector<Color>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << F); ++m) {
    std::vector<Color> col(F);
    for (int f = 0; f < F; ++f) col[f] = (m >> f) & 1 ? Color::White : Color::Black;
    if (brute_good(c, col)) out.insert(col);
  }
  return out;
}

}  // namespace

TEST_CASE("face order is a permutation") {
  for (auto beta : {E(0, 1), E(1, 2), E(2, 3), E(1, 5)}) {
    const auto c = make_complex(beta);
    auto order = search_face_order(*c);
    std::sort(order.begin(), order.end());
    for (int i = 0; i < c->face_count(); ++i) CHECK(order[i] == i);
  }
}

TEST_CASE("enumeration agrees with brute force") {
  for (auto beta : {E(0, 1), E(1, 1), E(1, 2), E(0, 2), E(0, 3)}) {
    const auto c = make_complex(beta);
    if (c->face_count() > 20) continue;
    const auto oracle = brute_good_set(*c);
    std::set<std::vector<Color>> seen;
    const auto n = for_each_good_coloring(*c, [&](const std::vector<Color>& col) {
      CHECK(seen.insert(col).second);
      return true;
    });
    CHECK(n == oracle.size());
    CHECK(seen == oracle);
  }
  CHECK(enumerate_good_colorings(make_complex(E(0, 1)), 100).colorings.size() == 2);
}

TEST_CASE("good colorings are balanced") {
  for (auto beta : {E(1, 2), E(1, 3), E(2, 3)}) {
    const auto c = make_complex(beta);
    const auto e = enumerate_good_colorings(c, 20000);
    CHECK(!e.colorings.empty());
    for (const auto& col : e.colorings) {
      const auto b = color_balance(col);
      CHECK(b.black == b.white);
      CHECK(is_good(col).good);
    }
  }
}

TEST_CASE("exact search on T(1+2 alpha) matches exhaustive minimum") {
  const auto c = make_complex(E(1, 2));
  REQUIRE(c->face_count() == 14);
  std::int64_t best = -1;
  for (const auto& col : brute_good_set(*c)) {
    const auto f = brute_folds(*c, col);
    if (best < 0 || f < best) best = f;
  }
  CHECK(best == 13);
  SearchOptions opt;
  opt.threads = 1;
  const auto r = min_fold_search(c, opt);
  CHECK(r.status == SearchStatus::ProvedOptimal);
  CHECK(r.best_fold == best);
  CHECK(r.proven_lower_bound == best);
  REQUIRE(r.best_coloring);
  CHECK(brute_folds(*c, r.best_coloring->colors()) == best);
  CHECK(brute_good(*c, r.best_coloring->colors()));
  CHECK(region_isoperimetric_check(*r.best_coloring).ok());
}

TEST_CASE("exact search is deterministic across thread counts") {
  const auto c = make_complex(E(1, 3));
  SearchOptions one;
  one.threads = 1;
  SearchOptions many;
  many.threads = 4;
  const auto a = min_fold_search(c, one), b = min_fold_search(c, many);
  CHECK(a.best_fold == b.best_fold);
  CHECK(a.best_coloring->bitstring() == b.best_coloring->bitstring());
}

TEST_CASE("budget exhaustion keeps a sound lower bound") {
  const auto c = make_complex(E(2, 3));
  SearchOptions opt;
  opt.threads = 1;
  opt.node_limit = 2000;
  const auto r = min_fold_search(c, opt);
  CHECK(r.status == SearchStatus::Incumbent);
  CHECK(r.best_fold <= 23);
  CHECK(r.proven_lower_bound >= 11);  // ceil(sqrt(3 * 38))
  CHECK(r.proven_lower_bound <= 23);
}

TEST_CASE("checkpoint resume reaches the same answer") {
  const auto c = make_complex(E(1, 3));
  const auto path = (std::filesystem::temp_directory_path() / "eisenfold_test_ckpt.json").string();
  std::filesystem::remove(path);
  SearchOptions opt;
  opt.threads = 1;
  opt.checkpoint_path = path;
  opt.node_limit = 50;
  const auto partial = min_fold_search(c, opt);
  CHECK(std::filesystem::exists(path));
  opt.node_limit = 0;
  opt.resume = true;
  const auto full = min_fold_search(c, opt);
  SearchOptions fresh;
  fresh.threads = 1;
  const auto ref = min_fold_search(c, fresh);
  CHECK(full.status == SearchStatus::ProvedOptimal);
  CHECK(full.best_fold == ref.best_fold);
  CHECK(full.best_coloring->bitstring() == ref.best_coloring->bitstring());
  CHECK(partial.best_fold >= ref.best_fold);
  std::ofstream(path) << "{\"format\":\"other\"}";
  CHECK_THROWS_AS(min_fold_search(c, opt), DomainError);
  std::filesystem::remove(path);
}

TEST_CASE("vertex swap") {
  const auto c = make_complex(E(2, 3));
  const auto alt = alternating_coloring(c);
  int applied = 0;
  for (int v = 0; v < c->vertex_count(); ++v) {
    if (!swap_applicable(alt, v)) {
      CHECK_THROWS_AS(vertex_swap(alt, v), DomainError);
      continue;
    }
    const auto s = vertex_swap(alt, v);
    CHECK(is_good(s).good);
    CHECK(fold_count(s) - fold_count(alt) == swap_fold_delta(alt, v));
    CHECK(vertex_swap(s, v) == alt);
    ++applied;
  }
  CHECK(applied > 0);
}

TEST_CASE("anytime search returns good colorings") {
  const auto c = make_complex(E(2, 3));
  SearchOptions opt;
  opt.mode = SearchMode::Anytime;
  opt.threads = 1;
  opt.anytime_bnb_nodes = 1000;
  opt.anneal_moves = 20000;
  opt.restarts = 4;
  const auto r = min_fold_search(c, opt);
  CHECK(r.best_fold <= 23);
  CHECK(is_good(*r.best_coloring).good);
  CHECK(region_isoperimetric_check(*r.best_coloring).ok());
  CHECK(r.proven_lower_bound <= r.best_fold);
  const auto again = min_fold_search(c, opt);
  CHECK(again.best_coloring->bitstring() == r.best_coloring->bitstring());
}

TEST_CASE("eta sweep") {
  CHECK(fibonacci_betas({2, 3, 4}) == std::vector<LatticePoint>{{1, 2}, {2, 3}, {3, 5}});
  const auto rows = ie_sweep({{1, 2}}, 14);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].violations.empty());
  CHECK(rows[0].eta == BigRational(169, 14));
  // Competitors: primitive 1 <= a' <= b', 2 <= b' < 14, excluding beta itself.
  std::int64_t n = 0;
  for (int b = 2; b < 14; ++b)
    for (int a = 1; a <= b; ++a) n += std::gcd(a, b) == 1;
  CHECK(rows[0].competitors == n - 1);
  CHECK_THROWS_AS(ie_sweep({{2, 4}}, 10), DomainError);
}
