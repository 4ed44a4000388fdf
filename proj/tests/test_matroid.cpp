#include <doctest.h>

#include <numeric>
#include <random>

#include "detrunc/matroid.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace detrunc;

namespace {

bool is_forest(const Graph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e : edges) {
    const std::size_t a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= m; ++k)
    for (const auto& s : oracle::subsets(m, k)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("uniform matroid") {
  const LinearMatroid u = uniform_matroid(4, 2, Field::prime(5));
  CHECK(u.rank() == 2);
  CHECK(u.matrix().at(1, 3) == Field::prime(5)->from_int(4));
  CHECK(u.independent(std::vector<std::size_t>{}));
  for (const auto& s : oracle::subsets(4, 2)) CHECK(u.independent(s));
  for (const auto& s : oracle::subsets(4, 3)) CHECK_FALSE(u.independent(s));
  try {
    (void)uniform_matroid(5, 2, Field::prime(5));
    FAIL("expected FieldTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldTooSmall);
  }
  try {
    (void)u.independent(std::vector<std::size_t>{7});
    FAIL("expected UnknownElement");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownElement);
  }
  CHECK(u.index_of("3") == 2);
  CHECK_THROWS_AS(u.index_of("x"), Error);
}

TEST_CASE("graphic matroid of a triangle") {
  const Graph tri{3, {{0, 1}, {1, 2}, {0, 2}}};
  const LinearMatroid g = graphic_matroid(tri, Field::prime(3));
  CHECK(g.ground_size() == 3);
  CHECK(g.rank() == 2);
  CHECK_FALSE(g.independent(std::vector<std::size_t>{0, 1, 2}));
}

TEST_CASE("graphic matroid independence is acyclicity") {
  std::mt19937_64 rng(51);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    for (int t = 0; t < 15; ++t) {
      Graph g{2 + rng() % 4, {}};
      const std::size_t edges = 1 + rng() % 6;
      for (std::size_t e = 0; e < edges; ++e) g.edges.emplace_back(rng() % g.vertices, rng() % g.vertices);
      const LinearMatroid m = graphic_matroid(g, f);
      for (const auto& s : all_subsets(edges)) CHECK(m.independent(s) == is_forest(g, s));
    }
  }
}

TEST_CASE("truncation_of") {
  const LinearMatroid u = uniform_matroid(4, 2, Field::prime(5));
  const LinearMatroid u1 = truncation_of(u, 1);
  CHECK(u1.is_truncated());
  for (const auto& s : all_subsets(4)) CHECK(u1.independent(s) == (s.size() <= 1));
  try {
    (void)truncation_of(u, 3);
    FAIL("expected KExceedsN");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KExceedsN);
  }
  const LinearMatroid full = truncation_of(u, 2);
  for (const auto& s : all_subsets(4)) CHECK(full.independent(s) == u.independent(s));

  const Graph square{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::prime(7)}) {
    const LinearMatroid c4 = truncation_of(graphic_matroid(square, f), 2);
    for (const auto& s : all_subsets(4)) CHECK(c4.independent(s) == (s.size() <= 2 && is_forest(square, s)));
  }
}

TEST_CASE("truncation_of matches the truncation predicate") {
  std::mt19937_64 rng(52);
  for (const auto& f : {Field::prime(2), Field::extension(2, 2), Field::prime(5), Field::rationals()}) {
    for (int t = 0; t < 4; ++t) {
      const std::size_t n = 1 + rng() % 3, m = n + rng() % 4;
      const LinearMatroid base = random_matroid(n, m, f, rng());
      for (std::size_t k = 1; k <= n; ++k) {
        const LinearMatroid tr = truncation_of(base, k);
        for (const auto& s : all_subsets(m)) CHECK(tr.independent(s) == (s.size() <= k && base.independent(s)));
      }
    }
  }
}

TEST_CASE("random matroids satisfy the matroid axioms") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = seed % 2 ? Field::prime(2) : Field::prime(3);
    const LinearMatroid m = random_matroid(3, 6, f, seed);
    CHECK(m.rank() == 3);
    CHECK(m.matrix() == random_matroid(3, 6, f, seed).matrix());
    std::vector<std::vector<std::size_t>> indep;
    for (const auto& s : all_subsets(6))
      if (m.independent(s)) indep.push_back(s);
    for (const auto& s : indep) {
      for (const auto& sub : all_subsets(s.size())) {
        std::vector<std::size_t> picked;
        for (std::size_t i : sub) picked.push_back(s[i]);
        CHECK(m.independent(picked));
      }
    }
    for (const auto& a : indep) {
      for (const auto& b : indep) {
        if (a.size() >= b.size()) continue;
        bool exchange = false;
        for (std::size_t e : b) {
          if (std::find(a.begin(), a.end(), e) != a.end()) continue;
          auto c = a;
          c.push_back(e);
          std::sort(c.begin(), c.end());
          exchange = exchange || m.independent(c);
        }
        CHECK(exchange);
      }
    }
  }
}

TEST_CASE("labels") {
  const LinearMatroid m(FMatrix::identity(Field::prime(3), 2), {"a", "b"});
  CHECK(m.index_of("b") == 1);
  CHECK_THROWS_AS(LinearMatroid(FMatrix::identity(Field::prime(3), 2), {"a"}), Error);
}
