#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <tqd/cohomology.hpp>

using namespace tqd;

static std::vector<long long> sorted_factors(const H3Context& ctx) {
  auto f = ctx.invariant_factors();
  std::sort(f.begin(), f.end());
  return f;
}

TEST_CASE("H^3 of cyclic groups") {
  for (int m : {2, 4, 8}) {
    auto G = cyclic_group(m);
    H3Context ctx(G);
    CHECK(sorted_factors(ctx) == std::vector<long long>{m});
    // the trivial cochain is trivial; a representative of each class has the
    // right order
    CHECK(ctx.is_trivial_class(Cochain3::trivial(G, 1)));
    for (long long c = 0; c < m; ++c) {
      auto w = ctx.representative({c});
      CHECK(w.is_cocycle());
      CHECK(ctx.class_order(w) == m / std::gcd((long long)m, c == 0 ? (long long)m : c));
      CHECK(ctx.decompose(w) == std::vector<long long>{c});
    }
  }
}

TEST_CASE("H^3 of the order-8 groups") {
  const auto& C = order8();
  CHECK(sorted_factors(h3_context(C.Q8)) == std::vector<long long>{8});
  CHECK(sorted_factors(h3_context(C.D8)) == std::vector<long long>{2, 2, 4});
  CHECK(sorted_factors(h3_context(C.E8)) ==
        std::vector<long long>(7, 2));
}

TEST_CASE("coboundaries are trivial classes with verified witnesses") {
  const auto& C = order8();
  std::mt19937 rng(11);
  for (const GroupTable* G : {&C.D8, &C.Q8, &C.E8}) {
    const auto& ctx = h3_context(*G);
    for (int trial = 0; trial < 3; ++trial) {
      Cochain2 b = Cochain2::trivial(*G, 16);
      for (int x = 1; x < G->n; ++x)
        for (int y = 1; y < G->n; ++y) b.at(x, y) = (long long)(rng() % 16);
      Cochain3 w = coboundary(b);
      CHECK(w.is_cocycle());
      CHECK(ctx.is_trivial_class(w));
      auto wit = ctx.coboundary_witness(w);
      REQUIRE(wit.has_value());
      CHECK(coboundary(*wit) == w);
    }
    // products of a representative with a coboundary keep class data
    Cochain2 b = Cochain2::trivial(*G, 8);
    for (int x = 1; x < G->n; ++x)
      for (int y = 1; y < G->n; ++y) b.at(x, y) = (long long)(rng() % 8);
    std::vector<long long> comp(ctx.invariant_factors().size(), 1);
    auto w = ctx.representative(comp);
    auto w2 = w * coboundary(b);
    CHECK(ctx.decompose(w2) == ctx.decompose(w));
    CHECK(ctx.class_order(w2) == ctx.class_order(w));
    CHECK(support(w2) == support(w));
  }
}

TEST_CASE("decompose/representative round-trips") {
  const auto& C = order8();
  for (const GroupTable* G : {&C.D8, &C.Q8}) {
    const auto& ctx = h3_context(*G);
    const auto& f = ctx.invariant_factors();
    std::vector<long long> comp(f.size(), 0);
    // walk all classes (at most 32 for these groups)
    size_t total = 1;
    for (auto d : f) total *= (size_t)d;
    for (size_t idx = 0; idx < total; ++idx) {
      size_t t = idx;
      for (size_t i = 0; i < f.size(); ++i) {
        comp[i] = (long long)(t % (size_t)f[i]);
        t /= (size_t)f[i];
      }
      auto w = ctx.representative(comp);
      CHECK(w.is_cocycle());
      CHECK(ctx.decompose(w) == comp);
    }
  }
}

TEST_CASE("elementary abelian: restriction supports classify all classes") {
  const auto& C = order8();
  const auto& ctx = h3_context(C.E8);
  // index the seven order-2 subgroups
  std::vector<std::vector<int>> lines;
  std::vector<int> gens;
  for (auto& [g, elems] : C.E8.cyclic_subgroups())
    if (elems.size() == 2) {
      lines.push_back(elems);
      gens.push_back(g);
    }
  REQUIRE(lines.size() == 7);

  std::set<std::set<std::vector<int>>> seen;
  std::map<int, int> weight_census;
  int even_count = 0, dep3 = 0, indep3 = 0;
  for (size_t idx = 0; idx < 128; ++idx) {
    std::vector<long long> comp(7);
    for (size_t i = 0; i < 7; ++i) comp[i] = (long long)((idx >> i) & 1);
    auto w = ctx.representative(comp);
    auto sup = support(w);
    CHECK(seen.insert(sup).second);  // support is a complete invariant
    int wt = (int)sup.size();
    weight_census[wt]++;
    if (wt % 2 == 0) ++even_count;
    if (wt == 3) {
      // dependent iff the three involutions lie in a common Klein subgroup
      std::vector<int> g3;
      for (auto& s : sup) g3.push_back(s[1] == 0 ? s[0] : s[1]);
      if (C.E8.generated_subgroup(g3).size() == 4)
        ++dep3;
      else
        ++indep3;
    }
    CHECK(ctx.class_order(w) <= 2);
  }
  CHECK(weight_census[1] == 7);
  CHECK(weight_census[3] == 35);
  CHECK(weight_census[5] == 21);
  CHECK(weight_census[7] == 1);
  CHECK(even_count == 64);  // the even-weight classes form an index-2 subgroup
  CHECK(dep3 == 7);
  CHECK(indep3 == 28);
}

TEST_CASE("restriction orders and cocycle-level exponents") {
  const auto& C = order8();
  {
    const auto& ctx = h3_context(C.Q8);
    auto w = ctx.representative({1});  // generator class
    // restricting to any of the three Z4 subgroups gives a class of order 4,
    // to the central Z2 a class of order 2
    for (auto& [g, elems] : C.Q8.cyclic_subgroups()) {
      if (elems.size() == 4) CHECK(restriction_order(w, g) == 4);
      if (elems.size() == 2) CHECK(restriction_order(w, g) == 2);
    }
    CHECK(fs_exponent_cocycle(w) == 16);
    CHECK(fs_exponent_cocycle(ctx.representative({2})) == 8);
    CHECK(fs_exponent_cocycle(ctx.representative({4})) == 4);
    CHECK(fs_exponent_cocycle(Cochain3::trivial(C.Q8, 1)) == 4);
  }
  {
    // on Z2^3 every nontrivial class restricts trivially on doubling, so the
    // exponent is always 4
    const auto& ctx = h3_context(C.E8);
    CHECK(fs_exponent_cocycle(ctx.representative({1, 0, 1, 0, 0, 1, 0})) == 4);
  }
}
