#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tqd/group.hpp>

using namespace tqd;

TEST_CASE("order-8 groups: basic structure") {
  const auto& C = order8();
  CHECK(C.D8.n == 8);
  CHECK(C.Q8.n == 8);
  CHECK(C.E8.n == 8);
  CHECK(!C.D8.is_abelian());
  CHECK(!C.Q8.is_abelian());
  CHECK(C.E8.is_abelian());
  CHECK(C.E8.exponent() == 2);
  CHECK(C.D8.exponent() == 4);
  CHECK(C.Q8.exponent() == 4);
  CHECK(C.D8.center().size() == 2);
  CHECK(C.Q8.center().size() == 2);

  // Q8 has a unique involution; D8 has five.
  auto invol = [](const GroupTable& G) {
    int c = 0;
    for (int g = 1; g < G.n; ++g)
      if (G.order(g) == 2) ++c;
    return c;
  };
  CHECK(invol(C.Q8) == 1);
  CHECK(invol(C.D8) == 5);
  CHECK(!isomorphic(C.D8, C.Q8));
  CHECK(!isomorphic(C.D8, C.E8));

  // conjugacy class sizes 1,1,2,2,2 for both nonabelian groups
  for (const GroupTable* G : {&C.D8, &C.Q8}) {
    auto cls = G->conjugacy_classes();
    std::vector<size_t> sz;
    for (auto& c : cls) sz.push_back(c.size());
    std::sort(sz.begin(), sz.end());
    CHECK(sz == std::vector<size_t>{1, 1, 2, 2, 2});
  }
}

TEST_CASE("automorphism group orders") {
  const auto& C = order8();
  CHECK(automorphisms(C.E8).size() == 168);  // GL(3,2)
  CHECK(automorphisms(C.D8).size() == 8);
  CHECK(automorphisms(C.Q8).size() == 24);
  CHECK(automorphisms(cyclic_group(8)).size() == 4);
}

TEST_CASE("quotients and extensions") {
  const auto& C = order8();
  auto [Dq, pD] = quotient(C.D8, C.D8.center(), "D8/Z");
  auto [Qq, pQ] = quotient(C.Q8, C.Q8.center(), "Q8/Z");
  pD.dst = &Dq;
  pQ.dst = &Qq;
  CHECK(isomorphic(Dq, C.V));
  CHECK(isomorphic(Qq, C.V));
  CHECK(pD.is_homomorphism());
  CHECK(pQ.is_homomorphism());

  // the extension bookkeeping matches the group law
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 4; ++x)
      for (int b = 0; b < 2; ++b)
        for (int y = 0; y < 4; ++y) {
          int g = C.D8.op(C.id(a, x), C.id(b, y));
          CHECK(C.xpart(g) == C.V.op(x, y));
          CHECK(C.apart(g) == (a + b + C.epsD(x, y)) % 2);
        }
}

TEST_CASE("extraspecial groups and parsing") {
  auto P = extraspecial(2, '+');
  auto M = extraspecial(2, '-');
  CHECK(P.n == 32);
  CHECK(M.n == 32);
  CHECK(P.center().size() == 2);
  CHECK(M.center().size() == 2);
  CHECK(P.exponent() == 4);
  CHECK(!isomorphic(P, M));

  auto count_invol = [](const GroupTable& G) {
    int c = 0;
    for (int g = 1; g < G.n; ++g)
      if (G.order(g) == 2) ++c;
    return c;
  };
  CHECK(count_invol(P) == 19);  // D8 * D8 type
  CHECK(count_invol(M) == 11);  // D8 * Q8 type

  CHECK(isomorphic(parse_group("D8"), order8().D8));
  CHECK(isomorphic(parse_group("Q8"), order8().Q8));
  CHECK(parse_group("Z2^5").n == 32);
  CHECK(parse_group("Z12").exponent() == 12);
  CHECK(parse_group("Z2xZ4").n == 8);
  CHECK(isomorphic(parse_group("ES(2,+)"), P));
  CHECK(isomorphic(parse_group("ES(2,-)"), M));
}

TEST_CASE("subgroup enumeration") {
  const auto& C = order8();
  CHECK(C.D8.cyclic_subgroups().size() == 7);   // 1, five Z2, one Z4
  CHECK(C.Q8.cyclic_subgroups().size() == 5);   // 1, Z2, three Z4
  CHECK(C.E8.cyclic_subgroups().size() == 8);   // 1 and seven Z2
  CHECK(C.D8.all_subgroups().size() == 10);
  CHECK(C.Q8.all_subgroups().size() == 6);
  CHECK(C.E8.all_subgroups().size() == 16);
}
