#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitforge/catalog.hpp"
#include "unitforge/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace unitforge;

namespace {

GroupPtr cyclic(int n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_cayley_table(t, true);
}

std::vector<Elt> named(const GroupPtr &G, std::initializer_list<const char *> names) {
  std::vector<Elt> out;
  for (const char *n : names) {
    Elt x = G->find_name(n);
    REQUIRE(x >= 0);
    out.push_back(x);
  }
  return out;
}

} // namespace

TEST_CASE("from_cayley_table: trivial and C2") {
  GroupPtr t = from_cayley_table({{0}}, true);
  CHECK(t->order() == 1);
  CHECK(t->inv(0) == 0);

  GroupPtr c2 = from_cayley_table({{0, 1}, {1, 0}}, true);
  CHECK(c2->order() == 2);
  CHECK(c2->inv(0) == 0);
  CHECK(c2->inv(1) == 1);
}

TEST_CASE("from_cayley_table: identity relabeled to index 0") {
  // C3 written with the identity at index 2
  std::vector<std::vector<Elt>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  GroupPtr g = from_cayley_table(t, true);
  CHECK(g->order() == 3);
  CHECK(g->mul(0, 1) == 1);
  CHECK(g->mul(1, g->inv(1)) == 0);
}

TEST_CASE("from_cayley_table: non-group tables throw NotAGroup") {
  // Latin square with no identity element
  std::vector<std::vector<Elt>> no_id = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  CHECK_THROWS_AS(from_cayley_table(no_id, true), NotAGroup);

  // Latin square, identity, two-sided inverses (all elements self-inverse),
  // but non-associative: a group with every element of order <= 2 would be an
  // elementary abelian 2-group, impossible at order 5.
  std::vector<std::vector<Elt>> loop5 = {{0, 1, 2, 3, 4},
                                         {1, 0, 4, 2, 3},
                                         {2, 3, 0, 4, 1},
                                         {3, 4, 1, 0, 2},
                                         {4, 2, 3, 1, 0}};
  bool threw = false;
  try {
    from_cayley_table(loop5, true);
  } catch (const NotAGroup &e) {
    threw = true;
    // witness triple re-checks as a genuine associativity failure
    REQUIRE(e.a >= 0);
    REQUIRE(e.b >= 0);
    REQUIRE(e.c >= 0);
    Elt lhs = loop5[loop5[e.a][e.b]][e.c];
    Elt rhs = loop5[e.a][loop5[e.b][e.c]];
    CHECK(lhs != rhs);
  }
  CHECK(threw);

  // not a Latin square at all
  std::vector<std::vector<Elt>> rep = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(from_cayley_table(rep, true), NotAGroup);
}

TEST_CASE("from_permutation_generators: closure enumeration") {
  // (1 2 3 4) and (1 3) generate D8
  auto d8 = from_permutation_generators(4, {{2, 3, 4, 1}, {3, 2, 1, 4}});
  CHECK(d8.group->order() == 8);
  CHECK(d8.element_perms.size() == 8);

  auto c3 = from_permutation_generators(3, {{2, 3, 1}});
  CHECK(c3.group->order() == 3);

  auto triv = from_permutation_generators(1, {});
  CHECK(triv.group->order() == 1);

  // element_perms[x] composed agreement: perm of product = product of perms
  const auto &perms = d8.element_perms;
  const GroupPtr &G = d8.group;
  for (Elt x = 0; x < G->order(); ++x)
    for (Elt y = 0; y < G->order(); ++y) {
      Elt xy = G->mul(x, y);
      for (int p = 1; p <= 4; ++p) {
        // convention: apply y first, then x  (or the reverse); accept either
        // but require it to be consistent across all pairs
        int via_xy = perms[xy][p - 1];
        int via_comp = perms[x][perms[y][p - 1] - 1];
        int via_comp_rev = perms[y][perms[x][p - 1] - 1];
        CHECK((via_xy == via_comp || via_xy == via_comp_rev));
      }
    }
}

TEST_CASE("element_order on D8") {
  GroupPtr G = catalog_group("d8");
  auto v = named(G, {"r", "s"});
  CHECK(element_order(G, 0) == 1);
  CHECK(element_order(G, v[0]) == 4);
  CHECK(element_order(G, v[1]) == 2);
}

TEST_CASE("commutator conventions") {
  GroupPtr d8 = catalog_group("d8");
  auto v = named(d8, {"r", "s", "r2"});
  CHECK(commutator(d8, v[0], v[0]) == 0);
  CHECK(commutator(d8, v[0], v[1]) == v[2]); // [r, s] = r^2

  GroupPtr H = catalog_group("heis27");
  auto w = named(H, {"g", "h", "c", "c2"});
  Elt g = w[0], h = w[1];
  // [g, h^-1] and its inverse orientation both generate the center
  CHECK(commutator(H, g, H->inv(h)) == w[3]);
  CHECK(commutator(H, H->inv(h), g) == w[2]);

  // fixed convention identity: h^g = [g, h^-1] h, exhaustively
  for (const char *key : {"d8", "heis27", "mod16"}) {
    GroupPtr G = catalog_group(key);
    for (Elt a = 0; a < G->order(); ++a)
      for (Elt b = 0; b < G->order(); ++b) {
        Elt lhs = conjugate(G, b, a); // b^a = a^-1 b a
        Elt rhs = G->mul(commutator(G, a, G->inv(b)), b);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("normalizers") {
  GroupPtr d8 = catalog_group("d8");
  auto v = named(d8, {"r", "s", "r2", "r2s"});
  Subgroup S = cyclic_subgroup(d8, v[1]);
  Subgroup N = normalizer_of(S);
  std::vector<Elt> expect = {0, v[1], v[2], v[3]};
  std::sort(expect.begin(), expect.end());
  CHECK(N.elements == expect);
  CHECK_FALSE(is_in_normalizer(d8, v[0], v[1]));

  // central h: normalizer is all of G
  Subgroup Z = cyclic_subgroup(d8, v[2]);
  CHECK(normalizer_of(Z).order() == 8);

  // Q8 is Hamiltonian: every cyclic subgroup is normal
  GroupPtr q8 = catalog_group("q8");
  for (Elt h = 0; h < q8->order(); ++h)
    for (Elt g = 0; g < q8->order(); ++g) CHECK(is_in_normalizer(q8, g, h));
}

TEST_CASE("min_normalized_power") {
  GroupPtr d8 = catalog_group("d8");
  auto v = named(d8, {"r", "s"});
  CHECK(min_normalized_power(d8, v[1], v[0]) == 1); // s in N(<r>), <r> normal
  CHECK(min_normalized_power(d8, v[0], v[1]) == 2); // m=1 fails, m=2 trivial

  GroupPtr H = catalog_group("heis27");
  auto w = named(H, {"g", "h"});
  CHECK(min_normalized_power(H, w[0], w[1]) == 3);

  // divides o(h) for all pairs, all catalog groups
  for (const auto &key : catalog_keys()) {
    GroupPtr G = catalog_group(key);
    for (Elt h = 0; h < G->order(); ++h) {
      int oh = element_order(G, h);
      for (Elt g = 0; g < G->order(); ++g) {
        int m = min_normalized_power(G, g, h);
        REQUIRE(oh % m == 0);
      }
    }
  }
}

TEST_CASE("center, nilpotency class, quotient") {
  GroupPtr d8 = catalog_group("d8");
  auto v = named(d8, {"r2"});
  Subgroup Z = center(d8);
  CHECK(Z.elements == std::vector<Elt>({0, v[0]}));
  CHECK(nilpotency_class(d8) == 2);

  GroupPtr H = catalog_group("heis27");
  CHECK(nilpotency_class(H) == 2);
  CHECK(nilpotency_class(catalog_group("d16")) == 3);
  CHECK_FALSE(nilpotency_class(catalog_group("c11xc5")).has_value());
  CHECK_FALSE(nilpotency_class(catalog_group("d10")).has_value());

  // abelian: class 1, quotient by the full center is trivial
  GroupPtr c6 = cyclic(6);
  CHECK(is_abelian(c6));
  CHECK(nilpotency_class(c6) == 1);
  Quotient qt = quotient_by_central(c6, center(c6));
  CHECK(qt.group->order() == 1);

  // heis27 / Z is C3 x C3, projection is a homomorphism
  Quotient q = quotient_by_central(H, center(H));
  CHECK(q.group->order() == 9);
  CHECK(is_abelian(q.group));
  for (Elt x = 0; x < H->order(); ++x)
    for (Elt y = 0; y < H->order(); ++y)
      REQUIRE(q.proj[H->mul(x, y)] == q.group->mul(q.proj[x], q.proj[y]));

  // non-central subgroup rejected
  GroupPtr d8b = catalog_group("d8");
  Subgroup S = cyclic_subgroup(d8b, d8b->find_name("s"));
  CHECK_THROWS_AS(quotient_by_central(d8b, S), NotCentral);
}

TEST_CASE("quotient projection homomorphism on all catalog groups <= 64") {
  for (const auto &key : catalog_keys()) {
    GroupPtr G = catalog_group(key);
    if (G->order() > 64) continue;
    Subgroup Z = center(G);
    if (Z.order() == 1) continue;
    Quotient q = quotient_by_central(G, Z);
    for (Elt x = 0; x < G->order(); ++x)
      for (Elt y = 0; y < G->order(); ++y)
        REQUIRE(q.proj[G->mul(x, y)] == q.group->mul(q.proj[x], q.proj[y]));
  }
}

TEST_CASE("Lagrange on catalog groups") {
  for (const auto &key : catalog_keys()) {
    GroupPtr G = catalog_group(key);
    for (Elt x = 0; x < G->order(); ++x)
      REQUIRE(G->order() % element_order(G, x) == 0);
  }
}

TEST_CASE("normalizer contains the subgroup and the center") {
  for (const char *key : {"d8", "q8", "d10", "heis27", "d16", "mod16"}) {
    GroupPtr G = catalog_group(key);
    Subgroup Z = center(G);
    for (Elt h = 0; h < G->order(); ++h) {
      Subgroup S = cyclic_subgroup(G, h);
      Subgroup N = normalizer_of(S);
      for (Elt x : S.elements) REQUIRE(N.contains(x));
      for (Elt z : Z.elements) REQUIRE(N.contains(z));
    }
  }
}

TEST_CASE("subgroups_of_abelian counts") {
  GroupPtr c2 = cyclic(2);
  Subgroup full2{c2, {0, 1}};
  CHECK(subgroups_of_abelian(full2).size() == 2);

  // C2 x C2 inside D8: {1, r2, s, r2s}
  GroupPtr d8 = catalog_group("d8");
  auto v = named(d8, {"r2", "s"});
  Subgroup klein = generated_subgroup(d8, {v[0], v[1]});
  REQUIRE(klein.order() == 4);
  CHECK(subgroups_of_abelian(klein).size() == 5);

  GroupPtr c9 = cyclic(9);
  std::vector<Elt> all9(9);
  std::iota(all9.begin(), all9.end(), 0);
  Subgroup full9{c9, all9};
  CHECK(subgroups_of_abelian(full9).size() == 3);
}

TEST_CASE("subgroup_as_group roundtrip") {
  GroupPtr d8 = catalog_group("d8");
  Elt r = d8->find_name("r");
  Subgroup S = cyclic_subgroup(d8, r);
  SubgroupGroup W = subgroup_as_group(S);
  REQUIRE(W.group->order() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(W.from_parent[W.to_parent[i]] == i);
    for (int j = 0; j < 4; ++j) {
      Elt parent_prod = d8->mul(W.to_parent[i], W.to_parent[j]);
      CHECK(W.to_parent[W.group->mul(i, j)] == parent_prod);
    }
  }
  // elements outside the subgroup map to -1
  Elt s = d8->find_name("s");
  CHECK(W.from_parent[s] == -1);
}

TEST_CASE("power handles negative exponents") {
  GroupPtr d8 = catalog_group("d8");
  Elt r = d8->find_name("r");
  CHECK(d8->power(r, -1) == d8->inv(r));
  CHECK(d8->power(r, 4) == 0);
  CHECK(d8->power(r, -3) == d8->power(r, 1));
  CHECK(d8->power(r, 0) == 0);
}
