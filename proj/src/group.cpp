#include "unitforge/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace unitforge {

Elt FiniteGroup::find_name(const std::string &name) const {
  for (Elt x = 0; x < n_; ++x)
    if (names_[x] == name) return x;
  return -1;
}

Elt FiniteGroup::power(Elt x, long t) const {
  Elt base = x;
  if (t < 0) {
    base = inv_[x];
    t = -t;
  }
  Elt acc = 0;
  while (t > 0) {
    if (t & 1) acc = mul(acc, base);
    base = mul(base, base);
    t >>= 1;
  }
  return acc;
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

GroupPtr from_cayley_table(const std::vector<std::vector<Elt>> &table, bool validate,
                           std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (Elt v : row)
      if (v < 0 || v >= n) throw NotAGroup("entry out of range");
  }
  // Latin square check
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]) throw NotAGroup("row is not a permutation", i, j);
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]]) throw NotAGroup("column is not a permutation", j, i);
      seen_col[table[j][i]] = true;
    }
  }
  // locate the two-sided identity
  Elt e = -1;
  for (Elt x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (Elt y = 0; y < n && ok; ++y)
      ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (e < 0) throw NotAGroup("no two-sided identity");

  // relabel so the identity is index 0 (swap labels 0 <-> e)
  auto relab = [&](Elt x) -> Elt { return x == e ? 0 : (x == 0 ? e : x); };

  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->n_ = n;
  G->mul_.assign(static_cast<size_t>(n) * n, 0);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      G->mul_[static_cast<size_t>(relab(x)) * n + relab(y)] = relab(table[x][y]);

  G->inv_.assign(n, -1);
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y)
      if (G->mul(x, y) == 0 && G->mul(y, x) == 0) {
        G->inv_[x] = y;
        break;
      }
    if (G->inv_[x] < 0) throw NotAGroup("no two-sided inverse", x);
  }

  if (validate) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt c = 0; c < n; ++c)
          if (G->mul(G->mul(a, b), c) != G->mul(a, G->mul(b, c)))
            throw NotAGroup("associativity fails", relab(a), relab(b), relab(c));
  }

  if (names.empty()) {
    G->names_.resize(n);
    for (Elt x = 0; x < n; ++x)
      G->names_[x] = x == 0 ? "1" : "x" + std::to_string(x);
  } else {
    if (static_cast<int>(names.size()) != n) throw NotAGroup("names length mismatch");
    G->names_.resize(n);
    for (Elt x = 0; x < n; ++x) G->names_[relab(x)] = names[x];
  }
  return G;
}

namespace {

// render a generator-id word with run-length exponents: [0,0,1] -> "a2b"
std::string word_name(const std::vector<int> &word, const std::vector<std::string> &gen_names) {
  if (word.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    out += gen_names[word[i]];
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

} // namespace

PermGroupResult from_permutation_generators(int degree, const std::vector<Permutation> &generators,
                                            const std::vector<std::string> &generator_names,
                                            int cap) {
  if (degree < 1) throw NotAGroup("degree must be positive");
  for (const auto &p : generators) {
    if (static_cast<int>(p.size()) != degree) throw NotAGroup("permutation degree mismatch");
    std::vector<bool> seen(degree + 1, false);
    for (int v : p) {
      if (v < 1 || v > degree || seen[v]) throw NotAGroup("not a bijection");
      seen[v] = true;
    }
  }
  std::vector<std::string> gnames = generator_names;
  if (gnames.empty())
    for (size_t i = 0; i < generators.size(); ++i)
      gnames.push_back(std::string(1, static_cast<char>('a' + i)));

  Permutation id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i + 1;

  // x then y
  auto compose = [degree](const Permutation &x, const Permutation &y) {
    Permutation r(degree);
    for (int i = 0; i < degree; ++i) r[i] = y[x[i] - 1];
    return r;
  };

  std::map<Permutation, Elt> index;
  std::vector<Permutation> elems{id};
  std::vector<std::vector<int>> words{{}};
  index[id] = 0;
  std::queue<Elt> todo;
  todo.push(0);
  while (!todo.empty()) {
    Elt x = todo.front();
    todo.pop();
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation p = compose(elems[x], generators[gi]);
      if (index.count(p)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw ClosureTooLarge("closure exceeds cap " + std::to_string(cap));
      Elt y = static_cast<Elt>(elems.size());
      index[p] = y;
      elems.push_back(p);
      std::vector<int> w = words[x];
      w.push_back(static_cast<int>(gi));
      words.push_back(std::move(w));
      todo.push(y);
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elt>> table(static_cast<size_t>(n), std::vector<Elt>(static_cast<size_t>(n)));
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      table[static_cast<size_t>(x)][static_cast<size_t>(y)] = index.at(compose(elems[x], elems[y]));
  std::vector<std::string> names(static_cast<size_t>(n));
  for (Elt x = 0; x < n; ++x) names[static_cast<size_t>(x)] = word_name(words[x], gnames);
  GroupPtr G = from_cayley_table(table, false, std::move(names));
  return PermGroupResult{G, std::move(elems)};
}

int element_order(const FiniteGroup &G, Elt x) {
  int t = 1;
  Elt p = x;
  while (p != 0) {
    p = G.mul(p, x);
    ++t;
  }
  return t;
}

Elt commutator(const FiniteGroup &G, Elt a, Elt b) {
  return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
}

Elt conjugate(const FiniteGroup &G, Elt x, Elt y) { return G.mul(G.mul(G.inv(y), x), y); }

Subgroup cyclic_subgroup(const GroupPtr &G, Elt h) { return generated_subgroup(G, {h}); }

Subgroup generated_subgroup(const GroupPtr &G, const std::vector<Elt> &gens) {
  std::vector<bool> in(G->order(), false);
  in[0] = true;
  std::vector<Elt> todo{0};
  while (!todo.empty()) {
    Elt x = todo.back();
    todo.pop_back();
    for (Elt g : gens) {
      Elt y = G->mul(x, g);
      if (!in[y]) {
        in[y] = true;
        todo.push_back(y);
      }
      // generators need not include inverses; close under them too
      Elt z = G->mul(x, G->inv(g));
      if (!in[z]) {
        in[z] = true;
        todo.push_back(z);
      }
    }
  }
  Subgroup S{G, {}};
  for (Elt x = 0; x < G->order(); ++x)
    if (in[x]) S.elements.push_back(x);
  return S;
}

Subgroup normalizer_of(const Subgroup &S) {
  const auto &G = *S.parent;
  std::vector<bool> in(G.order(), false);
  for (Elt s : S.elements) in[s] = true;
  Subgroup N{S.parent, {}};
  for (Elt x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elt s : S.elements)
      if (!in[conjugate(G, s, x)]) {
        ok = false;
        break;
      }
    if (ok) N.elements.push_back(x);
  }
  return N;
}

bool is_in_normalizer(const FiniteGroup &G, Elt g, Elt h) {
  // g normalizes <h> iff h^g lands in <h>
  Elt hg = conjugate(G, h, g);
  Elt p = 0;
  int o = element_order(G, h);
  for (int i = 0; i < o; ++i) {
    if (p == hg) return true;
    p = G.mul(p, h);
  }
  return false;
}

int min_normalized_power(const FiniteGroup &G, Elt g, Elt h) {
  int o = element_order(G, h);
  for (int m = 1; m <= o; ++m) {
    if (is_in_normalizer(G, g, G.power(h, m))) {
      assert(o % m == 0);
      return m;
    }
  }
  assert(false && "m = o(h) always normalizes the trivial subgroup");
  return o;
}

Subgroup center(const GroupPtr &G) {
  Subgroup Z{G, {}};
  for (Elt x = 0; x < G->order(); ++x) {
    bool central = true;
    for (Elt y = 0; y < G->order() && central; ++y)
      central = G->mul(x, y) == G->mul(y, x);
    if (central) Z.elements.push_back(x);
  }
  return Z;
}

bool is_abelian(const FiniteGroup &G) {
  for (Elt x = 0; x < G.order(); ++x)
    for (Elt y = x + 1; y < G.order(); ++y)
      if (G.mul(x, y) != G.mul(y, x)) return false;
  return true;
}

std::optional<int> nilpotency_class(const GroupPtr &G) {
  if (G->order() == 1) return 0;
  std::vector<Elt> cur(G->order());
  for (Elt x = 0; x < G->order(); ++x) cur[x] = x; // gamma_1 = G
  int k = 1;
  while (true) {
    // gamma_{k+1} = < [x, g] : x in gamma_k, g in G >
    std::vector<Elt> comms;
    for (Elt x : cur)
      for (Elt g = 0; g < G->order(); ++g) comms.push_back(commutator(*G, x, g));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup nxt = generated_subgroup(G, comms);
    if (nxt.order() == 1) return k;
    if (nxt.elements == cur) return std::nullopt; // stabilized above 1
    cur = nxt.elements;
    ++k;
  }
}

Quotient quotient_by_central(const GroupPtr &G, const Subgroup &Z) {
  Subgroup Zc = center(G);
  for (Elt z : Z.elements)
    if (!Zc.contains(z)) throw NotCentral("subgroup is not central (element " + G->name(z) + ")");

  const int n = G->order();
  // coset representative = smallest element of xZ
  std::vector<Elt> rep(n);
  for (Elt x = 0; x < n; ++x) {
    Elt r = x;
    for (Elt z : Z.elements) r = std::min(r, G->mul(x, z));
    rep[x] = r;
  }
  std::vector<Elt> reps;
  for (Elt x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  // identity's coset has representative 0, so it comes first
  std::vector<Elt> proj(n);
  std::vector<int> rep_index(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
  for (Elt x = 0; x < n; ++x) proj[x] = rep_index[rep[x]];

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elt>> table(q, std::vector<Elt>(q));
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) {
    names[i] = G->name(reps[i]);
    for (int j = 0; j < q; ++j) table[i][j] = proj[G->mul(reps[i], reps[j])];
  }
  return Quotient{from_cayley_table(table, false, names), std::move(proj)};
}

std::vector<Subgroup> subgroups_of_abelian(const Subgroup &A, int cap) {
  if (A.order() > cap)
    throw TooLarge("abelian subgroup of order " + std::to_string(A.order()) + " exceeds cap");
  const auto &G = *A.parent;
  for (Elt x : A.elements)
    for (Elt y : A.elements)
      if (G.mul(x, y) != G.mul(y, x)) throw std::invalid_argument("subgroup is not abelian");

  std::set<std::vector<Elt>> found;
  found.insert({0});
  std::vector<std::vector<Elt>> todo{{0}};
  while (!todo.empty()) {
    std::vector<Elt> S = todo.back();
    todo.pop_back();
    for (Elt a : A.elements) {
      std::vector<Elt> gens = S;
      gens.push_back(a);
      Subgroup T = generated_subgroup(A.parent, gens);
      if (found.insert(T.elements).second) todo.push_back(T.elements);
    }
  }
  std::vector<Subgroup> out;
  for (const auto &els : found) out.push_back(Subgroup{A.parent, els});
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

SubgroupGroup subgroup_as_group(const Subgroup &S) {
  const auto &G = *S.parent;
  const int n = static_cast<int>(S.elements.size());
  SubgroupGroup r;
  r.to_parent = S.elements; // sorted, elements[0] = 0 = identity
  r.from_parent.assign(G.order(), -1);
  for (int i = 0; i < n; ++i) r.from_parent[S.elements[i]] = i;
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = G.name(S.elements[i]);
    for (int j = 0; j < n; ++j) {
      Elt p = G.mul(S.elements[i], S.elements[j]);
      Elt q = r.from_parent[p];
      if (q < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
      table[i][j] = q;
    }
  }
  r.group = from_cayley_table(table, false, names);
  return r;
}

} // namespace unitforge
