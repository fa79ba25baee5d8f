#include "unitforge/catalog.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace unitforge {

namespace {

std::string pow_name(const std::string &g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + std::to_string(e);
}

std::string mono_name(std::initializer_list<std::pair<const char *, int>> factors) {
  std::string s;
  for (const auto &[g, e] : factors) s += pow_name(g, e);
  return s.empty() ? "1" : s;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

GroupPtr dihedral_group(int n) {
  // index: r^i -> i, r^i s -> n + i
  const int N = 2 * n;
  std::vector<std::vector<Elt>> t(N, std::vector<Elt>(N));
  auto idx = [&](int i, int j) { return j ? n + mod(i, n) : mod(i, n); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          int e = j ? i - k : i + k;
          t[idx(i, j)][idx(k, l)] = idx(e, (j + l) % 2);
        }
  std::vector<std::string> names(N);
  for (int i = 0; i < n; ++i) {
    names[i] = mono_name({{"r", i}});
    names[n + i] = mono_name({{"r", i}, {"s", 1}});
  }
  return from_cayley_table(t, false, names);
}

GroupPtr heisenberg_group(int m) {
  const int N = m * m * m;
  auto idx = [&](int a, int b, int c) { return mod(a, m) * m * m + mod(b, m) * m + mod(c, m); };
  std::vector<std::vector<Elt>> t(N, std::vector<Elt>(N));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int a2 = 0; a2 < m; ++a2)
          for (int b2 = 0; b2 < m; ++b2)
            for (int c2 = 0; c2 < m; ++c2)
              t[idx(a, b, c)][idx(a2, b2, c2)] = idx(a + a2, b + b2, c + c2 + a * b2);
  std::vector<std::string> names(N);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        names[idx(a, b, c)] = mono_name({{"g", a}, {"h", b}, {"c", c}});
  return from_cayley_table(t, false, names);
}

GroupPtr quaternion_group() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k; pair (basis 0..3, sign)
  auto enc = [](int basis, int sign) { return 2 * basis + (sign < 0 ? 1 : 0); };
  // basis multiplication with sign: 1,i,j,k
  static const int bmul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int bsign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  // bsign[x][y]: i*i = -1, i*j = +k, i*k = -j, j*i = -k, j*j = -1, j*k = +i,
  //             k*i = +j, k*j = -i, k*k = -1
  std::vector<std::vector<Elt>> t(8, std::vector<Elt>(8));
  for (int bx = 0; bx < 4; ++bx)
    for (int sx : {1, -1})
      for (int by = 0; by < 4; ++by)
        for (int sy : {1, -1})
          t[enc(bx, sx)][enc(by, sy)] = enc(bmul[bx][by], sx * sy * bsign[bx][by]);
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return from_cayley_table(t, true, names);
}

GroupPtr c11_c5_group() {
  // a^i b^j, b a b^-1 = a^3; (i,j)(i',j') = (i + 3^j i', j + j')
  const int N = 55;
  int pow3[5] = {1, 3, 9, 27 % 11, 81 % 11}; // 3^j mod 11
  auto idx = [&](int i, int j) { return mod(i, 11) * 5 + mod(j, 5); };
  std::vector<std::vector<Elt>> t(N, std::vector<Elt>(N));
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 5; ++j)
      for (int i2 = 0; i2 < 11; ++i2)
        for (int j2 = 0; j2 < 5; ++j2)
          t[idx(i, j)][idx(i2, j2)] = idx(i + pow3[j] * i2, j + j2);
  std::vector<std::string> names(N);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 5; ++j) names[idx(i, j)] = mono_name({{"a", i}, {"b", j}});
  return from_cayley_table(t, false, names);
}

GroupPtr mod16_group() {
  // r^i s^j, s r s = r^5; (i,j)(i',j') = (i + 5^j i', j + j')
  const int N = 16;
  auto idx = [&](int i, int j) { return mod(i, 8) * 2 + mod(j, 2); };
  std::vector<std::vector<Elt>> t(N, std::vector<Elt>(N));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < 8; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          t[idx(i, j)][idx(i2, j2)] = idx(i + (j ? 5 : 1) * i2, j + j2);
  std::vector<std::string> names(N);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 2; ++j) names[idx(i, j)] = mono_name({{"r", i}, {"s", j}});
  return from_cayley_table(t, false, names);
}

GroupPtr catalog_group(const std::string &key) {
  if (key == "d8") return dihedral_group(4);
  if (key == "d10") return dihedral_group(5);
  if (key == "d16") return dihedral_group(8);
  if (key == "q8") return quaternion_group();
  if (key == "heis27") return heisenberg_group(3);
  if (key == "heis125") return heisenberg_group(5);
  if (key == "c11xc5") return c11_c5_group();
  if (key == "mod16") return mod16_group();
  throw UnknownGroup("unknown catalog group: " + key);
}

std::vector<std::string> catalog_keys() {
  return {"d8", "q8", "d10", "heis27", "heis125", "c11xc5", "d16", "mod16"};
}

GroupPtr group_from_json(const std::string &json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.contains("mul")) {
      std::vector<std::vector<Elt>> table = j.at("mul").get<std::vector<std::vector<Elt>>>();
      if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
        throw ParseError("order does not match mul table size");
      std::vector<std::string> names;
      if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
      return from_cayley_table(table, true, names);
    }
    if (j.contains("generators")) {
      int degree = j.at("degree").get<int>();
      std::vector<Permutation> gens;
      for (const auto &gspec : j.at("generators")) {
        Permutation p(degree);
        for (int i = 0; i < degree; ++i) p[i] = i + 1;
        // generator = list of cycles, each a 1-based index list
        for (const auto &cyc : gspec) {
          std::vector<int> c = cyc.get<std::vector<int>>();
          for (size_t i = 0; i < c.size(); ++i) {
            int from = c[i], to = c[(i + 1) % c.size()];
            if (from < 1 || from > degree) throw ParseError("cycle entry out of range");
            p[from - 1] = to;
          }
        }
        gens.push_back(p);
      }
      std::vector<std::string> gnames;
      if (j.contains("generator_names"))
        gnames = j.at("generator_names").get<std::vector<std::string>>();
      return from_permutation_generators(degree, gens, gnames).group;
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("bad group JSON: ") + e.what());
  }
  throw ParseError("group JSON needs either \"mul\" or \"generators\"");
}

GroupPtr load_group(const std::string &key_or_path) {
  for (const auto &k : catalog_keys())
    if (k == key_or_path) return catalog_group(k);
  std::ifstream in(key_or_path);
  if (!in) throw UnknownGroup("not a catalog key and not a readable file: " + key_or_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return group_from_json(ss.str());
}

} // namespace unitforge
