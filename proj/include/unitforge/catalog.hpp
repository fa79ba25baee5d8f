#ifndef UNITFORGE_CATALOG_HPP
#define UNITFORGE_CATALOG_HPP

#include "unitforge/group.hpp"

#include <string>
#include <vector>

namespace unitforge {

struct UnknownGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Built-in groups: d8, q8, d10, heis27, heis125, c11xc5, d16, mod16.
GroupPtr catalog_group(const std::string &key);
std::vector<std::string> catalog_keys();

// dihedral group of order 2n, elements r^i and r^i s
GroupPtr dihedral_group(int n);

// unitriangular 3x3 matrices over Z/m (order m^3); generators g, h with
// [g,h^-1] = central c. heis27 is m=3, heis125 is m=5.
GroupPtr heisenberg_group(int m);

// quaternion group {±1, ±i, ±j, ±k}
GroupPtr quaternion_group();

// C11 x| C5 with b a b^-1 = a^3 (the nonabelian group of order 55)
GroupPtr c11_c5_group();

// modular maximal-cyclic group of order 16: r^8 = s^2 = 1, s r s = r^5
GroupPtr mod16_group();

// Load a group from a JSON string: either {"order": n, "mul": [[...]],
// "names": [...]} or {"degree": d, "generators": [[cycle,...], ...]} with
// cycles as 1-based index lists. Throws ParseError.
GroupPtr group_from_json(const std::string &json_text);

// Catalog key, or a path to a JSON file.
GroupPtr load_group(const std::string &key_or_path);

} // namespace unitforge

#endif
