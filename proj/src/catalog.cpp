#include "galdesc/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "galdesc/hom.hpp"

namespace galdesc {

namespace {

FiniteGroup cyclic(int n) {
  if (n <= 0) throw ValidationError("catalog: cyclic order must be positive");
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup::from_flat_table("C" + std::to_string(n), n,
                                      std::move(table));
}

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool is_even(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteGroup permutation_group(const std::string& label,
                              std::vector<std::vector<int>> perms) {
  const int n = static_cast<int>(perms.size());
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<Elem>(it - perms.begin());
  };
  std::vector<int> comp(perms[0].size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (p_i p_j)(x) = p_i(p_j(x))
      for (size_t x = 0; x < comp.size(); ++x)
        comp[x] = perms[static_cast<size_t>(i)]
                       [static_cast<size_t>(perms[static_cast<size_t>(j)][x])];
      table[static_cast<size_t>(i) * n + j] = index_of(comp);
    }
  return FiniteGroup::from_flat_table(label, n, std::move(table));
}

FiniteGroup symmetric(int n) {
  if (n < 1 || n > 5)
    throw ValidationError("catalog: symmetric degree must be 1..5");
  return permutation_group("S" + std::to_string(n), permutations_lex(n));
}

FiniteGroup alternating(int n) {
  if (n < 1 || n > 5)
    throw ValidationError("catalog: alternating degree must be 1..5");
  auto all = permutations_lex(n);
  std::vector<std::vector<int>> even;
  for (auto& p : all)
    if (is_even(p)) even.push_back(std::move(p));
  return permutation_group("A" + std::to_string(n), std::move(even));
}

// Elements 0..n-1 are rotations, n..2n-1 reflections.
FiniteGroup dihedral(int n) {
  if (n <= 0) throw ValidationError("catalog: dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  auto compose = [&](Elem x, Elem y) -> Elem {
    if (x < n && y < n) return (x + y) % n;
    if (x < n && y >= n) return (y - n + x) % n + n;
    if (x >= n && y < n) return (x - n - y + n) % n + n;
    return (x - y + n) % n;
  };
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = compose(i, j);
  return FiniteGroup::from_flat_table("D" + std::to_string(n), m,
                                      std::move(table));
}

// Unit quaternions 1,-1,i,-i,j,-j,k,-k encoded as (w,x,y,z) tuples.
FiniteGroup quaternion8() {
  using Quat = std::array<int, 4>;
  const std::array<Quat, 8> units = {{{1, 0, 0, 0},
                                      {-1, 0, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, -1, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, -1, 0},
                                      {0, 0, 0, 1},
                                      {0, 0, 0, -1}}};
  auto qmul = [](const Quat& a, const Quat& b) {
    return Quat{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
  };
  auto index_of = [&](const Quat& v) {
    for (size_t i = 0; i < units.size(); ++i)
      if (units[i] == v) return static_cast<Elem>(i);
    throw ValidationError("catalog: quaternion product fell outside the units");
  };
  std::vector<Elem> table(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      table[static_cast<size_t>(i) * 8 + j] = index_of(qmul(units[i], units[j]));
  return FiniteGroup::from_flat_table("Q8", 8, std::move(table));
}

FiniteGroup klein4() {
  std::vector<Elem> table(16);
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) table[static_cast<size_t>(i) * 4 + j] = i ^ j;
  return FiniteGroup::from_flat_table("V4", 4, std::move(table));
}

FiniteGroup build_atom(const std::string& name) {
  if (name == "Q8") return quaternion8();
  if (name == "V4") return klein4();
  if (name.size() >= 2) {
    char kind = name[0];
    const std::string digits = name.substr(1);
    bool numeric = !digits.empty() &&
                   std::all_of(digits.begin(), digits.end(),
                               [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
      int n = std::stoi(digits);
      switch (kind) {
        case 'C': return cyclic(n);
        case 'S': return symmetric(n);
        case 'A': return alternating(n);
        case 'D': return dihedral(n);
        default: break;
      }
    }
  }
  throw ValidationError("catalog: unknown group name '" + name + "'");
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  auto sd = semidirect_product(a, b, GroupAction::trivial(b, a));
  return sd.total;
}

FiniteGroup build_group(const std::string& catalog_name) {
  if (catalog_name.empty())
    throw ValidationError("catalog: empty group name");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : catalog_name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  FiniteGroup result = build_atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    result = direct_product(result, build_atom(parts[i]));
  return result;
}

const std::vector<std::string>& catalog_display_names() {
  static const std::vector<std::string> names = {
      "C1", "C2", "C3", "C4", "C5", "C6", "C8", "V4", "S3", "S4",
      "A4", "A5", "D4", "D5", "D6", "Q8"};
  return names;
}

}  // namespace galdesc
