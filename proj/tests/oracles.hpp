#pragma once

// Brute-force reference computations for the tests. Everything here walks
// raw multiplication tables and stays independent of the search engines it
// is checking.

#include <algorithm>
#include <vector>

#include "galdesc/extension.hpp"
#include "galdesc/group.hpp"

namespace oracle {

using galdesc::Elem;
using galdesc::FiniteGroup;

inline std::vector<Elem> commuting_with(const FiniteGroup& g,
                                        const std::vector<Elem>& targets) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem t : targets)
      if (g.mul(x, t) != g.mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::vector<Elem> center_scan(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return commuting_with(g, all);
}

// Every multiplicative map q -> g as an image array, by scanning all
// |g|^(|q|-1) assignments of the non-identity elements.
inline std::vector<std::vector<Elem>> all_homs_scan(const FiniteGroup& q,
                                                    const FiniteGroup& g) {
  std::vector<Elem> positions;
  for (Elem x = 0; x < q.order(); ++x)
    if (x != q.identity()) positions.push_back(x);

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> images(q.order(), g.identity());
  std::vector<int> idx(positions.size(), 0);
  while (true) {
    for (size_t i = 0; i < positions.size(); ++i)
      images[static_cast<size_t>(positions[i])] = idx[i];
    bool ok = true;
    for (Elem x = 0; x < q.order() && ok; ++x)
      for (Elem y = 0; y < q.order() && ok; ++y)
        if (images[static_cast<size_t>(q.mul(x, y))] !=
            g.mul(images[static_cast<size_t>(x)],
                  images[static_cast<size_t>(y)]))
          ok = false;
    if (ok) found.push_back(images);

    size_t pos = 0;
    while (pos < positions.size() && ++idx[pos] == g.order()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == positions.size()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Sections of an extension by scanning every fiber assignment.
inline std::vector<std::vector<Elem>> all_sections_scan(
    const galdesc::GroupExtension& ext) {
  const FiniteGroup& q = ext.quotient_group();
  const FiniteGroup& gamma = ext.total_group();

  std::vector<Elem> positions;
  std::vector<std::vector<Elem>> fibers;
  for (Elem x = 0; x < q.order(); ++x) {
    if (x == q.identity()) continue;
    positions.push_back(x);
    std::vector<Elem> fiber;
    for (Elem y = 0; y < gamma.order(); ++y)
      if (ext.pi()(y) == x) fiber.push_back(y);
    fibers.push_back(std::move(fiber));
  }

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> images(q.order(), gamma.identity());
  std::vector<size_t> idx(positions.size(), 0);
  while (true) {
    for (size_t i = 0; i < positions.size(); ++i)
      images[static_cast<size_t>(positions[i])] = fibers[i][idx[i]];
    bool ok = true;
    for (Elem x = 0; x < q.order() && ok; ++x)
      for (Elem y = 0; y < q.order() && ok; ++y)
        if (images[static_cast<size_t>(q.mul(x, y))] !=
            gamma.mul(images[static_cast<size_t>(x)],
                      images[static_cast<size_t>(y)]))
          ok = false;
    if (ok) found.push_back(images);

    size_t pos = 0;
    while (pos < positions.size() && ++idx[pos] == fibers[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == positions.size() || positions.empty()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Bijective multiplicative self-maps counted by full scan.
inline long aut_count_scan(const FiniteGroup& g) {
  long count = 0;
  for (const auto& images : all_homs_scan(g, g)) {
    std::vector<bool> hit(g.order(), false);
    bool bij = true;
    for (Elem v : images) {
      if (hit[static_cast<size_t>(v)]) {
        bij = false;
        break;
      }
      hit[static_cast<size_t>(v)] = true;
    }
    if (bij) ++count;
  }
  return count;
}

}  // namespace oracle
