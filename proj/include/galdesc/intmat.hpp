#pragma once

#include <optional>
#include <vector>

#include "galdesc/common.hpp"

namespace galdesc {

/// Dense integer matrix with checked arithmetic; blows up with an Error on
/// overflow instead of wrapping.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  static IntMat zero(int r, int c);
  static IntMat identity(int n);

  long long& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }
};

IntMat mat_mul(const IntMat& a, const IntMat& b);

/// u * a * v = d with u, v unimodular and d diagonal, diagonal entries
/// nonnegative with d1 | d2 | ... . u_inv satisfies u_inv * u = identity.
struct SmithForm {
  IntMat d;
  IntMat u;
  IntMat v;
  IntMat u_inv;
  int rank = 0;
};

SmithForm smith_normal_form(IntMat a);

/// Columns form a basis of the lattice {x : a x = 0}.
IntMat kernel_lattice_basis(const IntMat& a);

/// Integer solution of k * w = b (b one column per target vector), or
/// nullopt when some column is not in the column lattice of k. k must have
/// full column rank.
std::optional<IntMat> solve_columns(const IntMat& k, const IntMat& b);

}  // namespace galdesc
