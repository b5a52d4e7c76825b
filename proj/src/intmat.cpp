#include "galdesc/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace galdesc {

namespace {

using Wide = __int128;

long long narrowed(Wide v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw Error("integer overflow during matrix reduction");
  return static_cast<long long>(v);
}

long long mul_chk(long long a, long long b) {
  return narrowed(static_cast<Wide>(a) * b);
}

long long add_chk(long long a, long long b) {
  return narrowed(static_cast<Wide>(a) + b);
}

Wide wabs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

IntMat IntMat::zero(int r, int c) {
  return IntMat{r, c, std::vector<long long>(static_cast<size_t>(r) * c, 0)};
}

IntMat IntMat::identity(int n) {
  IntMat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw Error("mat_mul: shape mismatch");
  IntMat c = IntMat::zero(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      long long av = a.at(i, k);
      if (av == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = add_chk(c.at(i, j), mul_chk(av, b.at(k, j)));
    }
  return c;
}

namespace {

// Working copy in 128-bit arithmetic; narrowed when handing results back.
struct Reducer {
  int rows, cols;
  std::vector<Wide> a, u, v, u_inv;

  Wide& A(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Wide& U(int i, int j) { return u[static_cast<size_t>(i) * rows + j]; }
  Wide& V(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
  Wide& Uinv(int i, int j) { return u_inv[static_cast<size_t>(i) * rows + j]; }

  explicit Reducer(const IntMat& m) : rows(m.rows), cols(m.cols) {
    a.assign(static_cast<size_t>(rows) * cols, 0);
    for (size_t i = 0; i < m.data.size(); ++i) a[i] = m.data[i];
    u.assign(static_cast<size_t>(rows) * rows, 0);
    u_inv.assign(static_cast<size_t>(rows) * rows, 0);
    for (int i = 0; i < rows; ++i) U(i, i) = Uinv(i, i) = 1;
    v.assign(static_cast<size_t>(cols) * cols, 0);
    for (int i = 0; i < cols; ++i) V(i, i) = 1;
  }

  void guard(Wide x) {
    // two spare bits below the 128-bit limit keep the next few ops safe
    const Wide cap = Wide(1) << 120;
    if (wabs(x) > cap)
      throw Error("integer overflow during matrix reduction");
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(A(i, c), A(j, c));
    for (int c = 0; c < rows; ++c) std::swap(U(i, c), U(j, c));
    for (int r = 0; r < rows; ++r) std::swap(Uinv(r, i), Uinv(r, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(A(r, i), A(r, j));
    for (int r = 0; r < cols; ++r) std::swap(V(r, i), V(r, j));
  }

  // row i += f * row j
  void add_row(int i, int j, Wide f) {
    for (int c = 0; c < cols; ++c) {
      A(i, c) += f * A(j, c);
      guard(A(i, c));
    }
    for (int c = 0; c < rows; ++c) {
      U(i, c) += f * U(j, c);
      guard(U(i, c));
    }
    for (int r = 0; r < rows; ++r) {
      Uinv(r, j) -= f * Uinv(r, i);
      guard(Uinv(r, j));
    }
  }

  // col j += f * col i
  void add_col(int j, int i, Wide f) {
    for (int r = 0; r < rows; ++r) {
      A(r, j) += f * A(r, i);
      guard(A(r, j));
    }
    for (int r = 0; r < cols; ++r) {
      V(r, j) += f * V(r, i);
      guard(V(r, j));
    }
  }

  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) A(i, c) = -A(i, c);
    for (int c = 0; c < rows; ++c) U(i, c) = -U(i, c);
    for (int r = 0; r < rows; ++r) Uinv(r, i) = -Uinv(r, i);
  }

  bool find_min_pivot(int t, int& pi, int& pj) {
    pi = -1;
    pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (A(i, j) != 0 &&
            (pi < 0 || wabs(A(i, j)) < wabs(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    return pi >= 0;
  }
};

}  // namespace

SmithForm smith_normal_form(IntMat input) {
  Reducer r(input);
  const int n = std::min(r.rows, r.cols);

  int t = 0;
  for (; t < n; ++t) {
    int pi, pj;
    if (!r.find_min_pivot(t, pi, pj)) break;

    while (true) {
      // the smallest entry of the trailing block leads each pass
      r.find_min_pivot(t, pi, pj);
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);

      bool touched = false;
      for (int i = t + 1; i < r.rows; ++i) {
        if (r.A(i, t) == 0) continue;
        Wide f = r.A(i, t) / r.A(t, t);
        if (f != 0) r.add_row(i, t, -f);
        if (r.A(i, t) != 0) touched = true;
      }
      for (int j = t + 1; j < r.cols; ++j) {
        if (r.A(t, j) == 0) continue;
        Wide f = r.A(t, j) / r.A(t, t);
        if (f != 0) r.add_col(j, t, -f);
        if (r.A(t, j) != 0) touched = true;
      }
      if (touched) continue;  // remainders become the next, smaller pivot

      // pivot row and column are clear; enforce divisibility of the block
      bool divisible = true;
      for (int i = t + 1; i < r.rows && divisible; ++i)
        for (int j = t + 1; j < r.cols && divisible; ++j)
          if (r.A(i, j) % r.A(t, t) != 0) {
            r.add_row(t, i, 1);
            divisible = false;
          }
      if (divisible) break;
    }
    if (r.A(t, t) < 0) r.negate_row(t);
  }

  SmithForm out;
  out.rank = t;
  out.d = IntMat::zero(r.rows, r.cols);
  out.u = IntMat::zero(r.rows, r.rows);
  out.v = IntMat::zero(r.cols, r.cols);
  out.u_inv = IntMat::zero(r.rows, r.rows);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j) out.d.at(i, j) = narrowed(r.A(i, j));
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.rows; ++j) {
      out.u.at(i, j) = narrowed(r.U(i, j));
      out.u_inv.at(i, j) = narrowed(r.Uinv(i, j));
    }
  for (int i = 0; i < r.cols; ++i)
    for (int j = 0; j < r.cols; ++j) out.v.at(i, j) = narrowed(r.V(i, j));
  return out;
}

IntMat kernel_lattice_basis(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  const int k = a.cols - s.rank;
  IntMat basis = IntMat::zero(a.cols, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < a.cols; ++i)
      basis.at(i, j) = s.v.at(i, s.rank + j);
  return basis;
}

std::optional<IntMat> solve_columns(const IntMat& k, const IntMat& b) {
  if (k.rows != b.rows) throw Error("solve_columns: shape mismatch");
  SmithForm s = smith_normal_form(k);
  if (s.rank != k.cols) throw Error("solve_columns: matrix lacks full column rank");

  IntMat ub = mat_mul(s.u, b);
  IntMat w_prime = IntMat::zero(k.cols, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    for (int i = 0; i < k.rows; ++i) {
      long long rhs = ub.at(i, j);
      if (i < s.rank) {
        if (rhs % s.d.at(i, i) != 0) return std::nullopt;
        w_prime.at(i, j) = rhs / s.d.at(i, i);
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return mat_mul(s.v, w_prime);
}

}  // namespace galdesc
