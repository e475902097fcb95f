#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lasgap/speig.hpp"
#include "lasgap/types.hpp"

namespace lasgap {

namespace detail {

template <typename Scalar>
Scalar scalar_cast(const Rat& x) {
  if constexpr (std::is_same_v<Scalar, Rat>) {
    return x;
  } else {
    return static_cast<Scalar>(x.get_d());
  }
}

}  // namespace detail

// g(x_I) = sum_{i in I} a_i + g0.
Rat eval_linear(const LinearForm& g, SubsetMask I);

// f(x_I) = sum_{J subset of I} f_J.
Rat eval_poly(const MultilinearPoly& f, SubsetMask I);

// f(x_I) for every mask I, mask-indexed, computed in O(n 2^n).
std::vector<Rat> value_table(const MultilinearPoly& f);

// Multilinear interpolation of a mask-indexed value table.
MultilinearPoly poly_from_values(int n, std::vector<Rat> values);

// sum_I f(x_I) * yN_I over the full lattice; equals sum_I f_I * y_I for
// y = zeta(yN).
Rat objective_value(const MultilinearPoly& f, const LatticeVector<Rat>& yN);

// True iff g(x) >= 0 holds at every point of {0,1}^n (the constraint rules
// out no integer point). Decided in O(n) from the most violating assignment.
bool is_redundant(const LinearForm& g);

// M[r,c] = w_{I_r union I_c} over P_t(N) x P_t(N).
template <typename Scalar>
SymmetricMatrix<Scalar> moment_matrix(const LatticeVector<Scalar>& w, int t) {
  if (w.repr() != Repr::Moment) {
    throw std::invalid_argument("moment_matrix: expected a moment-representation vector");
  }
  const int n = w.n();
  if (t < 0 || t > n) throw std::invalid_argument("moment_matrix: level out of range");
  if (w.level() < std::min(2 * t, n)) {
    throw std::invalid_argument("moment_matrix: vector level too low for requested matrix");
  }
  SymmetricMatrix<Scalar> M(enumerate_subsets(n, t));
  for (int r = 0; r < M.dim(); ++r) {
    for (int c = 0; c <= r; ++c) {
      M.at(r, c) = w.at_mask(M.index_mask(r) | M.index_mask(c));
    }
  }
  return M;
}

// (g*y)_I = sum_i g_i y_{I u {i}} + g0 y_I. Output level is one below the
// input level, except that a full-lattice input stays full (unions never
// leave the lattice).
template <typename Scalar>
LatticeVector<Scalar> shift(const LinearForm& g, const LatticeVector<Scalar>& y) {
  if (y.repr() != Repr::Moment) {
    throw std::invalid_argument("shift: expected a moment-representation vector");
  }
  const int n = y.n();
  if (g.n() != n) throw std::invalid_argument("shift: constraint dimension mismatch");
  const int out_level = y.full_lattice() ? n : y.level() - 1;
  if (out_level < 0) throw std::invalid_argument("shift: input level too low");

  const Scalar g0 = detail::scalar_cast<Scalar>(g.g0);
  std::vector<Scalar> coeff(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coeff[i] = detail::scalar_cast<Scalar>(g.a[i]);

  LatticeVector<Scalar> out(n, out_level, Repr::Moment);
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    const SubsetMask I = out.mask_at(pos);
    Scalar acc = g0 * y.at_mask(I);
    for (int i = 0; i < n; ++i) {
      acc += coeff[i] * y.at_mask(I | (SubsetMask{1} << i));
    }
    out[pos] = acc;
  }
  return out;
}

// Full-lattice corner vector of w; M_n(w) is PSD iff every entry is >= 0.
inline LatticeVector<Rat> corner_form_full(const LatticeVector<Rat>& w) {
  return mobius(w);
}

// Corner form of the level-(n-1) moment matrix: diag over P_{n-1}(N), rho at
// N, signs (-1)^{n+1-|I|}. M_{n-1}(w) is PSD iff D + rho v v^T is.
template <typename Scalar>
CornerForm<Scalar> corner_form_level_n_minus_1(const LatticeVector<Scalar>& w) {
  const int n = w.n();
  if (n < 1) throw std::invalid_argument("corner_form_level_n_minus_1: n >= 1 required");
  auto corner = mobius(w);
  CornerForm<Scalar> form;
  form.n = n;
  const std::size_t dim = corner.size() - 1;  // |P_{n-1}(N)| = 2^n - 1
  form.diag.assign(corner.values().begin(), corner.values().begin() + dim);
  form.rho = corner[dim];
  form.signs.resize(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    form.signs[p] = static_cast<std::int8_t>(corner_sign(n, cardinality(corner.mask_at(p))));
  }
  return form;
}

enum class PsdMethod { ExactCornerSigns, ExactCornerForm, DenseEigen };

const char* to_string(PsdMethod m);

struct MatrixCheck {
  std::string label;
  int level = 0;
  PsdMethod method = PsdMethod::DenseEigen;
  bool psd = false;
  std::optional<double> min_eigenvalue;     // dense path
  std::optional<CornerPsdReport> exact;     // corner paths
};

struct FeasibilityReport {
  bool y_empty_is_one = false;
  std::vector<MatrixCheck> checks;          // objective matrix, then one per constraint
  std::vector<bool> redundant_constraints;  // flagged, never dropped
  bool feasible = false;
};

// Level-t feasibility of the moment vector y for inst: y_empty = 1,
// M_{t+d}(y) PSD and M_t(g*y) PSD per constraint, with d = 1 iff there is at
// least one constraint. Matrix levels above n collapse to n by
// multilinearity. PSD is decided exactly through the corner routes when the
// matrix level is n or n-1 and y covers the full lattice; otherwise by dense
// eigendecomposition with threshold lambda_min >= -tol.
FeasibilityReport lasserre_check(const Instance& inst, const LatticeVector<Rat>& y,
                                 int t, double tol = 1e-9);

}  // namespace lasgap
