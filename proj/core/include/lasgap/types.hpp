#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lasgap/lattice.hpp"

namespace lasgap {

// g(x) = sum_i a[i-1] * x_i + g0; as a constraint it reads g(x) >= 0.
struct LinearForm {
  std::vector<Rat> a;
  Rat g0{0};

  int n() const { return static_cast<int>(a.size()); }
};

// Sparse multilinear polynomial over {0,1}^n: coeffs[I] multiplies the
// monomial prod_{i in I} x_i. Absent keys are zero; exact zeros are dropped.
struct MultilinearPoly {
  int n = 0;
  std::map<SubsetMask, Rat> coeffs;

  void set(SubsetMask monomial, Rat c) {
    if (c == 0) {
      coeffs.erase(monomial);
    } else {
      coeffs[monomial] = std::move(c);
    }
  }

  Rat coeff(SubsetMask monomial) const {
    auto it = coeffs.find(monomial);
    return it == coeffs.end() ? Rat(0) : it->second;
  }

  // Max cardinality among nonzero monomials; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : coeffs) d = std::max(d, cardinality(m));
    return d;
  }
};

// min f(x) s.t. x in {0,1}^n and g(x) >= 0 for every constraint.
struct Instance {
  int n = 0;
  MultilinearPoly objective;
  std::vector<LinearForm> constraints;
};

// Symmetric matrix indexed by subsets; packed lower-triangular storage.
template <typename Scalar>
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::vector<SubsetMask> index)
      : index_(std::move(index)),
        lower_(index_.size() * (index_.size() + 1) / 2) {}

  int dim() const { return static_cast<int>(index_.size()); }

  Scalar& at(int r, int c) { return lower_[offset(r, c)]; }
  const Scalar& at(int r, int c) const { return lower_[offset(r, c)]; }

  SubsetMask index_mask(int r) const { return index_[static_cast<std::size_t>(r)]; }

 private:
  std::size_t offset(int r, int c) const {
    const auto [lo, hi] = std::minmax(r, c);
    return static_cast<std::size_t>(hi) * (hi + 1) / 2 + lo;
  }

  std::vector<SubsetMask> index_;
  std::vector<Scalar> lower_;
};

// Reduction of the level-(n-1) moment matrix: M_{n-1}(w) is congruent to
// D + rho * v v^T where D = diag(corner values over P_{n-1}(N)), rho is the
// corner value at N and v_I = (-1)^{n+1-|I|}.
template <typename Scalar>
struct CornerForm {
  int n = 0;
  std::vector<Scalar> diag;        // canonical order over P_{n-1}(N)
  Scalar rho{};
  std::vector<std::int8_t> signs;  // entries of v, in {-1,+1}
};

inline int corner_sign(int n, int card) { return ((n + 1 - card) % 2 == 0) ? 1 : -1; }

}  // namespace lasgap
