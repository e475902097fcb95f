#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lasgap/types.hpp"

namespace lasgap {

// Exact PSD decision for a level-(n-1) moment matrix given its corner
// vector. The matrix is PSD iff all corner entries are >= 0, or exactly one
// entry is negative, all others are strictly positive, and the sum of
// reciprocals of all entries is <= 0. A zero entry next to a negative one
// falls outside both branches and the matrix is reported not PSD with an
// explanatory tag (the float oracle confirms this in the test suite).
enum class CornerPsdCase {
  AllNonnegative,
  OneNegativeReciprocalOk,
  ReciprocalSumPositive,
  MultipleNegatives,
  ZeroAlongsideNegative,
};

const char* to_string(CornerPsdCase c);

struct CornerPsdReport {
  bool psd = false;
  CornerPsdCase kase = CornerPsdCase::AllNonnegative;
  std::optional<SubsetMask> negative_mask;     // the unique negative index
  std::optional<Rat> reciprocal_sum;           // defined when no entry is zero
  std::vector<SubsetMask> violating_masks;     // failure witnesses
};

// corner must be a full-lattice Corner vector; no eigenvalues are computed.
CornerPsdReport psd_corner(const LatticeVector<Rat>& corner);

// Float-mode spectrum of D + rho * v v^T. Since v has +-1 entries the matrix
// is orthogonally similar to D + rho * e e^T, so the solver normalizes to the
// all-ones case. Eigenvalues are (a) each repeated diagonal value with
// multiplicity one less than its diagonal multiplicity and (b) the roots of
// the secular equation sum_j 1/(lambda - d_j) = 1/rho, bracketed between
// consecutive distinct diagonal values plus one exterior bracket on the side
// of sign(rho).
struct SpectrumReport {
  std::vector<double> eigenvalues;       // ascending; one per dimension
  std::vector<double> secular_roots;     // ascending
  std::vector<double> scaled_residuals;  // |f(root)-1/rho| / max(1, |f'(root)|)
  int repeated_diagonal_count = 0;       // eigenvalues taken from repeats
};

SpectrumReport eigenvalues_dpr1(const CornerForm<double>& form, double tol = 1e-12);
SpectrumReport eigenvalues_dpr1(const CornerForm<Rat>& form, double tol = 1e-12);

// Least eigenvalue only, via the leftmost bracket.
double min_eigenvalue_dpr1(const CornerForm<double>& form, double tol = 1e-12);
double min_eigenvalue_dpr1(const CornerForm<Rat>& form, double tol = 1e-12);

inline constexpr int kDenseDimLimit = 4096;

// Dense symmetric eigendecomposition; the independent oracle for the corner
// and secular routes. Throws std::invalid_argument above kDenseDimLimit.
double dense_min_eigenvalue(const SymmetricMatrix<double>& M);
double dense_min_eigenvalue(const SymmetricMatrix<Rat>& M);
std::vector<double> dense_spectrum(const SymmetricMatrix<double>& M);

SymmetricMatrix<double> to_double_matrix(const SymmetricMatrix<Rat>& M);
CornerForm<double> to_double_form(const CornerForm<Rat>& form);

// D + rho * v v^T assembled densely (the matrix the corner form stands for).
SymmetricMatrix<double> assemble_dpr1(const CornerForm<double>& form);

}  // namespace lasgap
