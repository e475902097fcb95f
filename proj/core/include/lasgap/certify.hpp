#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lasgap/moment.hpp"

namespace lasgap {

// A candidate witness for a level-(n-1) gap: a full-lattice corner vector
// with entries summing to exactly 1 (enforced at construction).
class GapCertificate {
 public:
  explicit GapCertificate(LatticeVector<Rat> corner,
                          std::optional<Rat> claimed_value = std::nullopt);

  int n() const { return corner_.n(); }
  const LatticeVector<Rat>& corner() const { return corner_; }
  const std::optional<Rat>& claimed_value() const { return claimed_value_; }

 private:
  LatticeVector<Rat> corner_;
  std::optional<Rat> claimed_value_;
};

struct IntegralPoint {
  Rat value;
  SubsetMask argmin = 0;
};

// Exhaustive scan of {0,1}^n; nullopt when no assignment satisfies every
// constraint. Ties broken by the lexicographically least assignment.
std::optional<IntegralPoint> integral_optimum(const Instance& inst);

// One family of sign conditions on a mask-indexed product vector p_I:
// exactly one negative entry, strict positivity elsewhere, and reciprocal
// sum <= 0. Used per constraint (p_I = g(x_I) y_I) and, for unconstrained
// problems, on the corner vector itself.
struct CornerConditions {
  bool unique_negative = false;
  std::optional<SubsetMask> negative_mask;
  bool positive_elsewhere = false;
  std::optional<Rat> reciprocal_sum;  // defined when no entry is zero
  bool reciprocal_ok = false;
  std::vector<SubsetMask> offending_masks;  // zero entries / extra negatives

  bool ok() const { return unique_negative && positive_elsewhere && reciprocal_ok; }
};

enum class CertKind { Ilp, Unconstrained };

struct CertReport {
  CertKind kind = CertKind::Ilp;
  bool positivity = false;     // all corner entries > 0 (ilp condition)
  bool normalization = false;  // corner entries sum to 1
  std::vector<CornerConditions> constraint_conditions;   // ilp: one per constraint
  std::optional<CornerConditions> corner_conditions;     // unconstrained
  std::vector<bool> redundant_constraints;
  Rat relaxation_value{0};
  std::optional<IntegralPoint> integral_opt;  // nullopt = infeasible hull
  bool gap_condition = false;
  bool gap_infinite = false;  // gap against an empty integer hull
  std::optional<Rat> gap_ratio;
  bool verdict = false;
  std::string first_failure;  // empty when the verdict is true
};

// Exact certification of a level-(n-1) gap for a constrained 0/1 program:
// every corner entry positive, normalization, per-constraint unique strict
// violation with strict positivity elsewhere and reciprocal sum <= 0, and
// relaxation value strictly below the integral optimum (an empty integer
// hull counts as an infinite gap). Throws on instances with a redundant
// constraint unless allow_redundant is set, and on m = 0.
CertReport certify_ilp(const Instance& inst, const GapCertificate& cert,
                       bool allow_redundant = false);

// Unconstrained analogue: the sign/reciprocal conditions apply to the corner
// vector itself and the gap is measured against the minimum of f on {0,1}^n.
CertReport certify_unconstrained(const MultilinearPoly& f, const GapCertificate& cert);

struct SvcVerdict {
  bool is_svc = false;
  std::optional<SubsetMask> cut_vertex;
  std::string reason;  // why not, when is_svc is false
};

// Single-vertex-cutting test for g(x) >= 0: exactly one assignment violates
// and every other assignment is strictly positive. Decided in O(n) from the
// most-violating assignment (the set of negative coefficients); for n <= 16
// an exhaustive enumeration cross-checks the decision.
SvcVerdict is_svc(const LinearForm& g);

// Necessary condition for any level-(n-1) gap: every constraint is SVC.
bool gap_precondition_ilp(const Instance& inst);

// 2^{-n} sum_S f(x_S) (-1)^{|S|}; nonzero iff f has full degree n.
Rat top_fourier(const MultilinearPoly& f);

struct NoGapPrecheck {
  bool no_gap_certified = false;
  Rat normalized_sum{0};
};

// Affinely rescales the value table to [0,1]; if the rescaled values sum to
// at least 2 no level-(n-1) gap is possible. Throws on constant f.
NoGapPrecheck no_gap_precheck(const MultilinearPoly& f);

struct SearchResult {
  std::optional<GapCertificate> certificate;
  int validations = 0;
  std::string note;
};

// Heuristic certificate search for unconstrained problems: places the
// negative corner weight on a maximizer of f, spreads the rest symmetrically
// with the reciprocal inequality tight, then tries two-parameter asymmetric
// refinements. Every candidate is validated exactly before being returned;
// NotFound (empty certificate) is not a proof that no gap exists. budget
// caps the number of exact validations.
SearchResult search_unconstrained_certificate(const MultilinearPoly& f, int budget);

}  // namespace lasgap
