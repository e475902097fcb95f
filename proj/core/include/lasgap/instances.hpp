#pragma once

#include <optional>
#include <vector>

#include "lasgap/certify.hpp"

namespace lasgap {

struct GeneratedInstance {
  Instance instance;
  std::optional<GapCertificate> certificate;
};

// min sum x_i s.t. sum x_i >= 1/P with P = k * 2^{2n+1}, paired with the
// closed-form certificate y_I = 2^n / (P|I| - 1) for I != empty and the
// remaining mass on the empty set. Requires k >= 2. The certified gap is at
// least k while the integral optimum is 1.
GeneratedInstance gen_gapknap(int n, const Rat& k);

// Same family for an arbitrary threshold parameter P > 1 (the canonical
// symmetric certificate family used by the scan driver).
GeneratedInstance gapknap_with_threshold(int n, const Rat& P);

// The pruning-resistant variant: one extra variable appears only in the
// constraint, whose constant term grows to 1 + 1/P, so every coefficient is
// bounded by the constant term. The certificate is the lifted moment vector
// of the base certificate; its corner support sits on the subsets containing
// the new variable and still sums to 1. It witnesses a gap at level n-1 of
// the enlarged (n+1)-variable problem, i.e. two levels below the top; the
// constraint is deliberately not SVC, so no witness can exist one level
// higher.
GeneratedInstance gen_gapknap_augmented(int n, const Rat& k);

// 2^n Hamming-distance constraints dist(x, x_P) >= b, one per vertex P: the
// integer hull is empty for any b > 0, yet the uniform corner vector
// y_I = 1/2^n is level-(n-1) feasible for b small enough. Default
// b = 1/2^{n+1} always works; for a custom b in (0, 1/2) the generator
// re-verifies the reciprocal condition and throws if the symmetric
// certificate does not qualify. Requires n <= 16 (constraint count is 2^n).
GeneratedInstance gen_empty_hull(int n, std::optional<Rat> b = std::nullopt);

// One Hamming-distance constraint per listed vertex; the integer feasible
// set is {0,1}^n minus those vertices. Duplicates are collapsed. Requires
// 0 < b < 1/2.
Instance svc_exclude(int n, std::vector<SubsetMask> vertices, const Rat& b);

// Indicator of the all-zero point: value 1 at the origin, 0 elsewhere;
// coefficients (-1)^{|I|}. Has full degree n.
MultilinearPoly gen_origin_indicator(int n);

// Indicator of two distinct points (multilinear interpolation of the
// two-point value table). Never admits a level-(n-1) gap.
MultilinearPoly two_point_indicator(int n, SubsetMask i1, SubsetMask i2);

}  // namespace lasgap
