#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lasgap/rational.hpp"
#include "lasgap/subset.hpp"

namespace lasgap {

// Canonical subset order: ascending cardinality, ties broken by ascending
// mask value. Truncation to cardinality <= t is then a prefix of the full
// order, and position 0 is always the empty set.
struct CanonicalOrder {
  int n = 0;
  std::vector<SubsetMask> pos_to_mask;    // size 2^n
  std::vector<std::int32_t> mask_to_pos;  // size 2^n
  std::vector<std::size_t> level_size;    // level_size[t] = |P_t(N)|, t = 0..n
};

// Cached per n; the returned reference stays valid for the process lifetime
// and is safe to share across threads.
const CanonicalOrder& canonical_order(int n);

// All subsets of cardinality <= t in canonical order.
// Throws std::invalid_argument unless 0 <= t <= n <= kMaxVars.
std::vector<SubsetMask> enumerate_subsets(int n, int t);

enum class Repr { Moment, Corner };

// A scalar per subset of {1..n} of cardinality <= level, in canonical order.
// level == n means the full lattice.
template <typename Scalar>
class LatticeVector {
 public:
  LatticeVector() = default;

  LatticeVector(int n, int level, Repr repr)
      : n_(n), level_(level), repr_(repr), order_(&canonical_order(n)) {
    if (level < 0 || level > n) {
      throw std::invalid_argument("LatticeVector: level out of range");
    }
    values_.resize(order_->level_size[level]);
  }

  LatticeVector(int n, int level, Repr repr, std::vector<Scalar> values)
      : LatticeVector(n, level, repr) {
    if (values.size() != values_.size()) {
      throw std::invalid_argument("LatticeVector: value count does not match level");
    }
    values_ = std::move(values);
  }

  int n() const { return n_; }
  int level() const { return level_; }
  Repr repr() const { return repr_; }
  bool full_lattice() const { return level_ == n_; }
  std::size_t size() const { return values_.size(); }

  Scalar& operator[](std::size_t pos) { return values_[pos]; }
  const Scalar& operator[](std::size_t pos) const { return values_[pos]; }

  SubsetMask mask_at(std::size_t pos) const { return order_->pos_to_mask[pos]; }

  Scalar& at_mask(SubsetMask m) { return values_[position(m)]; }
  const Scalar& at_mask(SubsetMask m) const { return values_[position(m)]; }

  std::span<const Scalar> values() const { return values_; }

 private:
  std::size_t position(SubsetMask m) const {
    const auto pos = static_cast<std::size_t>(order_->mask_to_pos[m]);
    if (pos >= values_.size()) {
      throw std::out_of_range("LatticeVector: subset above truncation level");
    }
    return pos;
  }

  int n_ = 0;
  int level_ = 0;
  Repr repr_ = Repr::Moment;
  const CanonicalOrder* order_ = nullptr;
  std::vector<Scalar> values_;
};

// In-place transforms over mask-indexed arrays of size 2^n; n passes over
// 2^n entries each.

template <typename Scalar>
void superset_sum_transform(std::vector<Scalar>& v, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) throw std::invalid_argument("transform: size != 2^n");
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask m = 0; m < size; ++m) {
      if (!(m & bit)) v[m] += v[m | bit];
    }
  }
}

template <typename Scalar>
void superset_sum_invert(std::vector<Scalar>& v, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) throw std::invalid_argument("transform: size != 2^n");
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask m = 0; m < size; ++m) {
      if (!(m & bit)) v[m] -= v[m | bit];
    }
  }
}

template <typename Scalar>
void subset_sum_transform(std::vector<Scalar>& v, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) throw std::invalid_argument("transform: size != 2^n");
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask m = 0; m < size; ++m) {
      if (m & bit) v[m] += v[m ^ bit];
    }
  }
}

template <typename Scalar>
void subset_sum_invert(std::vector<Scalar>& v, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (v.size() != size) throw std::invalid_argument("transform: size != 2^n");
  for (int i = 0; i < n; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask m = 0; m < size; ++m) {
      if (m & bit) v[m] -= v[m ^ bit];
    }
  }
}

namespace detail {

template <typename Scalar>
std::vector<Scalar> to_mask_order(const LatticeVector<Scalar>& v) {
  const auto& ord = canonical_order(v.n());
  std::vector<Scalar> buf(std::size_t{1} << v.n());
  for (std::size_t p = 0; p < buf.size(); ++p) buf[ord.pos_to_mask[p]] = v[p];
  return buf;
}

template <typename Scalar>
LatticeVector<Scalar> from_mask_order(int n, Repr repr, const std::vector<Scalar>& buf) {
  const auto& ord = canonical_order(n);
  LatticeVector<Scalar> out(n, n, repr);
  for (std::size_t p = 0; p < buf.size(); ++p) out[p] = buf[ord.pos_to_mask[p]];
  return out;
}

}  // namespace detail

// Corner -> Moment: out_I = sum over J >= I of v_J. The entry at the empty
// set becomes the total mass of v.
template <typename Scalar>
LatticeVector<Scalar> zeta(const LatticeVector<Scalar>& v) {
  if (v.repr() != Repr::Corner) {
    throw std::invalid_argument("zeta: expected a corner-representation vector");
  }
  if (!v.full_lattice()) {
    throw std::invalid_argument("zeta: requires the full lattice (level = n)");
  }
  auto buf = detail::to_mask_order(v);
  superset_sum_transform(buf, v.n());
  return detail::from_mask_order(v.n(), Repr::Moment, buf);
}

// Moment -> Corner: out_I = sum over H disjoint from I of (-1)^|H| w_{H u I}.
// Exact inverse of zeta.
template <typename Scalar>
LatticeVector<Scalar> mobius(const LatticeVector<Scalar>& w) {
  if (w.repr() != Repr::Moment) {
    throw std::invalid_argument("mobius: expected a moment-representation vector");
  }
  if (!w.full_lattice()) {
    throw std::invalid_argument("mobius: requires the full lattice (level = n)");
  }
  auto buf = detail::to_mask_order(w);
  superset_sum_invert(buf, w.n());
  return detail::from_mask_order(w.n(), Repr::Corner, buf);
}

}  // namespace lasgap
