#pragma once

// Exact Frame-Stewart arithmetic.
//
// For n disks and p pegs the level r is the unique r >= 1 with
//
//   C(p+r-3, p-2) <= n < C(p+r-2, p-2)
//
// and the Frame-Stewart number is
//
//   K(n,p) = sum_{t=0}^{r-1} 2^t C(p+t-3, p-3) + 2^r (n - C(p+r-3, p-2)).
//
// The same numbers come out of the split recurrence
//
//   K(n,p) = min_{1<=k<n} 2 K(k,p) + K(n-k, p-1),  K(n,3) = 2^n - 1,
//
// which FrameStewartTable evaluates bottom-up. All values are exact
// arbitrary-precision integers.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hanoi/core.hpp"
#include "hanoi/errors.hpp"

namespace hanoi {

using KValue = boost::multiprecision::cpp_int;

inline KValue pow2(unsigned e) { return KValue(1) << e; }

// Narrowing to a machine word; throws OverflowError rather than wrapping.
inline std::uint64_t to_u64(const KValue& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw OverflowError("value " + v.str() + " does not fit in 64 bits");
  return v.convert_to<std::uint64_t>();
}

// C(a, b), zero when b > a.
inline KValue binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  KValue c = 1;
  // After step i, c == C(a-b+i, i); each division is exact.
  for (std::uint64_t i = 1; i <= b; ++i) {
    c *= a - b + i;
    c /= i;
  }
  return c;
}

// Level r of (n, p): C(p+r-3, p-2) <= n < C(p+r-2, p-2).
inline unsigned find_r(std::uint64_t n, unsigned p) {
  validate_problem(n, p);
  unsigned r = 1;
  while (binomial(p + r - 2, p - 2) <= n) ++r;
  return r;
}

inline KValue k_closed(std::uint64_t n, unsigned p) {
  const unsigned r = find_r(n, p);
  KValue sum = 0;
  for (unsigned t = 0; t < r; ++t) sum += pow2(t) * binomial(p + t - 3, p - 3);
  return sum + pow2(r) * (KValue(n) - binomial(p + r - 3, p - 2));
}

// K(n,p) - K(n-1,p).
inline KValue k_delta(std::uint64_t n, unsigned p) {
  if (n < 2) throw InvalidArgument("k_delta needs n >= 2");
  return k_closed(n, p) - k_closed(n - 1, p);
}

// One split of the recurrence: the lower block 1..k moves twice on all pegs,
// the upper block k+1..n once on p-1 pegs.
struct SplitChoice {
  std::uint64_t k = 0;
  unsigned r = 0;
  // n - C(p+r-3, p-2)
  std::uint64_t alpha = 0;
  // beta = k - C(p+r-4, p-2), gamma = alpha - beta; signed because an
  // arbitrary minimizer need not fall inside the level decomposition.
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
};

namespace detail {

inline SplitChoice make_split(std::uint64_t n, unsigned p, std::uint64_t k) {
  SplitChoice s;
  s.k = k;
  s.r = find_r(n, p);
  s.alpha = to_u64(KValue(n) - binomial(p + s.r - 3, p - 2));
  const KValue base = s.r >= 2 ? binomial(p + s.r - 4, p - 2) : KValue(0);
  s.beta = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(to_u64(base));
  s.gamma = static_cast<std::int64_t>(s.alpha) - s.beta;
  return s;
}

}  // namespace detail

// Memo table of the split recurrence for n <= n_max, 3 <= p <= p_max.
//
// Filled completely in the constructor; afterwards every member is const and
// the table may be shared across threads.
class FrameStewartTable {
public:
  FrameStewartTable(std::uint64_t n_max, unsigned p_max) : n_max_(n_max), p_max_(p_max) {
    validate_problem(1, p_max);  // p_max >= 3
    values_.resize(p_max - 2);
    splits_.resize(p_max - 2);
    auto& base = values_[0];
    base.resize(n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) base[n] = pow2(static_cast<unsigned>(n)) - 1;
    splits_[0].assign(n_max + 1, 0);
    for (unsigned p = 4; p <= p_max; ++p) {
      auto& row = values_[p - 3];
      const auto& lower = values_[p - 4];
      auto& split = splits_[p - 3];
      row.resize(n_max + 1);
      split.assign(n_max + 1, 0);
      if (n_max >= 1) row[1] = 1;
      for (std::uint64_t n = 2; n <= n_max; ++n) {
        KValue best = 2 * row[1] + lower[n - 1];
        std::uint64_t best_k = 1;
        for (std::uint64_t k = 2; k < n; ++k) {
          KValue v = 2 * row[k] + lower[n - k];
          if (v < best) {
            best = std::move(v);
            best_k = k;
          }
        }
        row[n] = std::move(best);
        split[n] = best_k;
      }
    }
  }

  std::uint64_t n_max() const noexcept { return n_max_; }
  unsigned p_max() const noexcept { return p_max_; }

  const KValue& k(std::uint64_t n, unsigned p) const {
    check(n, p);
    return values_[p - 3][n];
  }

  // Smallest minimizing k; needs n >= 2 and p >= 4.
  SplitChoice optimal_split(std::uint64_t n, unsigned p) const {
    check(n, p);
    if (n < 2 || p < 4) throw InvalidArgument("optimal_split needs n >= 2 and p >= 4");
    return detail::make_split(n, p, splits_[p - 3][n]);
  }

  // Cost of one particular split k of (n, p).
  KValue split_cost(std::uint64_t n, unsigned p, std::uint64_t k) const {
    check(n, p);
    if (p < 4 || k < 1 || k >= n) throw InvalidArgument("split out of range");
    return 2 * values_[p - 3][k] + values_[p - 4][n - k];
  }

private:
  void check(std::uint64_t n, unsigned p) const {
    if (p < 3 || p > p_max_ || n > n_max_)
      throw InvalidArgument("(" + std::to_string(n) + ", " + std::to_string(p) +
                            ") outside the table");
  }

  std::uint64_t n_max_;
  unsigned p_max_;
  std::vector<std::vector<KValue>> values_;        // [p-3][n]
  std::vector<std::vector<std::uint64_t>> splits_;  // [p-3][n], 0 when undefined
};

inline KValue k_dp(std::uint64_t n, unsigned p) {
  validate_problem(n, p);
  return FrameStewartTable(n, p).k(n, p);
}

inline SplitChoice optimal_split(std::uint64_t n, unsigned p) {
  return FrameStewartTable(n, p).optimal_split(n, p);
}

// Every split k = C(p+r-4, p-2) + beta with beta + gamma = alpha,
// beta < C(p+r-4, p-3), gamma < C(p+r-4, p-4), and 1 <= k < n.
inline std::vector<SplitChoice> admissible_splits(std::uint64_t n, unsigned p) {
  validate_problem(n, p);
  std::vector<SplitChoice> out;
  if (p < 4 || n < 2) return out;
  const unsigned r = find_r(n, p);
  if (r < 2) return out;
  const auto alpha = to_u64(KValue(n) - binomial(p + r - 3, p - 2));
  const auto base = to_u64(binomial(p + r - 4, p - 2));
  const KValue beta_bound = binomial(p + r - 4, p - 3);
  const KValue gamma_bound = binomial(p + r - 4, p - 4);
  for (std::uint64_t beta = 0; beta <= alpha && beta < beta_bound; ++beta) {
    if (alpha - beta >= gamma_bound) continue;
    const std::uint64_t k = base + beta;
    if (k < 1 || k >= n) continue;
    out.push_back(detail::make_split(n, p, k));
  }
  return out;
}

}  // namespace hanoi
