#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "mrr/cayley.hpp"
#include "mrr/group.hpp"
#include "mrr/perm.hpp"

namespace mrr {

using BigRational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

/// Exponent 7 (log2 r)^2 + 12 log2 r of the bound on the number of
/// overgroups of R in Sym(r) with cyclic point stabilizer of order < r.
/// The bound itself is 2^exponent; it is kept in the log domain because it
/// overflows doubles for r around 100. Requires r >= 1.
long double lemma2_log2(std::size_t r);

/// (r-1) * (r/2) * floor(r/2)! * 2^r, with r/2 kept exact. The value is
/// always an integer since (r/2) 2^r = r 2^(r-1).
BigRational lemma3_bound(std::size_t r);

/// Cycle data of a permutation gamma of {0..r-1} that fixes a point:
/// cycles[l] = n_l, with sum l * n_l = r and n_1 >= 1.
struct GammaProfile {
  std::size_t r = 0;
  std::map<std::size_t, std::size_t> cycles;
};

/// Throws InvalidInput unless sum l*n_l = r and n_1 >= 1.
GammaProfile make_gamma_profile(std::size_t r, std::map<std::size_t, std::size_t> cycles);
GammaProfile gamma_profile(const Permutation& gamma);

/// sum_{l=2}^{r-1} sum_{k=1}^{n_l} C(n_l, k) k! l^k: the count of pairs
/// (S, r) compatible with gamma when S is a union of k gamma-cycles of one
/// length l and r commutes with gamma on S.
BigInt dario_sum(const GammaProfile& profile);

/// Number of labelled Cayley maps on the group admitting `gamma` as a map
/// automorphism, by exhaustive iteration and the direct automorphism check.
/// gamma must be non-identity and fix the identity element; throws
/// InvalidInput otherwise and BudgetExceeded past `budget` maps.
std::uint64_t exact_R_gamma(const GroupPtr& group, const Permutation& gamma,
                            std::uint64_t budget = 100'000'000);

/// log2 of lemma3_bound(r) * 2^lemma2_log2(r) / (r-2)!, evaluated with
/// lgamma in long double. Requires r >= 2.
long double theorem_ratio_log2(std::size_t r);

/// The same ratio from the exact rational lemma3_bound(r)/(r-2)! times
/// 2^lemma2 in 50-digit floating point. For cross-checking at small r.
Float50 theorem_ratio_exact(std::size_t r);

/// Smallest r in [lo, hi] with theorem_ratio(r) < 1, by bisection on the
/// log-domain ratio. Assumes the ratio is above 1 at lo and crosses once.
std::optional<std::size_t> first_ratio_below_one(std::size_t lo, std::size_t hi);

struct BoundReport {
  std::size_t r = 0;
  long double lemma2_log2 = 0;
  BigRational lemma3 = 0;
  /// Empty for r < 2, where (r-2)! is undefined.
  std::optional<long double> ratio_log2;

  /// The bound says nothing once the ratio exceeds 1.
  bool vacuous() const { return !ratio_log2 || *ratio_log2 > 0; }
};

BoundReport bound_report(std::size_t r);

}  // namespace mrr
