#include "mrr/bounds.hpp"

#include <cmath>

#include "mrr/census.hpp"
#include "mrr/errors.hpp"
#include "mrr/mapauto.hpp"

namespace mrr {

namespace {

long double log2_factorial(std::size_t n) {
  return std::lgamma(static_cast<long double>(n) + 1.0L) / std::log(2.0L);
}

}  // namespace

long double lemma2_log2(std::size_t r) {
  if (r == 0) throw InvalidInput("lemma2 bound needs r >= 1");
  const long double l = std::log2(static_cast<long double>(r));
  return 7.0L * l * l + 12.0L * l;
}

BigRational lemma3_bound(std::size_t r) {
  const BigRational half_r(BigInt(r), BigInt(2));
  return BigRational(BigInt(r) - 1) * half_r * BigRational(factorial(r / 2)) *
         BigRational(BigInt(1) << r);
}

GammaProfile make_gamma_profile(std::size_t r, std::map<std::size_t, std::size_t> cycles) {
  std::size_t total = 0;
  for (const auto& [l, n] : cycles) {
    if (l == 0) throw InvalidInput("cycle length 0 in gamma profile");
    total += l * n;
  }
  if (total != r) throw InvalidInput("gamma profile does not sum to r");
  const auto fixed = cycles.find(1);
  if (fixed == cycles.end() || fixed->second == 0) {
    throw InvalidInput("gamma profile has no fixed point");
  }
  return GammaProfile{r, std::move(cycles)};
}

GammaProfile gamma_profile(const Permutation& gamma) {
  return make_gamma_profile(gamma.size(), cycle_length_profile(gamma));
}

BigInt dario_sum(const GammaProfile& profile) {
  BigInt total = 0;
  for (const auto& [l, n] : profile.cycles) {
    if (l < 2 || l > profile.r - 1) continue;
    // C(n, k) k! = n (n-1) ... (n-k+1), accumulated term by term.
    BigInt falling = 1;
    BigInt l_pow = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      falling *= n - k + 1;
      l_pow *= l;
      total += falling * l_pow;
    }
  }
  return total;
}

std::uint64_t exact_R_gamma(const GroupPtr& group, const Permutation& gamma,
                            std::uint64_t budget) {
  if (gamma.size() != group->order()) throw InvalidInput("gamma acts on the wrong domain");
  if (gamma.is_identity()) throw InvalidInput("gamma must not be the identity");
  if (gamma(group->identity()) != group->identity()) {
    throw InvalidInput("gamma must fix the identity element");
  }
  std::uint64_t count = 0;
  for_each_labelled_map(group, budget, [&](const ConnectionSet& s, std::span<const Index> cycle) {
    const CayleyMap m(s, CyclicOrdering::from_cycle({cycle.begin(), cycle.end()}));
    if (is_map_automorphism(build_cayley_map(m), gamma)) ++count;
  });
  return count;
}

long double theorem_ratio_log2(std::size_t r) {
  if (r < 2) throw InvalidInput("theorem ratio needs r >= 2");
  const long double rr = static_cast<long double>(r);
  const long double lemma3_log2 = std::log2(rr - 1.0L) + std::log2(rr / 2.0L) +
                                  log2_factorial(r / 2) + rr;
  return lemma3_log2 + lemma2_log2(r) - log2_factorial(r - 2);
}

Float50 theorem_ratio_exact(std::size_t r) {
  if (r < 2) throw InvalidInput("theorem ratio needs r >= 2");
  const BigRational exact = lemma3_bound(r) / BigRational(factorial(r - 2));
  const Float50 l = boost::multiprecision::log2(Float50(r));
  const Float50 exponent = 7 * l * l + 12 * l;
  return Float50(exact) * boost::multiprecision::pow(Float50(2), exponent);
}

std::optional<std::size_t> first_ratio_below_one(std::size_t lo, std::size_t hi) {
  if (lo < 2 || lo > hi) return std::nullopt;
  if (theorem_ratio_log2(hi) >= 0) return std::nullopt;
  if (theorem_ratio_log2(lo) < 0) return lo;
  // Invariant: ratio(lo) >= 1 > ratio(hi).
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (theorem_ratio_log2(mid) < 0 ? hi : lo) = mid;
  }
  return hi;
}

BoundReport bound_report(std::size_t r) {
  BoundReport out;
  out.r = r;
  out.lemma2_log2 = lemma2_log2(r);
  out.lemma3 = lemma3_bound(r);
  if (r >= 2) out.ratio_log2 = theorem_ratio_log2(r);
  return out;
}

}  // namespace mrr
