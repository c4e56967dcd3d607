#include "mrr/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "mrr/errors.hpp"
#include "mrr/io.hpp"
#include "mrr/mapauto.hpp"

namespace mrr {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  while (true) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
  if (bound <= 1) return 0;
  const std::size_t bits = boost::multiprecision::msb(BigInt(bound - 1)) + 1;
  const BigInt mask = (BigInt(1) << bits) - 1;
  while (true) {
    BigInt x = 0;
    for (std::size_t have = 0; have < bits; have += 64) {
      x <<= 64;
      x |= rng();
    }
    x &= mask;
    if (x < bound) return x;
  }
}

namespace {

// Picks `count` distinct entries of `pool` uniformly (partial Fisher-Yates).
template <class T>
void choose_subset(Rng& rng, std::vector<T>& pool, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
}

// Pascal's triangle row n: C(n, 0..n).
std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = next[i] = 1;
    for (std::size_t k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

}  // namespace

LabelledMapSampler::LabelledMapSampler(GroupPtr group)
    : group_(std::move(group)), classes_(inverse_class_partition(*group_)) {
  if (group_->order() < 2) throw InvalidInput("sampling needs a group of order at least 2");
  const std::size_t inv = classes_.involutions.size();
  const std::size_t prs = classes_.pairs.size();
  const auto c_inv = binomial_row(inv);
  const auto c_prs = binomial_row(prs);
  const std::size_t max_size = inv + 2 * prs;
  std::vector<BigInt> fact(max_size + 1, 1);
  for (std::size_t i = 1; i <= max_size; ++i) fact[i] = fact[i - 1] * i;

  total_ = 0;
  for (std::size_t a = 0; a <= inv; ++a) {
    for (std::size_t b = 0; b <= prs; ++b) {
      const std::size_t size = a + 2 * b;
      if (size == 0) continue;
      total_ += c_inv[a] * c_prs[b] * fact[size - 1];
      profiles_.push_back(Profile{a, b, total_});
    }
  }
}

std::uint64_t LabelledMapSampler::sample_cycle(Rng& rng, std::vector<Index>& cycle) const {
  std::vector<Index> involutions = classes_.involutions;
  std::vector<std::pair<Index, Index>> pairs = classes_.pairs;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const BigInt u = uniform_below(rng, total_);
    const auto it = std::upper_bound(profiles_.begin(), profiles_.end(), u,
                                     [](const BigInt& x, const Profile& p) {
                                       return x < p.cumulative;
                                     });
    choose_subset(rng, involutions, it->involutions);
    choose_subset(rng, pairs, it->pairs);

    cycle.clear();
    cycle.insert(cycle.end(), involutions.begin(),
                 involutions.begin() + static_cast<std::ptrdiff_t>(it->involutions));
    for (std::size_t i = 0; i < it->pairs; ++i) {
      cycle.push_back(pairs[i].first);
      cycle.push_back(pairs[i].second);
    }
    std::sort(cycle.begin(), cycle.end());
    if (!generates(*group_, cycle)) continue;

    // Uniform cyclic ordering: keep the anchor (min S), shuffle the rest.
    for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
      const std::size_t j = i + uniform_below(rng, cycle.size() - i);
      std::swap(cycle[i], cycle[j]);
    }
    return attempt;
  }
  throw Error("sampler exceeded " + std::to_string(kMaxAttempts) + " rejections");
}

CayleyMap LabelledMapSampler::sample(Rng& rng) const {
  std::vector<Index> cycle;
  sample_cycle(rng, cycle);
  std::vector<Index> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  return CayleyMap(make_connection_set(group_, std::move(sorted)),
                   CyclicOrdering::from_cycle(std::move(cycle)));
}

CayleyMap sample_map(const GroupPtr& group, Rng& rng) {
  return LabelledMapSampler(group).sample(rng);
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t n, double confidence) {
  if (n == 0) return {0.0, 1.0};
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InvalidInput("confidence level must lie strictly between 0 and 1");
  }
  const boost::math::normal standard;
  const double z = boost::math::quantile(standard, 1.0 - (1.0 - confidence) / 2.0);
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  Interval out{std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
  out.low = std::min(out.low, p);
  out.high = std::max(out.high, p);
  if (hits == 0) out.low = 0.0;
  if (hits == n) out.high = 1.0;
  return out;
}

SampleEstimate estimate_fraction(const GroupPtr& group, std::uint64_t n_samples,
                                 std::uint64_t seed, double confidence, unsigned threads) {
  if (n_samples == 0) throw InvalidInput("n_samples must be at least 1");
  const LabelledMapSampler sampler(group);
  const std::uint64_t blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  std::vector<std::uint64_t> block_hits(blocks, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        MrrKernel kernel(*group);
        std::vector<Index> cycle;
        for (std::uint64_t b = t; b < blocks; b += threads) {
          Rng rng(seed ^ b);
          const std::uint64_t count =
              std::min(kSampleBlock, n_samples - b * kSampleBlock);
          std::uint64_t hits = 0;
          for (std::uint64_t i = 0; i < count; ++i) {
            sampler.sample_cycle(rng, cycle);
            if (kernel.is_mrr(cycle)) ++hits;
          }
          block_hits[b] = hits;
        }
      });
    }
  }

  SampleEstimate est;
  est.group = group->label();
  est.order = group->order();
  est.n_samples = n_samples;
  for (auto h : block_hits) est.mrr_hits += h;
  est.point_estimate = static_cast<double>(est.mrr_hits) / static_cast<double>(n_samples);
  const Interval ci = wilson_interval(est.mrr_hits, n_samples, confidence);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  est.confidence = confidence;
  est.seed = seed;
  return est;
}

ReportRow to_row(const CensusResult& c) {
  ReportRow row;
  row.group = c.group;
  row.order = c.order;
  row.mode = ReportRow::Mode::Exhaustive;
  row.total_or_n = c.total_maps;
  row.count = c.mrr_count;
  row.fraction = c.fraction();
  row.ci_low = row.ci_high = row.fraction;
  return row;
}

ReportRow to_row(const SampleEstimate& s) {
  ReportRow row;
  row.group = s.group;
  row.order = s.order;
  row.mode = ReportRow::Mode::Sampled;
  row.total_or_n = s.n_samples;
  row.count = s.mrr_hits;
  row.fraction = s.point_estimate;
  row.ci_low = s.ci_low;
  row.ci_high = s.ci_high;
  row.seed = s.seed;
  return row;
}

std::vector<ReportRow> trend_report(const std::vector<std::string>& group_specs,
                                    const TrendOptions& options) {
  std::vector<ReportRow> rows;
  rows.reserve(group_specs.size());
  for (const std::string& spec : group_specs) {
    try {
      const GroupPtr group = load_group(spec);
      bool fits = true;
      try {
        checked_map_count(group, options.census.budget);
      } catch (const BudgetExceeded&) {
        fits = false;
      }
      if (fits) {
        rows.push_back(to_row(exhaustive_census(group, options.census)));
      } else {
        rows.push_back(to_row(estimate_fraction(group, options.n_samples, options.seed,
                                                options.confidence, options.census.shards)));
      }
    } catch (const Error& err) {
      ReportRow row;
      row.group = spec;
      row.mode = ReportRow::Mode::Error;
      row.error = err.what();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace mrr
