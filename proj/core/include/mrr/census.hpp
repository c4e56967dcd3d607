#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/group.hpp"

namespace mrr {

/// Map and MRR tallies for one connection-set size.
struct SizeTally {
  std::uint64_t maps = 0;
  std::uint64_t mrrs = 0;

  friend bool operator==(const SizeTally&, const SizeTally&) = default;
};

struct CensusResult {
  std::string group;
  std::size_t order = 0;
  std::uint64_t total_maps = 0;
  std::uint64_t mrr_count = 0;
  std::map<std::size_t, SizeTally> per_size;

  // Run metadata; not part of the data fields.
  double wall_seconds = 0.0;
  unsigned shards = 1;

  double fraction() const {
    return total_maps == 0 ? 0.0
                           : static_cast<double>(mrr_count) / static_cast<double>(total_maps);
  }

  /// Equality of the data fields only.
  bool same_data(const CensusResult& other) const {
    return group == other.group && order == other.order && total_maps == other.total_maps &&
           mrr_count == other.mrr_count && per_size == other.per_size;
  }
};

struct CensusOptions {
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;

  std::uint64_t budget = kDefaultBudget;
  /// Contiguous index ranges processed concurrently; 0 means one per
  /// hardware thread.
  unsigned shards = 0;
};

/// Index space of the labelled maps of a group: maps are numbered by
/// connection set (enumerate_connection_sets order) and then by cyclic
/// ordering rank.
class MapIndex {
 public:
  explicit MapIndex(const GroupPtr& group);

  std::uint64_t total() const { return offsets_.back(); }
  const std::vector<ConnectionSet>& connection_sets() const { return sets_; }
  /// First global index of connection set i.
  std::uint64_t offset(std::size_t i) const { return offsets_[i]; }

  CayleyMap at(std::uint64_t index) const;

 private:
  std::vector<ConnectionSet> sets_;
  std::vector<std::uint64_t> offsets_;
};

/// Throws BudgetExceeded when the number of labelled maps exceeds
/// `budget`. Cheap for large groups: (r-2)! alone is a lower bound.
std::uint64_t checked_map_count(const GroupPtr& group, std::uint64_t budget);

/// Runs is_mrr on every labelled map. The result's data fields do not
/// depend on the shard count.
CensusResult exhaustive_census(const GroupPtr& group, const CensusOptions& options = {});

/// Census over one index range [first, last), single-threaded.
CensusResult census_range(const GroupPtr& group, const MapIndex& index, std::uint64_t first,
                          std::uint64_t last);

/// Visits every labelled map (as its rotation cycle) with its connection
/// set, in index order. Throws BudgetExceeded past `budget`.
void for_each_labelled_map(const GroupPtr& group, std::uint64_t budget,
                           const std::function<void(const ConnectionSet&,
                                                    std::span<const Index>)>& visit);

// --- sampling --------------------------------------------------------------

/// 64-bit Mersenne Twister; its output sequence is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by masked rejection (portable, unlike
/// std::uniform_int_distribution). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
BigInt uniform_below(Rng& rng, const BigInt& bound);

/// Draws labelled Cayley maps uniformly. The weight of a size profile
/// (a involution classes, b pair classes) is C(I, a) C(P, b) (a + 2b - 1)!,
/// the number of labelled maps over all class subsets with that profile.
/// A profile is drawn by weight, a subset uniformly within it, and the draw
/// restarts if the subset does not generate.
class LabelledMapSampler {
 public:
  static constexpr std::uint64_t kMaxAttempts = 1'000'000;

  /// Requires order >= 2.
  explicit LabelledMapSampler(GroupPtr group);

  CayleyMap sample(Rng& rng) const;

  /// Draws into `cycle` (S in rotation order from min S) without building
  /// a CayleyMap. Returns the number of rejected subsets.
  std::uint64_t sample_cycle(Rng& rng, std::vector<Index>& cycle) const;

  const BigInt& total_weight() const { return total_; }

 private:
  GroupPtr group_;
  InverseClassPartition classes_;
  struct Profile {
    std::size_t involutions;
    std::size_t pairs;
    BigInt cumulative;  // running sum of weights up to and including this one
  };
  std::vector<Profile> profiles_;
  BigInt total_;
};

CayleyMap sample_map(const GroupPtr& group, Rng& rng);

struct SampleEstimate {
  std::string group;
  std::size_t order = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t mrr_hits = 0;
  double point_estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.95;
  std::uint64_t seed = 0;

  friend bool operator==(const SampleEstimate&, const SampleEstimate&) = default;
};

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for `hits` successes in `n` trials.
Interval wilson_interval(std::uint64_t hits, std::uint64_t n, double confidence);

/// Samples are drawn in blocks of kSampleBlock; block b uses an
/// Rng seeded with seed ^ b, so the result is independent of `threads`.
inline constexpr std::uint64_t kSampleBlock = 4096;

SampleEstimate estimate_fraction(const GroupPtr& group, std::uint64_t n_samples,
                                 std::uint64_t seed, double confidence = 0.95,
                                 unsigned threads = 0);

// --- trend report ----------------------------------------------------------

struct ReportRow {
  enum class Mode { Exhaustive, Sampled, Error };

  std::string group;
  std::size_t order = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t total_or_n = 0;
  std::uint64_t count = 0;
  double fraction = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::optional<std::uint64_t> seed;
  std::string error;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

ReportRow to_row(const CensusResult& c);
ReportRow to_row(const SampleEstimate& s);

struct TrendOptions {
  std::uint64_t n_samples = 10'000;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  CensusOptions census;
};

/// One row per input spec, in input order. Groups whose map count fits the
/// census budget are censused exactly; the rest are sampled. Failures (bad
/// specs, unreadable files) become Error rows.
std::vector<ReportRow> trend_report(const std::vector<std::string>& group_specs,
                                    const TrendOptions& options);

}  // namespace mrr
