#include "mrr/census.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "mrr/errors.hpp"
#include "mrr/mapauto.hpp"

namespace mrr {

MapIndex::MapIndex(const GroupPtr& group) : sets_(enumerate_connection_sets(group)) {
  offsets_.reserve(sets_.size() + 1);
  offsets_.push_back(0);
  for (const auto& s : sets_) {
    const BigInt next = BigInt(offsets_.back()) + factorial(s.size() - 1);
    if (next > std::numeric_limits<std::uint64_t>::max()) {
      throw BudgetExceeded("labelled map count overflows 64-bit indices");
    }
    offsets_.push_back(next.convert_to<std::uint64_t>());
  }
}

CayleyMap MapIndex::at(std::uint64_t index) const {
  if (index >= total()) throw InvalidInput("map index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const auto set = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const ConnectionSet& s = sets_[set];
  return CayleyMap(s, CyclicOrdering::from_cycle(
                          unrank_cyclic_ordering(s.elements(), index - offsets_[set])));
}

std::uint64_t checked_map_count(const GroupPtr& group, std::uint64_t budget) {
  const std::size_t r = group->order();
  if (r < 2) throw InvalidInput("a census needs a group of order at least 2");
  auto too_many = [&](const BigInt& lower) {
    return BudgetExceeded("group " + group->label() + " has at least " + lower.str() +
                          " labelled maps, above the budget of " + std::to_string(budget) +
                          "; use sampling instead");
  };
  // The full connection set R \ {e} alone contributes (r-2)!.
  const BigInt lower = factorial(r >= 2 ? r - 2 : 0);
  if (lower > budget) throw too_many(lower);
  const BigInt total = count_labelled_maps(group);
  if (total > budget) throw too_many(total);
  return total.convert_to<std::uint64_t>();
}

CensusResult census_range(const GroupPtr& group, const MapIndex& index, std::uint64_t first,
                          std::uint64_t last) {
  CensusResult result;
  result.group = group->label();
  result.order = group->order();
  MrrKernel kernel(*group);
  const auto& sets = index.connection_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::uint64_t lo = std::max(first, index.offset(i));
    const std::uint64_t hi = std::min(last, index.offset(i + 1));
    if (lo >= hi) continue;
    const auto elements = sets[i].elements();
    std::vector<Index> cycle = unrank_cyclic_ordering(elements, lo - index.offset(i));
    SizeTally& tally = result.per_size[elements.size()];
    for (std::uint64_t k = lo; k < hi; ++k) {
      ++tally.maps;
      if (kernel.is_mrr(cycle)) ++tally.mrrs;
      std::next_permutation(cycle.begin() + 1, cycle.end());
    }
  }
  for (const auto& [size, tally] : result.per_size) {
    (void)size;
    result.total_maps += tally.maps;
    result.mrr_count += tally.mrrs;
  }
  return result;
}

CensusResult exhaustive_census(const GroupPtr& group, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  checked_map_count(group, options.budget);
  const MapIndex index(group);
  const std::uint64_t total = index.total();

  unsigned shards = options.shards;
  if (shards == 0) shards = std::max(1u, std::thread::hardware_concurrency());

  std::vector<CensusResult> partial(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      const std::uint64_t first = total * s / shards;
      const std::uint64_t last = total * (s + 1) / shards;
      workers.emplace_back([&, s, first, last] {
        partial[s] = census_range(group, index, first, last);
      });
    }
  }

  CensusResult result;
  result.group = group->label();
  result.order = group->order();
  for (const auto& p : partial) {
    result.total_maps += p.total_maps;
    result.mrr_count += p.mrr_count;
    for (const auto& [size, tally] : p.per_size) {
      result.per_size[size].maps += tally.maps;
      result.per_size[size].mrrs += tally.mrrs;
    }
  }
  result.shards = shards;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void for_each_labelled_map(const GroupPtr& group, std::uint64_t budget,
                           const std::function<void(const ConnectionSet&,
                                                    std::span<const Index>)>& visit) {
  checked_map_count(group, budget);
  for (const ConnectionSet& s : enumerate_connection_sets(group)) {
    const std::uint64_t count = factorial(s.size() - 1).convert_to<std::uint64_t>();
    for_each_cyclic_ordering(s.elements(), 0, count,
                             [&](std::span<const Index> cycle) { visit(s, cycle); });
  }
}

}  // namespace mrr
