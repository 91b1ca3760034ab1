#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "giftex/numeric.hpp"

namespace giftex {

/// One play-out of the game with `gifts` gifts taken from the pool in order
/// 1, 2, ...: the label of the gift chosen at each action.
struct ScenarioSequence {
  unsigned gifts = 0;
  std::vector<unsigned> labels;

  friend auto operator<=>(const ScenarioSequence&, const ScenarioSequence&) = default;
};

/// A partition of {1..ground_size}; each block is sorted and the blocks are
/// ordered by their minimum element.
struct SetPartition {
  unsigned ground_size = 0;
  std::vector<std::vector<unsigned>> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

inline constexpr std::uint64_t kDefaultScenarioBudget = 10'000'000;

/// Checks the structural rules: starts with 1, ends with the unique label
/// `gifts`, first occurrences appear in increasing label order and every
/// label below `gifts` is used between 1 and sigma+1 times.
bool is_valid_scenario(const ScenarioSequence& s, StealLimit sigma);

/// Depth-first enumeration in lexicographic order. Throws BudgetExceeded once
/// more than `budget` sequences would be produced.
void for_each_scenario(StealLimit sigma, unsigned gifts, std::uint64_t budget,
                       const std::function<void(const ScenarioSequence&)>& visit);

std::vector<ScenarioSequence> enumerate_scenarios(StealLimit sigma, unsigned gifts,
                                                  std::uint64_t budget = kDefaultScenarioBudget);

/// Drops the final label; block i collects the positions (1-based) of label i.
/// Throws std::invalid_argument when s is not structurally valid.
SetPartition scenario_to_partition(const ScenarioSequence& s);

/// Inverse of scenario_to_partition (appends the final label n+1). Throws
/// std::invalid_argument when a block exceeds sigma+1 elements, the blocks do
/// not partition {1..ground_size}, or they are not listed by ascending minimum.
ScenarioSequence partition_to_scenario(const SetPartition& p, StealLimit sigma);

/// Histogram of sequence lengths; the count at length k+1 is E_sigma(gifts-1, k).
std::map<unsigned, std::uint64_t> count_by_length(StealLimit sigma, unsigned gifts,
                                                  std::uint64_t budget = kDefaultScenarioBudget);

/// "1213" for gifts <= 9, otherwise "1,2,1,...,10".
std::string format_scenario(const ScenarioSequence& s);

/// "13, 2" style rendering (blocks separated by ", ", elements concatenated
/// when ground_size <= 9).
std::string format_partition(const SetPartition& p);

}  // namespace giftex
