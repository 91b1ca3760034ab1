#include "giftex/scenario.hpp"

#include <algorithm>
#include <stdexcept>

namespace giftex {

namespace {

bool structurally_valid(const ScenarioSequence& s, unsigned max_uses) {
  const auto& v = s.labels;
  if (s.gifts == 0 || v.empty() || v.front() != 1 || v.back() != s.gifts) return false;
  std::vector<unsigned> uses(s.gifts + 1, 0);
  unsigned introduced = 0;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    unsigned label = v[pos];
    if (label == 0 || label > s.gifts) return false;
    if (label > introduced + 1) return false;  // first occurrence out of order
    if (label == introduced + 1) introduced = label;
    if (label == s.gifts && pos + 1 != v.size()) return false;
    if (++uses[label] > max_uses && label != s.gifts) return false;
  }
  return introduced == s.gifts;
}

struct Enumerator {
  unsigned gifts;
  unsigned max_uses;
  std::uint64_t budget;
  const std::function<void(const ScenarioSequence&)>& visit;
  std::uint64_t produced = 0;
  ScenarioSequence current;
  std::vector<unsigned> uses;

  void run(unsigned introduced) {
    // Labels in increasing order give lexicographic output.
    for (unsigned label = 1; label <= introduced + 1; ++label) {
      if (label <= introduced && uses[label] >= max_uses) continue;
      current.labels.push_back(label);
      if (label == gifts) {
        if (++produced > budget) {
          throw BudgetExceeded("enumerate_scenarios: more than " + std::to_string(budget) +
                               " sequences");
        }
        visit(current);
      } else {
        ++uses[label];
        run(std::max(introduced, label));
        --uses[label];
      }
      current.labels.pop_back();
    }
  }
};

}  // namespace

bool is_valid_scenario(const ScenarioSequence& s, StealLimit sigma) {
  return structurally_valid(s, sigma.max_block());
}

void for_each_scenario(StealLimit sigma, unsigned gifts, std::uint64_t budget,
                       const std::function<void(const ScenarioSequence&)>& visit) {
  if (gifts == 0) throw std::invalid_argument("enumerate_scenarios: gifts must be positive");
  Enumerator e{gifts, sigma.max_block(), budget, visit, 0, {gifts, {}}, std::vector<unsigned>(gifts + 1, 0)};
  if (gifts == 1) {
    e.current.labels = {1};
    if (budget == 0) throw BudgetExceeded("enumerate_scenarios: budget is zero");
    visit(e.current);
    return;
  }
  e.current.labels.push_back(1);
  e.uses[1] = 1;
  e.run(1);
}

std::vector<ScenarioSequence> enumerate_scenarios(StealLimit sigma, unsigned gifts, std::uint64_t budget) {
  std::vector<ScenarioSequence> out;
  for_each_scenario(sigma, gifts, budget, [&](const ScenarioSequence& s) { out.push_back(s); });
  return out;
}

SetPartition scenario_to_partition(const ScenarioSequence& s) {
  // Structure only; the steal limit is the caller's concern.
  if (!structurally_valid(s, static_cast<unsigned>(s.labels.size()))) {
    throw std::invalid_argument("scenario_to_partition: invalid sequence " + format_scenario(s));
  }
  SetPartition p;
  p.ground_size = static_cast<unsigned>(s.labels.size() - 1);
  p.blocks.resize(s.gifts - 1);
  for (unsigned pos = 0; pos < p.ground_size; ++pos) p.blocks[s.labels[pos] - 1].push_back(pos + 1);
  return p;
}

ScenarioSequence partition_to_scenario(const SetPartition& p, StealLimit sigma) {
  std::vector<unsigned> label_of(p.ground_size + 1, 0);
  unsigned previous_min = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& block = p.blocks[b];
    if (block.empty()) throw std::invalid_argument("partition_to_scenario: empty block");
    if (block.size() > sigma.max_block()) {
      throw std::invalid_argument("partition_to_scenario: block of size " + std::to_string(block.size()) +
                                  " exceeds sigma+1 = " + std::to_string(sigma.max_block()));
    }
    unsigned mn = *std::min_element(block.begin(), block.end());
    if (mn <= previous_min) {
      throw std::invalid_argument("partition_to_scenario: blocks not ordered by first occurrence");
    }
    previous_min = mn;
    for (unsigned x : block) {
      if (x == 0 || x > p.ground_size || label_of[x] != 0) {
        throw std::invalid_argument("partition_to_scenario: blocks do not partition the ground set");
      }
      label_of[x] = static_cast<unsigned>(b + 1);
    }
  }
  ScenarioSequence s{static_cast<unsigned>(p.blocks.size() + 1), {}};
  for (unsigned x = 1; x <= p.ground_size; ++x) {
    if (label_of[x] == 0) throw std::invalid_argument("partition_to_scenario: element not covered");
    s.labels.push_back(label_of[x]);
  }
  s.labels.push_back(s.gifts);
  return s;
}

std::map<unsigned, std::uint64_t> count_by_length(StealLimit sigma, unsigned gifts, std::uint64_t budget) {
  std::map<unsigned, std::uint64_t> hist;
  for_each_scenario(sigma, gifts, budget,
                    [&](const ScenarioSequence& s) { ++hist[static_cast<unsigned>(s.labels.size())]; });
  return hist;
}

std::string format_scenario(const ScenarioSequence& s) {
  std::string out;
  const bool compact = s.gifts <= 9;
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(s.labels[i]);
  }
  return out;
}

std::string format_partition(const SetPartition& p) {
  std::string out;
  const bool compact = p.ground_size <= 9;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b > 0) out += compact ? ", " : " | ";
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(p.blocks[b][i]);
    }
  }
  return out;
}

}  // namespace giftex
