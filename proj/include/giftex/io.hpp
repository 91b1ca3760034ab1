#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "giftex/core_tables.hpp"
#include "giftex/numeric.hpp"

namespace giftex {

enum class ValueKind { E, G, H };

char kind_letter(ValueKind k);
/// "E", "G" or "H" (case-insensitive); nullopt otherwise.
std::optional<ValueKind> parse_kind(std::string_view s);

struct TableEntry {
  long n = 0;
  std::optional<long> k;
  Integer value;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct TableDump {
  ValueKind kind = ValueKind::E;
  unsigned sigma = 0;
  std::vector<TableEntry> entries;

  friend bool operator==(const TableDump&, const TableDump&) = default;
};

/// Rows n = 0..n_max of E_sigma with k = 0..(sigma+1)n.
TableDump dump_e(const ETable& table);
/// G_sigma(0..n_max) or H_sigma(1..n_max).
TableDump dump_values(ValueKind kind, StealLimit sigma, unsigned n_max);

/// Header "n,k,value" for E tables and "n,value" otherwise.
std::string to_csv(const TableDump& t);
/// {"kind","sigma","entries":[{"n","k"?,"value"}]}, values as decimal strings.
std::string to_json(const TableDump& t);

/// Inverse of to_csv; the CSV carries neither kind nor sigma. Throws
/// invalid_argument on malformed input.
TableDump parse_csv(std::string_view text, ValueKind kind, unsigned sigma);
TableDump parse_json(std::string_view text);

struct FixtureRecord {
  ValueKind kind = ValueKind::E;
  unsigned sigma = 0;
  long n = 0;
  std::optional<long> k;
  std::string value;
  // Set when the printed value is known to be wrong: the value every
  // independent computation gives.
  std::optional<std::string> erratum;
  std::string source;
};

std::vector<FixtureRecord> parse_fixtures(std::string_view json);
/// The fixture set compiled into the library.
const std::vector<FixtureRecord>& embedded_fixtures();

struct FixtureOutcome {
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::size_t errata_confirmed = 0;
  std::size_t cross_checks = 0;
  std::vector<std::string> diffs;

  bool pass() const { return diffs.empty(); }
};

/// Recomputes every record. A record with an erratum passes when the
/// recurrence table, the multinomial sum and (for sigma = 1) the closed form
/// all give the erratum value. Also checks that complete printed E rows sum
/// to the printed G values, and that E tables for different sigma agree where
/// the block-size limit does not bind (k - n <= min sigma).
FixtureOutcome check_fixtures(const std::vector<FixtureRecord>& records);

/// "index value" pairs, one per line; blank lines and '#' comments skipped.
std::vector<std::pair<long, Integer>> parse_bfile(std::string_view text);

}  // namespace giftex
