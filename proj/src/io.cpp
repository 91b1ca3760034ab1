#include "giftex/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "giftex/fixture_data.hpp"

namespace giftex {

namespace {

Integer parse_integer(std::string_view s) {
  std::string str(s);
  if (str.empty() || (str.find_first_not_of("0123456789") != std::string::npos &&
                      !(str[0] == '-' && str.size() > 1 &&
                        str.find_first_not_of("0123456789", 1) == std::string::npos)))
    throw std::invalid_argument("not an integer: '" + str + "'");
  return Integer(str);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> lines(std::string_view text) {
  auto out = split(text, '\n');
  if (!out.empty() && trim(out.back()).empty()) out.pop_back();
  return out;
}

}  // namespace

char kind_letter(ValueKind k) {
  switch (k) {
    case ValueKind::E:
      return 'E';
    case ValueKind::G:
      return 'G';
    case ValueKind::H:
      return 'H';
  }
  return '?';
}

std::optional<ValueKind> parse_kind(std::string_view s) {
  if (s == "E" || s == "e") return ValueKind::E;
  if (s == "G" || s == "g") return ValueKind::G;
  if (s == "H" || s == "h") return ValueKind::H;
  return std::nullopt;
}

TableDump dump_e(const ETable& table) {
  TableDump t;
  t.kind = ValueKind::E;
  t.sigma = table.sigma().value();
  for (long n = 0; n <= static_cast<long>(table.n_max()); ++n)
    for (long k = 0; k <= static_cast<long>(table.sigma().max_block()) * n; ++k)
      t.entries.push_back({n, k, table(n, k)});
  return t;
}

TableDump dump_values(ValueKind kind, StealLimit sigma, unsigned n_max) {
  if (kind == ValueKind::E) throw std::invalid_argument("dump_values: use dump_e for E tables");
  TableDump t;
  t.kind = kind;
  t.sigma = sigma.value();
  const auto seq = g_sequence(sigma, n_max);
  if (kind == ValueKind::G) {
    for (unsigned n = 0; n <= n_max; ++n) t.entries.push_back({n, std::nullopt, seq[n]});
  } else {
    for (unsigned n = 1; n <= n_max; ++n)
      t.entries.push_back({n, std::nullopt, factorial(n) * seq[n - 1]});
  }
  return t;
}

std::string to_csv(const TableDump& t) {
  std::ostringstream os;
  const bool two_d = t.kind == ValueKind::E;
  os << (two_d ? "n,k,value\n" : "n,value\n");
  for (const auto& e : t.entries) {
    os << e.n << ',';
    if (two_d) os << e.k.value_or(0) << ',';
    os << to_string(e.value) << '\n';
  }
  return os.str();
}

std::string to_json(const TableDump& t) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(1, kind_letter(t.kind));
  j["sigma"] = t.sigma;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : t.entries) {
    nlohmann::ordered_json x;
    x["n"] = e.n;
    if (e.k) x["k"] = *e.k;
    x["value"] = to_string(e.value);
    j["entries"].push_back(std::move(x));
  }
  return j.dump();
}

TableDump parse_csv(std::string_view text, ValueKind kind, unsigned sigma) {
  TableDump t;
  t.kind = kind;
  t.sigma = sigma;
  const bool two_d = kind == ValueKind::E;
  auto ls = lines(text);
  if (ls.empty() || trim(ls[0]) != (two_d ? "n,k,value" : "n,value"))
    throw std::invalid_argument("csv: missing or unexpected header");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto cells = split(trim(ls[i]), ',');
    if (cells.size() != (two_d ? 3u : 2u))
      throw std::invalid_argument("csv: wrong cell count on line " + std::to_string(i + 1));
    TableEntry e;
    e.n = parse_integer(cells[0]).get_si();
    if (two_d) e.k = parse_integer(cells[1]).get_si();
    e.value = parse_integer(cells.back());
    t.entries.push_back(std::move(e));
  }
  return t;
}

TableDump parse_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    TableDump t;
    auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("json: unknown kind");
    t.kind = *kind;
    t.sigma = j.at("sigma").get<unsigned>();
    for (const auto& x : j.at("entries")) {
      TableEntry e;
      e.n = x.at("n").get<long>();
      if (x.contains("k")) e.k = x.at("k").get<long>();
      e.value = parse_integer(x.at("value").get<std::string>());
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("json: ") + ex.what());
  }
}

std::vector<FixtureRecord> parse_fixtures(std::string_view json) {
  std::vector<FixtureRecord> out;
  try {
    auto j = nlohmann::json::parse(json);
    for (const auto& x : j.at("records")) {
      FixtureRecord r;
      auto kind = parse_kind(x.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("fixtures: unknown kind");
      r.kind = *kind;
      r.sigma = x.at("sigma").get<unsigned>();
      r.n = x.at("n").get<long>();
      if (x.contains("k")) r.k = x.at("k").get<long>();
      r.value = x.at("value").get<std::string>();
      if (x.contains("erratum")) r.erratum = x.at("erratum").get<std::string>();
      r.source = x.at("source").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("fixtures: ") + ex.what());
  }
  return out;
}

const std::vector<FixtureRecord>& embedded_fixtures() {
  static const std::vector<FixtureRecord> records = parse_fixtures(detail::kFixtureJson);
  return records;
}

FixtureOutcome check_fixtures(const std::vector<FixtureRecord>& records) {
  FixtureOutcome out;
  std::map<unsigned, long> e_extent, g_extent;
  for (const auto& r : records) {
    if (r.kind == ValueKind::E) e_extent[r.sigma] = std::max(e_extent[r.sigma], r.n);
    if (r.kind != ValueKind::E) g_extent[r.sigma] = std::max(g_extent[r.sigma], r.n);
  }
  std::map<unsigned, ETable> tables;
  auto table_for = [&](unsigned sigma, long n) -> const ETable& {
    auto it = tables.find(sigma);
    const unsigned need = static_cast<unsigned>(
        std::max({n, e_extent[sigma], g_extent[sigma]}));
    if (it == tables.end() || it->second.n_max() < need)
      it = tables.insert_or_assign(sigma, build_e_table(StealLimit(sigma), need)).first;
    return it->second;
  };

  auto where = [](const FixtureRecord& r) {
    std::string s = std::string(1, kind_letter(r.kind)) + "_" + std::to_string(r.sigma) + "(" +
                    std::to_string(r.n);
    if (r.k) s += "," + std::to_string(*r.k);
    return s + ") [" + r.source + "]";
  };

  // Printed values keyed for the cross checks.
  std::map<std::tuple<unsigned, long, long>, Integer> printed_e;
  std::map<std::pair<unsigned, long>, Integer> printed_g;

  for (const auto& r : records) {
    ++out.checked;
    Integer computed;
    if (r.n < 0 || (r.kind == ValueKind::E && (!r.k || *r.k < 0))) {
      out.diffs.push_back(where(r) + ": bad indices");
      continue;
    }
    const auto& tab = table_for(r.sigma, r.n);
    switch (r.kind) {
      case ValueKind::E:
        computed = tab(r.n, *r.k);
        break;
      case ValueKind::G:
        computed = tab.row_sum(static_cast<unsigned>(r.n));
        break;
      case ValueKind::H:
        computed = r.n == 0 ? Integer(0) : factorial(r.n) * tab.row_sum(r.n - 1);
        break;
    }
    const Integer printed = parse_integer(r.value);
    if (r.erratum) {
      const Integer fixed = parse_integer(*r.erratum);
      bool confirmed = computed == fixed && printed != fixed;
      if (r.kind == ValueKind::E) {
        const auto n = static_cast<unsigned>(r.n), k = static_cast<unsigned>(*r.k);
        confirmed = confirmed && e_multinomial(StealLimit(r.sigma), n, k) == fixed;
        if (r.sigma == 1) confirmed = confirmed && e1_closed(n, k) == fixed;
      }
      if (confirmed) {
        ++out.errata_confirmed;
      } else {
        out.diffs.push_back(where(r) + ": erratum " + *r.erratum + " not confirmed, computed " +
                            to_string(computed));
      }
      if (r.kind == ValueKind::E) printed_e[{r.sigma, r.n, *r.k}] = fixed;
      continue;
    }
    if (computed == printed) {
      ++out.matched;
    } else {
      out.diffs.push_back(where(r) + ": expected " + r.value + ", computed " + to_string(computed));
    }
    if (r.kind == ValueKind::E) printed_e[{r.sigma, r.n, *r.k}] = printed;
    if (r.kind == ValueKind::G) printed_g[{r.sigma, r.n}] = printed;
  }

  // Complete printed rows against printed G values.
  for (const auto& [key, g] : printed_g) {
    const auto [sigma, n] = key;
    const long width = static_cast<long>(sigma) + 1;
    Integer sum(0);
    bool complete = true;
    for (long k = 0; k <= width * n && complete; ++k) {
      auto it = printed_e.find({sigma, n, k});
      if (it == printed_e.end()) {
        complete = false;
      } else {
        sum += it->second;
      }
    }
    if (!complete) continue;
    ++out.cross_checks;
    if (sum != g)
      out.diffs.push_back("row sum E_" + std::to_string(sigma) + "(" + std::to_string(n) +
                          ",*) = " + to_string(sum) + " but G = " + to_string(g));
  }
  // Tables for different sigma coincide while every block fits both limits.
  std::vector<unsigned> sigmas;
  for (const auto& [sigma, extent] : e_extent) sigmas.push_back(sigma);
  for (const auto& [key, v] : printed_e) {
    const auto [sigma, n, k] = key;
    if (k - n > static_cast<long>(sigma)) continue;
    for (unsigned other : sigmas) {
      if (other <= sigma) continue;
      auto it = printed_e.find({other, n, k});
      if (it == printed_e.end()) continue;
      ++out.cross_checks;
      if (it->second != v)
        out.diffs.push_back("E_" + std::to_string(sigma) + " and E_" + std::to_string(other) +
                            " differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  return out;
}

std::vector<std::pair<long, Integer>> parse_bfile(std::string_view text) {
  std::vector<std::pair<long, Integer>> out;
  std::size_t lineno = 0;
  for (auto raw : lines(text)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos)
      throw std::invalid_argument("b-file: expected 'index value' on line " + std::to_string(lineno));
    out.emplace_back(parse_integer(trim(line.substr(0, sp))).get_si(),
                     parse_integer(trim(line.substr(sp + 1))));
  }
  return out;
}

}  // namespace giftex
