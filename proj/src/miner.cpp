#include "giftex/miner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "giftex/linalg.hpp"

namespace giftex {

namespace {

constexpr std::size_t kMargin = 8;
constexpr int kWidenAttempts = 3;

std::string target_name(FitTarget t, StealLimit sigma) {
  return std::string(t == FitTarget::G ? "G" : "E") + std::to_string(sigma.value()) + "-mined";
}

void check_spec(const FitSpec& spec) {
  if (spec.depth == 0) throw std::invalid_argument("depth must be positive");
  if (spec.train_hi >= 0 && spec.train_lo >= 0 && spec.train_hi < spec.train_lo)
    throw std::invalid_argument("empty training range");
}

// powers[p] = n^p as an integer.
std::vector<Integer> powers(long n, unsigned degree) {
  std::vector<Integer> v(degree + 1);
  v[0] = 1;
  for (unsigned p = 1; p <= degree; ++p) v[p] = v[p - 1] * n;
  return v;
}

Polynomial slice(const RationalVector& v, std::size_t at, unsigned count) {
  return Polynomial(std::vector<Rational>(v.begin() + at, v.begin() + at + count));
}

FitInfo classify(std::vector<RationalVector>& basis, FitInfo info) {
  info.basis_dimension = basis.size();
  if (basis.empty()) {
    info.status = FitStatus::None;
    info.detail = "no recurrence on the training range";
  } else if (basis.size() > 1) {
    info.status = FitStatus::NonUnique;
    info.detail = "solution space of dimension " + std::to_string(basis.size());
  } else {
    info.status = FitStatus::Found;
  }
  return info;
}

}  // namespace

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::Found:
      return "found";
    case FitStatus::None:
      return "none";
    case FitStatus::NonUnique:
      return "non-unique";
  }
  return "?";
}

static Fit1D fit_1d_once(const FitSpec& spec) {
  const unsigned d = spec.degree, width = d + 1;
  const std::size_t lead_cols = spec.generalized ? width : 1;
  const std::size_t cols = lead_cols + static_cast<std::size_t>(spec.depth) * width;

  FitInfo info;
  info.unknowns = cols - 1;
  info.train_lo = spec.train_lo >= 0 ? spec.train_lo : spec.depth;
  info.train_hi = spec.train_hi >= 0 ? spec.train_hi
                                     : info.train_lo + static_cast<long>(cols + kMargin) - 1;
  const long train_count = info.train_hi - info.train_lo + 1;
  if (train_count < static_cast<long>(cols - 1))
    throw std::invalid_argument("underdetermined: " + std::to_string(train_count) +
                                " equations for " + std::to_string(cols - 1) + " unknowns");
  info.holdout_lo = info.train_hi + 1;
  info.holdout_hi = spec.holdout_hi >= 0 ? spec.holdout_hi : info.train_hi + 2 * train_count;
  info.equations = static_cast<std::size_t>(train_count);

  const auto seq = g_sequence(spec.sigma, static_cast<unsigned>(info.holdout_hi));
  auto value = [&](long i) { return i < 0 ? Integer(0) : seq.values[i]; };

  std::vector<IntegerRow> rows;
  for (long n = info.train_lo; n <= info.train_hi; ++n) {
    const auto np = powers(n, d);
    IntegerRow row(cols);
    if (spec.generalized) {
      for (unsigned p = 0; p <= d; ++p) row[p] = np[p] * value(n);
    } else {
      row[0] = value(n);
    }
    for (unsigned i = 1; i <= spec.depth; ++i)
      for (unsigned p = 0; p <= d; ++p)
        row[lead_cols + (i - 1) * width + p] = -np[p] * value(n - static_cast<long>(i));
    rows.push_back(std::move(row));
  }
  auto basis = nullspace(std::move(rows), cols);
  Fit1D out;
  out.info = classify(basis, info);
  if (out.info.status != FitStatus::Found) return out;

  RationalVector v = basis[0];
  Polynomial lead = slice(v, 0, static_cast<unsigned>(lead_cols));
  if (lead.is_zero()) {
    out.info.status = FitStatus::None;
    out.info.detail = "only solutions with vanishing leading coefficient";
    return out;
  }
  const Rational scale = lead.coeff(lead.degree());
  for (auto& x : v) x /= scale;

  Recurrence1D rec;
  rec.name = target_name(FitTarget::G, spec.sigma);
  rec.sigma = spec.sigma;
  rec.leading = slice(v, 0, static_cast<unsigned>(lead_cols));
  for (unsigned i = 1; i <= spec.depth; ++i) {
    Polynomial c = slice(v, lead_cols + (i - 1) * width, width);
    if (!c.is_zero()) rec.terms.push_back({i, std::move(c)});
  }
  rec.n_min = info.train_lo;
  rec.seeds.assign(seq.values.begin(), seq.values.begin() + info.train_lo);

  const auto holdout = verify_1d(rec, seq, info.holdout_lo, info.holdout_hi);
  if (!holdout.pass) {
    out.info.status = FitStatus::None;
    out.info.detail = "holdout failure: " + holdout.to_text();
    return out;
  }
  out.rec = std::move(rec);
  return out;
}

std::vector<Shift> staircase(unsigned depth, std::optional<StealLimit> prune_for) {
  std::vector<Shift> out;
  for (unsigned i = 0; i <= depth; ++i)
    for (unsigned j = i; j <= depth; ++j) {
      if (i == 0 && j == 0) continue;
      if (prune_for && !allowed_shift(*prune_for, {i, j})) continue;
      out.push_back({i, j});
    }
  return out;
}

static Fit2D fit_2d_once(const FitSpec& spec) {
  const auto shifts = staircase(spec.depth, spec.prune ? std::optional(spec.sigma) : std::nullopt);
  std::vector<unsigned> deg(shifts.size(), spec.degree);
  if (spec.prune)
    for (std::size_t x = 0; x < shifts.size(); ++x)
      deg[x] = std::min<unsigned>({spec.degree, spec.sigma.value(), shifts[x].j - shifts[x].i});
  std::vector<std::size_t> offset(shifts.size());
  std::size_t cols = 1;
  for (std::size_t x = 0; x < shifts.size(); ++x) {
    offset[x] = cols;
    cols += deg[x] + 1;
  }

  FitInfo info;
  info.unknowns = cols - 1;
  info.train_lo = spec.train_lo >= 0 ? spec.train_lo : spec.depth;
  const long width = spec.sigma.max_block();
  const long depth = spec.depth;
  auto rows_for = [&](long n) { return width * n + 1; };

  if (spec.train_hi >= 0) {
    info.train_hi = spec.train_hi;
  } else {
    long total = 0, n = info.train_lo;
    while (total < static_cast<long>(info.unknowns + kMargin) || n < info.train_lo + 2)
      total += rows_for(n++);
    info.train_hi = n - 1;
  }
  const long train_count = info.train_hi - info.train_lo + 1;
  info.holdout_lo = info.train_hi + 1;
  info.holdout_hi = spec.holdout_hi >= 0 ? spec.holdout_hi : info.train_hi + 2 * train_count;

  const auto table = build_e_table(spec.sigma, static_cast<unsigned>(info.holdout_hi));
  std::vector<IntegerRow> rows;
  for (long n = info.train_lo; n <= info.train_hi; ++n) {
    const auto np = powers(n, spec.degree);
    // Rows with k < depth would read E at negative k through the zero
    // extension; they are left to the verification pass.
    for (long k = depth; k <= width * n + depth; ++k) {
      IntegerRow row(cols);
      bool nonzero = table(n, k) != 0;
      row[0] = table(n, k);
      for (std::size_t x = 0; x < shifts.size(); ++x) {
        const Integer& e = table(n - static_cast<long>(shifts[x].i), k - static_cast<long>(shifts[x].j));
        if (e == 0) continue;
        nonzero = true;
        for (unsigned p = 0; p <= deg[x]; ++p) row[offset[x] + p] = -np[p] * e;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  info.equations = rows.size();
  if (rows.size() < info.unknowns)
    throw std::invalid_argument("underdetermined: " + std::to_string(rows.size()) +
                                " equations for " + std::to_string(info.unknowns) + " unknowns");
  auto basis = nullspace(std::move(rows), cols);
  Fit2D out;
  out.info = classify(basis, info);
  if (out.info.status != FitStatus::Found) return out;

  RationalVector v = basis[0];
  if (v[0] == 0) {
    out.info.status = FitStatus::None;
    out.info.detail = "only solutions with vanishing leading coefficient";
    return out;
  }
  const Rational scale = v[0];
  for (auto& x : v) x /= scale;

  Recurrence2D rec;
  rec.name = target_name(FitTarget::E, spec.sigma);
  rec.sigma = spec.sigma;
  rec.n_min = info.train_lo;
  for (std::size_t x = 0; x < shifts.size(); ++x) {
    Polynomial c = slice(v, offset[x], deg[x] + 1);
    if (!c.is_zero()) rec.terms.push_back({shifts[x], std::move(c)});
  }
  const auto check = verify_2d(rec, table, info.train_lo, info.holdout_hi);
  if (!check.pass) {
    out.info.status = FitStatus::None;
    out.info.detail = "holdout failure: " + check.to_text();
    return out;
  }
  out.rec = std::move(rec);
  return out;
}

namespace {

// With an automatic training range, a rank-deficient block shows up as a
// spurious multi-dimensional solution space; widen it a few times before
// reporting non-uniqueness.
template <class Fit, class Once>
Fit fit_growing(const FitSpec& spec, Once once) {
  check_spec(spec);
  Fit out = once(spec);
  if (spec.train_hi >= 0) return out;
  FitSpec wider = spec;
  for (int attempt = 0; attempt < kWidenAttempts && out.info.status == FitStatus::NonUnique;
       ++attempt) {
    wider.train_lo = out.info.train_lo;
    wider.train_hi = out.info.train_hi + (out.info.train_hi - out.info.train_lo + 1);
    if (spec.holdout_hi < 0) wider.holdout_hi = -1;
    out = once(wider);
  }
  return out;
}

}  // namespace

Fit1D fit_1d(const FitSpec& spec) { return fit_growing<Fit1D>(spec, fit_1d_once); }

Fit2D fit_2d(const FitSpec& spec) { return fit_growing<Fit2D>(spec, fit_2d_once); }

MinimalDepth minimal_depth(FitTarget target, StealLimit sigma, unsigned max_depth,
                           DegreeRule degree_rule) {
  MinimalDepth out;
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    FitSpec spec;
    spec.target = target;
    spec.sigma = sigma;
    spec.depth = depth;
    spec.degree = degree_rule ? degree_rule(depth) : sigma.value();
    FitInfo info = target == FitTarget::G ? fit_1d(spec).info : fit_2d(spec).info;
    const bool found = info.status == FitStatus::Found;
    out.attempts.push_back(std::move(info));
    if (found) {
      out.depth = depth;
      break;
    }
  }
  return out;
}

bool same_recurrence(const Recurrence1D& a, const Recurrence1D& b) {
  if (!(a.leading == b.leading)) return false;
  const unsigned d = std::max(a.depth(), b.depth());
  for (unsigned i = 1; i <= d; ++i)
    if (!(a.coefficient(i) == b.coefficient(i))) return false;
  return true;
}

bool same_recurrence(const Recurrence2D& a, const Recurrence2D& b) {
  std::map<Shift, Polynomial> x, y;
  for (const auto& t : a.terms) x[t.shift] += t.coeff;
  for (const auto& t : b.terms) y[t.shift] += t.coeff;
  std::erase_if(x, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(y, [](const auto& kv) { return kv.second.is_zero(); });
  return x == y;
}

std::string to_json(const FitInfo& info, const std::string& recurrence_json) {
  nlohmann::json j;
  j["status"] = to_string(info.status);
  j["basis_dimension"] = info.basis_dimension;
  j["unknowns"] = info.unknowns;
  j["equations"] = info.equations;
  j["train"] = {info.train_lo, info.train_hi};
  j["holdout"] = {info.holdout_lo, info.holdout_hi};
  if (!info.detail.empty()) j["detail"] = info.detail;
  j["recurrence"] = recurrence_json.empty() ? nlohmann::json(nullptr)
                                            : nlohmann::json::parse(recurrence_json);
  return j.dump();
}

}  // namespace giftex
