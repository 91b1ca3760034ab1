#include "giftex/recurrence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "giftex/linalg.hpp"

namespace giftex {

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

Recurrence1D seq_rec(std::string name, unsigned sigma, long n_min, std::vector<Term1D> terms,
                     std::vector<Integer> seeds, Polynomial leading = 1) {
  Recurrence1D r;
  r.name = std::move(name);
  r.sigma = StealLimit(sigma);
  r.leading = std::move(leading);
  r.terms = std::move(terms);
  r.n_min = n_min;
  r.seeds = std::move(seeds);
  return r;
}

Recurrence2D table_rec(std::string name, unsigned sigma, std::vector<Term2D> terms) {
  Recurrence2D r;
  r.name = std::move(name);
  r.sigma = StealLimit(sigma);
  r.terms = std::move(terms);
  r.n_min = r.depth();
  return r;
}

std::vector<Integer> seeds_from_tables(unsigned sigma, unsigned count) {
  auto seq = g_sequence(StealLimit(sigma), count - 1);
  return seq.values;
}

std::vector<Term1D> g4e_common() {
  return {
      {1, P("625*n^4 - 1250*n^3 + 625*n^2 - 300*n - 543") / 24},
      {2, P("27500*n^4 - 184000*n^3 + 447500*n^2 - 473075*n + 180003") / 72},
      {3, P("336875*n^4 - 2546500*n^3 + 7679675*n^2 - 12016800*n + 8048577") / 864},
      {4, P("4833125*n^4 - 77581625*n^3 + 476892700*n^2 - 1304291160*n + 1325759504") / 2592},
      {5, P("1700625*n^4 + 28316750*n^3 - 605973450*n^2 + 3123850885*n - 5033477363") / 7776},
      {6, P("2670000*n^4 - 64380500*n^3 + 704577200*n^2 - 3610058445*n + 6818722190") / 7776},
      {7, P("2002500*n^4 - 51976000*n^3 + 517392050*n^2 - 2252744530*n + 3561765885") / 7776},
      {8, P("9078000*n^3 - 209915400*n^2 + 1640828980*n - 4301927039") / 7776},
      {9, P("5393400*n^2 - 91413680*n + 390747263") / 2592},
  };
}

Registry build_registry() {
  Registry reg;
  auto add1 = [&](Recurrence1D r) { reg.sequences.emplace(r.name, std::move(r)); };
  auto add2 = [&](Recurrence2D r) { reg.tables.emplace(r.name, std::move(r)); };

  add1(seq_rec("G1d", 1, 2, {{1, P("2*n - 1")}, {2, 1}}, {1, 2}));

  add2(table_rec("E1d", 1, {{{1, 2}, P("2*n - 1")}, {{2, 2}, 1}}));

  add2(table_rec("E2d", 2,
                 {
                     {{1, 3}, P("9*n^2 - 9*n + 2") / 2},
                     {{1, 1}, ratio(-5, 2)},
                     {{2, 4}, P("9*n^2 - 36*n + 35") / 2},
                     {{2, 3}, P("6*n - 6")},
                     {{2, 2}, ratio(-3, 2)},
                     {{3, 4}, P("6*n - 15")},
                     {{3, 3}, ratio(5, 2)},
                     {{4, 4}, ratio(5, 2)},
                 }));

  // G_2(3) is 842; 18252 is G_3(3).
  add1(seq_rec("G2d", 2, 4,
               {
                   {1, P("9*n^2 - 9*n - 3") / 2},
                   {2, P("9*n^2 - 24*n + 20") / 2},
                   {3, P("6*n - 25/2")},
                   {4, ratio(5, 2)},
               },
               {1, 3, 31, 842}));

  add1(seq_rec("G2e", 2, 3,
               {
                   {1, P("n") * P("9*n^2 - 27*n + 17") / 2},
                   {2, P("6*n^2 - 15*n + 13/2")},
                   {3, P("5*n - 5") / 2},
               },
               {1, 3, 31}, P("n - 2")));

  add1(seq_rec("G3e", 3, 7,
               {
                   {1, P("32/3*n^3 - 16*n^2 + 10/3*n - 49/6")},
                   {2, P("48*n^3 - 236*n^2 + 1157/3*n - 650/3")},
                   {3, P("80*n^3 - 382*n^2 + 641*n - 511") / 3},
                   {4, P("64/3*n^3 - 218*n^2 + 2696/3*n - 7915/6")},
                   {5, P("56*n^2 - 490*n + 6853/6")},
                   {6, P("56*n - 1703/6")},
                   {7, ratio(58, 3)},
               },
               seeds_from_tables(3, 7)));

  // As printed, both of the last two terms sit at offset 11.
  auto g4e = g4e_common();
  g4e.push_back({11, P("1593990*n - 14522219") / 972});
  g4e.push_back({11, ratio(310343, 648)});
  add1(seq_rec("G4e", 4, 11, g4e, seeds_from_tables(4, 11)));

  auto g4c = g4e_common();
  g4c.push_back({10, P("1593990*n - 14522219") / 972});
  g4c.push_back({11, ratio(310343, 648)});
  add1(seq_rec("G4e-corrected", 4, 11, g4c, seeds_from_tables(4, 11)));

  add2(table_rec("E3app", 3,
                 {
                     {{1, 4}, P("32/3*n^3 - 16*n^2 + 22/3*n - 1")},
                     {{1, 2}, -P("4*n + 3/2")},
                     {{1, 1}, ratio(-17, 3)},
                     {{2, 6}, P("16*n^3 - 88*n^2 + 159*n - 189/2")},
                     {{2, 5}, P("32*n^3 - 176*n^2 + 914/3*n - 497/3")},
                     {{2, 4}, P("28*n^2 - 66*n + 46")},
                     {{2, 3}, P("-12*n + 29/2")},
                     {{2, 2}, -17},
                     {{3, 7}, P("-16/3*n^3 + 152/3*n^2 - 479/3*n + 1001/6")},
                     {{3, 6}, P("32*n^3 - 262*n^2 + 2218/3*n - 4255/6")},
                     {{3, 5}, P("84*n^2 - 382*n + 1247/3")},
                     {{3, 4}, P("16*n - 47/3")},
                     {{3, 3}, -28},
                     {{4, 7}, P("64/3*n^3 - 302*n^2 + 4154/3*n - 12427/6")},
                     {{4, 6}, P("84*n^2 - 562*n + 2858/3")},
                     {{4, 5}, P("76*n - 187")},
                     {{4, 4}, ratio(-41, 3)},
                     {{5, 7}, P("56*n^2 - 574*n + 4352/3")},
                     {{5, 6}, P("84*n - 651/2")},
                     {{5, 5}, 17},
                     {{6, 7}, P("56*n - 1877/6")},
                     {{6, 6}, 29},
                     {{7, 7}, ratio(58, 3)},
                 }));
  return reg;
}

template <class Scan>
VerificationReport run_chunks(VerificationReport base, unsigned jobs, Scan scan) {
  const long lo = base.n_lo, hi = base.n_hi;
  if (hi < lo) return base;
  const long count = hi - lo + 1;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<VerificationReport> parts(jobs, base);
  auto work = [&](unsigned idx) {
    const long a = lo + count * idx / jobs;
    const long b = lo + count * (idx + 1) / jobs - 1;
    scan(a, b, parts[idx]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned idx = 0; idx < jobs; ++idx) pool.emplace_back(work, idx);
    for (auto& t : pool) t.join();
  }
  // Chunks before the first failing one were scanned in full, so the count
  // does not depend on jobs.
  VerificationReport out = base;
  for (const auto& p : parts) {
    out.checked += p.checked;
    if (!p.pass) {
      out.pass = false;
      out.first_failure = p.first_failure;
      out.residual = p.residual;
      break;
    }
  }
  return out;
}

void add_term(std::map<std::pair<unsigned, unsigned>, Polynomial>& acc, unsigned r, unsigned s,
              const Polynomial& p) {
  acc[{r, s}] += p;
}

std::map<std::pair<unsigned, unsigned>, Polynomial> canonical(const std::vector<ForwardTerm>& t) {
  std::map<std::pair<unsigned, unsigned>, Polynomial> acc;
  for (const auto& x : t) add_term(acc, x.r, x.s, x.coeff);
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return acc;
}

nlohmann::json poly_json(const Polynomial& p) {
  nlohmann::json nums = nlohmann::json::array();
  for (const auto& v : p.scaled_numerators()) nums.push_back(to_string(v));
  return {{"numerators", nums}, {"denominator", to_string(p.common_denominator())}};
}

}  // namespace

unsigned Recurrence1D::depth() const {
  unsigned d = 0;
  for (const auto& t : terms) d = std::max(d, t.offset);
  return d;
}

Polynomial Recurrence1D::coefficient(unsigned offset) const {
  Polynomial p;
  for (const auto& t : terms)
    if (t.offset == offset) p += t.coeff;
  return p;
}

unsigned Recurrence2D::depth() const {
  unsigned d = 0;
  for (const auto& t : terms) d = std::max({d, t.shift.i, t.shift.j});
  return d;
}

Polynomial Recurrence2D::coefficient(Shift s) const {
  Polynomial p;
  for (const auto& t : terms)
    if (t.shift == s) p += t.coeff;
  return p;
}

std::vector<std::string> Registry::names() const {
  // Registry order as documented, not alphabetical.
  return {"G1d", "E1d", "E2d", "G2d", "G2e", "G3e", "G4e", "G4e-corrected", "E3app"};
}

bool Registry::contains(const std::string& name) const {
  return sequences.count(name) > 0 || tables.count(name) > 0;
}

const Registry& registry() {
  static const Registry reg = build_registry();
  return reg;
}

Recurrence1D sum_over_k(const Recurrence2D& rec, std::string name) {
  std::map<unsigned, Polynomial> by_offset;
  for (const auto& t : rec.terms) by_offset[t.shift.i] += t.coeff;
  Recurrence1D out;
  out.name = std::move(name);
  out.sigma = rec.sigma;
  out.n_min = rec.n_min;
  for (auto& [i, p] : by_offset)
    if (!p.is_zero()) out.terms.push_back({i, p});
  return out;
}

std::vector<Integer> generate(const Recurrence1D& rec, unsigned n_max) {
  std::vector<Integer> v(rec.seeds.begin(), rec.seeds.end());
  if (v.size() < static_cast<std::size_t>(std::max(rec.n_min, 0L)))
    throw std::invalid_argument(rec.name + ": seeds do not cover n < n_min");
  for (long n = static_cast<long>(v.size()); n <= static_cast<long>(n_max); ++n) {
    Rational acc(0);
    for (const auto& t : rec.terms) {
      const long idx = n - static_cast<long>(t.offset);
      if (idx >= 0) acc += t.coeff(n) * Rational(v[idx]);
    }
    const Rational lead = rec.leading(n);
    if (lead == 0) throw std::domain_error(rec.name + ": leading coefficient vanishes");
    acc /= lead;
    if (acc.get_den() != 1) throw std::domain_error(rec.name + ": non-integral value");
    v.push_back(acc.get_num());
  }
  v.resize(std::min<std::size_t>(v.size(), n_max + 1));
  return v;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << name << " n=" << n_lo << ".." << n_hi << ' ' << (pass ? "pass" : "FAIL");
  if (!pass) {
    os << " at " << (first_failure.size() == 1 ? "n=" : "(n,k)=");
    if (first_failure.size() == 1) {
      os << first_failure[0];
    } else {
      os << '(' << first_failure[0] << ',' << first_failure[1] << ')';
    }
    os << " residual " << giftex::to_string(residual);
  }
  os << " checked " << checked;
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["range"] = {n_lo, n_hi};
  j["pass"] = pass;
  j["first_failure"] = pass ? nlohmann::json(nullptr) : nlohmann::json(first_failure);
  j["residual"] = giftex::to_string(residual);
  return j.dump();
}

VerificationReport verify_1d(const Recurrence1D& rec, const GSequence& seq, long n_lo, long n_hi,
                             unsigned jobs) {
  if (n_hi >= static_cast<long>(seq.size()))
    throw std::invalid_argument(rec.name + ": insufficient data for n=" + std::to_string(n_hi));
  VerificationReport base;
  base.name = rec.name;
  base.n_lo = n_lo;
  base.n_hi = n_hi;
  auto value = [&](long i) { return i < 0 ? Rational(0) : Rational(seq.values[i]); };
  return run_chunks(base, jobs, [&](long a, long b, VerificationReport& part) {
    for (long n = a; n <= b; ++n) {
      Rational r = rec.leading(n) * value(n);
      for (const auto& t : rec.terms) r -= t.coeff(n) * value(n - static_cast<long>(t.offset));
      ++part.checked;
      if (r != 0 && part.pass) {
        part.pass = false;
        part.first_failure = {n};
        part.residual = r;
        return;
      }
    }
  });
}

VerificationReport verify_2d(const Recurrence2D& rec, const ETable& table, long n_lo, long n_hi,
                             unsigned jobs) {
  if (n_hi > static_cast<long>(table.n_max()))
    throw std::invalid_argument(rec.name + ": insufficient table for n=" + std::to_string(n_hi));
  VerificationReport base;
  base.name = rec.name;
  base.n_lo = n_lo;
  base.n_hi = n_hi;
  const long width = rec.sigma.max_block();
  long max_j = 0;
  for (const auto& t : rec.terms) max_j = std::max<long>(max_j, t.shift.j);
  return run_chunks(base, jobs, [&](long a, long b, VerificationReport& part) {
    std::vector<Rational> c(rec.terms.size());
    for (long n = a; n <= b; ++n) {
      for (std::size_t x = 0; x < rec.terms.size(); ++x) c[x] = rec.terms[x].coeff(n);
      for (long k = 0; k <= width * std::max(n, 0L) + max_j; ++k) {
        Rational r(table(n, k));
        for (std::size_t x = 0; x < rec.terms.size(); ++x) {
          const auto& s = rec.terms[x].shift;
          const Integer& e = table(n - static_cast<long>(s.i), k - static_cast<long>(s.j));
          if (e != 0) r -= c[x] * Rational(e);
        }
        ++part.checked;
        if (r != 0) {
          part.pass = false;
          part.first_failure = {n, k};
          part.residual = r;
          return;
        }
      }
    }
  });
}

VerificationReport verify_named(const std::string& name, long n_max, unsigned jobs) {
  const auto& reg = registry();
  if (auto it = reg.sequences.find(name); it != reg.sequences.end()) {
    const auto& rec = it->second;
    auto seq = g_sequence(rec.sigma, static_cast<unsigned>(std::max(n_max, 0L)));
    return verify_1d(rec, seq, rec.n_min, n_max, jobs);
  }
  if (auto it = reg.tables.find(name); it != reg.tables.end()) {
    const auto& rec = it->second;
    auto table = build_e_table(rec.sigma, static_cast<unsigned>(std::max(n_max, 0L)));
    return verify_2d(rec, table, rec.n_min, n_max, jobs);
  }
  throw std::out_of_range("unknown recurrence: " + name);
}

Rational d2_summand(long n, long k, long c) {
  const long a = 2 * n - k + c, b = k - n - 2 * c;
  if (a < 0 || b < 0 || c < 0 || k < 0) return Rational(0);
  Integer den = factorial(a) * factorial(b) * factorial(c) * pow_int(2, b + c) * pow_int(3, c);
  return ratio(factorial(k), den);
}

Polynomial CelineCertificate::at(unsigned r, unsigned s, unsigned t) const {
  auto it = entries.find({r, s, t});
  return it == entries.end() ? Polynomial() : it->second;
}

std::size_t CelineCertificate::nonzero_count() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const auto& kv) { return !kv.second.is_zero(); });
}

std::vector<CelineIndex> CelineCertificate::support() const {
  std::vector<CelineIndex> s;
  for (const auto& [idx, p] : entries)
    if (!p.is_zero()) s.push_back(idx);
  return s;
}

CelineCertificate celine_certificate_constants() {
  CelineCertificate c;
  c.entries = {
      {{0, 0, 1}, -8},           {{0, 0, 2}, 7},  {{0, 0, 3}, ratio(-3, 2)},
      {{1, 0, 1}, -18},          {{1, 0, 2}, 15}, {{1, 0, 3}, -3},
      {{1, 1, 1}, -4},           {{1, 1, 2}, ratio(3, 2)},
      {{2, 0, 0}, -9},           {{2, 0, 1}, 9},
      {{2, 1, 1}, -9},           {{2, 1, 2}, 3},
      {{2, 2, 1}, 6},            {{2, 2, 2}, -6}, {{2, 2, 3}, ratio(3, 2)},
      {{3, 1, 0}, -9},
      {{3, 3, 1}, 5},            {{3, 3, 2}, ratio(-5, 2)},
      {{4, 4, 1}, 1},
  };
  return c;
}

CelineCertificate celine_certificate() {
  CelineCertificate c;
  c.entries = {
      {{0, 0, 1}, -8},
      {{0, 0, 2}, 7},
      {{0, 0, 3}, ratio(-3, 2)},
      {{1, 0, 1}, P("-18*n - 27")},
      {{1, 0, 2}, P("15*n + 45/2")},
      {{1, 0, 3}, P("-3*n - 9/2")},
      {{1, 1, 1}, -4},
      {{1, 1, 2}, ratio(3, 2)},
      {{2, 0, 0}, P("-9*n^2 - 36*n - 35")},
      {{2, 0, 1}, P("9/2*n^2 + 18*n + 35/2")},
      {{2, 1, 1}, P("-9*n - 27")},
      {{2, 1, 2}, P("3*n + 9")},
      {{2, 2, 1}, 6},
      {{2, 2, 2}, -6},
      {{2, 2, 3}, ratio(3, 2)},
      {{3, 1, 0}, P("-9/2*n^2 - 63/2*n - 55")},
      {{3, 3, 1}, 5},
      {{3, 3, 2}, ratio(-5, 2)},
      {{4, 4, 1}, 1},
  };
  return c;
}

std::vector<CelinePoint> celine_interior_grid(const std::vector<CelineIndex>& support, long n_lo,
                                              long n_hi) {
  std::vector<CelinePoint> pts;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long k = n + 2; k <= 3 * n - 2; ++k) {
      for (long c = 0; 2 * c <= k - n; ++c) {
        bool inside = true;
        for (const auto& e : support) {
          const long nn = n + e.r, kk = k + e.s, cc = c + e.t;
          if (2 * nn - kk + cc < 0 || kk - nn - 2 * cc < 0) {
            inside = false;
            break;
          }
        }
        if (inside) pts.push_back({n, k, c});
      }
    }
  }
  return pts;
}

VerificationReport celine_annihilation_check(const CelineCertificate& cert,
                                             const std::vector<CelinePoint>& grid) {
  if (grid.empty()) throw std::invalid_argument("celine check: empty grid");
  VerificationReport rep;
  rep.name = "celine-annihilation";
  rep.n_lo = grid.front().n;
  rep.n_hi = grid.back().n;
  for (const auto& p : grid) {
    Rational sum(0);
    for (const auto& [e, poly] : cert.entries)
      sum += poly(p.n) * d2_summand(p.n + e.r, p.k + e.s, p.c + e.t);
    ++rep.checked;
    if (sum != 0) {
      rep.pass = false;
      rep.first_failure = {p.n, p.k, p.c};
      rep.residual = sum;
      break;
    }
  }
  return rep;
}

std::optional<CelineCertificate> solve_celine(const std::vector<CelineIndex>& support,
                                              unsigned degree, long n_lo, long n_hi) {
  const auto grid = celine_interior_grid(support, n_lo, n_hi);
  const std::size_t cols = support.size() * (degree + 1);
  RationalMatrix m(grid.size(), cols);
  for (std::size_t row = 0; row < grid.size(); ++row) {
    const auto& p = grid[row];
    for (std::size_t e = 0; e < support.size(); ++e) {
      const Rational d = d2_summand(p.n + support[e].r, p.k + support[e].s, p.c + support[e].t);
      Rational np(1);
      for (unsigned q = 0; q <= degree; ++q) {
        m(row, e * (degree + 1) + q) = d * np;
        np *= p.n;
      }
    }
  }
  auto basis = nullspace(m);
  if (basis.size() != 1) return std::nullopt;
  const auto& v = basis[0];
  CelineCertificate cert;
  for (std::size_t e = 0; e < support.size(); ++e) {
    std::vector<Rational> c(v.begin() + e * (degree + 1), v.begin() + (e + 1) * (degree + 1));
    cert.entries[support[e]] = Polynomial(std::move(c));
  }
  const Polynomial& last = cert.entries[support.back()];
  if (last.is_zero()) return std::nullopt;
  const Rational scale = last.coeff(last.degree());
  for (auto& [idx, p] : cert.entries) p = p / scale;
  return cert;
}

std::vector<ForwardTerm> celine_collapse(const CelineCertificate& cert) {
  std::map<std::pair<unsigned, unsigned>, Polynomial> acc;
  for (const auto& [e, p] : cert.entries) add_term(acc, e.r, e.s, p);
  std::vector<ForwardTerm> out;
  for (auto& [rs, p] : acc)
    if (!p.is_zero()) out.push_back({rs.first, rs.second, p});
  return out;
}

std::vector<ForwardTerm> e2d_shifted() {
  const auto& e2d = registry().tables.at("E2d");
  std::vector<ForwardTerm> out{{4, 4, 1}};
  for (const auto& t : e2d.terms) out.push_back({4 - t.shift.i, 4 - t.shift.j, -t.coeff.shifted(4)});
  return out;
}

std::vector<ForwardTerm> e2d_shifted_quoted() {
  return {
      {4, 4, 1},
      {3, 1, -P("9*n^2 + 63*n + 110") / 2},
      {3, 3, ratio(5, 2)},
      {2, 0, -P("9*n^2 + 36*n + 35") / 2},
      {2, 1, P("6*n + 18")},
      {2, 2, ratio(3, 2)},
      {1, 0, -P("6*n + 9")},
      {1, 1, ratio(-5, 2)},
      {0, 0, ratio(-5, 2)},
  };
}

VerificationReport check_forward_identity(const std::string& name,
                                          const std::vector<ForwardTerm>& terms,
                                          const ETable& table, long n_lo, long n_hi) {
  unsigned max_r = 0, max_s = 0;
  for (const auto& t : terms) {
    max_r = std::max(max_r, t.r);
    max_s = std::max(max_s, t.s);
  }
  if (n_hi + static_cast<long>(max_r) > static_cast<long>(table.n_max()))
    throw std::invalid_argument(name + ": insufficient table");
  VerificationReport rep;
  rep.name = name;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  const long width = table.sigma().max_block();
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long k = -static_cast<long>(max_s); k <= width * (n + max_r); ++k) {
      Rational sum(0);
      for (const auto& t : terms) {
        const Integer& e = table(n + t.r, k + t.s);
        if (e != 0) sum += t.coeff(n) * Rational(e);
      }
      ++rep.checked;
      if (sum != 0) {
        rep.pass = false;
        rep.first_failure = {n, k};
        rep.residual = sum;
        return rep;
      }
    }
  }
  return rep;
}

bool same_identity(const std::vector<ForwardTerm>& a, const std::vector<ForwardTerm>& b) {
  return canonical(a) == canonical(b);
}

CelineReport celine_check(const CelineCertificate& cert, long n_lo, long n_hi,
                          long collapse_n_max) {
  CelineReport out;
  out.annihilation =
      celine_annihilation_check(cert, celine_interior_grid(cert.support(), n_lo, n_hi));
  const auto collapsed = celine_collapse(cert);
  const auto table = build_e_table(StealLimit(2), static_cast<unsigned>(collapse_n_max + 4));
  out.collapse = check_forward_identity("celine-collapse", collapsed, table, 0, collapse_n_max);
  out.collapse_matches_e2d = same_identity(collapsed, e2d_shifted());
  return out;
}

unsigned conjectured_depth(StealLimit sigma) {
  const unsigned s = sigma.value();
  return s * (s + 1) / 2 + 1;
}

bool allowed_shift(StealLimit sigma, Shift sh) {
  const long s = sigma.value(), i = sh.i, j = sh.j;
  const long delta = conjectured_depth(sigma);
  if (j > delta || j < i) return false;
  // j > delta - ((s+1-i)^2 - s - i - 1)/2, doubled to stay in integers.
  if (i < s && 2 * j > 2 * delta - ((s + 1 - i) * (s + 1 - i) - s - i - 1)) return false;
  return true;
}

StructureReport structure_check(const Recurrence2D& rec, StealLimit sigma) {
  StructureReport rep;
  rep.expected_depth = conjectured_depth(sigma);
  rep.depth = rec.depth();
  rep.depth_ok = rep.depth == rep.expected_depth;
  rep.zero_pattern_ok = true;
  rep.degree_ok = true;
  rep.note = "depth read as C(sigma+1,2)+1";
  if (!rep.depth_ok)
    rep.violations.push_back("depth " + std::to_string(rep.depth) + " != " +
                             std::to_string(rep.expected_depth));
  for (const auto& t : rec.terms) {
    if (t.coeff.is_zero()) continue;
    const auto tag = "(" + std::to_string(t.shift.i) + "," + std::to_string(t.shift.j) + ")";
    if (!allowed_shift(sigma, t.shift)) {
      rep.zero_pattern_ok = false;
      rep.violations.push_back("nonzero coefficient at forbidden shift " + tag);
    }
    const long bound = std::min<long>(sigma.value(), static_cast<long>(t.shift.j) - t.shift.i);
    if (t.coeff.degree() > bound) {
      rep.degree_ok = false;
      rep.violations.push_back("degree " + std::to_string(t.coeff.degree()) + " > " +
                               std::to_string(bound) + " at " + tag);
    }
  }
  return rep;
}

std::string to_json(const Recurrence1D& rec) {
  nlohmann::json j;
  j["name"] = rec.name;
  j["kind"] = "G";
  j["sigma"] = rec.sigma.value();
  j["depth"] = rec.depth();
  j["n_min"] = rec.n_min;
  if (!rec.monic()) j["leading"] = poly_json(rec.leading);
  j["shifts"] = nlohmann::json::array();
  j["coeffs"] = nlohmann::json::array();
  for (const auto& t : rec.terms) {
    j["shifts"].push_back(t.offset);
    j["coeffs"].push_back(poly_json(t.coeff));
  }
  return j.dump();
}

std::string to_json(const Recurrence2D& rec) {
  nlohmann::json j;
  j["name"] = rec.name;
  j["kind"] = "E";
  j["sigma"] = rec.sigma.value();
  j["depth"] = rec.depth();
  j["n_min"] = rec.n_min;
  j["shifts"] = nlohmann::json::array();
  j["coeffs"] = nlohmann::json::array();
  for (const auto& t : rec.terms) {
    j["shifts"].push_back({t.shift.i, t.shift.j});
    j["coeffs"].push_back(poly_json(t.coeff));
  }
  return j.dump();
}

}  // namespace giftex
