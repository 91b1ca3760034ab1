#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "giftex/recurrence.hpp"

namespace giftex {

enum class FitTarget { G, E };

/// What to fit. Ranges left at -1 are chosen automatically: training starts
/// at n = depth and grows until the system is overdetermined, and the holdout
/// block that follows is twice as long.
struct FitSpec {
  FitTarget target = FitTarget::G;
  StealLimit sigma{0};
  unsigned depth = 1;
  unsigned degree = 0;
  long train_lo = -1;
  long train_hi = -1;
  long holdout_hi = -1;
  /// Drop shifts and degrees ruled out by the zero-pattern conjecture (2D).
  bool prune = false;
  /// Fit c_0(n) T(n) = ... with an unknown c_0 of degree <= degree (1D).
  bool generalized = false;
};

enum class FitStatus { Found, None, NonUnique };

std::string to_string(FitStatus s);

struct FitInfo {
  FitStatus status = FitStatus::None;
  std::size_t basis_dimension = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  long train_lo = 0, train_hi = 0, holdout_lo = 0, holdout_hi = 0;
  std::string detail;
};

struct Fit1D {
  FitInfo info;
  std::optional<Recurrence1D> rec;
};

struct Fit2D {
  FitInfo info;
  std::optional<Recurrence2D> rec;
};

/// Throws invalid_argument when the training range cannot overdetermine the
/// unknowns.
Fit1D fit_1d(const FitSpec& spec);
Fit2D fit_2d(const FitSpec& spec);

/// The lower staircase {(i,j) : 0 <= i <= depth, i <= j <= depth} without
/// (0,0), optionally restricted to shifts allowed for sigma.
std::vector<Shift> staircase(unsigned depth, std::optional<StealLimit> prune_for = std::nullopt);

struct MinimalDepth {
  std::optional<unsigned> depth;  // nullopt: unresolved within the budget
  std::vector<FitInfo> attempts;
};

using DegreeRule = std::function<unsigned(unsigned depth)>;

/// Smallest depth in 1..max_depth with a validated fit, using
/// degree_rule(depth) as the coefficient degree (sigma when empty).
MinimalDepth minimal_depth(FitTarget target, StealLimit sigma, unsigned max_depth,
                           DegreeRule degree_rule = {});

/// Same polynomial coefficient on every offset or shift.
bool same_recurrence(const Recurrence1D& a, const Recurrence1D& b);
bool same_recurrence(const Recurrence2D& a, const Recurrence2D& b);

/// {"status", "basis_dimension", "train", "holdout", "recurrence"?}
std::string to_json(const FitInfo& info, const std::string& recurrence_json);

}  // namespace giftex
