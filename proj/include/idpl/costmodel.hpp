#pragma once

// Product-line economics: total product-line cost against the cost of
// building the same products one at a time. All arithmetic is in integer
// person-weeks; person-months are a display view at four weeks per month.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idpl::cost {

using PersonWeeks = std::int64_t;

inline constexpr PersonWeeks kWeeksPerMonth = 4;

struct CostInputs {
  PersonWeeks org = 0;      // adopting the product-line approach
  PersonWeeks cab = 0;      // core asset base
  PersonWeeks unique = 0;   // per product
  PersonWeeks reuse = 0;    // per product
  PersonWeeks product = 0;  // per stand-alone product
  std::int64_t n = 0;

  /// Throws idpl::Error(INVALID_ARGUMENT) when any component is negative.
  void check() const;
};

PersonWeeks spl_cost(const CostInputs& in);
PersonWeeks standalone_cost(const CostInputs& in);

double to_months(PersonWeeks pw);
/// Whole person-months, halves rounded away from zero.
std::int64_t rounded_months(PersonWeeks pw);

struct Savings {
  PersonWeeks exact = 0;               // standalone - spl
  std::int64_t paper_style_months = 0;  // rounded(standalone) - rounded(spl)
};

Savings savings(const CostInputs& in);

/// Smallest n with positive exact savings; nullopt when the per-product
/// product-line cost is not below the stand-alone cost.
std::optional<std::int64_t> break_even(const CostInputs& in);

struct CurvePoint {
  std::int64_t n = 0;
  PersonWeeks spl = 0;
  PersonWeeks standalone = 0;
  bool operator==(const CurvePoint&) const = default;
};

/// Points for n = 1..=n_max. Throws idpl::Error(INVALID_ARGUMENT) if n_max < 1.
std::vector<CurvePoint> cost_curve(const CostInputs& in, std::int64_t n_max);

/// `n,spl_pw,standalone_pw` header followed by one row per point.
std::string curve_csv(const std::vector<CurvePoint>& curve);

struct CostReport {
  PersonWeeks spl = 0;
  PersonWeeks standalone = 0;
  Savings savings;
  std::optional<std::int64_t> break_even;
  std::vector<CurvePoint> curve;
};

CostReport report(const CostInputs& in, std::int64_t curve_max = 0);

}  // namespace idpl::cost
