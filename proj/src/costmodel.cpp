#include "idpl/costmodel.hpp"

#include <sstream>

#include "idpl/diagnostic.hpp"

namespace idpl::cost {

void CostInputs::check() const {
  if (org < 0 || cab < 0 || unique < 0 || reuse < 0 || product < 0 || n < 0) {
    throw Error("INVALID_ARGUMENT", "cost components and product count must be non-negative");
  }
}

PersonWeeks spl_cost(const CostInputs& in) { return in.org + in.cab + in.n * (in.unique + in.reuse); }

PersonWeeks standalone_cost(const CostInputs& in) { return in.n * in.product; }

double to_months(PersonWeeks pw) { return static_cast<double>(pw) / static_cast<double>(kWeeksPerMonth); }

std::int64_t rounded_months(PersonWeeks pw) {
  // floor((pw + 2) / 4), i.e. halves round towards +infinity
  const PersonWeeks shifted = pw + kWeeksPerMonth / 2;
  if (shifted >= 0) return shifted / kWeeksPerMonth;
  return -((-shifted + kWeeksPerMonth - 1) / kWeeksPerMonth);
}

Savings savings(const CostInputs& in) {
  const auto spl = spl_cost(in);
  const auto alone = standalone_cost(in);
  return Savings{alone - spl, rounded_months(alone) - rounded_months(spl)};
}

std::optional<std::int64_t> break_even(const CostInputs& in) {
  const PersonWeeks margin = in.product - (in.unique + in.reuse);
  if (margin <= 0) return std::nullopt;
  // savings(n) = n * margin - (org + cab) > 0
  return (in.org + in.cab) / margin + 1;
}

std::vector<CurvePoint> cost_curve(const CostInputs& in, std::int64_t n_max) {
  if (n_max < 1) throw Error("INVALID_ARGUMENT", "curve needs n_max >= 1");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    CostInputs at = in;
    at.n = n;
    out.push_back(CurvePoint{n, spl_cost(at), standalone_cost(at)});
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& curve) {
  std::ostringstream os;
  os << "n,spl_pw,standalone_pw\n";
  for (const auto& p : curve) os << p.n << ',' << p.spl << ',' << p.standalone << '\n';
  return os.str();
}

CostReport report(const CostInputs& in, std::int64_t curve_max) {
  in.check();
  CostReport r;
  r.spl = spl_cost(in);
  r.standalone = standalone_cost(in);
  r.savings = savings(in);
  r.break_even = break_even(in);
  if (curve_max > 0) r.curve = cost_curve(in, curve_max);
  return r;
}

}  // namespace idpl::cost
