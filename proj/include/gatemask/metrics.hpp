/*!
  \file metrics.hpp
  \brief Closed-form masking metrics per gate family and their cross-check

  GEMNIF divides the number of output errors by the number of individual
  input faults; GEMFIC divides it by the number of faulty input patterns.
  Both assume every applied pattern and every faulty pattern is equally
  likely.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gatemask/exact_ratio.hpp>
#include <gatemask/expr.hpp>
#include <gatemask/gate_family.hpp>

namespace gatemask
{

enum class metric_kind
{
  gemnif,
  gemfic
};

inline constexpr std::array<metric_kind, 2> all_metrics = { metric_kind::gemnif, metric_kind::gemfic };

/* "GEMNIF" / "GEMFIC" */
std::string_view metric_name( metric_kind metric ) noexcept;

/* case-insensitive */
std::optional<metric_kind> parse_metric( std::string_view name );

/*! \brief GEMNIF from the family formula.

  NOT gives 1.  Equivalent gates give 2^(2n-1) / (2^n * sum_k k C(n,k)),
  which is 1/n.  Singleton gates have 2 (2^n - 1) erroneous pairs over
  n 2^(2n-1) faults.
*/
exact_ratio gemnif_closed( const gate_family& family );

/*! \brief GEMFIC from the family formula: 1 for NOT, 2^(1-n) for
  singleton gates, 2^(n-1) / (2^n - 1) for equivalent gates.
*/
exact_ratio gemfic_closed( const gate_family& family );

exact_ratio closed_form( const gate_family& family, metric_kind metric );

/* Source of closed-form values; replaceable so callers can inject faulty formulas in tests. */
using closed_form_fn = std::function<exact_ratio( const gate_family&, metric_kind )>;

struct metric_report
{
  std::string descriptor;
  metric_kind metric;
  /* absent for expressions, which have no family formula */
  std::optional<exact_ratio> closed_form;
  exact_ratio oracle;
  /* closed_form == oracle, or true when there is no closed form */
  bool agree = true;
  std::string decimal;
};

metric_report report( const gate_family& family, metric_kind metric, unsigned precision = 4,
                      const closed_form_fn& formulas = closed_form );

metric_report report( const bool_expr& e, metric_kind metric, unsigned precision = 4 );

/* Several metrics from a single enumeration of the fault pairs. */
std::vector<metric_report> reports( const gate_family& family, std::span<const metric_kind> metrics,
                                    unsigned precision = 4, const closed_form_fn& formulas = closed_form );
std::vector<metric_report> reports( const bool_expr& e, std::span<const metric_kind> metrics,
                                    unsigned precision = 4 );

/* Signed percentage, kept exact. */
struct percentage
{
  bool negative = false;
  exact_ratio magnitude;

  /* "61.1%"; rounding is half away from zero */
  std::string str( unsigned digits = 1 ) const;
};

/* 100 (old - new) / old; negative when the value grew. Throws std::invalid_argument if old is zero. */
percentage percent_reduction( const exact_ratio& old_value, const exact_ratio& new_value );

/*! \brief Enumeration effort for one metric at fan-in n.

  `gemnif_weighted_work` charges (n+1)/2 faults per faulty pattern, the
  common rough estimate; `exact_fault_count` is the true total n 2^(2n-1).
  2^n (2^n - 1) is even, so the estimate is always an integer.
*/
struct work_estimate
{
  unsigned n = 0;
  metric_kind metric = metric_kind::gemfic;
  std::uint64_t faulty_pattern_pairs = 0;
  std::uint64_t gemnif_weighted_work = 0;
  std::uint64_t exact_fault_count = 0;

  /* pairs for GEMFIC, the weighted estimate for GEMNIF */
  std::uint64_t work() const noexcept
  {
    return metric == metric_kind::gemfic ? faulty_pattern_pairs : gemnif_weighted_work;
  }
};

/* Throws std::invalid_argument unless 1 <= n <= 16. */
work_estimate estimate_work( unsigned n, metric_kind metric );

} // namespace gatemask
