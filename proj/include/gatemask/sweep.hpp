/*!
  \file sweep.hpp
  \brief Metric sweeps over gate families and fan-in, with CSV/JSON/table output
*/

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gatemask/exact_ratio.hpp>
#include <gatemask/gate_family.hpp>
#include <gatemask/metrics.hpp>

namespace gatemask
{

enum class method
{
  closed,
  oracle,
  both
};

std::optional<method> parse_method( std::string_view name );

inline constexpr std::string_view csv_header = "family,n,metric,numerator,denominator,value,source";

inline constexpr std::string_view source_closed = "closed-form";
inline constexpr std::string_view source_oracle = "oracle";
inline constexpr std::string_view source_agree = "both(agree)";
inline constexpr std::string_view source_disagree = "both(DISAGREE)";

struct sweep_row
{
  /* canonical family name, or expression text */
  std::string family;
  unsigned n = 0;
  metric_kind metric = metric_kind::gemnif;
  exact_ratio ratio;
  std::string value;
  std::string source;

  friend bool operator==( const sweep_row&, const sweep_row& ) = default;
};

/*! \brief Assembles a row from whichever values were computed.

  The reported ratio is the oracle value when present.  With both values
  present the source records whether they agree.
*/
sweep_row make_row( std::string family, unsigned n, metric_kind metric, const std::optional<exact_ratio>& closed,
                    const std::optional<exact_ratio>& oracle, unsigned precision );

inline bool is_disagreement( const sweep_row& row )
{
  return row.source == source_disagree;
}

struct sweep_request
{
  std::vector<gate_kind> families{ all_gate_kinds.begin(), all_gate_kinds.end() };
  unsigned n_lo = 1;
  unsigned n_hi = 7;
  std::vector<metric_kind> metrics{ all_metrics.begin(), all_metrics.end() };
  method how = method::both;
  unsigned precision = 4;
};

struct sweep_result
{
  std::vector<sweep_row> rows;
  /* illegal (family, n) cells inside the range, e.g. "MAJORITY4" */
  std::vector<std::string> skipped;
};

/*! \brief Evaluates every legal (family, n, metric) cell.

  Rows are ordered by family (enumeration order), then n, then metric,
  independent of the order of `request.families` and `request.metrics`.
  Throws std::invalid_argument if the n range is outside 1..16 or empty.
*/
sweep_result run_sweep( const sweep_request& request, const closed_form_fn& formulas = closed_form );

std::string write_csv( std::span<const sweep_row> rows );

/*! \brief Reads CSV written by write_csv.

  Checks the header, the metric and source vocabularies, that each ratio is
  in lowest terms and that the value column matches the ratio at the
  precision it was written with.  Throws std::invalid_argument with the
  offending line number.
*/
std::vector<sweep_row> parse_csv( std::string_view text );

/* Array of objects with the CSV field names. */
std::string write_json( std::span<const sweep_row> rows );

/* Aligned, human-readable columns. */
std::string write_table( std::span<const sweep_row> rows );

} // namespace gatemask
