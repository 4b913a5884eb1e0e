/*!
  \file gate_family.hpp
  \brief The nine symmetric gate families and their truth tables
*/

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <gatemask/truth_table.hpp>

namespace gatemask
{

/* Declaration order is the reporting order. */
enum class gate_kind
{
  not_gate,
  and_gate,
  nand_gate,
  or_gate,
  nor_gate,
  xor_gate,
  xnor_gate,
  majority,
  minority
};

inline constexpr std::array<gate_kind, 9> all_gate_kinds = {
    gate_kind::not_gate, gate_kind::and_gate, gate_kind::nand_gate,
    gate_kind::or_gate,  gate_kind::nor_gate, gate_kind::xor_gate,
    gate_kind::xnor_gate, gate_kind::majority, gate_kind::minority };

/*! \brief Masking class of a family.

  Singleton families have a one-element ON-set or OFF-set; equivalent
  families split the patterns evenly between the two.
*/
enum class gate_class
{
  inverter,
  singleton,
  equivalent
};

gate_class classify( gate_kind kind ) noexcept;

/* "NOT", "AND", ..., "MAJORITY", "MINORITY" */
std::string_view canonical_name( gate_kind kind ) noexcept;

/* "not", "and", ..., "maj", "min" */
std::string_view short_name( gate_kind kind ) noexcept;

/* Accepts short or canonical names, case-insensitively. */
std::optional<gate_kind> parse_gate_kind( std::string_view name );

bool is_legal_arity( gate_kind kind, unsigned arity ) noexcept;

class gate_family
{
public:
  /* Throws std::invalid_argument on an illegal arity. */
  gate_family( gate_kind kind, unsigned arity );

  gate_kind kind() const noexcept { return kind_; }
  unsigned arity() const noexcept { return arity_; }

  /* e.g. "MAJORITY5" */
  std::string name() const;

  friend bool operator==( const gate_family&, const gate_family& ) = default;

private:
  gate_kind kind_;
  unsigned arity_;
};

/*! \brief Complete truth table of a gate.

  Multi-input XOR is odd parity and XNOR even parity.  MAJORITY outputs 1
  when at least (n+1)/2 inputs are 1; MINORITY is its complement.
*/
truth_table make_gate( const gate_family& family );

} // namespace gatemask
