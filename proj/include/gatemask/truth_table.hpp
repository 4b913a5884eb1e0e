/*!
  \file truth_table.hpp
  \brief Explicit truth tables of small single-output Boolean functions

  Pattern `i` assigns input `j` the value of bit `j` of `i`, so the first
  declared input is bit 0.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gatemask
{

inline constexpr unsigned max_inputs = 16u;

using pattern_t = std::uint32_t;

class truth_table
{
public:
  /*! \brief Builds a table from explicit output bits.

    Throws `std::invalid_argument` if `num_inputs` is outside 1..16, the
    output count is not 2^num_inputs, or an entry is neither 0 nor 1.
  */
  truth_table( unsigned num_inputs, std::vector<std::uint8_t> outputs );

  static truth_table constant( unsigned num_inputs, bool value );

  template<typename Fn>
  static truth_table from_function( unsigned num_inputs, Fn&& fn )
  {
    check_num_inputs( num_inputs );
    std::vector<std::uint8_t> bits( std::size_t{ 1 } << num_inputs );
    for ( pattern_t p = 0; p < bits.size(); ++p )
    {
      bits[p] = fn( p ) ? 1u : 0u;
    }
    return truth_table( num_inputs, std::move( bits ) );
  }

  unsigned num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_patterns() const noexcept { return outputs_.size(); }

  bool operator[]( pattern_t pattern ) const { return outputs_[pattern] != 0u; }
  std::span<const std::uint8_t> outputs() const noexcept { return outputs_; }

  friend bool operator==( const truth_table&, const truth_table& ) = default;

  static void check_num_inputs( unsigned num_inputs );

private:
  unsigned num_inputs_;
  std::vector<std::uint8_t> outputs_;
};

truth_table complement( const truth_table& tt );

/*! \brief Reorders inputs: input `i` of the result reads input `perm[i]` of `tt`.

  `perm` must be a permutation of 0..n-1.
*/
truth_table permute_inputs( const truth_table& tt, std::span<const unsigned> perm );

bool is_constant( const truth_table& tt );

/* ON-set and OFF-set of a function; together they partition all patterns. */
struct on_off_partition
{
  std::vector<pattern_t> on_set;
  std::vector<pattern_t> off_set;

  std::size_t on_cardinality() const noexcept { return on_set.size(); }
  std::size_t off_cardinality() const noexcept { return off_set.size(); }
};

on_off_partition on_off_sets( const truth_table& tt );

unsigned hamming( pattern_t p, pattern_t q ) noexcept;

} // namespace gatemask
