/*!
  \file fault_model.hpp
  \brief Brute-force input-fault enumeration

  Every ordered pair (applied pattern p, faulty pattern q) with p != q is
  visited.  The pair carries hamming(p, q) individual input faults and
  produces one output error when f(p) != f(q).  Both metric oracles are
  read off these counts, so nothing here depends on closed forms.
*/

#pragma once

#include <cstdint>
#include <vector>

#include <gatemask/exact_ratio.hpp>
#include <gatemask/truth_table.hpp>

namespace gatemask
{

struct distance_bucket
{
  /* faulty patterns at this Hamming distance, C(n, k) */
  std::uint64_t faulty_patterns = 0;
  /* how many of them flip the output */
  std::uint64_t erroneous = 0;

  friend bool operator==( const distance_bucket&, const distance_bucket& ) = default;
};

struct fault_profile
{
  unsigned num_inputs = 0;
  /* per_pattern[p][k - 1] for Hamming distance k in 1..n */
  std::vector<std::vector<distance_bucket>> per_pattern;

  /* sum of hamming(p, q) over all pairs */
  std::uint64_t total_fault_count = 0;
  /* 2^n (2^n - 1) */
  std::uint64_t total_faulty_patterns = 0;
  /* pairs with f(p) != f(q) */
  std::uint64_t total_output_errors = 0;
};

fault_profile profile( const truth_table& tt );

exact_ratio gemnif_of( const fault_profile& prof );
exact_ratio gemfic_of( const fault_profile& prof );

/* output errors per individual input fault */
exact_ratio gemnif_oracle( const truth_table& tt );

/* output errors per faulty input pattern */
exact_ratio gemfic_oracle( const truth_table& tt );

} // namespace gatemask
