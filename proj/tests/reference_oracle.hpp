// Test-only enumeration of fault pairs. Deliberately shares no code with
// the library: inputs are unpacked into bit vectors and compared position
// by position instead of going through popcount.

#pragma once

#include <cstdint>
#include <vector>

#include <gatemask/truth_table.hpp>

namespace reference
{

struct pair_counts
{
  std::uint64_t output_errors = 0;
  std::uint64_t input_faults = 0;
  std::uint64_t faulty_patterns = 0;
};

inline std::vector<int> unpack( std::uint32_t pattern, unsigned n )
{
  std::vector<int> bits( n );
  for ( auto j = 0u; j < n; ++j )
  {
    bits[j] = static_cast<int>( pattern % 2u );
    pattern /= 2u;
  }
  return bits;
}

inline pair_counts enumerate( const gatemask::truth_table& tt )
{
  const auto n = tt.num_inputs();
  const auto size = static_cast<std::uint32_t>( tt.outputs().size() );
  pair_counts c;
  for ( std::uint32_t applied = 0; applied < size; ++applied )
  {
    const auto a = unpack( applied, n );
    for ( std::uint32_t faulty = 0; faulty < size; ++faulty )
    {
      if ( faulty == applied )
        continue;
      const auto b = unpack( faulty, n );
      for ( auto j = 0u; j < n; ++j )
        c.input_faults += a[j] != b[j] ? 1u : 0u;
      c.faulty_patterns += 1u;
      c.output_errors += tt.outputs()[applied] != tt.outputs()[faulty] ? 1u : 0u;
    }
  }
  return c;
}

} // namespace reference
