#include <gatemask/truth_table.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace gatemask
{

void truth_table::check_num_inputs( unsigned num_inputs )
{
  if ( num_inputs < 1u || num_inputs > max_inputs )
  {
    throw std::invalid_argument( "truth table input count " + std::to_string( num_inputs ) +
                                 " outside supported range 1.." + std::to_string( max_inputs ) );
  }
}

truth_table::truth_table( unsigned num_inputs, std::vector<std::uint8_t> outputs )
    : num_inputs_( num_inputs ), outputs_( std::move( outputs ) )
{
  check_num_inputs( num_inputs );
  if ( outputs_.size() != ( std::size_t{ 1 } << num_inputs ) )
  {
    throw std::invalid_argument( "truth table for " + std::to_string( num_inputs ) + " inputs needs " +
                                 std::to_string( std::size_t{ 1 } << num_inputs ) + " entries, got " +
                                 std::to_string( outputs_.size() ) );
  }
  if ( std::any_of( outputs_.begin(), outputs_.end(), []( auto b ) { return b > 1u; } ) )
  {
    throw std::invalid_argument( "truth table entries must be 0 or 1" );
  }
}

truth_table truth_table::constant( unsigned num_inputs, bool value )
{
  return from_function( num_inputs, [value]( pattern_t ) { return value; } );
}

truth_table complement( const truth_table& tt )
{
  return truth_table::from_function( tt.num_inputs(), [&tt]( pattern_t p ) { return !tt[p]; } );
}

truth_table permute_inputs( const truth_table& tt, std::span<const unsigned> perm )
{
  const auto n = tt.num_inputs();
  std::vector<bool> seen( n, false );
  if ( perm.size() != n )
  {
    throw std::invalid_argument( "permutation size does not match input count" );
  }
  for ( auto v : perm )
  {
    if ( v >= n || seen[v] )
    {
      throw std::invalid_argument( "not a permutation of the inputs" );
    }
    seen[v] = true;
  }

  return truth_table::from_function( n, [&]( pattern_t p ) {
    pattern_t source = 0;
    for ( auto i = 0u; i < n; ++i )
    {
      if ( ( p >> i ) & 1u )
      {
        source |= pattern_t{ 1 } << perm[i];
      }
    }
    return tt[source];
  } );
}

bool is_constant( const truth_table& tt )
{
  const auto bits = tt.outputs();
  return std::all_of( bits.begin(), bits.end(), [&]( auto b ) { return b == bits.front(); } );
}

on_off_partition on_off_sets( const truth_table& tt )
{
  on_off_partition sets;
  for ( pattern_t p = 0; p < tt.num_patterns(); ++p )
  {
    ( tt[p] ? sets.on_set : sets.off_set ).push_back( p );
  }
  return sets;
}

unsigned hamming( pattern_t p, pattern_t q ) noexcept
{
  return static_cast<unsigned>( std::popcount( p ^ q ) );
}

} // namespace gatemask
