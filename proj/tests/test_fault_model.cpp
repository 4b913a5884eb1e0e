#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include <gatemask/fault_model.hpp>
#include <gatemask/gate_family.hpp>

#include "reference_oracle.hpp"

using namespace gatemask;

namespace
{

truth_table random_table( std::mt19937_64& rng, unsigned n )
{
  return truth_table::from_function( n, [&]( pattern_t ) { return rng() & 1u; } );
}

std::uint64_t binomial( unsigned n, unsigned k )
{
  std::uint64_t r = 1;
  for ( auto i = 1u; i <= k; ++i )
    r = r * ( n - k + i ) / i;
  return r;
}

} // namespace

TEST_CASE( "profile totals for small gates" )
{
  const auto maj3 = profile( make_gate( { gate_kind::majority, 3 } ) );
  CHECK( maj3.total_output_errors == 32u );
  CHECK( maj3.total_fault_count == 96u );
  CHECK( maj3.total_faulty_patterns == 56u );

  const auto and2 = profile( make_gate( { gate_kind::and_gate, 2 } ) );
  CHECK( and2.total_output_errors == 6u );
  CHECK( and2.total_fault_count == 16u );

  CHECK( profile( truth_table::constant( 2, false ) ).total_output_errors == 0u );
}

TEST_CASE( "per-pattern breakdown of majority-3" )
{
  const auto prof = profile( make_gate( { gate_kind::majority, 3 } ) );
  REQUIRE( prof.per_pattern.size() == 8u );
  /* 011 has faulty neighbours 000 (k=2), 001 and 010 (k=1), 100 (k=3) in the OFF-set */
  const auto& p011 = prof.per_pattern[0b011];
  CHECK( p011[0] == distance_bucket{ 3, 2 } );
  CHECK( p011[1] == distance_bucket{ 3, 1 } );
  CHECK( p011[2] == distance_bucket{ 1, 1 } );
}

TEST_CASE( "oracle values" )
{
  const auto maj3 = make_gate( { gate_kind::majority, 3 } );
  CHECK( gemnif_oracle( maj3 ) == exact_ratio( 1, 3 ) );
  CHECK( gemfic_oracle( maj3 ) == exact_ratio( 4, 7 ) );

  CHECK( gemnif_oracle( make_gate( { gate_kind::and_gate, 2 } ) ) == exact_ratio( 3, 8 ) );
  CHECK( gemfic_oracle( make_gate( { gate_kind::and_gate, 3 } ) ) == exact_ratio( 1, 4 ) );

  const auto inverter = make_gate( { gate_kind::not_gate, 1 } );
  CHECK( gemnif_oracle( inverter ) == exact_ratio( 1 ) );
  CHECK( gemfic_oracle( inverter ) == exact_ratio( 1 ) );

  const auto maj5 = make_gate( { gate_kind::majority, 5 } );
  CHECK( gemnif_oracle( maj5 ) == exact_ratio( 1, 5 ) );
  CHECK( gemfic_oracle( maj5 ) == exact_ratio( 16, 31 ) );

  CHECK( gemfic_oracle( truth_table::constant( 3, true ) ) == exact_ratio( 0 ) );
}

TEST_CASE( "profile agrees with an independent enumeration" )
{
  std::mt19937_64 rng( 99 );
  for ( auto n = 1u; n <= 7u; ++n )
  {
    for ( auto trial = 0; trial < 20; ++trial )
    {
      const auto tt = random_table( rng, n );
      const auto prof = profile( tt );
      const auto ref = reference::enumerate( tt );
      CHECK( prof.total_output_errors == ref.output_errors );
      CHECK( prof.total_fault_count == ref.input_faults );
      CHECK( prof.total_faulty_patterns == ref.faulty_patterns );
    }
  }
}

TEST_CASE( "per-pattern buckets are consistent" )
{
  std::mt19937_64 rng( 5 );
  for ( auto n = 1u; n <= 8u; ++n )
  {
    const auto tt = random_table( rng, n );
    const auto prof = profile( tt );
    const std::uint64_t patterns = std::uint64_t{ 1 } << n;
    std::uint64_t errors = 0;
    for ( const auto& buckets : prof.per_pattern )
    {
      REQUIRE( buckets.size() == n );
      std::uint64_t faulty = 0;
      for ( auto k = 1u; k <= n; ++k )
      {
        CHECK( buckets[k - 1u].faulty_patterns == binomial( n, k ) );
        CHECK( buckets[k - 1u].erroneous <= buckets[k - 1u].faulty_patterns );
        faulty += buckets[k - 1u].faulty_patterns;
        errors += buckets[k - 1u].erroneous;
      }
      CHECK( faulty == patterns - 1u );
    }
    CHECK( errors == prof.total_output_errors );
    CHECK( prof.total_faulty_patterns == patterns * ( patterns - 1u ) );
  }
}

TEST_CASE( "total fault count is n 2^(2n-1)" )
{
  for ( auto n = 1u; n <= 12u; ++n )
  {
    const auto prof = profile( truth_table::constant( n, false ) );
    CHECK( prof.total_fault_count == ( std::uint64_t{ n } << ( 2u * n - 1u ) ) );
  }
}

TEST_CASE( "output errors equal 2 |ON| |OFF| on random tables" )
{
  std::mt19937_64 rng( 17 );
  for ( auto n = 4u; n <= 8u; ++n )
  {
    for ( auto trial = 0; trial < 25; ++trial )
    {
      const auto tt = random_table( rng, n );
      const auto sets = on_off_sets( tt );
      CHECK( profile( tt ).total_output_errors == 2u * sets.on_cardinality() * sets.off_cardinality() );
    }
  }
}

TEST_CASE( "oracles ignore complementation and input order" )
{
  std::mt19937_64 rng( 23 );
  for ( auto n = 2u; n <= 6u; ++n )
  {
    std::vector<unsigned> perm( n );
    std::iota( perm.begin(), perm.end(), 0u );
    for ( auto trial = 0; trial < 20; ++trial )
    {
      const auto tt = random_table( rng, n );
      std::shuffle( perm.begin(), perm.end(), rng );
      const auto inverted = complement( tt );
      const auto permuted = permute_inputs( tt, perm );
      CHECK( gemnif_oracle( inverted ) == gemnif_oracle( tt ) );
      CHECK( gemfic_oracle( inverted ) == gemfic_oracle( tt ) );
      CHECK( gemnif_oracle( permuted ) == gemnif_oracle( tt ) );
      CHECK( gemfic_oracle( permuted ) == gemfic_oracle( tt ) );
    }
  }
}

TEST_CASE( "metric bounds and zero iff constant" )
{
  std::mt19937_64 rng( 31 );
  for ( auto n = 1u; n <= 6u; ++n )
  {
    for ( auto trial = 0; trial < 30; ++trial )
    {
      const auto tt = random_table( rng, n );
      const auto prof = profile( tt );
      const auto nif = gemnif_of( prof );
      const auto fic = gemfic_of( prof );
      CHECK( nif <= fic );
      CHECK( fic <= exact_ratio( 1 ) );
      CHECK( nif.is_zero() == is_constant( tt ) );
      CHECK( fic.is_zero() == is_constant( tt ) );
      if ( n == 1u )
        CHECK( nif == fic );
      else if ( !is_constant( tt ) )
        CHECK( nif < fic );
    }
  }
}
