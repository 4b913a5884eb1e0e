#include <gatemask/fault_model.hpp>

namespace gatemask
{

fault_profile profile( const truth_table& tt )
{
  const auto n = tt.num_inputs();
  const auto patterns = static_cast<pattern_t>( tt.num_patterns() );

  fault_profile prof;
  prof.num_inputs = n;
  prof.per_pattern.assign( patterns, std::vector<distance_bucket>( n ) );

  for ( pattern_t p = 0; p < patterns; ++p )
  {
    auto& buckets = prof.per_pattern[p];
    for ( pattern_t q = 0; q < patterns; ++q )
    {
      if ( q == p )
      {
        continue;
      }
      const auto k = hamming( p, q );
      auto& bucket = buckets[k - 1u];
      ++bucket.faulty_patterns;
      ++prof.total_faulty_patterns;
      prof.total_fault_count += k;
      if ( tt[p] != tt[q] )
      {
        ++bucket.erroneous;
        ++prof.total_output_errors;
      }
    }
  }
  return prof;
}

exact_ratio gemnif_of( const fault_profile& prof )
{
  return { prof.total_output_errors, prof.total_fault_count };
}

exact_ratio gemfic_of( const fault_profile& prof )
{
  return { prof.total_output_errors, prof.total_faulty_patterns };
}

exact_ratio gemnif_oracle( const truth_table& tt )
{
  return gemnif_of( profile( tt ) );
}

exact_ratio gemfic_oracle( const truth_table& tt )
{
  return gemfic_of( profile( tt ) );
}

} // namespace gatemask
