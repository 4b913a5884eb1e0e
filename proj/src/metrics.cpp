#include <gatemask/metrics.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <gatemask/fault_model.hpp>

namespace gatemask
{

namespace
{

big_int pow2( unsigned e )
{
  return big_int( 1 ) << e;
}

big_int binomial( unsigned n, unsigned k )
{
  big_int result = 1;
  for ( auto i = 1u; i <= k; ++i )
  {
    result = result * ( n - k + i ) / i;
  }
  return result;
}

/* sum over k = 1..n of k C(n, k) */
big_int weighted_fault_sum( unsigned n )
{
  big_int sum = 0;
  for ( auto k = 1u; k <= n; ++k )
  {
    sum += binomial( n, k ) * k;
  }
  return sum;
}

} // namespace

std::string_view metric_name( metric_kind metric ) noexcept
{
  return metric == metric_kind::gemnif ? "GEMNIF" : "GEMFIC";
}

std::optional<metric_kind> parse_metric( std::string_view name )
{
  std::string lower( name );
  std::transform( lower.begin(), lower.end(), lower.begin(),
                  []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
  if ( lower == "gemnif" )
    return metric_kind::gemnif;
  if ( lower == "gemfic" )
    return metric_kind::gemfic;
  return std::nullopt;
}

exact_ratio gemnif_closed( const gate_family& family )
{
  const auto n = family.arity();
  switch ( classify( family.kind() ) )
  {
  case gate_class::inverter:
    return exact_ratio( 1 );
  case gate_class::equivalent:
    return exact_ratio( pow2( 2u * n - 1u ), pow2( n ) * weighted_fault_sum( n ) );
  case gate_class::singleton:
    /* the lone ON (or OFF) pattern pairs with 2^n - 1 others, in both directions */
    return exact_ratio( 2 * ( pow2( n ) - 1 ), pow2( n ) * n * pow2( n - 1u ) );
  }
  throw std::logic_error( "unhandled gate class" );
}

exact_ratio gemfic_closed( const gate_family& family )
{
  const auto n = family.arity();
  switch ( classify( family.kind() ) )
  {
  case gate_class::inverter:
    return exact_ratio( 2, 2 );
  case gate_class::singleton:
    return exact_ratio( 2 * ( pow2( n ) - 1 ), pow2( n ) * ( pow2( n ) - 1 ) );
  case gate_class::equivalent:
    return exact_ratio( pow2( 2u * n - 1u ), pow2( n ) * ( pow2( n ) - 1 ) );
  }
  throw std::logic_error( "unhandled gate class" );
}

exact_ratio closed_form( const gate_family& family, metric_kind metric )
{
  return metric == metric_kind::gemnif ? gemnif_closed( family ) : gemfic_closed( family );
}

std::vector<metric_report> reports( const gate_family& family, std::span<const metric_kind> metrics,
                                    unsigned precision, const closed_form_fn& formulas )
{
  const auto prof = profile( make_gate( family ) );
  std::vector<metric_report> out;
  for ( auto metric : metrics )
  {
    metric_report r{ family.name(), metric, formulas( family, metric ),
                     metric == metric_kind::gemnif ? gemnif_of( prof ) : gemfic_of( prof ), true, {} };
    r.agree = *r.closed_form == r.oracle;
    r.decimal = to_decimal( r.oracle, precision );
    out.push_back( std::move( r ) );
  }
  return out;
}

std::vector<metric_report> reports( const bool_expr& e, std::span<const metric_kind> metrics, unsigned precision )
{
  const auto prof = profile( compile_expr( e ) );
  std::vector<metric_report> out;
  for ( auto metric : metrics )
  {
    metric_report r{ to_string( e ), metric, std::nullopt,
                     metric == metric_kind::gemnif ? gemnif_of( prof ) : gemfic_of( prof ), true, {} };
    r.decimal = to_decimal( r.oracle, precision );
    out.push_back( std::move( r ) );
  }
  return out;
}

metric_report report( const gate_family& family, metric_kind metric, unsigned precision,
                      const closed_form_fn& formulas )
{
  return reports( family, std::span( &metric, 1 ), precision, formulas ).front();
}

metric_report report( const bool_expr& e, metric_kind metric, unsigned precision )
{
  return reports( e, std::span( &metric, 1 ), precision ).front();
}

std::string percentage::str( unsigned digits ) const
{
  const big_int signed_num = negative ? big_int( -magnitude.numerator() ) : magnitude.numerator();
  return format_fixed( signed_num, magnitude.denominator(), digits ) + "%";
}

percentage percent_reduction( const exact_ratio& old_value, const exact_ratio& new_value )
{
  if ( old_value.is_zero() )
  {
    throw std::invalid_argument( "percent reduction from zero is undefined" );
  }
  const exact_ratio hundred( 100 );
  if ( new_value > old_value )
  {
    return { true, hundred * ( new_value - old_value ) / old_value };
  }
  return { false, hundred * ( old_value - new_value ) / old_value };
}

work_estimate estimate_work( unsigned n, metric_kind metric )
{
  if ( n < 1u || n > max_inputs )
  {
    throw std::invalid_argument( "fan-in " + std::to_string( n ) + " outside supported range 1.." +
                                 std::to_string( max_inputs ) );
  }
  const std::uint64_t patterns = std::uint64_t{ 1 } << n;
  work_estimate w;
  w.n = n;
  w.metric = metric;
  w.faulty_pattern_pairs = patterns * ( patterns - 1u );
  w.gemnif_weighted_work = w.faulty_pattern_pairs / 2u * ( n + 1u );
  w.exact_fault_count = std::uint64_t{ n } << ( 2u * n - 1u );
  return w;
}

} // namespace gatemask
