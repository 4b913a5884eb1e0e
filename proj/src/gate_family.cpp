#include <gatemask/gate_family.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace gatemask
{

gate_class classify( gate_kind kind ) noexcept
{
  switch ( kind )
  {
  case gate_kind::not_gate:
    return gate_class::inverter;
  case gate_kind::and_gate:
  case gate_kind::nand_gate:
  case gate_kind::or_gate:
  case gate_kind::nor_gate:
    return gate_class::singleton;
  default:
    return gate_class::equivalent;
  }
}

std::string_view canonical_name( gate_kind kind ) noexcept
{
  constexpr std::array<std::string_view, 9> names = {
      "NOT", "AND", "NAND", "OR", "NOR", "XOR", "XNOR", "MAJORITY", "MINORITY" };
  return names[static_cast<std::size_t>( kind )];
}

std::string_view short_name( gate_kind kind ) noexcept
{
  constexpr std::array<std::string_view, 9> names = {
      "not", "and", "nand", "or", "nor", "xor", "xnor", "maj", "min" };
  return names[static_cast<std::size_t>( kind )];
}

std::optional<gate_kind> parse_gate_kind( std::string_view name )
{
  std::string lower( name );
  std::transform( lower.begin(), lower.end(), lower.begin(),
                  []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
  for ( auto kind : all_gate_kinds )
  {
    std::string canonical( canonical_name( kind ) );
    std::transform( canonical.begin(), canonical.end(), canonical.begin(),
                    []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
    if ( lower == short_name( kind ) || lower == canonical )
    {
      return kind;
    }
  }
  return std::nullopt;
}

bool is_legal_arity( gate_kind kind, unsigned arity ) noexcept
{
  if ( arity > max_inputs )
  {
    return false;
  }
  switch ( kind )
  {
  case gate_kind::not_gate:
    return arity == 1u;
  case gate_kind::majority:
  case gate_kind::minority:
    return arity >= 3u && arity % 2u == 1u;
  default:
    return arity >= 2u;
  }
}

gate_family::gate_family( gate_kind kind, unsigned arity )
    : kind_( kind ), arity_( arity )
{
  if ( !is_legal_arity( kind, arity ) )
  {
    std::string rule;
    switch ( kind )
    {
    case gate_kind::not_gate:
      rule = "NOT takes exactly 1 input";
      break;
    case gate_kind::majority:
    case gate_kind::minority:
      rule = std::string( canonical_name( kind ) ) + " needs an odd arity of at least 3";
      break;
    default:
      rule = std::string( canonical_name( kind ) ) + " needs at least 2 inputs";
      break;
    }
    throw std::invalid_argument( "illegal arity " + std::to_string( arity ) + ": " + rule +
                                 " (maximum " + std::to_string( max_inputs ) + ")" );
  }
}

std::string gate_family::name() const
{
  return std::string( canonical_name( kind_ ) ) + std::to_string( arity_ );
}

truth_table make_gate( const gate_family& family )
{
  const auto n = family.arity();
  const auto threshold = ( n + 1u ) / 2u;

  return truth_table::from_function( n, [&]( pattern_t p ) {
    const auto ones = static_cast<unsigned>( std::popcount( p ) );
    switch ( family.kind() )
    {
    case gate_kind::not_gate:
      return ones == 0u;
    case gate_kind::and_gate:
      return ones == n;
    case gate_kind::nand_gate:
      return ones != n;
    case gate_kind::or_gate:
      return ones != 0u;
    case gate_kind::nor_gate:
      return ones == 0u;
    case gate_kind::xor_gate:
      return ( ones & 1u ) == 1u;
    case gate_kind::xnor_gate:
      return ( ones & 1u ) == 0u;
    case gate_kind::majority:
      return ones >= threshold;
    case gate_kind::minority:
      return ones < threshold;
    }
    return false;
  } );
}

} // namespace gatemask
