#include <gatemask/exact_ratio.hpp>

#include <ostream>
#include <stdexcept>

namespace gatemask
{

namespace
{

big_int parse_unsigned( const std::string& digits )
{
  if ( digits.empty() || digits.find_first_not_of( "0123456789" ) != std::string::npos )
  {
    throw std::invalid_argument( "not an unsigned integer: '" + digits + "'" );
  }
  return big_int( digits );
}

} // namespace

exact_ratio::exact_ratio( big_int numerator, big_int denominator )
    : num_( std::move( numerator ) ), den_( std::move( denominator ) )
{
  if ( den_ <= 0 )
  {
    throw std::domain_error( "exact_ratio: denominator must be positive" );
  }
  if ( num_ < 0 )
  {
    throw std::domain_error( "exact_ratio: numerator must be non-negative" );
  }
  const big_int g = boost::multiprecision::gcd( num_, den_ );
  if ( g > 1 )
  {
    num_ /= g;
    den_ /= g;
  }
  if ( num_ == 0 )
  {
    den_ = 1;
  }
}

std::string exact_ratio::str() const
{
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>( const exact_ratio& a, const exact_ratio& b )
{
  const big_int lhs = a.num_ * b.den_;
  const big_int rhs = b.num_ * a.den_;
  if ( lhs < rhs )
    return std::strong_ordering::less;
  if ( lhs > rhs )
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

exact_ratio operator+( const exact_ratio& a, const exact_ratio& b )
{
  return { a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_ };
}

exact_ratio operator-( const exact_ratio& a, const exact_ratio& b )
{
  big_int num = a.num_ * b.den_ - b.num_ * a.den_;
  if ( num < 0 )
  {
    throw std::domain_error( "exact_ratio: negative difference" );
  }
  return { std::move( num ), a.den_ * b.den_ };
}

exact_ratio operator*( const exact_ratio& a, const exact_ratio& b )
{
  return { a.num_ * b.num_, a.den_ * b.den_ };
}

exact_ratio operator/( const exact_ratio& a, const exact_ratio& b )
{
  if ( b.is_zero() )
  {
    throw std::domain_error( "exact_ratio: division by zero" );
  }
  return { a.num_ * b.den_, a.den_ * b.num_ };
}

std::ostream& operator<<( std::ostream& os, const exact_ratio& r )
{
  return os << r.str();
}

std::string format_fixed( const big_int& num, const big_int& den, unsigned digits )
{
  if ( den == 0 )
  {
    throw std::domain_error( "format_fixed: zero denominator" );
  }
  const bool negative = ( num < 0 ) != ( den < 0 ) && num != 0;
  const big_int n = abs( num );
  const big_int d = abs( den );

  big_int scale = 1;
  for ( auto i = 0u; i < digits; ++i )
  {
    scale *= 10;
  }
  /* round( n * scale / d ), ties away from zero */
  const big_int scaled = ( 2 * n * scale + d ) / ( 2 * d );
  if ( scaled == 0 && negative )
  {
    /* -0.0 collapses to 0.0 */
    return format_fixed( 0, 1, digits );
  }

  std::string int_part = big_int( scaled / scale ).str();
  std::string frac_part = big_int( scaled % scale ).str();
  std::string result = negative ? "-" : "";
  result += int_part;
  if ( digits > 0 )
  {
    result += '.';
    result.append( digits - frac_part.size(), '0' );
    result += frac_part;
  }
  return result;
}

exact_ratio parse_ratio( const std::string& text )
{
  const auto slash = text.find( '/' );
  if ( slash == std::string::npos )
  {
    return exact_ratio( parse_unsigned( text ) );
  }
  const auto den = parse_unsigned( text.substr( slash + 1 ) );
  if ( den == 0 )
  {
    throw std::invalid_argument( "zero denominator in '" + text + "'" );
  }
  return exact_ratio( parse_unsigned( text.substr( 0, slash ) ), den );
}

} // namespace gatemask
