/*!
  \file exact_ratio.hpp
  \brief Non-negative rationals kept in lowest terms
*/

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gatemask
{

using big_int = boost::multiprecision::cpp_int;

/*! \brief Exact non-negative rational number.

  The denominator is always positive and shares no factor with the
  numerator.  Subtraction that would go below zero throws
  `std::domain_error`.
*/
class exact_ratio
{
public:
  exact_ratio() = default;
  exact_ratio( big_int numerator, big_int denominator = 1 );

  const big_int& numerator() const noexcept { return num_; }
  const big_int& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  /* "num/den", always with both parts */
  std::string str() const;

  friend bool operator==( const exact_ratio&, const exact_ratio& ) = default;
  friend std::strong_ordering operator<=>( const exact_ratio& a, const exact_ratio& b );

  friend exact_ratio operator+( const exact_ratio& a, const exact_ratio& b );
  friend exact_ratio operator-( const exact_ratio& a, const exact_ratio& b );
  friend exact_ratio operator*( const exact_ratio& a, const exact_ratio& b );
  friend exact_ratio operator/( const exact_ratio& a, const exact_ratio& b );

private:
  big_int num_{ 0 };
  big_int den_{ 1 };
};

std::ostream& operator<<( std::ostream& os, const exact_ratio& r );

/*! \brief Renders `num/den` with `digits` fractional digits, rounding half away from zero.

  Works for signed inputs; `den` must be non-zero.
*/
std::string format_fixed( const big_int& num, const big_int& den, unsigned digits );

/*! \brief Decimal rendering of a ratio ("0.5714" for 4/7 at 4 digits). */
inline std::string to_decimal( const exact_ratio& r, unsigned digits = 4 )
{
  return format_fixed( r.numerator(), r.denominator(), digits );
}

/* Parses "n/d" or a bare integer "n". Throws std::invalid_argument. */
exact_ratio parse_ratio( const std::string& text );

} // namespace gatemask
