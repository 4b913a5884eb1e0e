/*!
  \file expr.hpp
  \brief Boolean expression language

  Grammar, loosest binding first:

      expr  := or
      or    := xor ('|' xor)*
      xor   := and ('^' and)*
      and   := unary ('&' unary)*
      unary := '!' unary | atom
      atom  := ident | '0' | '1' | '(' expr ')'
             | ('MAJ' | 'MIN') '(' expr (',' expr)+ ')'

  `MAJ` and `MIN` are reserved and take an odd number (>= 3) of arguments.
  Variables are numbered by first textual occurrence.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gatemask/truth_table.hpp>

namespace gatemask
{

struct expr_node
{
  enum class op
  {
    variable,
    constant,
    negation,
    conjunction,
    disjunction,
    exclusive_or,
    majority,
    minority
  };

  op kind = op::constant;
  /* variable index for `variable`, 0/1 for `constant`, unused otherwise */
  unsigned value = 0;
  std::vector<expr_node> operands;

  friend bool operator==( const expr_node&, const expr_node& ) = default;
};

struct bool_expr
{
  expr_node root;
  std::vector<std::string> variables;

  friend bool operator==( const bool_expr&, const bool_expr& ) = default;
};

class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, std::size_t position );

  /* zero-based character offset into the input */
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/* Throws parse_error on syntax errors, MAJ/MIN arity violations and more than 16 variables. */
bool_expr parse_expr( std::string_view text );

/* Prints with the fewest parentheses that re-parse to the same tree. */
std::string to_string( const bool_expr& e );

bool evaluate( const expr_node& node, pattern_t assignment );

/* Throws std::invalid_argument if the expression has no variables. */
truth_table compile_expr( const bool_expr& e );

} // namespace gatemask
