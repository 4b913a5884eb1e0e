#include <gatemask/expr.hpp>

#include <algorithm>
#include <cctype>

namespace gatemask
{

parse_error::parse_error( const std::string& what, std::size_t position )
    : std::runtime_error( what + " at position " + std::to_string( position ) ), position_( position )
{
}

namespace
{

using op = expr_node::op;

class parser
{
public:
  explicit parser( std::string_view text ) : text_( text ) {}

  bool_expr run()
  {
    skip_space();
    if ( at_end() )
    {
      throw parse_error( "empty expression", pos_ );
    }
    bool_expr result;
    result.root = parse_or();
    skip_space();
    if ( !at_end() )
    {
      throw parse_error( std::string( "unexpected '" ) + text_[pos_] + "'", pos_ );
    }
    result.variables = std::move( variables_ );
    return result;
  }

private:
  expr_node parse_or() { return parse_chain( '|', op::disjunction, &parser::parse_xor ); }
  expr_node parse_xor() { return parse_chain( '^', op::exclusive_or, &parser::parse_and ); }
  expr_node parse_and() { return parse_chain( '&', op::conjunction, &parser::parse_unary ); }

  expr_node parse_chain( char symbol, op kind, expr_node ( parser::*next )() )
  {
    expr_node first = ( this->*next )();
    if ( !accept( symbol ) )
    {
      return first;
    }
    expr_node node{ kind, 0, { std::move( first ) } };
    do
    {
      node.operands.push_back( ( this->*next )() );
    } while ( accept( symbol ) );
    return node;
  }

  expr_node parse_unary()
  {
    if ( accept( '!' ) )
    {
      return expr_node{ op::negation, 0, { parse_unary() } };
    }
    return parse_atom();
  }

  expr_node parse_atom()
  {
    skip_space();
    if ( at_end() )
    {
      throw parse_error( "unexpected end of expression", pos_ );
    }
    const auto start = pos_;
    const char c = text_[pos_];

    if ( c == '(' )
    {
      ++pos_;
      auto inner = parse_or();
      expect( ')' );
      return inner;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      if ( !at_end() && is_ident_char( text_[pos_] ) )
      {
        throw parse_error( "malformed constant", start );
      }
      return expr_node{ op::constant, static_cast<unsigned>( c - '0' ), {} };
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      while ( !at_end() && is_ident_char( text_[pos_] ) )
      {
        ++pos_;
      }
      const auto name = text_.substr( start, pos_ - start );
      if ( name == "MAJ" || name == "MIN" )
      {
        return parse_call( name == "MAJ" ? op::majority : op::minority, name, start );
      }
      return expr_node{ op::variable, variable_index( name, start ), {} };
    }
    throw parse_error( std::string( "unexpected '" ) + c + "'", start );
  }

  expr_node parse_call( op kind, std::string_view name, std::size_t start )
  {
    skip_space();
    if ( at_end() || text_[pos_] != '(' )
    {
      throw parse_error( std::string( name ) + " is reserved and must be called as " + std::string( name ) + "(...)",
                         start );
    }
    ++pos_;
    expr_node node{ kind, 0, { parse_or() } };
    while ( accept( ',' ) )
    {
      node.operands.push_back( parse_or() );
    }
    expect( ')' );
    if ( node.operands.size() < 3u || node.operands.size() % 2u == 0u )
    {
      throw parse_error( std::string( name ) + " needs an odd number (>= 3) of arguments, got " +
                             std::to_string( node.operands.size() ),
                         start );
    }
    return node;
  }

  unsigned variable_index( std::string_view name, std::size_t start )
  {
    const auto it = std::find( variables_.begin(), variables_.end(), name );
    if ( it != variables_.end() )
    {
      return static_cast<unsigned>( it - variables_.begin() );
    }
    if ( variables_.size() == max_inputs )
    {
      throw parse_error( "more than " + std::to_string( max_inputs ) + " distinct variables", start );
    }
    variables_.emplace_back( name );
    return static_cast<unsigned>( variables_.size() - 1u );
  }

  static bool is_ident_char( char c )
  {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
  }

  void skip_space()
  {
    while ( !at_end() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool accept( char c )
  {
    skip_space();
    if ( !at_end() && text_[pos_] == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect( char c )
  {
    if ( !accept( c ) )
    {
      throw parse_error( std::string( "expected '" ) + c + "'", pos_ );
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> variables_;
};

/* higher binds tighter */
int precedence( op kind )
{
  switch ( kind )
  {
  case op::disjunction:
    return 1;
  case op::exclusive_or:
    return 2;
  case op::conjunction:
    return 3;
  case op::negation:
    return 4;
  default:
    return 5;
  }
}

void print( const expr_node& node, const std::vector<std::string>& names, std::string& out )
{
  const auto print_operand = [&]( const expr_node& child, int parent_prec ) {
    /* equal precedence is parenthesized so nested chains keep their shape */
    const bool wrap = precedence( child.kind ) <= parent_prec;
    if ( wrap )
      out += '(';
    print( child, names, out );
    if ( wrap )
      out += ')';
  };

  switch ( node.kind )
  {
  case op::variable:
    out += names.at( node.value );
    break;
  case op::constant:
    out += node.value ? '1' : '0';
    break;
  case op::negation:
    out += '!';
    print_operand( node.operands.front(), precedence( op::negation ) - 1 );
    break;
  case op::conjunction:
  case op::disjunction:
  case op::exclusive_or:
  {
    const char symbol = node.kind == op::conjunction ? '&' : node.kind == op::disjunction ? '|' : '^';
    for ( auto i = 0u; i < node.operands.size(); ++i )
    {
      if ( i > 0u )
      {
        out += ' ';
        out += symbol;
        out += ' ';
      }
      print_operand( node.operands[i], precedence( node.kind ) );
    }
    break;
  }
  case op::majority:
  case op::minority:
    out += node.kind == op::majority ? "MAJ(" : "MIN(";
    for ( auto i = 0u; i < node.operands.size(); ++i )
    {
      if ( i > 0u )
        out += ", ";
      print( node.operands[i], names, out );
    }
    out += ')';
    break;
  }
}

} // namespace

bool_expr parse_expr( std::string_view text )
{
  return parser( text ).run();
}

std::string to_string( const bool_expr& e )
{
  std::string out;
  print( e.root, e.variables, out );
  return out;
}

bool evaluate( const expr_node& node, pattern_t assignment )
{
  const auto& args = node.operands;
  const auto eval = [assignment]( const expr_node& n ) { return evaluate( n, assignment ); };

  switch ( node.kind )
  {
  case op::variable:
    return ( ( assignment >> node.value ) & 1u ) != 0u;
  case op::constant:
    return node.value != 0u;
  case op::negation:
    return !eval( args.front() );
  case op::conjunction:
    return std::all_of( args.begin(), args.end(), eval );
  case op::disjunction:
    return std::any_of( args.begin(), args.end(), eval );
  case op::exclusive_or:
    return std::count_if( args.begin(), args.end(), eval ) % 2 == 1;
  case op::majority:
  case op::minority:
  {
    const auto ones = static_cast<std::size_t>( std::count_if( args.begin(), args.end(), eval ) );
    const bool maj = 2u * ones > args.size();
    return node.kind == op::majority ? maj : !maj;
  }
  }
  return false;
}

truth_table compile_expr( const bool_expr& e )
{
  const auto n = static_cast<unsigned>( e.variables.size() );
  if ( n == 0u )
  {
    throw std::invalid_argument( "expression has no variables; a truth table needs at least one input" );
  }
  return truth_table::from_function( n, [&]( pattern_t p ) { return evaluate( e.root, p ); } );
}

} // namespace gatemask
