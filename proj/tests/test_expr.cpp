#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <gatemask/expr.hpp>
#include <gatemask/gate_family.hpp>

using namespace gatemask;
using op = expr_node::op;

namespace
{

expr_node var( unsigned i )
{
  return { op::variable, i, {} };
}

expr_node node( op kind, std::vector<expr_node> args )
{
  return { kind, 0, std::move( args ) };
}

/* random well-formed AST over up to `num_vars` variables, used for round-trips */
expr_node random_node( std::mt19937& rng, unsigned depth, unsigned num_vars )
{
  const auto pick = depth == 0u ? rng() % 2u : rng() % 8u;
  switch ( pick )
  {
  case 0:
    return var( rng() % num_vars );
  case 1:
    if ( rng() % 4u == 0u )
      return { op::constant, static_cast<unsigned>( rng() % 2u ), {} };
    return var( rng() % num_vars );
  case 2:
    return node( op::negation, { random_node( rng, depth - 1u, num_vars ) } );
  case 3:
  case 4:
  case 5:
  {
    const op kinds[] = { op::conjunction, op::disjunction, op::exclusive_or };
    std::vector<expr_node> args( 2u + rng() % 2u );
    for ( auto& a : args )
      a = random_node( rng, depth - 1u, num_vars );
    return node( kinds[pick - 3u], std::move( args ) );
  }
  default:
  {
    std::vector<expr_node> args( rng() % 2u ? 3u : 5u );
    for ( auto& a : args )
      a = random_node( rng, depth - 1u, num_vars );
    return node( pick == 6u ? op::majority : op::minority, std::move( args ) );
  }
  }
}

} // namespace

TEST_CASE( "sum-of-products form of majority" )
{
  const auto e = parse_expr( "A&B | B&C | A&C" );
  CHECK( e.variables == std::vector<std::string>{ "A", "B", "C" } );
  const auto expected = node( op::disjunction, { node( op::conjunction, { var( 0 ), var( 1 ) } ),
                                                 node( op::conjunction, { var( 1 ), var( 2 ) } ),
                                                 node( op::conjunction, { var( 0 ), var( 2 ) } ) } );
  CHECK( e.root == expected );
  CHECK( compile_expr( e ) == make_gate( { gate_kind::majority, 3 } ) );
}

TEST_CASE( "factored and product-of-sums forms of majority" )
{
  const auto factored = parse_expr( "(A|B) & (A&B | C)" );
  CHECK( factored.root == node( op::conjunction, { node( op::disjunction, { var( 0 ), var( 1 ) } ),
                                                   node( op::disjunction, { node( op::conjunction,
                                                                                  { var( 0 ), var( 1 ) } ),
                                                                            var( 2 ) } ) } ) );
  CHECK( compile_expr( factored ) == make_gate( { gate_kind::majority, 3 } ) );
  CHECK( compile_expr( parse_expr( "(A|B)&(B|C)&(A|C)" ) ) == make_gate( { gate_kind::majority, 3 } ) );
}

TEST_CASE( "unary and call forms" )
{
  const auto e = parse_expr( "!x" );
  CHECK( e.variables == std::vector<std::string>{ "x" } );
  CHECK( e.root == node( op::negation, { var( 0 ) } ) );
  CHECK( compile_expr( e ) == make_gate( { gate_kind::not_gate, 1 } ) );

  CHECK( compile_expr( parse_expr( "MAJ(a,b,c)" ) ) == make_gate( { gate_kind::majority, 3 } ) );
  CHECK( compile_expr( parse_expr( "MIN(a, b, c, d, e)" ) ) == make_gate( { gate_kind::minority, 5 } ) );
  CHECK( compile_expr( parse_expr( "a ^ b ^ c" ) ) == make_gate( { gate_kind::xor_gate, 3 } ) );
  CHECK( compile_expr( parse_expr( "!(a ^ b)" ) ) == make_gate( { gate_kind::xnor_gate, 2 } ) );
}

TEST_CASE( "precedence is NOT > AND > XOR > OR" )
{
  const auto e = parse_expr( "a | b ^ c & !d" );
  CHECK( e.root == node( op::disjunction,
                         { var( 0 ), node( op::exclusive_or,
                                           { var( 1 ), node( op::conjunction,
                                                             { var( 2 ), node( op::negation, { var( 3 ) } ) } ) } ) } ) );
}

TEST_CASE( "variables are numbered by first occurrence" )
{
  const auto e = parse_expr( "  zeta & alpha | zeta_2 & alpha " );
  CHECK( e.variables == std::vector<std::string>{ "zeta", "alpha", "zeta_2" } );
  /* zeta is bit 0, alpha bit 1 */
  const auto tt = compile_expr( parse_expr( "zeta & !alpha" ) );
  CHECK( tt[0b01] );
  CHECK_FALSE( tt[0b10] );
}

TEST_CASE( "constants" )
{
  CHECK_THROWS_AS( compile_expr( parse_expr( "0" ) ), std::invalid_argument );
  CHECK( compile_expr( parse_expr( "x&0" ) ) == truth_table::constant( 1, false ) );
  CHECK( compile_expr( parse_expr( "x|1" ) ) == truth_table::constant( 1, true ) );
}

TEST_CASE( "syntax errors carry positions" )
{
  const auto position_of = []( const char* text ) -> std::size_t {
    try
    {
      parse_expr( text );
    }
    catch ( const parse_error& e )
    {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK( position_of( "" ) == 0u );
  CHECK( position_of( "   " ) == 3u );
  CHECK( position_of( "a &" ) == 3u );
  CHECK( position_of( "a b" ) == 2u );
  CHECK( position_of( "(a | b" ) == 6u );
  CHECK( position_of( "a + b" ) == 2u );
  CHECK( position_of( "MAJ(a, b)" ) == 0u );
  CHECK( position_of( "x | MIN(a, b, c, d)" ) == 4u );
  CHECK( position_of( "MAJ" ) == 0u );
  CHECK( position_of( "a & 12" ) == 4u );
}

TEST_CASE( "at most sixteen variables" )
{
  std::string sixteen = "v0";
  for ( auto i = 1; i < 16; ++i )
    sixteen += " | v" + std::to_string( i );
  CHECK( parse_expr( sixteen ).variables.size() == 16u );
  CHECK( compile_expr( parse_expr( sixteen ) ).num_inputs() == 16u );
  CHECK_THROWS_AS( parse_expr( sixteen + " | v16" ), parse_error );
  CHECK_NOTHROW( parse_expr( sixteen + " | v15" ) );
}

TEST_CASE( "printing" )
{
  CHECK( to_string( parse_expr( "A&B|B&C" ) ) == "A & B | B & C" );
  CHECK( to_string( parse_expr( "!(a|b)" ) ) == "!(a | b)" );
  CHECK( to_string( parse_expr( "(a&b)&c" ) ) == "(a & b) & c" );
  CHECK( to_string( parse_expr( "MAJ(a|b,!c,d)" ) ) == "MAJ(a | b, !c, d)" );
}

TEST_CASE( "print then parse reproduces the tree" )
{
  std::mt19937 rng( 2024 );
  const std::vector<std::string> names = { "a", "b", "c", "d", "e" };
  for ( auto i = 0; i < 2000; ++i )
  {
    bool_expr e;
    e.root = random_node( rng, 1u + rng() % 4u, 5u );
    e.variables = names;
    const auto text = to_string( e );
    const auto back = parse_expr( text );
    /* variable indices are renumbered by first occurrence; compare through the printed form */
    REQUIRE_MESSAGE( to_string( back ) == text, text );
    CHECK( parse_expr( to_string( back ) ) == back );
  }
}
