#include <gatemask/cli.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gatemask/expr.hpp>
#include <gatemask/fault_model.hpp>
#include <gatemask/sweep.hpp>

namespace gatemask::cli
{

namespace
{

class usage_error : public std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct options
{
  std::string gate;
  std::string expr;
  std::string n;
  std::vector<unsigned> n_pair;
  std::string families = "all";
  std::string metric = "both";
  std::string how = "both";
  std::string format = "table";
  unsigned precision = 4;
  std::string out_path;
};

enum class format
{
  table,
  csv,
  json
};

format parse_format( const std::string& s )
{
  if ( s == "table" )
    return format::table;
  if ( s == "csv" )
    return format::csv;
  if ( s == "json" )
    return format::json;
  throw usage_error( "unknown format '" + s + "' (expected table, csv or json)" );
}

std::vector<metric_kind> parse_metrics( const std::string& s )
{
  if ( s == "both" )
    return { all_metrics.begin(), all_metrics.end() };
  if ( const auto m = parse_metric( s ) )
    return { *m };
  throw usage_error( "unknown metric '" + s + "' (expected gemnif, gemfic or both)" );
}

method parse_how( const std::string& s )
{
  if ( const auto m = parse_method( s ) )
    return *m;
  throw usage_error( "unknown method '" + s + "' (expected closed, oracle or both)" );
}

gate_kind parse_gate( const std::string& s )
{
  if ( const auto k = parse_gate_kind( s ) )
    return *k;
  throw usage_error( "unknown gate '" + s + "' (expected not, and, nand, or, nor, xor, xnor, maj or min)" );
}

unsigned parse_count( const std::string& s )
{
  if ( s.empty() || s.size() > 9u || s.find_first_not_of( "0123456789" ) != std::string::npos )
  {
    throw usage_error( "expected a non-negative integer, got '" + s + "'" );
  }
  return static_cast<unsigned>( std::stoul( s ) );
}

/* "5" or "3..7" */
std::pair<unsigned, unsigned> parse_range( const std::string& s )
{
  const auto dots = s.find( ".." );
  if ( dots == std::string::npos )
  {
    const auto n = parse_count( s );
    return { n, n };
  }
  return { parse_count( s.substr( 0, dots ) ), parse_count( s.substr( dots + 2u ) ) };
}

std::vector<gate_kind> parse_families( const std::string& s )
{
  if ( s == "all" )
    return { all_gate_kinds.begin(), all_gate_kinds.end() };
  std::vector<gate_kind> kinds;
  std::stringstream ss( s );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    kinds.push_back( parse_gate( item ) );
  }
  if ( kinds.empty() )
    throw usage_error( "empty family list" );
  return kinds;
}

void check_precision( unsigned precision )
{
  if ( precision > 30u )
    throw usage_error( "precision must be at most 30" );
}

std::string render_rows( const std::vector<sweep_row>& rows, format fmt )
{
  switch ( fmt )
  {
  case format::csv:
    return write_csv( rows );
  case format::json:
    return write_json( rows );
  case format::table:
    return write_table( rows );
  }
  return {};
}

/* output text plus exit status */
struct outcome
{
  std::string text;
  int status = exit_ok;
};

std::string analyze_line( const metric_report& r, std::optional<exact_ratio> closed_only, unsigned precision )
{
  std::string line = r.descriptor + " " + std::string( metric_name( r.metric ) ) + ": ";
  if ( closed_only )
  {
    return line + closed_only->str() + " = " + to_decimal( *closed_only, precision ) + " (closed-form)";
  }
  line += r.oracle.str() + " = " + r.decimal;
  if ( !r.closed_form )
    return line + " (oracle)";
  if ( r.agree )
    return line + " (agree)";
  return line + " (DISAGREE: closed form gives " + r.closed_form->str() + ")";
}

outcome cmd_analyze( const options& opt, std::ostream& err, const closed_form_fn& formulas )
{
  if ( opt.gate.empty() == opt.expr.empty() )
    throw usage_error( "analyze needs exactly one of --gate or --expr" );
  const auto metrics = parse_metrics( opt.metric );
  const auto how = parse_how( opt.how );
  const auto fmt = parse_format( opt.format );
  check_precision( opt.precision );

  std::vector<sweep_row> rows;
  std::vector<std::string> lines;

  if ( !opt.gate.empty() )
  {
    if ( opt.n.empty() )
      throw usage_error( "--gate needs --n" );
    const gate_family family( parse_gate( opt.gate ), parse_count( opt.n ) );
    const auto label = std::string( canonical_name( family.kind() ) );
    if ( how == method::closed )
    {
      for ( auto metric : metrics )
      {
        const auto closed = formulas( family, metric );
        lines.push_back( analyze_line( { family.name(), metric, {}, {}, true, {} }, closed, opt.precision ) );
        rows.push_back( make_row( label, family.arity(), metric, closed, std::nullopt, opt.precision ) );
      }
    }
    else
    {
      for ( auto r : reports( family, metrics, opt.precision, formulas ) )
      {
        if ( how == method::oracle )
        {
          r.closed_form.reset();
          r.agree = true;
        }
        lines.push_back( analyze_line( r, std::nullopt, opt.precision ) );
        rows.push_back( make_row( label, family.arity(), r.metric, r.closed_form, r.oracle, opt.precision ) );
      }
    }
  }
  else
  {
    if ( how == method::closed )
      throw usage_error( "expressions have no closed form; use --method oracle" );
    const auto e = parse_expr( opt.expr );
    for ( const auto& r : reports( e, metrics, opt.precision ) )
    {
      lines.push_back( analyze_line( r, std::nullopt, opt.precision ) );
      rows.push_back(
          make_row( r.descriptor, static_cast<unsigned>( e.variables.size() ), r.metric, {}, r.oracle, opt.precision ) );
    }
  }

  outcome result;
  if ( fmt == format::table )
  {
    for ( const auto& l : lines )
      result.text += l + "\n";
  }
  else
  {
    result.text = render_rows( rows, fmt );
  }
  if ( std::any_of( rows.begin(), rows.end(), is_disagreement ) )
  {
    err << "error: closed form and oracle disagree\n";
    result.status = exit_disagreement;
  }
  return result;
}

outcome cmd_sweep( const options& opt, std::ostream& err, const closed_form_fn& formulas )
{
  sweep_request request;
  request.families = parse_families( opt.families );
  std::tie( request.n_lo, request.n_hi ) = parse_range( opt.n );
  request.metrics = parse_metrics( opt.metric );
  request.how = parse_how( opt.how );
  request.precision = opt.precision;
  check_precision( opt.precision );
  const auto fmt = parse_format( opt.format );

  const auto result = run_sweep( request, formulas );
  for ( const auto& cell : result.skipped )
  {
    err << "note: skipping " << cell << " (illegal arity)\n";
  }
  if ( result.rows.empty() )
  {
    throw usage_error( "no legal (family, n) cells in the requested range" );
  }

  outcome out{ render_rows( result.rows, fmt ), exit_ok };
  if ( std::any_of( result.rows.begin(), result.rows.end(), is_disagreement ) )
  {
    err << "error: closed form and oracle disagree\n";
    out.status = exit_disagreement;
  }
  return out;
}

outcome cmd_compare( const options& opt, std::ostream& err, const closed_form_fn& formulas )
{
  if ( opt.gate.empty() )
    throw usage_error( "compare needs --gate" );
  if ( opt.n_pair.size() != 2u )
    throw usage_error( "compare needs two arities: --n <from> <to>" );
  const auto kind = parse_gate( opt.gate );
  const auto metrics = parse_metrics( opt.metric );
  const auto how = parse_how( opt.how );
  const auto fmt = parse_format( opt.format );
  check_precision( opt.precision );

  const gate_family from( kind, opt.n_pair[0] );
  const gate_family to( kind, opt.n_pair[1] );

  const auto evaluate = [&]( const gate_family& family, metric_kind metric ) {
    std::optional<exact_ratio> closed, oracle;
    if ( how != method::oracle )
      closed = formulas( family, metric );
    if ( how != method::closed )
    {
      const auto tt = make_gate( family );
      oracle = metric == metric_kind::gemnif ? gemnif_oracle( tt ) : gemfic_oracle( tt );
    }
    return make_row( std::string( canonical_name( kind ) ), family.arity(), metric, closed, oracle,
                     opt.precision );
  };

  outcome result;
  auto table = nlohmann::ordered_json::array();
  std::string csv = "family,metric,from_n,from_ratio,from_value,to_n,to_ratio,to_value,reduction\n";
  bool disagreement = false;

  for ( auto metric : metrics )
  {
    const auto a = evaluate( from, metric );
    const auto b = evaluate( to, metric );
    disagreement = disagreement || is_disagreement( a ) || is_disagreement( b );
    const auto reduction = percent_reduction( a.ratio, b.ratio ).str( 1 );

    result.text += std::string( canonical_name( kind ) ) + " " + std::string( metric_name( metric ) ) + ": n=" +
                   std::to_string( a.n ) + " " + a.ratio.str() + " = " + a.value + " -> n=" + std::to_string( b.n ) +
                   " " + b.ratio.str() + " = " + b.value + ", reduction " + reduction + "\n";
    csv += a.family + "," + std::string( metric_name( metric ) ) + "," + std::to_string( a.n ) + "," + a.ratio.str() +
           "," + a.value + "," + std::to_string( b.n ) + "," + b.ratio.str() + "," + b.value + "," + reduction + "\n";
    table.push_back( { { "family", a.family },
                       { "metric", metric_name( metric ) },
                       { "from_n", a.n },
                       { "from_ratio", a.ratio.str() },
                       { "from_value", a.value },
                       { "to_n", b.n },
                       { "to_ratio", b.ratio.str() },
                       { "to_value", b.value },
                       { "reduction", reduction } } );
  }

  if ( fmt == format::csv )
    result.text = csv;
  else if ( fmt == format::json )
    result.text = table.dump( 2 ) + "\n";

  if ( disagreement )
  {
    err << "error: closed form and oracle disagree\n";
    result.status = exit_disagreement;
  }
  return result;
}

outcome cmd_work( const options& opt )
{
  const auto fmt = parse_format( opt.format );
  const auto n = parse_count( opt.n );
  const auto w = estimate_work( n, metric_kind::gemnif );

  switch ( fmt )
  {
  case format::csv:
    return { "n,pairs,gemnif_approx,gemnif_exact\n" + std::to_string( n ) + "," +
             std::to_string( w.faulty_pattern_pairs ) + "," + std::to_string( w.gemnif_weighted_work ) + "," +
             std::to_string( w.exact_fault_count ) + "\n" };
  case format::json:
  {
    nlohmann::ordered_json obj{ { "n", n },
                                { "pairs", w.faulty_pattern_pairs },
                                { "gemnif_approx", w.gemnif_weighted_work },
                                { "gemnif_exact", w.exact_fault_count } };
    return { obj.dump( 2 ) + "\n" };
  }
  case format::table:
    break;
  }
  return { "n=" + std::to_string( n ) + ": pairs=" + std::to_string( w.faulty_pattern_pairs ) +
           ", gemnif_approx=" + std::to_string( w.gemnif_weighted_work ) +
           ", gemnif_exact=" + std::to_string( w.exact_fault_count ) + "\n" };
}

void add_output_options( CLI::App* cmd, options& opt, bool with_metric = true )
{
  if ( with_metric )
  {
    cmd->add_option( "--metric", opt.metric, "gemnif, gemfic or both" )->capture_default_str();
    cmd->add_option( "--method", opt.how, "closed, oracle or both" )->capture_default_str();
    cmd->add_option( "--precision", opt.precision, "decimal places" )->capture_default_str();
  }
  cmd->add_option( "--format", opt.format, "table, csv or json" )->capture_default_str();
  cmd->add_option( "--out", opt.out_path, "write to this file instead of standard output" );
}

} // namespace

int run( std::span<const std::string> args, std::ostream& out, std::ostream& err, const closed_form_fn& formulas )
{
  CLI::App app{ "Logical-masking metrics (GEMNIF, GEMFIC) of logic gates and Boolean functions", "gatemask" };
  app.require_subcommand( 1 );
  options opt;

  auto* analyze = app.add_subcommand( "analyze", "metrics of one gate or expression" );
  analyze->add_option( "--gate", opt.gate, "not, and, nand, or, nor, xor, xnor, maj, min" );
  analyze->add_option( "--n", opt.n, "fan-in" );
  analyze->add_option( "--expr", opt.expr, "Boolean expression, e.g. \"A&B | C\"" );
  add_output_options( analyze, opt );

  auto* sweep = app.add_subcommand( "sweep", "metrics over families and a fan-in range" );
  sweep->add_option( "--families", opt.families, "comma-separated families or 'all'" )->capture_default_str();
  sweep->add_option( "--n", opt.n, "fan-in range lo..hi" )->required();
  add_output_options( sweep, opt );

  auto* compare = app.add_subcommand( "compare", "percent reduction between two fan-ins" );
  compare->add_option( "--gate", opt.gate, "gate family" )->required();
  compare->add_option( "--n", opt.n_pair, "two fan-ins" )->required()->expected( 2 );
  add_output_options( compare, opt );

  auto* work = app.add_subcommand( "work", "enumeration effort at fan-in n" );
  work->add_option( "--n", opt.n, "fan-in" )->required();
  add_output_options( work, opt, false );

  std::vector<const char*> argv{ "gatemask" };
  for ( const auto& a : args )
  {
    argv.push_back( a.c_str() );
  }

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    outcome result;
    if ( analyze->parsed() )
      result = cmd_analyze( opt, err, formulas );
    else if ( sweep->parsed() )
      result = cmd_sweep( opt, err, formulas );
    else if ( compare->parsed() )
      result = cmd_compare( opt, err, formulas );
    else
      result = cmd_work( opt );

    if ( opt.out_path.empty() )
    {
      out << result.text;
    }
    else
    {
      std::ofstream file( opt.out_path, std::ios::binary );
      if ( !file )
      {
        err << "error: cannot open '" << opt.out_path << "' for writing\n";
        return exit_usage;
      }
      file << result.text;
    }
    return result.status;
  }
  catch ( const parse_error& e )
  {
    err << "error: " << e.what() << "\n";
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << "\n";
  }
  return exit_usage;
}

} // namespace gatemask::cli
