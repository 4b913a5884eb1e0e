#include <gatemask/sweep.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <gatemask/fault_model.hpp>

namespace gatemask
{

namespace
{

bool needs_quotes( std::string_view field )
{
  return field.find_first_of( ",\"\n\r" ) != std::string_view::npos;
}

void append_field( std::string& out, std::string_view field )
{
  if ( !needs_quotes( field ) )
  {
    out += field;
    return;
  }
  out += '"';
  for ( char c : field )
  {
    if ( c == '"' )
      out += '"';
    out += c;
  }
  out += '"';
}

/* Splits one CSV record starting at `pos`; advances past its line terminator. */
std::vector<std::string> read_record( std::string_view text, std::size_t& pos, std::size_t line )
{
  std::vector<std::string> fields( 1 );
  bool quoted = false;
  while ( pos < text.size() )
  {
    const char c = text[pos++];
    if ( quoted )
    {
      if ( c == '"' )
      {
        if ( pos < text.size() && text[pos] == '"' )
        {
          fields.back() += '"';
          ++pos;
        }
        else
        {
          quoted = false;
        }
      }
      else
      {
        fields.back() += c;
      }
      continue;
    }
    if ( c == '"' && fields.back().empty() )
      quoted = true;
    else if ( c == ',' )
      fields.emplace_back();
    else if ( c == '\n' )
      return fields;
    else if ( c == '\r' && pos < text.size() && text[pos] == '\n' )
    {
      ++pos;
      return fields;
    }
    else
      fields.back() += c;
  }
  if ( quoted )
  {
    throw std::invalid_argument( "line " + std::to_string( line ) + ": unterminated quoted field" );
  }
  return fields;
}

unsigned parse_uint( const std::string& s, std::size_t line )
{
  if ( s.empty() || s.size() > 9u || s.find_first_not_of( "0123456789" ) != std::string::npos )
  {
    throw std::invalid_argument( "line " + std::to_string( line ) + ": bad integer '" + s + "'" );
  }
  return static_cast<unsigned>( std::stoul( s ) );
}

nlohmann::ordered_json integer_json( const big_int& v )
{
  if ( v <= std::numeric_limits<std::uint64_t>::max() )
  {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

} // namespace

std::optional<method> parse_method( std::string_view name )
{
  if ( name == "closed" )
    return method::closed;
  if ( name == "oracle" )
    return method::oracle;
  if ( name == "both" )
    return method::both;
  return std::nullopt;
}

sweep_row make_row( std::string family, unsigned n, metric_kind metric, const std::optional<exact_ratio>& closed,
                    const std::optional<exact_ratio>& oracle, unsigned precision )
{
  if ( !closed && !oracle )
  {
    throw std::invalid_argument( "make_row: no value computed" );
  }
  sweep_row row;
  row.family = std::move( family );
  row.n = n;
  row.metric = metric;
  row.ratio = oracle ? *oracle : *closed;
  row.value = to_decimal( row.ratio, precision );
  if ( closed && oracle )
    row.source = *closed == *oracle ? source_agree : source_disagree;
  else
    row.source = closed ? source_closed : source_oracle;
  return row;
}

sweep_result run_sweep( const sweep_request& request, const closed_form_fn& formulas )
{
  if ( request.n_lo < 1u || request.n_hi > max_inputs || request.n_lo > request.n_hi )
  {
    throw std::invalid_argument( "fan-in range " + std::to_string( request.n_lo ) + ".." +
                                 std::to_string( request.n_hi ) + " must lie within 1.." +
                                 std::to_string( max_inputs ) );
  }

  sweep_result result;
  for ( auto kind : all_gate_kinds )
  {
    if ( std::find( request.families.begin(), request.families.end(), kind ) == request.families.end() )
    {
      continue;
    }
    for ( auto n = request.n_lo; n <= request.n_hi; ++n )
    {
      if ( !is_legal_arity( kind, n ) )
      {
        result.skipped.push_back( std::string( canonical_name( kind ) ) + std::to_string( n ) );
        continue;
      }
      const gate_family family( kind, n );

      std::optional<fault_profile> prof;
      if ( request.how != method::closed )
      {
        prof = profile( make_gate( family ) );
      }
      for ( auto metric : all_metrics )
      {
        if ( std::find( request.metrics.begin(), request.metrics.end(), metric ) == request.metrics.end() )
        {
          continue;
        }
        std::optional<exact_ratio> closed, oracle;
        if ( request.how != method::oracle )
          closed = formulas( family, metric );
        if ( prof )
          oracle = metric == metric_kind::gemnif ? gemnif_of( *prof ) : gemfic_of( *prof );
        result.rows.push_back(
            make_row( std::string( canonical_name( kind ) ), n, metric, closed, oracle, request.precision ) );
      }
    }
  }
  return result;
}

std::string write_csv( std::span<const sweep_row> rows )
{
  std::string out( csv_header );
  out += '\n';
  for ( const auto& row : rows )
  {
    append_field( out, row.family );
    out += ',';
    out += std::to_string( row.n );
    out += ',';
    out += metric_name( row.metric );
    out += ',';
    out += row.ratio.numerator().str();
    out += ',';
    out += row.ratio.denominator().str();
    out += ',';
    out += row.value;
    out += ',';
    out += row.source;
    out += '\n';
  }
  return out;
}

std::vector<sweep_row> parse_csv( std::string_view text )
{
  std::size_t pos = 0;
  std::size_t line = 1;
  const auto header = read_record( text, pos, line );
  std::string joined;
  for ( auto i = 0u; i < header.size(); ++i )
  {
    joined += ( i ? "," : "" ) + header[i];
  }
  if ( joined != csv_header )
  {
    throw std::invalid_argument( "line 1: expected header '" + std::string( csv_header ) + "'" );
  }

  std::vector<sweep_row> rows;
  while ( pos < text.size() )
  {
    ++line;
    const auto fields = read_record( text, pos, line );
    if ( fields.size() != 7u )
    {
      throw std::invalid_argument( "line " + std::to_string( line ) + ": expected 7 fields, got " +
                                   std::to_string( fields.size() ) );
    }
    const auto where = "line " + std::to_string( line ) + ": ";

    sweep_row row;
    row.family = fields[0];
    row.n = parse_uint( fields[1], line );
    const auto metric = parse_metric( fields[2] );
    if ( !metric || fields[2] != metric_name( *metric ) )
    {
      throw std::invalid_argument( where + "unknown metric '" + fields[2] + "'" );
    }
    row.metric = *metric;
    row.ratio = parse_ratio( fields[3] + "/" + fields[4] );
    if ( row.ratio.numerator().str() != fields[3] || row.ratio.denominator().str() != fields[4] )
    {
      throw std::invalid_argument( where + "ratio not in lowest terms" );
    }
    row.value = fields[5];
    const auto dot = row.value.find( '.' );
    const auto digits = dot == std::string::npos ? 0u : static_cast<unsigned>( row.value.size() - dot - 1u );
    if ( to_decimal( row.ratio, digits ) != row.value )
    {
      throw std::invalid_argument( where + "value '" + row.value + "' does not match " + row.ratio.str() );
    }
    row.source = fields[6];
    if ( row.source != source_closed && row.source != source_oracle && row.source != source_agree &&
         row.source != source_disagree )
    {
      throw std::invalid_argument( where + "unknown source '" + row.source + "'" );
    }
    rows.push_back( std::move( row ) );
  }
  return rows;
}

std::string write_json( std::span<const sweep_row> rows )
{
  auto doc = nlohmann::ordered_json::array();
  for ( const auto& row : rows )
  {
    nlohmann::ordered_json obj;
    obj["family"] = row.family;
    obj["n"] = row.n;
    obj["metric"] = metric_name( row.metric );
    obj["numerator"] = integer_json( row.ratio.numerator() );
    obj["denominator"] = integer_json( row.ratio.denominator() );
    obj["value"] = row.value;
    obj["source"] = row.source;
    doc.push_back( std::move( obj ) );
  }
  return doc.dump( 2 ) + "\n";
}

std::string write_table( std::span<const sweep_row> rows )
{
  std::vector<std::vector<std::string>> cells;
  cells.push_back( { "family", "n", "metric", "ratio", "value", "source" } );
  for ( const auto& row : rows )
  {
    cells.push_back( { row.family, std::to_string( row.n ), std::string( metric_name( row.metric ) ),
                       row.ratio.str(), row.value, row.source } );
  }

  std::vector<std::size_t> widths( cells.front().size(), 0u );
  for ( const auto& r : cells )
  {
    for ( auto i = 0u; i < r.size(); ++i )
    {
      widths[i] = std::max( widths[i], r[i].size() );
    }
  }

  std::ostringstream os;
  for ( const auto& r : cells )
  {
    for ( auto i = 0u; i < r.size(); ++i )
    {
      os << r[i];
      if ( i + 1u < r.size() )
        os << std::string( widths[i] - r[i].size() + 2u, ' ' );
    }
    os << '\n';
  }
  return os.str();
}

} // namespace gatemask
