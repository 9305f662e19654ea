#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridge.hpp"
#include "distribution.hpp"
#include "error.hpp"
#include "fraclp.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"
#include "theta_search.hpp"
#include "thresholds.hpp"

namespace fracmatch::io {

using json = nlohmann::ordered_json;

// Rationals travel as exact "p/q" strings.
inline json rational( const Rational& q )
{
    return to_string( q );
}

inline Rational rational_from( const json& j, const char* what )
{
    if ( j.is_string() )
        return parse_rational( j.get< std::string >() );
    if ( j.is_number_integer() )
        return Rational( Integer( std::to_string( j.get< long long >() ) ) );
    throw ValidationError( std::string( "format error: " ) + what + " must be a \"p/q\" string" );
}

// Counts are JSON integers when they fit in 64 bits, decimal strings otherwise.
inline json integer( const Integer& z )
{
    if ( z.fits_slong_p() )
        return static_cast< long long >( z.get_si() );
    return z.get_str();
}

inline json to_json( const Hypergraph& h )
{
    json edges = json::array();
    for ( const auto& e : h.edges() )
        edges.push_back( e );
    return { { "n", h.n() }, { "k", h.k() }, { "edges", edges } };
}

inline Hypergraph hypergraph_from_json( const json& j )
{
    try {
        if ( !j.is_object() || !j.contains( "n" ) || !j.contains( "k" ) || !j.contains( "edges" ) )
            throw ValidationError( "format error: hypergraph needs \"n\", \"k\" and \"edges\"" );
        long long n = j.at( "n" ).get< long long >();
        long long k = j.at( "k" ).get< long long >();
        if ( n < 0 || k < 1 )
            throw ValidationError( "format error: need n >= 0 and k >= 1" );
        std::vector< Edge > edges;
        for ( const auto& e : j.at( "edges" ) ) {
            Edge edge;
            for ( const auto& v : e ) {
                long long x = v.get< long long >();
                if ( x < 0 )
                    throw ValidationError( "format error: negative vertex" );
                edge.push_back( static_cast< Vertex >( x ) );
            }
            edges.push_back( std::move( edge ) );
        }
        return Hypergraph( static_cast< std::size_t >( n ), static_cast< std::size_t >( k ), std::move( edges ) );
    } catch ( const json::exception& e ) {
        throw ValidationError( std::string( "format error: " ) + e.what() );
    } catch ( const ValidationError& e ) {
        std::string what = e.what();
        if ( what.rfind( "format error", 0 ) == 0 )
            throw;
        throw ValidationError( "format error: " + what );
    }
}

inline json to_json( const Matching& m, const Hypergraph& h )
{
    json edges = json::array();
    for ( const auto& e : m.edges )
        edges.push_back( e );
    return { { "size", m.size() }, { "perfect", m.is_perfect_in( h ) }, { "edges", edges } };
}

inline json to_json( const FractionalWeights& w )
{
    json weights = json::object();
    for ( std::size_t i = 0; i < w.weights.size(); ++i )
        weights[ std::to_string( i ) ] = rational( w.weights[ i ] );
    return { { "carrier", w.carrier == Carrier::Edges ? "edges" : "vertices" },
             { "weights", weights },
             { "value", rational( w.value ) } };
}

inline FractionalWeights weights_from_json( const json& j, std::size_t size )
{
    try {
        FractionalWeights w;
        std::string carrier = j.at( "carrier" ).get< std::string >();
        if ( carrier == "edges" )
            w.carrier = Carrier::Edges;
        else if ( carrier == "vertices" )
            w.carrier = Carrier::Vertices;
        else
            throw ValidationError( "format error: carrier must be \"edges\" or \"vertices\"" );
        w.weights.assign( size, Rational( 0 ) );
        for ( const auto& [ key, value ] : j.at( "weights" ).items() ) {
            std::size_t idx = std::stoul( key );
            if ( idx >= size )
                throw ValidationError( "format error: weight index " + key + " out of range" );
            w.weights[ idx ] = rational_from( value, "weight" );
        }
        w.value = rational_from( j.at( "value" ), "value" );
        return w;
    } catch ( const json::exception& e ) {
        throw ValidationError( std::string( "format error: " ) + e.what() );
    } catch ( const std::logic_error& e ) {
        throw ValidationError( std::string( "format error: " ) + e.what() );
    }
}

inline json to_json( const DiscreteDistribution& dist )
{
    json atoms = json::array();
    for ( const auto& a : dist.atoms() )
        atoms.push_back( { { "value", rational( a.value ) }, { "prob", rational( a.prob ) } } );
    return { { "atoms", atoms } };
}

inline DiscreteDistribution distribution_from_json( const json& j )
{
    try {
        std::vector< Atom > atoms;
        for ( const auto& a : j.at( "atoms" ) )
            atoms.push_back( { rational_from( a.at( "value" ), "value" ), rational_from( a.at( "prob" ), "prob" ) } );
        return DiscreteDistribution( std::move( atoms ) );
    } catch ( const json::exception& e ) {
        throw ValidationError( std::string( "format error: " ) + e.what() );
    }
}

inline json to_json( const BoundReport& r, int precision )
{
    json params = json::object();
    for ( const auto& [ k, v ] : r.params )
        params[ k ] = v;
    json entries = json::array();
    for ( const auto& e : r.entries )
        entries.push_back( { { "name", e.name },
                             { "value", rational( e.value ) },
                             { "decimal", to_decimal( e.value, precision ) },
                             { "provenance", e.provenance },
                             { "status", to_string( e.status ) } } );
    json out = { { "params", params }, { "entries", entries } };
    out[ "best" ] = r.best ? json( *r.best ) : json( nullptr );
    return out;
}

namespace detail {

inline std::string csv_field( const std::string& s )
{
    if ( s.find_first_of( ",\"\n" ) == std::string::npos )
        return s;
    std::string out = "\"";
    for ( char c : s ) {
        if ( c == '"' )
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string to_csv( const BoundReport& r, int precision )
{
    std::ostringstream os;
    os << "name,value,decimal,provenance,status,best\n";
    for ( const auto& e : r.entries )
        os << detail::csv_field( e.name ) << ',' << to_string( e.value ) << ',' << to_decimal( e.value, precision )
           << ',' << detail::csv_field( e.provenance ) << ',' << to_string( e.status ) << ','
           << ( r.best && *r.best == e.name ? "yes" : "no" ) << '\n';
    return os.str();
}

inline json to_json( const BridgeCertificate& c )
{
    json weight = json::array();
    for ( const auto& w : c.weight )
        weight.push_back( rational( w ) );
    json checks = json::array();
    for ( const auto& ch : c.checks )
        checks.push_back(
            { { "name", ch.name }, { "pass", ch.pass }, { "lhs", rational( ch.lhs ) }, { "rhs", rational( ch.rhs ) } } );
    json out = { { "direction", to_string( c.direction ) },
                 { "status", to_string( c.status ) },
                 { "m", c.m },
                 { "l", c.l },
                 { "d", rational( c.d ) },
                 { "hypergraph", to_json( c.hypergraph ) },
                 { "weight", weight },
                 { "distribution", to_json( c.distribution ) },
                 { "counts", { { "N", integer( c.n ) }, { "N1", integer( c.n1 ) }, { "N2", integer( c.n2 ) } } } };
    out[ "nu_star" ] = c.nu_star ? rational( *c.nu_star ) : json( nullptr );
    out[ "tau_star" ] = c.tau_star ? rational( *c.tau_star ) : json( nullptr );
    if ( !c.note.empty() )
        out[ "note" ] = c.note;
    out[ "checks" ] = checks;
    return out;
}

inline json to_json( const ProbeReport& p, int precision )
{
    json rows = json::array();
    for ( const auto& r : p.rows )
        rows.push_back( { { "r", r.r },
                          { "m", r.m },
                          { "edges", r.edges },
                          { "N", integer( r.n ) },
                          { "N1", integer( r.n1 ) },
                          { "N2", integer( r.n2 ) },
                          { "density", rational( r.density ) },
                          { "density_decimal", to_decimal( r.density, precision ) },
                          { "tail", rational( r.tail ) },
                          { "observed_gap", rational( r.observed ) },
                          { "gap_bound", rational( r.gap_bound ) },
                          { "dominated", r.dominated } } );
    return { { "l", p.l }, { "d", p.d }, { "distribution", to_json( p.distribution ) }, { "rows", rows } };
}

inline std::string to_csv( const ProbeReport& p, int precision )
{
    std::ostringstream os;
    os << "r,m,edges,N,N1,N2,density,density_decimal,tail,observed_gap,gap_bound,dominated\n";
    for ( const auto& r : p.rows )
        os << r.r << ',' << r.m << ',' << r.edges << ',' << r.n.get_str() << ',' << r.n1.get_str() << ','
           << r.n2.get_str() << ',' << to_string( r.density ) << ',' << to_decimal( r.density, precision ) << ','
           << to_string( r.tail ) << ',' << to_string( r.observed ) << ',' << to_string( r.gap_bound ) << ','
           << ( r.dominated ? "true" : "false" ) << '\n';
    return os.str();
}

// One JSON-lines record for the search findings log.
inline std::string finding_line( const ThetaFinding& f )
{
    json j = { { "seed", f.seed },
               { "kind", f.kind },
               { "l", f.l },
               { "d", rational( f.d ) },
               { "parameters", to_json( f.distribution ) },
               { "value", rational( f.value ) } };
    return j.dump();
}

inline json to_json( const ThetaSearchResult& r, std::uint64_t seed, long l, const Rational& d, int precision )
{
    json findings = json::array();
    for ( const auto& f : r.findings )
        findings.push_back( json::parse( finding_line( f ) ) );
    return { { "seed", seed },
             { "l", l },
             { "d", rational( d ) },
             { "best", to_json( r.best ) },
             { "value", rational( r.value ) },
             { "decimal", to_decimal( r.value, precision ) },
             { "conjectured", rational( r.conjectured ) },
             { "proved_cap", rational( r.proved_cap ) },
             { "evaluations", r.evaluations },
             { "budget_exhausted", r.budget_exhausted },
             { "findings", findings } };
}

} // namespace fracmatch::io
