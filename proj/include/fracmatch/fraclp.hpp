#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace fracmatch {

enum class Carrier { Edges, Vertices };

// Exact weights on the edges (a fractional matching) or on the vertices
// (a fractional vertex cover) of a hypergraph. weights[i] belongs to edge i
// in canonical edge order, or to vertex i.
struct FractionalWeights
{
    Carrier carrier = Carrier::Edges;
    std::vector< Rational > weights;
    Rational value;

    static FractionalWeights from_weights( Carrier carrier, std::vector< Rational > weights )
    {
        FractionalWeights fw;
        fw.carrier = carrier;
        fw.weights = std::move( weights );
        for ( const auto& w : fw.weights )
            fw.value += w;
        return fw;
    }
};

// Checks w: E -> [0,1] with sum over edges at each vertex at most 1.
inline bool is_fractional_matching( const Hypergraph& h, const FractionalWeights& w )
{
    if ( w.carrier != Carrier::Edges || w.weights.size() != h.edge_count() )
        return false;
    std::vector< Rational > load( h.n() );
    Rational total;
    for ( std::size_t i = 0; i < h.edge_count(); ++i ) {
        const Rational& x = w.weights[ i ];
        if ( x < 0 || x > 1 )
            return false;
        total += x;
        for ( Vertex v : h.edges()[ i ] )
            load[ v ] += x;
    }
    for ( const auto& l : load )
        if ( l > 1 )
            return false;
    return total == w.value;
}

// Checks t: V -> [0,1] with sum over each edge at least 1.
inline bool is_fractional_cover( const Hypergraph& h, const FractionalWeights& t )
{
    if ( t.carrier != Carrier::Vertices || t.weights.size() != h.n() )
        return false;
    Rational total;
    for ( const auto& x : t.weights ) {
        if ( x < 0 || x > 1 )
            return false;
        total += x;
    }
    for ( const auto& e : h.edges() ) {
        Rational s;
        for ( Vertex v : e )
            s += t.weights[ v ];
        if ( s < 1 )
            return false;
    }
    return total == t.value;
}

namespace detail {

inline LinearProgram matching_lp( const Hypergraph& h )
{
    LinearProgram lp;
    std::size_t m = h.edge_count();
    lp.a.assign( h.n(), std::vector< Rational >( m ) );
    lp.b.assign( h.n(), Rational( 1 ) );
    lp.c.assign( m, Rational( 1 ) );
    for ( std::size_t i = 0; i < m; ++i )
        for ( Vertex v : h.edges()[ i ] )
            lp.a[ v ][ i ] = 1;
    return lp;
}

// maximize -sum t  s.t.  -sum_{v in e} t_v <= -1 (each edge), t_v <= 1.
inline LinearProgram cover_lp( const Hypergraph& h )
{
    LinearProgram lp;
    std::size_t n = h.n();
    for ( const auto& e : h.edges() ) {
        std::vector< Rational > row( n );
        for ( Vertex v : e )
            row[ v ] = -1;
        lp.a.push_back( std::move( row ) );
        lp.b.push_back( Rational( -1 ) );
    }
    for ( std::size_t v = 0; v < n; ++v ) {
        std::vector< Rational > row( n );
        row[ v ] = 1;
        lp.a.push_back( std::move( row ) );
        lp.b.push_back( Rational( 1 ) );
    }
    lp.c.assign( n, Rational( -1 ) );
    return lp;
}

inline LpSolution solve_or_throw( const LinearProgram& lp, const char* what )
{
    LpSolution sol = solve( lp );
    if ( sol.status != LpStatus::Optimal )
        throw SolverError( std::string( what ) + " LP did not reach an optimum" );
    return sol;
}

} // namespace detail

// Maximum fractional matching: edge weights attaining nu*(H).
inline FractionalWeights max_fractional_matching( const Hypergraph& h )
{
    LpSolution sol = detail::solve_or_throw( detail::matching_lp( h ), "fractional matching" );
    auto fw = FractionalWeights::from_weights( Carrier::Edges, std::move( sol.primal ) );
    if ( fw.value != sol.value )
        throw SolverError( "matching weights do not sum to the LP optimum" );
    return fw;
}

// Minimum fractional vertex cover: vertex weights attaining tau*(H).
inline FractionalWeights min_fractional_cover( const Hypergraph& h )
{
    LpSolution sol = detail::solve_or_throw( detail::cover_lp( h ), "fractional cover" );
    auto fw = FractionalWeights::from_weights( Carrier::Vertices, std::move( sol.primal ) );
    if ( fw.value != -sol.value )
        throw SolverError( "cover weights do not sum to the LP optimum" );
    return fw;
}

struct DualityCertificate
{
    Rational nu_star;
    Rational tau_star;
    FractionalWeights matching;
    FractionalWeights cover;
};

// Solves the matching LP and the cover LP separately, re-verifies both
// witnesses, and requires nu* == tau* exactly.
inline DualityCertificate duality_certificate( const Hypergraph& h )
{
    DualityCertificate cert;
    cert.matching = max_fractional_matching( h );
    cert.cover = min_fractional_cover( h );
    cert.nu_star = cert.matching.value;
    cert.tau_star = cert.cover.value;
    if ( !is_fractional_matching( h, cert.matching ) )
        throw SolverError( "matching witness is infeasible" );
    if ( !is_fractional_cover( h, cert.cover ) )
        throw SolverError( "cover witness is infeasible" );
    if ( cert.nu_star != cert.tau_star )
        throw SolverError( "strong duality violated: nu* = " + to_string( cert.nu_star )
                           + ", tau* = " + to_string( cert.tau_star ) );
    return cert;
}

inline Rational fractional_matching_number( const Hypergraph& h )
{
    return detail::solve_or_throw( detail::matching_lp( h ), "fractional matching" ).value;
}

// Least E0 such that every l-graph on [m] with at least E0 edges has a
// fractional matching of size s. The witness has E0 - 1 edges and
// nu* < s. When no l-graph on [m] reaches s the result is C(m,l) + 1.
inline ThresholdResult exact_f_0_s( std::size_t l, std::size_t m, const Rational& s,
                                    const EnumOptions& options = {} )
{
    if ( s < 0 )
        throw InvalidQuery( "fractional matching size must be nonnegative" );
    EdgeUniverse universe( m, l, options.limits );
    if ( s == 0 )
        return ThresholdResult{};

    // An integer matching of size ceil(s) already certifies nu* >= s.
    Integer ceil_s;
    mpz_cdiv_q( ceil_s.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t() );
    std::size_t integral_need = ceil_s.get_ui();
    bool integral_possible = integral_need * l <= m;

    return detail::threshold_search(
        universe, options.threads,
        []( std::uint64_t mask ) { return static_cast< std::size_t >( std::popcount( mask ) ); },
        [ & ]( std::uint64_t mask ) {
            if ( integral_possible && universe.has_matching( mask, integral_need ) )
                return false;
            return fractional_matching_number( universe.hypergraph( mask ) ) < s;
        } );
}

} // namespace fracmatch
