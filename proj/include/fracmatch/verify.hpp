#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bridge.hpp"
#include "distribution.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "fraclp.hpp"
#include "hypergraph.hpp"
#include "theta_search.hpp"
#include "thresholds.hpp"

namespace fracmatch {

struct VerifyCheck
{
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport
{
    std::vector< VerifyCheck > checks;

    std::size_t passed() const
    {
        std::size_t n = 0;
        for ( const auto& c : checks )
            n += c.pass;
        return n;
    }
    std::size_t failed() const { return checks.size() - passed(); }
};

struct VerifyOptions
{
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t random_graphs = 40;
    EnumLimits enumeration;
    TailLimits tail;
};

namespace detail {

inline Hypergraph random_graph( std::mt19937_64& rng, std::size_t n, std::size_t k )
{
    std::bernoulli_distribution keep( 0.2 + 0.6 * static_cast< double >( rng() % 100 ) / 100.0 );
    std::vector< Edge > edges;
    for_each_subset( n, k, [ & ]( const std::vector< Vertex >& s ) {
        if ( keep( rng ) )
            edges.push_back( s );
        return true;
    } );
    return Hypergraph( n, k, std::move( edges ) );
}

} // namespace detail

// Runs every module's invariants on seeded instances. Failures are recorded;
// a proved-bound exceedance in the search throws BugDetected instead.
inline VerifyReport run_invariant_suite( const VerifyOptions& options = {} )
{
    VerifyReport report;
    auto check = [ & ]( const std::string& module, const std::string& name, const std::function< std::string() >& body ) {
        VerifyCheck c{ module, name, true, "" };
        try {
            c.detail = body();
            if ( !c.detail.empty() )
                c.pass = false;
        } catch ( const BugDetected& ) {
            throw;
        } catch ( const std::exception& e ) {
            c.pass = false;
            c.detail = e.what();
        }
        report.checks.push_back( std::move( c ) );
    };

    std::mt19937_64 rng( options.seed );
    std::vector< Hypergraph > graphs;
    for ( std::size_t i = 0; i < options.random_graphs; ++i ) {
        std::size_t k = 2 + i % 2;
        std::size_t n = k + 1 + rng() % ( 8 - k );
        graphs.push_back( detail::random_graph( rng, n, k ) );
    }

    check( "hypergraph", "degree sum equals k |E|", [ & ]() -> std::string {
        for ( const auto& h : graphs ) {
            std::size_t total = 0;
            for ( Vertex v = 0; v < h.n(); ++v )
                total += degree( h, { v } );
            if ( total != h.k() * h.edge_count() )
                return "handshake identity fails";
        }
        return "";
    } );
    check( "hypergraph", "min degree nonincreasing in d", [ & ]() -> std::string {
        for ( const auto& h : graphs )
            for ( std::size_t d = 1; d < h.k() && d <= h.n(); ++d )
                if ( min_d_degree( h, d ) > min_d_degree( h, d - 1 ) )
                    return "min d-degree increased with d";
        return "";
    } );
    check( "hypergraph", "maximum matching is a matching", [ & ]() -> std::string {
        for ( const auto& h : graphs ) {
            auto m = max_matching( h );
            if ( !is_matching_in( h, m ) || m.size() * h.k() > h.n() )
                return "invalid matching";
        }
        return "";
    } );
    check( "hypergraph", "exact Dirac thresholds", [ & ]() -> std::string {
        EnumOptions eo{ options.enumeration, options.threads };
        if ( exact_m_d_s( 2, 4, 1, 2, eo ).threshold != 2 )
            return "m_1(2,4) != 2";
        if ( exact_m_d_s( 2, 6, 1, 3, eo ).threshold != 3 )
            return "m_1(2,6) != 3";
        return "";
    } );

    check( "fraclp", "strong duality with feasible witnesses", [ & ]() -> std::string {
        for ( const auto& h : graphs ) {
            auto c = duality_certificate( h );
            if ( !is_fractional_matching( h, c.matching ) || !is_fractional_cover( h, c.cover ) )
                return "infeasible witness";
        }
        return "";
    } );
    check( "fraclp", "nu <= nu* <= n/k", [ & ]() -> std::string {
        for ( const auto& h : graphs ) {
            Rational nu = fractional_matching_number( h );
            if ( Rational( Integer( max_matching( h ).size() ) ) > nu )
                return "integer matching exceeds nu*";
            if ( nu > Rational( Integer( h.n() ) ) / Rational( Integer( h.k() ) ) )
                return "nu* exceeds n/k";
        }
        return "";
    } );
    check( "fraclp", "isolated vertices do not change nu*", [ & ]() -> std::string {
        for ( const auto& h : graphs )
            if ( fractional_matching_number( h ) != fractional_matching_number( Hypergraph( h.n() + 2, h.k(), h.edges() ) ) )
                return "padding changed nu*";
        return "";
    } );

    check( "thresholds", "bounds lie in [0,1]", [ & ]() -> std::string {
        for ( long k = 2; k <= 24; ++k )
            for ( long d = 1; d < k; ++d )
                matching_bound_report( k, d );
        for ( long l = 1; l <= 24; ++l )
            for ( long d = 1; d <= 24; ++d )
                deviation_bound_report( l, Rational( d ) );
        return "";
    } );
    check( "thresholds", "conjectured threshold below proved bounds", [ & ]() -> std::string {
        for ( long k = 3; k <= 24; ++k )
            for ( long d = 1; 2 * d <= k; ++d ) {
                auto r = matching_bound_report( k, d );
                for ( const auto& e : r.entries )
                    if ( e.status == BoundStatus::Proved && e.value < r.find( "conjectured" )->value )
                        return e.name + " below the conjectured threshold at k=" + std::to_string( k );
            }
        return "";
    } );

    std::vector< DiscreteDistribution > laws{
        conjectured_extremizer( 2, Rational( 1 ) ),
        DiscreteDistribution( { { make_rational( 1, 2 ), make_rational( 1, 2 ) }, { make_rational( 3, 2 ), make_rational( 1, 2 ) } } ),
        DiscreteDistribution( { { Rational( 0 ), make_rational( 1, 3 ) }, { Rational( 1 ), make_rational( 1, 3 ) },
                                { Rational( 2 ), make_rational( 1, 3 ) } } ),
    };
    check( "feige", "extremizer attains the conjectured value", [ & ]() -> std::string {
        for ( long l = 1; l <= 6; ++l )
            for ( long d = 1; d <= 3; ++d )
                if ( iid_tail( conjectured_extremizer( l, Rational( d ) ), l, Rational( l + d ), options.tail )
                     != feige_conjecture_value( l, Rational( d ) ) )
                    return "identity fails at l=" + std::to_string( l );
        return "";
    } );
    check( "feige", "tail monotone in t and below Markov", [ & ]() -> std::string {
        for ( const auto& law : laws )
            for ( long l = 1; l <= 4; ++l ) {
                Rational prev = 1;
                for ( long j = 0; j <= 4 * ( l + 3 ); ++j ) {
                    Rational p = iid_tail( law, l, make_rational( j, 4 ), options.tail );
                    if ( p > prev )
                        return "tail increased with t";
                    prev = p;
                }
                for ( long d = 1; d <= 3; ++d )
                    if ( iid_tail( law, l, Rational( l + d ), options.tail ) > markov_bound( l, Rational( d ) ) )
                        return "Markov violated";
            }
        return "";
    } );
    check( "feige", "damping keeps the mean and the tail inequality", [ & ]() -> std::string {
        for ( const auto& law : laws )
            for ( long l : { 2L, 3L } )
                for ( Rational delta : { make_rational( 1, 10 ), make_rational( 1, 100 ) } ) {
                    auto y = damping_transform( law, delta );
                    if ( mean( y ) != mean( law ) )
                        return "mean changed";
                    Rational lhs = iid_tail( y, l, Rational( l + 1 ), options.tail );
                    Rational rhs = pow( 1 - delta, static_cast< unsigned long >( l ) )
                                   * iid_tail( law, l, ( l + 1 ) * ( 1 - delta ), options.tail );
                    if ( lhs < rhs )
                        return "damping inequality fails";
                }
        return "";
    } );
    check( "theta", "search stays within proved caps", [ & ]() -> std::string {
        ThetaSearchConfig cfg;
        cfg.threads = options.threads;
        cfg.random_seeds = 64;
        cfg.tail = options.tail;
        for ( long l = 2; l <= 4; ++l )
            for ( int support = 2; support <= 4; ++support ) {
                auto r = theta_lower_search( l, Rational( 1 ), support, 3000, options.seed + l, cfg );
                if ( r.value > proved_deviation_cap( l, Rational( 1 ) ) )
                    throw BugDetected( "falsifies proven bound - implementation bug" );
            }
        return "";
    } );

    check( "bridge", "worked certificate", [ & ]() -> std::string {
        auto c = dist_to_hypergraph( conjectured_extremizer( 2, Rational( 1 ) ), 2, 1, 2 );
        if ( !c.all_pass() || c.n != 9 || c.n1 != 20 || c.n2 != 18 )
            return "certificate differs";
        return "";
    } );
    check( "bridge", "round trip preserves the law", [ & ]() -> std::string {
        for ( const auto& law : laws )
            for ( long r : { 1L, 2L } ) {
                auto c = dist_to_hypergraph( law, 2, 1, r );
                if ( !c.all_pass() )
                    return "certificate check failed";
                if ( weight_distribution( c.weight ) != law.scaled( make_rational( 1, 3 ) ) )
                    return "weight law differs";
            }
        return "";
    } );
    check( "bridge", "probe gap dominated", [ & ]() -> std::string {
        auto p = equivalence_probe( 2, 1, conjectured_extremizer( 2, Rational( 1 ) ), { 1, 2, 4, 8 } );
        return p.all_dominated() ? "" : "gap bound violated";
    } );
    return report;
}

} // namespace fracmatch
