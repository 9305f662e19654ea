#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "fracmatch/distribution.hpp"
#include "fracmatch/hypergraph.hpp"
#include "fracmatch/rational.hpp"

namespace fracmatch::oracle {

// Largest set of pairwise disjoint edges, over all 2^|E| edge subsets.
inline std::size_t naive_matching_number( const Hypergraph& h )
{
    const auto& edges = h.edges();
    std::size_t best = 0;
    std::uint64_t limit = std::uint64_t( 1 ) << edges.size();
    for ( std::uint64_t mask = 0; mask < limit; ++mask ) {
        std::vector< int > used( h.n(), 0 );
        bool ok = true;
        std::size_t size = 0;
        for ( std::size_t i = 0; i < edges.size() && ok; ++i ) {
            if ( !( ( mask >> i ) & 1u ) )
                continue;
            ++size;
            for ( Vertex v : edges[ i ] )
                if ( used[ v ]++ )
                    ok = false;
        }
        if ( ok )
            best = std::max( best, size );
    }
    return best;
}

inline std::size_t naive_degree( const Hypergraph& h, const std::vector< Vertex >& s )
{
    std::size_t count = 0;
    for ( const auto& e : h.edges() ) {
        bool all = true;
        for ( Vertex v : s )
            if ( std::find( e.begin(), e.end(), v ) == e.end() )
                all = false;
        count += all;
    }
    return count;
}

// Minimum degree over d-subsets, generating subsets by bitmask.
inline std::size_t naive_min_degree( const Hypergraph& h, std::size_t d )
{
    std::size_t best = SIZE_MAX;
    for ( std::uint32_t mask = 0; mask < ( 1u << h.n() ); ++mask ) {
        if ( static_cast< std::size_t >( __builtin_popcount( mask ) ) != d )
            continue;
        std::vector< Vertex > s;
        for ( Vertex v = 0; v < h.n(); ++v )
            if ( ( mask >> v ) & 1u )
                s.push_back( v );
        best = std::min( best, naive_degree( h, s ) );
    }
    return best;
}

// Pr[X_1 + ... + X_l >= t] by walking every outcome tuple.
inline Rational enumerate_tail( const DiscreteDistribution& dist, long l, const Rational& t )
{
    const auto& atoms = dist.atoms();
    std::vector< std::size_t > idx( l, 0 );
    Rational total;
    while ( true ) {
        Rational sum, prob = 1;
        for ( long i = 0; i < l; ++i ) {
            sum += atoms[ idx[ i ] ].value;
            prob *= atoms[ idx[ i ] ].prob;
        }
        if ( sum >= t )
            total += prob;
        long i = 0;
        while ( i < l && ++idx[ i ] == atoms.size() )
            idx[ i++ ] = 0;
        if ( i == l )
            break;
    }
    return total;
}

// Solves the square system M x = rhs exactly; nullopt when singular.
inline std::optional< std::vector< Rational > > solve_square( std::vector< std::vector< Rational > > m,
                                                              std::vector< Rational > rhs )
{
    const std::size_t n = rhs.size();
    for ( std::size_t col = 0; col < n; ++col ) {
        std::size_t piv = col;
        while ( piv < n && m[ piv ][ col ] == 0 )
            ++piv;
        if ( piv == n )
            return std::nullopt;
        std::swap( m[ piv ], m[ col ] );
        std::swap( rhs[ piv ], rhs[ col ] );
        for ( std::size_t r = 0; r < n; ++r ) {
            if ( r == col || m[ r ][ col ] == 0 )
                continue;
            Rational f = m[ r ][ col ] / m[ col ][ col ];
            for ( std::size_t c = col; c < n; ++c )
                m[ r ][ c ] -= f * m[ col ][ c ];
            rhs[ r ] -= f * rhs[ col ];
        }
    }
    std::vector< Rational > x( n );
    for ( std::size_t i = 0; i < n; ++i )
        x[ i ] = rhs[ i ] / m[ i ][ i ];
    return x;
}

struct CoverVertex
{
    Rational value;
    std::vector< Rational > weights;
    // Common denominator of the weights.
    Integer denominator;
};

// Minimum fractional cover by enumerating every basic point of
// {t >= 0, sum_{v in e} t_v >= 1}: choose n tight constraints, solve, keep
// the feasible ones. Optimal vertices automatically satisfy t <= 1.
inline std::optional< CoverVertex > cover_by_vertex_enumeration( const Hypergraph& h )
{
    const std::size_t n = h.n();
    std::vector< std::vector< Rational > > rows;
    std::vector< Rational > rhs;
    for ( const auto& e : h.edges() ) {
        std::vector< Rational > row( n );
        for ( Vertex v : e )
            row[ v ] = 1;
        rows.push_back( row );
        rhs.push_back( 1 );
    }
    for ( std::size_t v = 0; v < n; ++v ) {
        std::vector< Rational > row( n );
        row[ v ] = 1;
        rows.push_back( row );
        rhs.push_back( 0 );
    }
    std::optional< CoverVertex > best;
    std::vector< std::size_t > pick( n );
    std::function< void( std::size_t, std::size_t ) > rec = [ & ]( std::size_t pos, std::size_t start ) {
        if ( pos == n ) {
            std::vector< std::vector< Rational > > m;
            std::vector< Rational > b;
            for ( std::size_t i : pick ) {
                m.push_back( rows[ i ] );
                b.push_back( rhs[ i ] );
            }
            auto x = solve_square( m, b );
            if ( !x )
                return;
            for ( const auto& xi : *x )
                if ( xi < 0 )
                    return;
            for ( std::size_t i = 0; i < h.edge_count(); ++i ) {
                Rational s;
                for ( std::size_t v = 0; v < n; ++v )
                    s += rows[ i ][ v ] * ( *x )[ v ];
                if ( s < 1 )
                    return;
            }
            Rational value;
            Integer den = 1;
            for ( const auto& xi : *x ) {
                value += xi;
                den = lcm( den, Integer( xi.get_den() ) );
            }
            if ( !best || value < best->value )
                best = CoverVertex{ value, *x, den };
            return;
        }
        for ( std::size_t i = start; i < rows.size(); ++i ) {
            pick[ pos ] = i;
            rec( pos + 1, i + 1 );
        }
    };
    rec( 0, 0 );
    return best;
}

// Literal grid search: min over q in 1..max_den and integer a_v in [0,q]
// with sum_{v in e} a_v >= q of (sum a_v) / q.
inline Rational grid_cover_minimum( const Hypergraph& h, long max_den )
{
    const std::size_t n = h.n();
    // Edges grouped by their largest vertex, checked once it is assigned.
    std::vector< std::vector< const Edge* > > closing( n );
    for ( const auto& e : h.edges() )
        closing[ e.back() ].push_back( &e );
    Rational best = Integer( n );
    for ( long q = 1; q <= max_den; ++q ) {
        std::vector< long > a( n, 0 );
        long best_sum = static_cast< long >( n ) * q + 1;
        std::function< void( std::size_t, long ) > rec = [ & ]( std::size_t v, long sum ) {
            if ( sum >= best_sum )
                return;
            if ( v == n ) {
                best_sum = sum;
                return;
            }
            for ( long x = 0; x <= q && sum + x < best_sum; ++x ) {
                a[ v ] = x;
                bool ok = true;
                for ( const Edge* e : closing[ v ] ) {
                    long s = 0;
                    for ( Vertex u : *e )
                        s += a[ u ];
                    if ( s < q ) {
                        ok = false;
                        break;
                    }
                }
                if ( ok )
                    rec( v + 1, sum + x );
            }
            a[ v ] = 0;
        };
        rec( 0, 0 );
        if ( best_sum <= static_cast< long >( n ) * q ) {
            Rational cand = make_rational( best_sum, q );
            if ( cand < best )
                best = cand;
        }
    }
    return best;
}

// Isomorphism by trying every vertex relabeling; fine for n <= 8.
inline bool isomorphic( const Hypergraph& a, const Hypergraph& b )
{
    if ( a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count() )
        return false;
    std::vector< Vertex > perm( a.n() );
    for ( Vertex v = 0; v < a.n(); ++v )
        perm[ v ] = v;
    do {
        std::vector< Edge > mapped;
        for ( const auto& e : a.edges() ) {
            Edge m;
            for ( Vertex v : e )
                m.push_back( perm[ v ] );
            mapped.push_back( m );
        }
        if ( Hypergraph( a.n(), a.k(), mapped ) == b )
            return true;
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    return false;
}

// Uniformly random edge subset of the complete k-graph on [n], keeping each
// edge with probability p.
inline Hypergraph random_hypergraph( std::mt19937_64& rng, std::size_t n, std::size_t k, double p )
{
    std::vector< Edge > edges;
    std::bernoulli_distribution keep( p );
    std::vector< Vertex > s( k );
    std::function< void( std::size_t, Vertex ) > rec = [ & ]( std::size_t pos, Vertex start ) {
        if ( pos == k ) {
            if ( keep( rng ) )
                edges.push_back( s );
            return;
        }
        for ( Vertex v = start; v < n; ++v ) {
            s[ pos ] = v;
            rec( pos + 1, v + 1 );
        }
    };
    rec( 0, 0 );
    return Hypergraph( n, k, std::move( edges ) );
}

} // namespace fracmatch::oracle
