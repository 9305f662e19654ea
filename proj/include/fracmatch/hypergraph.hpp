#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace fracmatch {

using Vertex = std::uint32_t;
using Edge = std::vector< Vertex >;

// A k-uniform hypergraph on the vertex set {0, ..., n-1}.
//
// Edges are stored canonically: each edge sorted ascending, the edge list
// sorted lexicographically. Two hypergraphs compare equal iff they have the
// same n, k and edge set. Immutable after construction.
class Hypergraph
{
public:
    Hypergraph( std::size_t n, std::size_t k )
        : n_( n )
        , k_( k )
    {
        if ( k_ < 1 )
            throw ValidationError( "uniformity k must be at least 1" );
    }

    Hypergraph( std::size_t n, std::size_t k, std::vector< Edge > edges )
        : Hypergraph( n, k )
    {
        for ( auto& e : edges ) {
            if ( e.size() != k_ )
                throw ValidationError( "edge of size " + std::to_string( e.size() )
                                       + " in a " + std::to_string( k_ ) + "-graph" );
            std::sort( e.begin(), e.end() );
            for ( std::size_t i = 0; i < e.size(); ++i ) {
                if ( e[ i ] >= n_ )
                    throw ValidationError( "vertex " + std::to_string( e[ i ] )
                                           + " out of range for n=" + std::to_string( n_ ) );
                if ( i > 0 && e[ i ] == e[ i - 1 ] )
                    throw ValidationError( "edge repeats vertex " + std::to_string( e[ i ] ) );
            }
        }
        std::sort( edges.begin(), edges.end() );
        if ( auto it = std::adjacent_find( edges.begin(), edges.end() ); it != edges.end() )
            throw ValidationError( "duplicate edge" );
        edges_ = std::move( edges );
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const std::vector< Edge >& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==( const Hypergraph& other ) const = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector< Edge > edges_;
};

struct Matching
{
    std::vector< Edge > edges;

    std::size_t size() const { return edges.size(); }

    bool is_perfect_in( const Hypergraph& h ) const
    {
        return size() * h.k() == h.n();
    }
};

// Number of edges containing every vertex of `subset`.
inline std::size_t degree( const Hypergraph& h, std::span< const Vertex > subset )
{
    if ( subset.size() > h.k() )
        throw InvalidQuery( "degree query on a set of size " + std::to_string( subset.size() )
                            + " exceeds k=" + std::to_string( h.k() ) );
    std::vector< Vertex > s( subset.begin(), subset.end() );
    std::sort( s.begin(), s.end() );
    for ( std::size_t i = 0; i < s.size(); ++i ) {
        if ( s[ i ] >= h.n() )
            throw InvalidQuery( "vertex " + std::to_string( s[ i ] ) + " out of range" );
        if ( i > 0 && s[ i ] == s[ i - 1 ] )
            throw InvalidQuery( "degree query repeats vertex " + std::to_string( s[ i ] ) );
    }
    std::size_t count = 0;
    for ( const auto& e : h.edges() )
        if ( std::includes( e.begin(), e.end(), s.begin(), s.end() ) )
            ++count;
    return count;
}

inline std::size_t degree( const Hypergraph& h, std::initializer_list< Vertex > subset )
{
    return degree( h, std::span< const Vertex >( subset.begin(), subset.size() ) );
}

namespace detail {

// Calls f(subset) for every size-r subset of {0..n-1} in lexicographic order.
// Stops early when f returns false.
template < typename F >
bool for_each_subset( std::size_t n, std::size_t r, F&& f )
{
    if ( r > n )
        return true;
    std::vector< Vertex > s( r );
    for ( std::size_t i = 0; i < r; ++i )
        s[ i ] = static_cast< Vertex >( i );
    while ( true ) {
        if ( !f( std::as_const( s ) ) )
            return false;
        std::size_t i = r;
        while ( i > 0 && s[ i - 1 ] == n - r + ( i - 1 ) )
            --i;
        if ( i == 0 )
            return true;
        ++s[ i - 1 ];
        for ( std::size_t j = i; j < r; ++j )
            s[ j ] = s[ j - 1 ] + 1;
    }
}

} // namespace detail

// Minimum over all d-subsets S of degree(h, S). d = 0 gives the edge count.
inline std::size_t min_d_degree( const Hypergraph& h, std::size_t d )
{
    if ( d >= h.k() )
        throw InvalidQuery( "minimum d-degree needs d <= k-1 (d=" + std::to_string( d )
                            + ", k=" + std::to_string( h.k() ) + ")" );
    if ( d > h.n() )
        throw InvalidQuery( "no " + std::to_string( d ) + "-subsets of "
                            + std::to_string( h.n() ) + " vertices" );
    if ( d == 0 )
        return h.edge_count();

    // Accumulate degrees of every d-subset of every edge, then take the min
    // over all d-subsets of [n] (absent ones have degree 0).
    std::vector< std::size_t > counts( binomial( h.n(), d ).get_ui(), 0 );
    auto rank = [ &h, d ]( const std::vector< Vertex >& s ) {
        // Lexicographic rank of a sorted d-subset of [n].
        unsigned long r = 0;
        Vertex prev = 0;
        for ( std::size_t i = 0; i < d; ++i ) {
            Vertex start = i == 0 ? 0 : prev + 1;
            for ( Vertex v = start; v < s[ i ]; ++v )
                r += binomial( h.n() - v - 1, d - i - 1 ).get_ui();
            prev = s[ i ];
        }
        return r;
    };
    for ( const auto& e : h.edges() ) {
        detail::for_each_subset( e.size(), d, [ & ]( const std::vector< Vertex >& idx ) {
            std::vector< Vertex > s( d );
            for ( std::size_t i = 0; i < d; ++i )
                s[ i ] = e[ idx[ i ] ];
            ++counts[ rank( s ) ];
            return true;
        } );
    }
    return *std::min_element( counts.begin(), counts.end() );
}

namespace detail {

// Exhaustive branch-and-bound for a maximum matching. Branches on the lowest
// undecided vertex: either it is covered by one of its free incident edges
// (tried in lexicographic edge order) or it is left unmatched. Bound:
// current size + floor(undecided vertices / k).
class MatchingSearch
{
public:
    MatchingSearch( const Hypergraph& h, std::size_t target )
        : h_( h )
        , target_( target )
        , state_( h.n(), Free )
        , incident_( h.n() )
    {
        for ( std::size_t i = 0; i < h.edges().size(); ++i )
            incident_[ h.edges()[ i ].front() ].push_back( i );
    }

    std::vector< std::size_t > run()
    {
        undecided_ = h_.n();
        recurse( 0 );
        return best_;
    }

private:
    enum State : std::uint8_t { Free, Covered, Skipped };

    // Only edges whose smallest vertex is v can cover the lowest undecided
    // vertex v: all smaller vertices are already decided.
    bool recurse( Vertex from )
    {
        if ( current_.size() > best_.size() ) {
            best_ = current_;
            if ( best_.size() >= target_ )
                return true;
        }
        if ( current_.size() + undecided_ / h_.k() <= best_.size() )
            return false;

        Vertex v = from;
        while ( v < h_.n() && state_[ v ] != Free )
            ++v;
        if ( v >= h_.n() )
            return false;

        for ( std::size_t ei : incident_[ v ] ) {
            const Edge& e = h_.edges()[ ei ];
            if ( !std::all_of( e.begin(), e.end(), [ & ]( Vertex u ) { return state_[ u ] == Free; } ) )
                continue;
            for ( Vertex u : e )
                state_[ u ] = Covered;
            undecided_ -= h_.k();
            current_.push_back( ei );
            bool done = recurse( v + 1 );
            current_.pop_back();
            undecided_ += h_.k();
            for ( Vertex u : e )
                state_[ u ] = Free;
            if ( done )
                return true;
        }

        state_[ v ] = Skipped;
        --undecided_;
        bool done = recurse( v + 1 );
        ++undecided_;
        state_[ v ] = Free;
        return done;
    }

    const Hypergraph& h_;
    std::size_t target_;
    std::vector< State > state_;
    std::vector< std::vector< std::size_t > > incident_;
    std::vector< std::size_t > current_;
    std::vector< std::size_t > best_;
    std::size_t undecided_ = 0;
};

} // namespace detail

// A maximum-size matching. Deterministic for a given hypergraph.
inline Matching max_matching( const Hypergraph& h )
{
    std::size_t cap = h.n() / h.k();
    auto chosen = detail::MatchingSearch( h, cap ).run();
    Matching m;
    for ( std::size_t i : chosen )
        m.edges.push_back( h.edges()[ i ] );
    return m;
}

inline bool has_perfect_matching( const Hypergraph& h )
{
    if ( h.n() % h.k() != 0 )
        return false;
    return max_matching( h ).is_perfect_in( h );
}

inline bool is_matching_in( const Hypergraph& h, const Matching& m )
{
    std::vector< bool > used( h.n(), false );
    for ( const auto& e : m.edges ) {
        if ( !std::binary_search( h.edges().begin(), h.edges().end(), e ) )
            return false;
        for ( Vertex v : e ) {
            if ( used[ v ] )
                return false;
            used[ v ] = true;
        }
    }
    return true;
}

// Common families, used by tests and the CLI shorthand.
namespace make {

inline Hypergraph complete( std::size_t n, std::size_t k )
{
    std::vector< Edge > edges;
    detail::for_each_subset( n, k, [ & ]( const std::vector< Vertex >& s ) {
        edges.push_back( s );
        return true;
    } );
    return Hypergraph( n, k, std::move( edges ) );
}

inline Hypergraph empty( std::size_t n, std::size_t k )
{
    return Hypergraph( n, k );
}

// Star K_{1,n-1} centred at vertex 0 (a graph, k = 2).
inline Hypergraph star( std::size_t n )
{
    std::vector< Edge > edges;
    for ( Vertex v = 1; v < n; ++v )
        edges.push_back( { 0, v } );
    return Hypergraph( n, 2, std::move( edges ) );
}

// Path 0-1-...-(n-1).
inline Hypergraph path( std::size_t n )
{
    std::vector< Edge > edges;
    for ( Vertex v = 1; v < n; ++v )
        edges.push_back( { v - 1, v } );
    return Hypergraph( n, 2, std::move( edges ) );
}

// `copies` vertex-disjoint complete k-graphs on `size` vertices each.
inline Hypergraph disjoint_cliques( std::size_t copies, std::size_t size, std::size_t k )
{
    std::vector< Edge > edges;
    for ( std::size_t c = 0; c < copies; ++c ) {
        Vertex offset = static_cast< Vertex >( c * size );
        detail::for_each_subset( size, k, [ & ]( const std::vector< Vertex >& s ) {
            Edge e = s;
            for ( auto& v : e )
                v += offset;
            edges.push_back( std::move( e ) );
            return true;
        } );
    }
    return Hypergraph( copies * size, k, std::move( edges ) );
}

} // namespace make

} // namespace fracmatch
