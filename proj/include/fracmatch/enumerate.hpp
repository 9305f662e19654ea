#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "hypergraph.hpp"
#include "parallel.hpp"
#include "rational.hpp"

namespace fracmatch {

struct EnumLimits
{
    // Maximum number of labeled hypergraphs a single enumeration may visit.
    // The default 2^30 corresponds to C(n,k) <= 30.
    std::uint64_t max_hypergraphs = std::uint64_t( 1 ) << 30;
};

struct EnumOptions
{
    EnumLimits limits;
    unsigned threads = 1;
};

// Keep hypergraphs with minimum d-degree at least `at_least`.
struct DegreeFilter
{
    std::size_t d = 0;
    std::size_t at_least = 0;
};

// All C(n,k) candidate edges of a k-graph on [n], in lexicographic order,
// with per-edge vertex masks. Edge i corresponds to bit i of an edge mask.
class EdgeUniverse
{
public:
    EdgeUniverse( std::size_t n, std::size_t k, const EnumLimits& limits )
        : n_( n )
        , k_( k )
    {
        if ( k < 1 )
            throw ValidationError( "uniformity k must be at least 1" );
        Integer c = binomial( n, k );
        Integer required = pow( Integer( 2 ), c.get_ui() );
        if ( c > 62 || required > Integer( std::to_string( limits.max_hypergraphs ) ) )
            throw ResourceLimit( "enumeration over all " + std::to_string( k ) + "-graphs on "
                                     + std::to_string( n ) + " vertices exceeds the cap of "
                                     + std::to_string( limits.max_hypergraphs ) + " hypergraphs",
                                 "2^" + c.get_str() + " = " + required.get_str() );
        detail::for_each_subset( n, k, [ & ]( const std::vector< Vertex >& s ) {
            edges_.push_back( s );
            return true;
        } );
        if ( n <= 64 ) {
            by_low_vertex_.resize( n );
            for ( std::size_t i = 0; i < edges_.size(); ++i ) {
                std::uint64_t m = 0;
                for ( Vertex v : edges_[ i ] )
                    m |= std::uint64_t( 1 ) << v;
                vertex_masks_.push_back( m );
                by_low_vertex_[ edges_[ i ].front() ].push_back( i );
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t size() const { return edges_.size(); }
    std::uint64_t hypergraph_count() const { return std::uint64_t( 1 ) << edges_.size(); }
    const std::vector< Edge >& edges() const { return edges_; }

    Hypergraph hypergraph( std::uint64_t mask ) const
    {
        std::vector< Edge > chosen;
        for ( std::size_t i = 0; i < edges_.size(); ++i )
            if ( ( mask >> i ) & 1u )
                chosen.push_back( edges_[ i ] );
        return Hypergraph( n_, k_, std::move( chosen ) );
    }

    // For each d-subset of [n] (lexicographic), the mask of edges containing it.
    std::vector< std::uint64_t > containing_masks( std::size_t d ) const
    {
        std::vector< std::uint64_t > out;
        detail::for_each_subset( n_, d, [ & ]( const std::vector< Vertex >& s ) {
            std::uint64_t m = 0;
            for ( std::size_t i = 0; i < edges_.size(); ++i )
                if ( std::includes( edges_[ i ].begin(), edges_[ i ].end(), s.begin(), s.end() ) )
                    m |= std::uint64_t( 1 ) << i;
            out.push_back( m );
            return true;
        } );
        return out;
    }

    std::size_t min_degree( std::uint64_t mask, const std::vector< std::uint64_t >& containing ) const
    {
        std::size_t best = std::numeric_limits< std::size_t >::max();
        for ( std::uint64_t c : containing )
            best = std::min< std::size_t >( best, std::popcount( mask & c ) );
        return best;
    }

    // Whether the hypergraph given by `mask` has a matching with `need` edges.
    bool has_matching( std::uint64_t mask, std::size_t need ) const
    {
        if ( n_ > 64 )
            return max_matching( hypergraph( mask ) ).size() >= need;
        std::uint64_t all = n_ == 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << n_ ) - 1;
        return search( mask, all, need );
    }

private:
    bool search( std::uint64_t mask, std::uint64_t undecided, std::size_t need ) const
    {
        if ( need == 0 )
            return true;
        if ( static_cast< std::size_t >( std::popcount( undecided ) ) < need * k_ )
            return false;
        unsigned v = static_cast< unsigned >( std::countr_zero( undecided ) );
        for ( std::size_t e : by_low_vertex_[ v ] ) {
            if ( !( ( mask >> e ) & 1u ) || ( vertex_masks_[ e ] & ~undecided ) )
                continue;
            if ( search( mask, undecided & ~vertex_masks_[ e ], need - 1 ) )
                return true;
        }
        return search( mask, undecided & ~( std::uint64_t( 1 ) << v ), need );
    }

    std::size_t n_;
    std::size_t k_;
    std::vector< Edge > edges_;
    std::vector< std::uint64_t > vertex_masks_;
    std::vector< std::vector< std::size_t > > by_low_vertex_;
};

// Visits every labeled k-graph on [n] exactly once, in increasing edge-mask
// order. With a filter, subtrees in which some d-subset can no longer reach
// the required degree are pruned. The visitor returns false to stop.
// Returns the number of hypergraphs visited.
template < typename Visitor >
std::uint64_t enumerate_hypergraphs( std::size_t n, std::size_t k,
                                     const std::optional< DegreeFilter >& filter,
                                     Visitor&& visit, const EnumLimits& limits = {} )
{
    EdgeUniverse universe( n, k, limits );
    std::size_t edges = universe.size();

    if ( filter && filter->d >= k )
        throw InvalidQuery( "degree filter needs d <= k-1" );
    if ( filter && filter->d > n )
        throw InvalidQuery( "degree filter d exceeds n" );

    // reach[j]: degree of d-subset j if every undecided edge were included.
    std::vector< std::uint64_t > containing;
    std::vector< std::size_t > reach;
    std::vector< std::vector< std::size_t > > subsets_of_edge( edges );
    if ( filter ) {
        containing = universe.containing_masks( filter->d );
        for ( std::size_t j = 0; j < containing.size(); ++j ) {
            reach.push_back( std::popcount( containing[ j ] ) );
            for ( std::size_t e = 0; e < edges; ++e )
                if ( ( containing[ j ] >> e ) & 1u )
                    subsets_of_edge[ e ].push_back( j );
        }
        for ( std::size_t r : reach )
            if ( r < filter->at_least )
                return 0;
    }

    std::uint64_t visited = 0;
    bool stopped = false;
    // Decide edges from the highest index down, excluding before including,
    // so that complete masks come out in increasing numeric order.
    auto recurse = [ & ]( auto&& self, std::size_t remaining, std::uint64_t mask ) -> void {
        if ( stopped )
            return;
        if ( remaining == 0 ) {
            ++visited;
            if ( !visit( universe.hypergraph( mask ) ) )
                stopped = true;
            return;
        }
        std::size_t e = remaining - 1;
        bool feasible = true;
        if ( filter ) {
            for ( std::size_t j : subsets_of_edge[ e ] )
                if ( --reach[ j ] < filter->at_least )
                    feasible = false;
        }
        if ( feasible )
            self( self, e, mask );
        if ( filter )
            for ( std::size_t j : subsets_of_edge[ e ] )
                ++reach[ j ];
        self( self, e, mask | ( std::uint64_t( 1 ) << e ) );
    };
    recurse( recurse, edges, 0 );
    return visited;
}

struct ThresholdResult
{
    // Least threshold value forcing the property in every hypergraph.
    std::size_t threshold = 0;
    // A hypergraph at parameter value threshold - 1 lacking the property;
    // empty when threshold is 0.
    std::optional< Hypergraph > witness;
    std::uint64_t examined = 0;
};

namespace detail {

// Per-chunk best failing hypergraph: maximal parameter, then fewest edges,
// then smallest mask.
struct FailureCandidate
{
    bool found = false;
    std::size_t parameter = 0;
    std::size_t edges = 0;
    std::uint64_t mask = 0;
    std::uint64_t examined = 0;

    bool beats( const FailureCandidate& o ) const
    {
        if ( !found )
            return false;
        if ( !o.found )
            return true;
        if ( parameter != o.parameter )
            return parameter > o.parameter;
        if ( edges != o.edges )
            return edges < o.edges;
        return mask < o.mask;
    }

    // Whether a hypergraph with these statistics could still beat *this.
    bool may_lose_to( std::size_t p, std::size_t e ) const
    {
        if ( !found )
            return true;
        return p > parameter || ( p == parameter && e < edges );
    }
};

// Runs `fails(mask)` over every mask in [0, 2^C), with `parameter(mask)`
// the degree-like statistic, and folds the failures deterministically.
template < typename Parameter, typename Fails >
ThresholdResult threshold_search( const EdgeUniverse& universe, unsigned threads,
                                  Parameter&& parameter, Fails&& fails )
{
    auto chunks = parallel_chunks< FailureCandidate >(
        universe.hypergraph_count(), threads,
        [ & ]( std::uint64_t begin, std::uint64_t end ) {
            FailureCandidate best;
            for ( std::uint64_t mask = begin; mask < end; ++mask ) {
                ++best.examined;
                std::size_t p = parameter( mask );
                std::size_t e = static_cast< std::size_t >( std::popcount( mask ) );
                if ( !best.may_lose_to( p, e ) )
                    continue;
                if ( fails( mask ) ) {
                    best.found = true;
                    best.parameter = p;
                    best.edges = e;
                    best.mask = mask;
                }
            }
            return best;
        } );

    FailureCandidate overall;
    std::uint64_t examined = 0;
    for ( const auto& c : chunks ) {
        examined += c.examined;
        if ( c.beats( overall ) )
            overall = c;
    }
    ThresholdResult result;
    result.examined = examined;
    if ( overall.found ) {
        result.threshold = overall.parameter + 1;
        result.witness = universe.hypergraph( overall.mask );
    }
    return result;
}

} // namespace detail

// Least m such that every k-graph on [n] with minimum d-degree >= m has a
// matching of size s, by exhaustive enumeration. The witness has minimum
// d-degree m-1 and no matching of size s.
inline ThresholdResult exact_m_d_s( std::size_t k, std::size_t n, std::size_t d, std::size_t s,
                                    const EnumOptions& options = {} )
{
    if ( d >= k )
        throw InvalidQuery( "m_d^s needs 0 <= d <= k-1" );
    if ( s * k > n )
        throw InvalidQuery( "m_d^s needs s <= n/k" );
    if ( d > n )
        throw InvalidQuery( "m_d^s needs d <= n" );
    EdgeUniverse universe( n, k, options.limits );
    if ( s == 0 ) {
        ThresholdResult r;
        return r;
    }
    auto containing = universe.containing_masks( d );
    return detail::threshold_search(
        universe, options.threads,
        [ & ]( std::uint64_t mask ) { return universe.min_degree( mask, containing ); },
        [ & ]( std::uint64_t mask ) { return !universe.has_matching( mask, s ); } );
}

} // namespace fracmatch
