#include <gtest/gtest.h>

#include "fracmatch/enumerate.hpp"
#include "fracmatch/fraclp.hpp"
#include "oracles.hpp"

using namespace fracmatch;

TEST( Enumerate, VisitsEveryLabeledGraphOnce )
{
    std::uint64_t seen = 0;
    std::uint64_t visited = enumerate_hypergraphs( 4, 2, std::nullopt, [ & ]( const Hypergraph& ) {
        ++seen;
        return true;
    } );
    EXPECT_EQ( visited, 64u );
    EXPECT_EQ( seen, 64u );
    EXPECT_EQ( enumerate_hypergraphs( 3, 2, std::nullopt, []( const Hypergraph& ) { return true; } ), 8u );
}

TEST( Enumerate, DegreeFilterMatchesBruteForce )
{
    for ( std::size_t at_least = 0; at_least <= 3; ++at_least ) {
        std::uint64_t expected = 0;
        enumerate_hypergraphs( 5, 2, std::nullopt, [ & ]( const Hypergraph& h ) {
            expected += oracle::naive_min_degree( h, 1 ) >= at_least;
            return true;
        } );
        std::uint64_t got = enumerate_hypergraphs( 5, 2, DegreeFilter{ 1, at_least }, [ & ]( const Hypergraph& h ) {
            EXPECT_GE( oracle::naive_min_degree( h, 1 ), at_least );
            return true;
        } );
        EXPECT_EQ( got, expected ) << "at_least=" << at_least;
    }
}

TEST( Enumerate, VisitorCanStopEarly )
{
    std::uint64_t seen = 0;
    enumerate_hypergraphs( 4, 2, std::nullopt, [ & ]( const Hypergraph& ) { return ++seen < 5; } );
    EXPECT_EQ( seen, 5u );
}

TEST( Enumerate, CapReportsRequiredCount )
{
    try {
        EdgeUniverse universe( 7, 3, EnumLimits{ 1u << 20 } );
        FAIL() << "expected a resource limit";
    } catch ( const ResourceLimit& e ) {
        EXPECT_EQ( e.required(), "2^35 = 34359738368" );
    }
}

TEST( ExactMds, DiracCensusAtFourVertices )
{
    auto r = exact_m_d_s( 2, 4, 1, 2 );
    EXPECT_EQ( r.threshold, 2u );
    ASSERT_TRUE( r.witness );
    EXPECT_EQ( *r.witness, make::star( 4 ) );
    EXPECT_EQ( min_d_degree( *r.witness, 1 ), 1u );
    EXPECT_FALSE( has_perfect_matching( *r.witness ) );
}

TEST( ExactMds, DiracCensusAtSixVertices )
{
    auto r = exact_m_d_s( 2, 6, 1, 3 );
    EXPECT_EQ( r.threshold, 3u );
    ASSERT_TRUE( r.witness );
    EXPECT_TRUE( oracle::isomorphic( *r.witness, make::disjoint_cliques( 2, 3, 2 ) ) );
    EXPECT_EQ( min_d_degree( *r.witness, 1 ), 2u );
    EXPECT_FALSE( has_perfect_matching( *r.witness ) );
}

TEST( ExactMds, EdgeCountVersion )
{
    // Four edges on four vertices always contain a perfect matching; the
    // triangle plus an isolated vertex has three and none.
    auto r = exact_m_d_s( 2, 4, 0, 2 );
    EXPECT_EQ( r.threshold, 4u );
    ASSERT_TRUE( r.witness );
    EXPECT_EQ( r.witness->edge_count(), 3u );
    EXPECT_FALSE( has_perfect_matching( *r.witness ) );
}

TEST( ExactMds, ThreeUniformSix )
{
    auto r = exact_m_d_s( 3, 6, 1, 2 );
    ASSERT_TRUE( r.witness );
    EXPECT_EQ( min_d_degree( *r.witness, 1 ), r.threshold - 1 );
    EXPECT_LT( max_matching( *r.witness ).size(), 2u );
    // Brute force over all 2^20 graphs: a perfect matching of a 3-graph on
    // six vertices is an edge whose complement is also an edge.
    std::size_t worst = 0;
    enumerate_hypergraphs( 6, 3, std::nullopt, [ & ]( const Hypergraph& h ) {
        std::vector< char > present( 64, 0 );
        std::vector< std::size_t > deg( 6, 0 );
        for ( const auto& e : h.edges() ) {
            unsigned mask = 0;
            for ( Vertex v : e ) {
                mask |= 1u << v;
                ++deg[ v ];
            }
            present[ mask ] = 1;
        }
        bool perfect = false;
        for ( unsigned mask = 0; mask < 64; ++mask )
            perfect = perfect || ( present[ mask ] && present[ 63u ^ mask ] );
        if ( !perfect )
            worst = std::max( worst, *std::min_element( deg.begin(), deg.end() ) );
        return true;
    } );
    EXPECT_EQ( r.threshold, worst + 1 );
}

TEST( ExactMds, SmallMatchingSizesAreMonotone )
{
    std::size_t prev = 0;
    for ( std::size_t s = 0; s <= 3; ++s ) {
        auto r = exact_m_d_s( 2, 6, 1, s );
        EXPECT_GE( r.threshold, prev );
        prev = r.threshold;
    }
    EXPECT_EQ( exact_m_d_s( 2, 6, 1, 0 ).threshold, 0u );
}

TEST( ExactMds, RejectsBadParameters )
{
    EXPECT_THROW( exact_m_d_s( 2, 4, 2, 2 ), InvalidQuery );
    EXPECT_THROW( exact_m_d_s( 2, 4, 1, 3 ), InvalidQuery );
    EXPECT_THROW( exact_m_d_s( 3, 9, 1, 3 ), ResourceLimit );
}

TEST( ExactMds, ThreadCountDoesNotChangeResult )
{
    auto one = exact_m_d_s( 2, 6, 1, 3, EnumOptions{ {}, 1 } );
    auto four = exact_m_d_s( 2, 6, 1, 3, EnumOptions{ {}, 4 } );
    EXPECT_EQ( one.threshold, four.threshold );
    EXPECT_EQ( one.witness, four.witness );
    EXPECT_EQ( one.examined, four.examined );
}

TEST( ExactF0, EdgeThresholdsForFractionalMatchings )
{
    EXPECT_EQ( exact_f_0_s( 2, 4, Rational( 2 ) ).threshold, 4u );
    auto r = exact_f_0_s( 2, 3, make_rational( 3, 2 ) );
    EXPECT_EQ( r.threshold, 3u );
    ASSERT_TRUE( r.witness );
    EXPECT_LT( fractional_matching_number( *r.witness ), make_rational( 3, 2 ) );
    EXPECT_EQ( exact_f_0_s( 2, 4, Rational( 0 ) ).threshold, 0u );
    // No graph on three vertices has nu* = 2.
    EXPECT_EQ( exact_f_0_s( 2, 3, Rational( 2 ) ).threshold, 4u );
}

TEST( ExactF0, MatchesBruteForce )
{
    for ( Rational s : { Rational( 1 ), make_rational( 3, 2 ), Rational( 2 ), make_rational( 5, 2 ) } ) {
        std::size_t worst = 0;
        bool any = false;
        enumerate_hypergraphs( 5, 2, std::nullopt, [ & ]( const Hypergraph& h ) {
            if ( fractional_matching_number( h ) < s ) {
                any = true;
                worst = std::max( worst, h.edge_count() );
            }
            return true;
        } );
        ASSERT_TRUE( any );
        EXPECT_EQ( exact_f_0_s( 2, 5, s ).threshold, worst + 1 ) << to_string( s );
    }
}
