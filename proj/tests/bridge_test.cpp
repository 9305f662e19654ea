#include <gtest/gtest.h>

#include "fracmatch/bridge.hpp"
#include "oracles.hpp"

using namespace fracmatch;

namespace {

Rational q( long p, long d = 1 )
{
    return make_rational( p, d );
}

VertexWeights halves( std::size_t m )
{
    return VertexWeights( m, q( 1, 2 ) );
}

const VertexWeights thirds{ q( 1, 3 ), q( 1, 3 ), q( 1, 3 ), q( 0 ), q( 0 ), q( 0 ) };

} // namespace

TEST( Bridge, WeightDistribution )
{
    EXPECT_EQ( weight_distribution( halves( 4 ) ), DiscreteDistribution::point_mass( q( 1, 2 ) ) );
    EXPECT_EQ( weight_distribution( thirds ),
               DiscreteDistribution( { { q( 0 ), q( 1, 2 ) }, { q( 1, 3 ), q( 1, 2 ) } } ) );
}

TEST( Bridge, HeavySubsetCounts )
{
    EXPECT_EQ( count_heavy_subsets( halves( 4 ), 2, q( 1 ) ), 6 );
    EXPECT_EQ( count_heavy_subsets( thirds, 2, q( 1 ) ), 0 );
    VertexWeights mixed{ q( 1 ), q( 1 ), q( 0 ), q( 0 ), q( 1, 2 ), q( 1, 2 ), q( 1, 4 ) };
    for ( unsigned long l = 1; l <= 4; ++l )
        for ( Rational t : { q( 1, 2 ), q( 1 ), q( 3, 2 ) } )
            EXPECT_EQ( count_heavy_subsets_direct( mixed, l, t ), count_heavy_subsets_by_class( mixed, l, t ) );
}

TEST( Bridge, HeavySequenceCounts )
{
    auto c = count_heavy_sequences( halves( 4 ), 2, q( 1 ) );
    EXPECT_EQ( c.n1, 16 );
    EXPECT_EQ( c.n2, 12 );
    VertexWeights mixed{ q( 1 ), q( 0 ), q( 0 ), q( 1, 2 ), q( 1, 2 ) };
    for ( unsigned long l = 1; l <= 3; ++l ) {
        auto s = count_heavy_sequences( mixed, l, q( 1 ) );
        EXPECT_EQ( s.n2, factorial( l ) * count_heavy_subsets( mixed, l, q( 1 ) ) );
        EXPECT_GE( s.n1, s.n2 );
        EXPECT_LE( s.n1 - s.n2, binomial( l, 2 ) * pow( Integer( 5 ), l - 1 ) );
    }
}

TEST( Bridge, WorkedInstance )
{
    auto c = dist_to_hypergraph( conjectured_extremizer( 2, q( 1 ) ), 2, 1, 2 );
    EXPECT_EQ( c.m, 6u );
    EXPECT_EQ( c.weight, ( VertexWeights{ q( 0 ), q( 0 ), q( 0 ), q( 0 ), q( 1 ), q( 1 ) } ) );
    EXPECT_EQ( c.hypergraph.edge_count(), 9u );
    EXPECT_EQ( c.n, 9 );
    EXPECT_EQ( c.n1, 20 );
    EXPECT_EQ( c.n2, 18 );
    ASSERT_TRUE( c.tau_star );
    EXPECT_EQ( *c.tau_star, 2 );
    EXPECT_TRUE( c.all_pass() );
    EXPECT_EQ( c.status, BridgeStatus::Applicable );
    const BridgeCheck* gap = c.find( "N1 - N2 <= C(l,2) * m^(l-1)" );
    ASSERT_NE( gap, nullptr );
    EXPECT_EQ( gap->lhs, 2 );
    EXPECT_EQ( gap->rhs, 6 );
}

TEST( Bridge, PointMassGivesEmptyGraph )
{
    auto c = dist_to_hypergraph( DiscreteDistribution::point_mass( q( 1 ) ), 2, 1, 1 );
    EXPECT_EQ( c.hypergraph.edge_count(), 0u );
    EXPECT_EQ( c.n, 0 );
    EXPECT_EQ( c.n1, 0 );
    EXPECT_TRUE( c.all_pass() );
}

TEST( Bridge, RejectsInvalidInput )
{
    DiscreteDistribution not_mean_one( { { q( 0 ), q( 1, 2 ) }, { q( 1 ), q( 1, 2 ) } } );
    EXPECT_THROW( dist_to_hypergraph( not_mean_one, 2, 1, 1 ), ValidationError );
    DiscreteDistribution too_wide( { { q( 0 ), q( 3, 4 ) }, { q( 4 ), q( 1, 4 ) } } );
    EXPECT_THROW( dist_to_hypergraph( too_wide, 2, 1, 1 ), ValidationError );
    EXPECT_THROW( dist_to_hypergraph( conjectured_extremizer( 2, q( 1 ) ), 2, 1, 0 ), InvalidQuery );
}

TEST( Bridge, CoverDirectionOnTwoTriangles )
{
    auto c = cover_to_distribution( make::disjoint_cliques( 2, 3, 2 ), q( 1 ) );
    EXPECT_EQ( c.status, BridgeStatus::Inapplicable );
    ASSERT_TRUE( c.nu_star );
    EXPECT_EQ( *c.nu_star, 3 );
}

TEST( Bridge, CoverDirectionOnEmptyGraph )
{
    auto c = cover_to_distribution( make::empty( 5, 2 ), q( 1 ) );
    EXPECT_EQ( c.status, BridgeStatus::Vacuous );
    EXPECT_EQ( c.n, 0 );
    EXPECT_EQ( c.n1, 0 );
    EXPECT_EQ( c.n2, 0 );
    EXPECT_TRUE( c.all_pass() );
}

TEST( Bridge, RoundTripRecoversScaledLaw )
{
    std::vector< std::pair< DiscreteDistribution, std::pair< long, long > > > cases{
        { conjectured_extremizer( 2, q( 1 ) ), { 2, 1 } },
        { conjectured_extremizer( 3, q( 1 ) ), { 3, 1 } },
        { DiscreteDistribution( { { q( 1, 2 ), q( 1, 2 ) }, { q( 3, 2 ), q( 1, 2 ) } } ), { 2, 1 } },
        { DiscreteDistribution( { { q( 0 ), q( 1, 3 ) }, { q( 1 ), q( 1, 3 ) }, { q( 2 ), q( 1, 3 ) } } ), { 2, 2 } },
    };
    for ( const auto& [ law, ld ] : cases ) {
        auto [ l, d ] = ld;
        for ( long r : { 1L, 2L, 3L } ) {
            auto forward = dist_to_hypergraph( law, l, d, r );
            EXPECT_TRUE( forward.all_pass() );
            EXPECT_EQ( weight_distribution( forward.weight ), law.scaled( 1 / Rational( l + d ) ) );
            // Edge feasibility, re-checked here from scratch.
            for ( const auto& e : forward.hypergraph.edges() ) {
                Rational s;
                for ( Vertex v : e )
                    s += forward.weight[ v ];
                EXPECT_GE( s, 1 );
            }
            // The construction's weights are a minimum cover only when tau*
            // reaches m/(l+d); otherwise let the LP pick the cover.
            bool optimal = forward.tau_star && *forward.tau_star == Rational( Integer( forward.m ) ) / ( l + d );
            auto back = optimal ? cover_to_distribution( forward.hypergraph, q( d ), forward.weight )
                                : cover_to_distribution( forward.hypergraph, q( d ) );
            if ( optimal ) {
                EXPECT_EQ( back.distribution, weight_distribution( forward.weight ) );
            }
            EXPECT_EQ( back.distribution, weight_distribution( back.weight ) );
            EXPECT_TRUE( back.all_pass() );
        }
    }
}

TEST( Bridge, ProbeIsDominatedAndPreservesTheLaw )
{
    auto p = equivalence_probe( 2, 1, conjectured_extremizer( 2, q( 1 ) ), { 1, 2, 4, 8, 16 } );
    ASSERT_EQ( p.rows.size(), 5u );
    EXPECT_TRUE( p.all_dominated() );
    for ( const auto& row : p.rows ) {
        EXPECT_EQ( row.tail, q( 5, 9 ) );
        EXPECT_LE( row.observed, Rational( 1 ) / Rational( Integer( row.m ) ) );
    }
    auto p3 = equivalence_probe( 3, 1, conjectured_extremizer( 3, q( 1 ) ), { 1, 2 } );
    EXPECT_TRUE( p3.all_dominated() );
}

TEST( Bridge, ProbeOfConstantLawIsZero )
{
    auto p = equivalence_probe( 2, 1, DiscreteDistribution::point_mass( q( 1 ) ), { 1, 2, 4 } );
    for ( const auto& row : p.rows ) {
        EXPECT_EQ( row.density, 0 );
        EXPECT_EQ( row.tail, 0 );
    }
}

TEST( Bridge, DoublingReplicationIsMonotoneUpToGap )
{
    auto law = DiscreteDistribution( { { q( 0 ), q( 1, 3 ) }, { q( 1 ), q( 1, 3 ) }, { q( 2 ), q( 1, 3 ) } } );
    auto p = equivalence_probe( 2, 1, law, { 1, 2, 4, 8 } );
    for ( std::size_t i = 1; i < p.rows.size(); ++i ) {
        EXPECT_EQ( p.rows[ i ].tail, p.rows[ i - 1 ].tail );
        EXPECT_GE( p.rows[ i ].density + p.rows[ i - 1 ].gap_bound, p.rows[ i - 1 ].density );
    }
}
