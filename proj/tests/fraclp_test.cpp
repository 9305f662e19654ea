#include <gtest/gtest.h>

#include <random>

#include "fracmatch/fraclp.hpp"
#include "oracles.hpp"

using namespace fracmatch;

TEST( FractionalLp, TriangleHasHalfWeights )
{
    auto k3 = make::complete( 3, 2 );
    auto cert = duality_certificate( k3 );
    EXPECT_EQ( cert.nu_star, make_rational( 3, 2 ) );
    EXPECT_EQ( cert.tau_star, make_rational( 3, 2 ) );
    for ( const auto& w : cert.cover.weights )
        EXPECT_EQ( w, make_rational( 1, 2 ) );
}

TEST( FractionalLp, KnownValues )
{
    EXPECT_EQ( fractional_matching_number( make::complete( 4, 3 ) ), make_rational( 4, 3 ) );
    EXPECT_EQ( fractional_matching_number( make::complete( 5, 2 ) ), make_rational( 5, 2 ) );
    EXPECT_EQ( fractional_matching_number( make::star( 5 ) ), 1 );
    EXPECT_EQ( fractional_matching_number( make::empty( 4, 2 ) ), 0 );
    EXPECT_EQ( fractional_matching_number( Hypergraph( 3, 3, { { 0, 1, 2 } } ) ), 1 );
    EXPECT_EQ( fractional_matching_number( make::disjoint_cliques( 2, 3, 2 ) ), 3 );
}

TEST( FractionalLp, EmptyGraphHasZeroCover )
{
    auto cert = duality_certificate( make::empty( 3, 2 ) );
    EXPECT_EQ( cert.tau_star, 0 );
    EXPECT_TRUE( is_fractional_cover( make::empty( 3, 2 ), cert.cover ) );
}

TEST( FractionalLp, FeasibilityCheckersRejectBadWeights )
{
    auto k3 = make::complete( 3, 2 );
    auto over = FractionalWeights::from_weights( Carrier::Edges, { Rational( 1 ), Rational( 1 ), Rational( 0 ) } );
    EXPECT_FALSE( is_fractional_matching( k3, over ) );
    auto thin = FractionalWeights::from_weights(
        Carrier::Vertices, { make_rational( 1, 2 ), make_rational( 1, 2 ), make_rational( 1, 3 ) } );
    EXPECT_FALSE( is_fractional_cover( k3, thin ) );
    auto wrong_carrier = FractionalWeights::from_weights( Carrier::Vertices, { Rational( 1 ), Rational( 1 ), Rational( 1 ) } );
    EXPECT_FALSE( is_fractional_matching( k3, wrong_carrier ) );
}

TEST( FractionalLp, DualitySandwichAndWitnesses )
{
    std::mt19937_64 rng( 7 );
    for ( int trial = 0; trial < 80; ++trial ) {
        std::size_t k = 2 + trial % 2;
        std::size_t n = 3 + trial % 6;
        auto h = oracle::random_hypergraph( rng, n, k, 0.45 );
        auto cert = duality_certificate( h );
        EXPECT_EQ( cert.nu_star, cert.tau_star );
        EXPECT_TRUE( is_fractional_matching( h, cert.matching ) );
        EXPECT_TRUE( is_fractional_cover( h, cert.cover ) );
        // nu <= nu* <= n/k
        EXPECT_LE( Rational( Integer( max_matching( h ).size() ) ), cert.nu_star );
        EXPECT_LE( cert.nu_star, make_rational( static_cast< long >( n ), static_cast< long >( k ) ) );
    }
}

TEST( FractionalLp, IsolatedVerticesDoNotChangeValue )
{
    std::mt19937_64 rng( 99 );
    for ( int trial = 0; trial < 30; ++trial ) {
        auto h = oracle::random_hypergraph( rng, 5, 2 + trial % 2, 0.5 );
        Hypergraph padded( h.n() + 3, h.k(), h.edges() );
        EXPECT_EQ( fractional_matching_number( h ), fractional_matching_number( padded ) );
    }
}

TEST( FractionalLp, CoverMatchesVertexEnumeration )
{
    std::mt19937_64 rng( 5 );
    for ( int trial = 0; trial < 40; ++trial ) {
        std::size_t k = 2 + trial % 2;
        std::size_t n = 4 + trial % 3;
        auto h = oracle::random_hypergraph( rng, n, k, 0.4 );
        if ( h.edge_count() > 10 )
            continue;
        auto expected = oracle::cover_by_vertex_enumeration( h );
        ASSERT_TRUE( expected );
        EXPECT_EQ( min_fractional_cover( h ).value, expected->value );
    }
}

TEST( FractionalLp, CoverMatchesLiteralGrid )
{
    std::mt19937_64 rng( 17 );
    int checked = 0;
    for ( int trial = 0; trial < 40 && checked < 12; ++trial ) {
        auto h = oracle::random_hypergraph( rng, 4 + trial % 2, 2, 0.5 );
        if ( h.edge_count() > 6 )
            continue;
        long den = static_cast< long >( std::max< std::size_t >( 1, h.edge_count() * h.k() ) );
        EXPECT_EQ( min_fractional_cover( h ).value, oracle::grid_cover_minimum( h, den ) );
        ++checked;
    }
    EXPECT_GE( checked, 5 );
}
