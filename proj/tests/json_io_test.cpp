#include <gtest/gtest.h>

#include "fracmatch/json_io.hpp"

using namespace fracmatch;
using fracmatch::io::json;

TEST( JsonIo, HypergraphCanonicalRoundTrip )
{
    auto j = json::parse( R"({"n":4,"k":2,"edges":[[3,1],[0,2]]})" );
    auto h = io::hypergraph_from_json( j );
    EXPECT_EQ( io::to_json( h ).dump(), R"({"n":4,"k":2,"edges":[[0,2],[1,3]]})" );
    EXPECT_EQ( io::hypergraph_from_json( io::to_json( h ) ), h );
}

TEST( JsonIo, HypergraphFormatErrors )
{
    for ( const char* bad : { R"({"n":4,"k":2,"edges":[[0,1],[1,0]]})", R"({"n":4,"k":2,"edges":[[0,9]]})",
                              R"({"n":4,"k":2})", R"({"n":4,"k":2,"edges":[["a","b"]]})", R"([1,2])" } ) {
        try {
            io::hypergraph_from_json( json::parse( bad ) );
            ADD_FAILURE() << bad;
        } catch ( const ValidationError& e ) {
            EXPECT_EQ( std::string( e.what() ).rfind( "format error", 0 ), 0u ) << e.what();
        }
    }
}

TEST( JsonIo, DistributionRoundTrip )
{
    auto d = conjectured_extremizer( 2, Rational( 1 ) );
    auto j = io::to_json( d );
    EXPECT_EQ( j.dump(), R"({"atoms":[{"value":"0","prob":"2/3"},{"value":"3","prob":"1/3"}]})" );
    EXPECT_EQ( io::distribution_from_json( j ), d );
    EXPECT_THROW( io::distribution_from_json( json::parse( R"({"atoms":[{"value":"1","prob":0.5}]})" ) ),
                  ValidationError );
}

TEST( JsonIo, WeightsRoundTrip )
{
    auto w = FractionalWeights::from_weights( Carrier::Vertices,
                                              { make_rational( 1, 2 ), Rational( 0 ), make_rational( 1, 3 ) } );
    auto back = io::weights_from_json( io::to_json( w ), 3 );
    EXPECT_EQ( back.carrier, Carrier::Vertices );
    EXPECT_EQ( back.weights, w.weights );
    EXPECT_EQ( back.value, w.value );
    EXPECT_THROW( io::weights_from_json( io::to_json( w ), 2 ), ValidationError );
}

TEST( JsonIo, BoundReportSchema )
{
    auto j = io::to_json( matching_bound_report( 3, 1 ), 12 );
    EXPECT_EQ( j[ "params" ][ "k" ], "3" );
    EXPECT_EQ( j[ "best" ], "kot" );
    for ( const auto& e : j[ "entries" ] ) {
        EXPECT_TRUE( e.contains( "name" ) );
        EXPECT_TRUE( e[ "value" ].is_string() );
        EXPECT_TRUE( e.contains( "decimal" ) );
        EXPECT_TRUE( e.contains( "provenance" ) );
        EXPECT_TRUE( e.contains( "status" ) );
    }
    EXPECT_TRUE( io::to_json( matching_bound_report( 2, 1 ), 12 )[ "best" ].is_null() );
    auto csv = io::to_csv( matching_bound_report( 3, 1 ), 6 );
    EXPECT_EQ( csv.substr( 0, csv.find( '\n' ) ), "name,value,decimal,provenance,status,best" );
    EXPECT_NE( csv.find( "kot,5/9,0.555556," ), std::string::npos );
}

TEST( JsonIo, CertificateSchema )
{
    auto c = dist_to_hypergraph( conjectured_extremizer( 2, Rational( 1 ) ), 2, 1, 2 );
    auto j = io::to_json( c );
    EXPECT_EQ( j[ "direction" ], "dist-to-hypergraph" );
    EXPECT_EQ( j[ "counts" ][ "N" ], 9 );
    EXPECT_EQ( j[ "counts" ][ "N1" ], 20 );
    EXPECT_EQ( j[ "counts" ][ "N2" ], 18 );
    EXPECT_EQ( j[ "tau_star" ], "2" );
    for ( const auto& ch : j[ "checks" ] ) {
        EXPECT_TRUE( ch[ "pass" ].get< bool >() ) << ch[ "name" ];
        EXPECT_TRUE( ch[ "lhs" ].is_string() );
    }
    EXPECT_EQ( io::hypergraph_from_json( j[ "hypergraph" ] ), c.hypergraph );
}

TEST( JsonIo, LargeIntegersBecomeStrings )
{
    EXPECT_EQ( io::integer( Integer( 42 ) ), 42 );
    EXPECT_EQ( io::integer( pow( Integer( 10 ), 30 ) ), "1000000000000000000000000000000" );
}

TEST( JsonIo, OutputIsStableAcrossCalls )
{
    auto a = io::to_json( deviation_bound_report( 10, Rational( 8 ) ), 12 ).dump();
    auto b = io::to_json( deviation_bound_report( 10, Rational( 8 ) ), 12 ).dump();
    EXPECT_EQ( a, b );
}
