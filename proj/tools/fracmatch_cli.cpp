// fracmatch: command-line front end for the fracmatch library.
//
// Exit codes: 0 success, 2 validation or query error, 3 resource cap,
// 64 usage, 70 internal bug (a proved bound was exceeded or the LP solver
// produced an inconsistent certificate).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracmatch/fracmatch.hpp"

using namespace fracmatch;
using io::json;

namespace {

enum class Format { Table, Json, Csv };

struct Global
{
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format = "table";
    int precision = 12;
    std::uint64_t max_enum = EnumLimits{}.max_hypergraphs;
    std::uint64_t max_atoms = TailLimits{}.max_atoms;
    std::string out;

    Format fmt() const
    {
        if ( format == "json" )
            return Format::Json;
        if ( format == "csv" )
            return Format::Csv;
        return Format::Table;
    }
    EnumOptions enum_options() const { return { EnumLimits{ max_enum }, threads }; }
    TailLimits tail() const { return TailLimits{ max_atoms }; }
    BridgeLimits bridge() const
    {
        BridgeLimits b;
        b.tail = tail();
        return b;
    }
};

std::vector< std::string > split( const std::string& s, char sep )
{
    std::vector< std::string > parts;
    std::stringstream ss( s );
    std::string item;
    while ( std::getline( ss, item, sep ) )
        parts.push_back( item );
    return parts;
}

std::vector< long > parse_longs( const std::string& s, std::size_t expected, const std::string& what )
{
    auto parts = split( s, ',' );
    if ( expected && parts.size() != expected )
        throw ValidationError( what + " needs " + std::to_string( expected ) + " comma-separated integers" );
    std::vector< long > out;
    for ( const auto& p : parts ) {
        Rational r = parse_rational( p );
        if ( !is_integer( r ) || !r.get_num().fits_slong_p() )
            throw ValidationError( what + ": '" + p + "' is not an integer" );
        out.push_back( r.get_num().get_si() );
    }
    return out;
}

json read_json_file( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
        throw ValidationError( "cannot open '" + path + "'" );
    try {
        return json::parse( in );
    } catch ( const json::exception& e ) {
        throw ValidationError( "format error: " + path + ": " + e.what() );
    }
}

json read_json_arg( const std::string& arg )
{
    if ( !arg.empty() && arg.front() == '{' ) {
        try {
            return json::parse( arg );
        } catch ( const json::exception& e ) {
            throw ValidationError( std::string( "format error: " ) + e.what() );
        }
    }
    return read_json_file( arg );
}

std::size_t nonneg( long x, const std::string& what )
{
    if ( x < 0 )
        throw ValidationError( what + " must be nonnegative" );
    return static_cast< std::size_t >( x );
}

// A JSON file or inline object, or one of complete:n,k  empty:n,k  star:n
// path:n  cliques:copies,size,k.
Hypergraph load_graph( const std::string& spec )
{
    auto colon = spec.find( ':' );
    if ( colon != std::string::npos && spec.front() != '{' ) {
        std::string kind = spec.substr( 0, colon );
        std::string args = spec.substr( colon + 1 );
        if ( kind == "complete" ) {
            auto a = parse_longs( args, 2, kind );
            return make::complete( nonneg( a[ 0 ], "n" ), nonneg( a[ 1 ], "k" ) );
        }
        if ( kind == "empty" ) {
            auto a = parse_longs( args, 2, kind );
            return make::empty( nonneg( a[ 0 ], "n" ), nonneg( a[ 1 ], "k" ) );
        }
        if ( kind == "star" )
            return make::star( nonneg( parse_longs( args, 1, kind )[ 0 ], "n" ) );
        if ( kind == "path" )
            return make::path( nonneg( parse_longs( args, 1, kind )[ 0 ], "n" ) );
        if ( kind == "cliques" ) {
            auto a = parse_longs( args, 3, kind );
            return make::disjoint_cliques( nonneg( a[ 0 ], "copies" ), nonneg( a[ 1 ], "size" ), nonneg( a[ 2 ], "k" ) );
        }
    }
    return io::hypergraph_from_json( read_json_arg( spec ) );
}

// A JSON file or inline object, or extremizer:l,d.
DiscreteDistribution load_dist( const std::string& spec )
{
    const std::string prefix = "extremizer:";
    if ( spec.rfind( prefix, 0 ) == 0 ) {
        auto parts = split( spec.substr( prefix.size() ), ',' );
        if ( parts.size() != 2 )
            throw ValidationError( "extremizer needs l,d" );
        auto l = parse_longs( parts[ 0 ], 1, "l" )[ 0 ];
        return conjectured_extremizer( l, parse_rational( parts[ 1 ] ) );
    }
    return io::distribution_from_json( read_json_arg( spec ) );
}

std::string edge_list( const Hypergraph& h )
{
    std::string s;
    for ( const auto& e : h.edges() ) {
        s += s.empty() ? "{" : " {";
        for ( std::size_t i = 0; i < e.size(); ++i )
            s += ( i ? "," : "" ) + std::to_string( e[ i ] );
        s += "}";
    }
    return s.empty() ? "(none)" : s;
}

std::string graph_line( const Hypergraph& h )
{
    return "n=" + std::to_string( h.n() ) + " k=" + std::to_string( h.k() ) + " edges: " + edge_list( h );
}

std::string dist_line( const DiscreteDistribution& d )
{
    std::string s;
    for ( const auto& a : d.atoms() )
        s += ( s.empty() ? "" : ", " ) + to_string( a.value ) + " w.p. " + to_string( a.prob );
    return "{" + s + "}";
}

// Flat key,value CSV for results without a natural table shape.
std::string flat_csv( const json& j )
{
    std::string out = "key,value\n";
    for ( const auto& [ key, value ] : j.items() ) {
        std::string v = value.is_string() ? value.get< std::string >() : value.dump();
        out += key + "," + ( v.find_first_of( ",\"\n" ) == std::string::npos ? v : "\"" + [ & ] {
            std::string e;
            for ( char c : v )
                e += c == '"' ? std::string( "\"\"" ) : std::string( 1, c );
            return e;
        }() + "\"" ) + "\n";
    }
    return out;
}

class Emitter
{
public:
    explicit Emitter( const Global& g )
        : g_( g )
    {
    }

    void emit( const json& j, const std::string& table, const std::string& csv = "" )
    {
        std::string text;
        switch ( g_.fmt() ) {
        case Format::Json: text = j.dump( 2 ) + "\n"; break;
        case Format::Csv: text = csv.empty() ? flat_csv( j ) : csv; break;
        case Format::Table: text = table; break;
        }
        if ( g_.out.empty() ) {
            std::cout << text;
            return;
        }
        std::ofstream f( g_.out );
        if ( !f )
            throw ValidationError( "cannot write '" + g_.out + "'" );
        f << text;
    }

private:
    const Global& g_;
};

std::string report_table( const BoundReport& r, int precision )
{
    std::ostringstream os;
    os << r.kind << " bounds (";
    for ( std::size_t i = 0; i < r.params.size(); ++i )
        os << ( i ? ", " : "" ) << r.params[ i ].first << "=" << r.params[ i ].second;
    os << ")\n";
    for ( const auto& e : r.entries )
        os << ( r.best && *r.best == e.name ? "* " : "  " ) << e.name << "  " << to_string( e.value ) << "  "
           << to_decimal( e.value, precision ) << "  [" << to_string( e.status ) << "] " << e.provenance << "\n";
    os << "best: " << ( r.best ? *r.best + " = " + to_string( r.best_entry()->value ) : std::string( "none" ) )
       << "\n";
    return os.str();
}

std::string certificate_table( const BridgeCertificate& c )
{
    std::ostringstream os;
    os << to_string( c.direction ) << " certificate: " << to_string( c.status ) << "\n";
    if ( !c.note.empty() )
        os << "note: " << c.note << "\n";
    os << "m=" << c.m << " l=" << c.l << " d=" << to_string( c.d ) << " |E|=" << c.hypergraph.edge_count() << "\n";
    os << "N=" << c.n.get_str() << " N1=" << c.n1.get_str() << " N2=" << c.n2.get_str() << "\n";
    if ( c.nu_star )
        os << "nu*=" << to_string( *c.nu_star ) << "\n";
    if ( c.tau_star )
        os << "tau*=" << to_string( *c.tau_star ) << "\n";
    os << "distribution: " << dist_line( c.distribution ) << "\n";
    for ( const auto& ch : c.checks )
        os << ( ch.pass ? "  pass  " : "  FAIL  " ) << ch.name << "  (" << to_string( ch.lhs ) << " vs "
           << to_string( ch.rhs ) << ")\n";
    return os.str();
}

std::string probe_table( const ProbeReport& p, int precision )
{
    std::ostringstream os;
    os << "r  m  |E|  density  tail  observed_gap  gap_bound  dominated\n";
    for ( const auto& r : p.rows )
        os << r.r << "  " << r.m << "  " << r.edges << "  " << to_decimal( r.density, precision ) << "  "
           << to_string( r.tail ) << "  " << to_string( r.observed ) << "  " << to_string( r.gap_bound ) << "  "
           << ( r.dominated ? "yes" : "NO" ) << "\n";
    return os.str();
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Exact fractional matchings, Dirac thresholds and deviation bounds" };
    app.require_subcommand( 1 );
    Global g;
    app.add_option( "--seed", g.seed, "Seed for randomized procedures" )->envname( "FRACMATCH_SEED" );
    app.add_option( "--threads", g.threads, "Worker threads" )->envname( "FRACMATCH_THREADS" )->check( CLI::PositiveNumber );
    app.add_option( "--format", g.format, "Output format" )
        ->envname( "FRACMATCH_FORMAT" )
        ->check( CLI::IsMember( { "json", "csv", "table" } ) );
    app.add_option( "--precision", g.precision, "Significant digits in decimal columns" )
        ->envname( "FRACMATCH_PRECISION" )
        ->check( CLI::Range( 1, 200 ) );
    app.add_option( "--max-enum", g.max_enum, "Cap on enumerated hypergraphs" )->envname( "FRACMATCH_MAX_ENUM" );
    app.add_option( "--max-atoms", g.max_atoms, "Cap on composite atoms per convolution step" )
        ->envname( "FRACMATCH_MAX_ATOMS" );
    app.add_option( "--out", g.out, "Write output here instead of stdout" )->envname( "FRACMATCH_OUT" );
    app.fallthrough();

    std::string graph, dist, set, d_text, s_text, t_text, delta_text, r_text = "1,2,4,8";
    long k = 0, n = 0, l = 0, m = 0, d_int = -1, r = 1, support = 2;
    std::uint64_t budget = 100000;

    auto* degree_cmd = app.add_subcommand( "degree", "Degree of a vertex set, or minimum d-degree" );
    degree_cmd->add_option( "--graph", graph, "Hypergraph (JSON file, inline JSON or shorthand)" )->required();
    auto* set_opt = degree_cmd->add_option( "--set", set, "Comma-separated vertex set" );
    degree_cmd->add_option( "--d", d_int, "Report the minimum d-degree" )->excludes( set_opt );

    auto* matching_cmd = app.add_subcommand( "matching", "Maximum matching" );
    matching_cmd->add_option( "--graph", graph, "Hypergraph" )->required();

    auto* fractional_cmd = app.add_subcommand( "fractional", "Fractional matching and cover with duality check" );
    fractional_cmd->add_option( "--graph", graph, "Hypergraph" )->required();

    auto* md_cmd = app.add_subcommand( "md-exact", "Exact minimum d-degree threshold for a matching of size s" );
    md_cmd->add_option( "--k", k, "Uniformity" )->required();
    md_cmd->add_option( "--n", n, "Vertices" )->required();
    md_cmd->add_option( "--d", d_int, "Degree order" )->required();
    md_cmd->add_option( "--s", s_text, "Matching size (default n/k, a perfect matching)" );

    auto* f0_cmd = app.add_subcommand( "f0-exact", "Exact edge-count threshold for a fractional matching of size s" );
    f0_cmd->add_option( "--l", l, "Uniformity" )->required();
    f0_cmd->add_option( "--m", m, "Vertices" )->required();
    f0_cmd->add_option( "--s", s_text, "Fractional matching size (rational)" )->required();

    auto* bounds_cmd = app.add_subcommand( "bounds", "Bound reports" );
    bounds_cmd->require_subcommand( 1 );
    auto* bounds_matching = bounds_cmd->add_subcommand( "matching", "Minimum d-degree density bounds" );
    bounds_matching->add_option( "--k", k, "Uniformity" )->required();
    bounds_matching->add_option( "--d", d_int, "Degree order" )->required();
    auto* bounds_deviation = bounds_cmd->add_subcommand( "deviation", "Deviation probability bounds" );
    bounds_deviation->add_option( "--l", l, "Number of summands" )->required();
    bounds_deviation->add_option( "--d", d_text, "Deviation (rational)" )->required();

    auto* convolve_cmd = app.add_subcommand( "convolve", "Exact Pr[X_1 + ... + X_l >= t]" );
    convolve_cmd->add_option( "--dist", dist, "Distribution (JSON or extremizer:l,d)" )->required();
    convolve_cmd->add_option( "--l", l, "Number of summands" )->required();
    convolve_cmd->add_option( "--t", t_text, "Threshold (rational)" )->required();

    auto* theta_cmd = app.add_subcommand( "theta-search", "Certified lower bounds on the deviation supremum" );
    theta_cmd->add_option( "--l", l, "Number of summands" )->required();
    theta_cmd->add_option( "--d", d_text, "Deviation (rational)" )->required();
    theta_cmd->add_option( "--support", support, "Support size (2-4)" );
    theta_cmd->add_option( "--budget", budget, "Candidate evaluations" );

    auto* damp_cmd = app.add_subcommand( "damp", "Damping transform and its tail inequality" );
    damp_cmd->add_option( "--dist", dist, "Distribution" )->required();
    damp_cmd->add_option( "--delta", delta_text, "Mass moved to zero, in (0,1)" )->required();
    damp_cmd->add_option( "--l", l, "Also compare tails for this many summands" );
    damp_cmd->add_option( "--d", d_text, "Deviation used with --l (default 1)" );

    auto* reduce_cmd = app.add_subcommand( "reduce", "Build the l-graph of a distribution with its certificate" );
    reduce_cmd->add_option( "--dist", dist, "Distribution" )->required();
    reduce_cmd->add_option( "--l", l, "Uniformity" )->required();
    reduce_cmd->add_option( "--d", d_int, "Deviation (integer)" )->required();
    reduce_cmd->add_option( "--r", r, "Replication factor" );

    auto* cover_cmd = app.add_subcommand( "cover", "Law of an optimal fractional cover, with its certificate" );
    cover_cmd->add_option( "--graph", graph, "Hypergraph" )->required();
    cover_cmd->add_option( "--d", d_text, "Deviation (rational)" )->required();

    auto* probe_cmd = app.add_subcommand( "probe", "Equivalence table over replication factors" );
    probe_cmd->add_option( "--dist", dist, "Distribution" )->required();
    probe_cmd->add_option( "--l", l, "Uniformity" )->required();
    probe_cmd->add_option( "--d", d_int, "Deviation (integer)" )->required();
    probe_cmd->add_option( "--r", r_text, "Comma-separated replication factors" );

    auto* verify_cmd = app.add_subcommand( "verify", "Run every module's invariant suite" );

    try {
        app.parse( argc, argv );
    } catch ( const CLI::CallForHelp& e ) {
        return app.exit( e );
    } catch ( const CLI::CallForAllHelp& e ) {
        return app.exit( e );
    } catch ( const CLI::ParseError& e ) {
        app.exit( e );
        return 64;
    }

    Emitter out( g );
    try {
        if ( degree_cmd->parsed() ) {
            auto h = load_graph( graph );
            json j;
            std::string table;
            if ( d_int >= 0 ) {
                std::size_t v = min_d_degree( h, static_cast< std::size_t >( d_int ) );
                j = { { "d", d_int }, { "min_degree", v } };
                table = std::to_string( v ) + "\n";
            } else {
                std::vector< Vertex > s;
                if ( !set.empty() )
                    for ( long v : parse_longs( set, 0, "--set" ) )
                        s.push_back( static_cast< Vertex >( nonneg( v, "vertex" ) ) );
                std::size_t v = degree( h, s );
                j = { { "set", s }, { "degree", v } };
                table = std::to_string( v ) + "\n";
            }
            out.emit( j, table );
        } else if ( matching_cmd->parsed() ) {
            auto h = load_graph( graph );
            auto mm = max_matching( h );
            std::string table = std::to_string( mm.size() ) + ( mm.is_perfect_in( h ) ? " (perfect)" : "" ) + "\n"
                                + "matching: " + edge_list( Hypergraph( h.n(), h.k(), mm.edges ) ) + "\n";
            out.emit( io::to_json( mm, h ), table );
        } else if ( fractional_cmd->parsed() ) {
            auto h = load_graph( graph );
            auto c = duality_certificate( h );
            json j = { { "nu_star", io::rational( c.nu_star ) },
                       { "tau_star", io::rational( c.tau_star ) },
                       { "decimal", to_decimal( c.nu_star, g.precision ) },
                       { "matching", io::to_json( c.matching ) },
                       { "cover", io::to_json( c.cover ) } };
            std::ostringstream t;
            t << "nu* = tau* = " << to_string( c.nu_star ) << " (" << to_decimal( c.nu_star, g.precision ) << ")\n";
            t << "matching:";
            for ( std::size_t i = 0; i < h.edge_count(); ++i )
                if ( c.matching.weights[ i ] != 0 )
                    t << " " << edge_list( Hypergraph( h.n(), h.k(), { h.edges()[ i ] } ) ) << "="
                      << to_string( c.matching.weights[ i ] );
            t << "\ncover:";
            for ( std::size_t v = 0; v < h.n(); ++v )
                t << " " << v << "=" << to_string( c.cover.weights[ v ] );
            t << "\n";
            out.emit( j, t.str() );
        } else if ( md_cmd->parsed() ) {
            std::size_t kk = nonneg( k, "k" ), nn = nonneg( n, "n" ), dd = nonneg( d_int, "d" );
            std::size_t ss = kk ? nn / kk : 0;
            if ( !s_text.empty() )
                ss = nonneg( parse_longs( s_text, 1, "--s" )[ 0 ], "s" );
            auto res = exact_m_d_s( kk, nn, dd, ss, g.enum_options() );
            json j = { { "k", kk }, { "n", nn }, { "d", dd }, { "s", ss }, { "threshold", res.threshold } };
            j[ "witness" ] = res.witness ? io::to_json( *res.witness ) : json( nullptr );
            j[ "examined" ] = res.examined;
            std::string table = std::to_string( res.threshold ) + "\n";
            if ( res.witness )
                table += "witness: " + graph_line( *res.witness ) + "\n";
            out.emit( j, table );
        } else if ( f0_cmd->parsed() ) {
            Rational s = parse_rational( s_text );
            auto res = exact_f_0_s( nonneg( l, "l" ), nonneg( m, "m" ), s, g.enum_options() );
            json j = { { "l", l }, { "m", m }, { "s", io::rational( s ) }, { "threshold", res.threshold } };
            j[ "witness" ] = res.witness ? io::to_json( *res.witness ) : json( nullptr );
            if ( res.witness )
                j[ "witness_nu_star" ] = io::rational( fractional_matching_number( *res.witness ) );
            j[ "examined" ] = res.examined;
            std::string table = std::to_string( res.threshold ) + "\n";
            if ( res.witness )
                table += "witness: " + graph_line( *res.witness ) + "\n";
            out.emit( j, table );
        } else if ( bounds_matching->parsed() ) {
            auto rep = matching_bound_report( k, d_int );
            out.emit( io::to_json( rep, g.precision ), report_table( rep, g.precision ), io::to_csv( rep, g.precision ) );
        } else if ( bounds_deviation->parsed() ) {
            auto rep = deviation_bound_report( l, parse_rational( d_text ) );
            out.emit( io::to_json( rep, g.precision ), report_table( rep, g.precision ), io::to_csv( rep, g.precision ) );
        } else if ( convolve_cmd->parsed() ) {
            auto law = load_dist( dist );
            Rational t = parse_rational( t_text );
            Rational p = iid_tail( law, l, t, g.tail() );
            json j = { { "l", l },
                       { "t", io::rational( t ) },
                       { "probability", io::rational( p ) },
                       { "decimal", to_decimal( p, g.precision ) },
                       { "distribution", io::to_json( law ) } };
            out.emit( j, to_string( p ) + "\n" );
        } else if ( theta_cmd->parsed() ) {
            Rational d = parse_rational( d_text );
            ThetaSearchConfig cfg;
            cfg.threads = g.threads;
            cfg.tail = g.tail();
            auto res = theta_lower_search( l, d, static_cast< int >( support ), budget, g.seed, cfg );
            for ( const auto& f : res.findings )
                std::cerr << io::finding_line( f ) << "\n";
            std::ostringstream t;
            t << to_string( res.value ) << " (" << to_decimal( res.value, g.precision ) << ")\n";
            t << "law: " << dist_line( res.best ) << "\n";
            t << "conjectured: " << to_string( res.conjectured ) << "  proved cap: " << to_string( res.proved_cap )
              << "\n";
            t << "evaluations: " << res.evaluations << ( res.budget_exhausted ? " (budget exhausted)" : "" ) << "\n";
            if ( !res.findings.empty() )
                t << "findings: " << res.findings.size() << " (logged to stderr)\n";
            out.emit( io::to_json( res, g.seed, l, d, g.precision ), t.str() );
        } else if ( damp_cmd->parsed() ) {
            auto law = load_dist( dist );
            Rational delta = parse_rational( delta_text );
            auto y = damping_transform( law, delta );
            json j = { { "delta", io::rational( delta ) },
                       { "input", io::to_json( law ) },
                       { "damped", io::to_json( y ) },
                       { "mean", io::rational( mean( y ) ) } };
            std::string table = dist_line( y ) + "\nmean: " + to_string( mean( y ) ) + "\n";
            if ( l > 0 ) {
                Rational d = d_text.empty() ? Rational( 1 ) : parse_rational( d_text );
                Rational lhs = iid_tail( y, l, l + d, g.tail() );
                Rational rhs = pow( 1 - delta, static_cast< unsigned long >( l ) )
                               * iid_tail( law, l, ( l + d ) * ( 1 - delta ), g.tail() );
                j[ "l" ] = l;
                j[ "d" ] = io::rational( d );
                j[ "damped_tail" ] = io::rational( lhs );
                j[ "scaled_input_tail" ] = io::rational( rhs );
                j[ "inequality_holds" ] = lhs >= rhs;
                table += "Pr[sum Y >= l+d] = " + to_string( lhs ) + " >= " + to_string( rhs ) + " : "
                         + ( lhs >= rhs ? "holds" : "FAILS" ) + "\n";
            }
            out.emit( j, table );
        } else if ( reduce_cmd->parsed() ) {
            auto c = dist_to_hypergraph( load_dist( dist ), l, d_int, r, g.bridge() );
            out.emit( io::to_json( c ), certificate_table( c ) );
            if ( !c.all_pass() )
                throw BugDetected( "certificate check failed" );
        } else if ( cover_cmd->parsed() ) {
            auto c = cover_to_distribution( load_graph( graph ), parse_rational( d_text ), std::nullopt, g.bridge() );
            out.emit( io::to_json( c ), certificate_table( c ) );
            if ( !c.all_pass() )
                throw BugDetected( "certificate check failed" );
        } else if ( probe_cmd->parsed() ) {
            auto p = equivalence_probe( l, d_int, load_dist( dist ), parse_longs( r_text, 0, "--r" ), g.bridge() );
            out.emit( io::to_json( p, g.precision ), probe_table( p, g.precision ), io::to_csv( p, g.precision ) );
            if ( !p.all_dominated() )
                throw BugDetected( "probe gap bound violated" );
        } else if ( verify_cmd->parsed() ) {
            VerifyOptions vo;
            vo.seed = g.seed;
            vo.threads = g.threads;
            vo.enumeration = EnumLimits{ g.max_enum };
            vo.tail = g.tail();
            auto rep = run_invariant_suite( vo );
            json checks = json::array();
            std::ostringstream t, csv;
            csv << "module,check,pass,detail\n";
            for ( const auto& c : rep.checks ) {
                checks.push_back( { { "module", c.module }, { "name", c.name }, { "pass", c.pass }, { "detail", c.detail } } );
                t << ( c.pass ? "pass  " : "FAIL  " ) << c.module << ": " << c.name
                  << ( c.detail.empty() ? "" : " (" + c.detail + ")" ) << "\n";
                csv << c.module << "," << c.name << "," << ( c.pass ? "true" : "false" ) << "," << c.detail << "\n";
            }
            t << rep.passed() << " passed, " << rep.failed() << " failed\n";
            out.emit( { { "seed", g.seed }, { "passed", rep.passed() }, { "failed", rep.failed() }, { "checks", checks } },
                      t.str(), csv.str() );
            return rep.failed() == 0 ? 0 : 1;
        }
    } catch ( const BugDetected& e ) {
        std::cerr << "bug: " << e.what() << "\n";
        return 70;
    } catch ( const SolverError& e ) {
        std::cerr << "bug: " << e.what() << "\n";
        return 70;
    } catch ( const ResourceLimit& e ) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch ( const Error& e ) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
