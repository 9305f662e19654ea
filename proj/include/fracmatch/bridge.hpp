#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distribution.hpp"
#include "error.hpp"
#include "fraclp.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"

namespace fracmatch {

// t(v) for v in [m]; m is the vector length.
using VertexWeights = std::vector< Rational >;

struct BridgeLimits
{
    // Above this many l-subsets (or injective l-sequences), counting switches
    // from direct enumeration to the multiplicity formula.
    std::uint64_t direct_count_cap = 1'000'000;
    // Largest C(m,l) for which dist_to_hypergraph materializes the edge set.
    std::uint64_t max_edges = 5'000'000;
    // The exact LP check in dist_to_hypergraph runs only up to this size.
    std::size_t lp_max_edges = 400;
    TailLimits tail;
};

// Law of t(v) for v uniform on [m].
inline DiscreteDistribution weight_distribution( const VertexWeights& t )
{
    if ( t.empty() )
        throw InvalidQuery( "weight function on an empty vertex set" );
    Rational each = make_rational( 1, static_cast< long >( t.size() ) );
    std::vector< Atom > atoms;
    for ( const auto& w : t ) {
        if ( w < 0 || w > 1 )
            throw ValidationError( "vertex weight " + to_string( w ) + " outside [0,1]" );
        atoms.push_back( { w, each } );
    }
    return DiscreteDistribution( std::move( atoms ) );
}

namespace detail {

struct WeightClasses
{
    std::vector< Rational > values;
    std::vector< unsigned long > multiplicity;
};

inline WeightClasses weight_classes( const VertexWeights& t )
{
    std::vector< Rational > sorted = t;
    std::sort( sorted.begin(), sorted.end() );
    WeightClasses wc;
    for ( const auto& v : sorted ) {
        if ( wc.values.empty() || wc.values.back() != v ) {
            wc.values.push_back( v );
            wc.multiplicity.push_back( 0 );
        }
        ++wc.multiplicity.back();
    }
    return wc;
}

// Calls f(counts) for every vector of per-class counts summing to l whose
// weighted sum reaches the threshold. `bounded` caps each count by the
// class multiplicity (subsets, injective sequences).
inline void for_each_heavy_composition( const WeightClasses& wc, unsigned long l, const Rational& threshold,
                                        bool bounded,
                                        const std::function< void( const std::vector< unsigned long >& ) >& f )
{
    std::vector< unsigned long > counts( wc.values.size(), 0 );
    std::function< void( std::size_t, unsigned long, Rational ) > rec
        = [ & ]( std::size_t i, unsigned long left, Rational sum ) {
              if ( i == wc.values.size() ) {
                  if ( left == 0 && sum >= threshold )
                      f( counts );
                  return;
              }
              unsigned long hi = bounded ? std::min( left, wc.multiplicity[ i ] ) : left;
              for ( unsigned long c = 0; c <= hi; ++c ) {
                  counts[ i ] = c;
                  rec( i + 1, left - c, sum + wc.values[ i ] * c );
              }
              counts[ i ] = 0;
          };
    rec( 0, l, Rational( 0 ) );
}

inline Integer falling( unsigned long n, unsigned long k )
{
    Integer r = 1;
    for ( unsigned long i = 0; i < k; ++i )
        r *= n - i;
    return r;
}

} // namespace detail

// N: number of l-subsets S of [m] with sum_{v in S} t(v) >= threshold, by
// scanning all subsets.
inline Integer count_heavy_subsets_direct( const VertexWeights& t, unsigned long l, const Rational& threshold )
{
    Integer count = 0;
    detail::for_each_subset( t.size(), l, [ & ]( const std::vector< Vertex >& s ) {
        Rational sum;
        for ( Vertex v : s )
            sum += t[ v ];
        if ( sum >= threshold )
            ++count;
        return true;
    } );
    return count;
}

// Same count through the distinct weight values: a subset is determined up
// to relabeling by how many vertices it takes from each weight class.
inline Integer count_heavy_subsets_by_class( const VertexWeights& t, unsigned long l, const Rational& threshold )
{
    auto wc = detail::weight_classes( t );
    Integer count = 0;
    detail::for_each_heavy_composition( wc, l, threshold, true, [ & ]( const std::vector< unsigned long >& c ) {
        Integer ways = 1;
        for ( std::size_t i = 0; i < c.size(); ++i )
            ways *= binomial( wc.multiplicity[ i ], c[ i ] );
        count += ways;
    } );
    return count;
}

inline Integer count_heavy_subsets( const VertexWeights& t, unsigned long l, const Rational& threshold,
                                    const BridgeLimits& limits = {} )
{
    if ( binomial( t.size(), l ) <= Integer( std::to_string( limits.direct_count_cap ) ) )
        return count_heavy_subsets_direct( t, l, threshold );
    return count_heavy_subsets_by_class( t, l, threshold );
}

struct SequenceCounts
{
    Integer n1; // l-sequences with repetition allowed
    Integer n2; // l-sequences of distinct vertices
};

// N1 = m^l * Pr[t(v_1) + ... + t(v_l) >= threshold], computed from the exact
// convolution tail and cross-checked against a direct class count; N2 by
// direct injective enumeration when small, else by the class formula.
inline SequenceCounts count_heavy_sequences( const VertexWeights& t, unsigned long l, const Rational& threshold,
                                             const BridgeLimits& limits = {} )
{
    if ( l < 1 )
        throw InvalidQuery( "sequence length must be at least 1" );
    const unsigned long m = t.size();
    Integer m_pow = pow( Integer( m ), l );
    Rational tail = iid_tail( weight_distribution( t ), static_cast< long >( l ), threshold, limits.tail );
    Rational n1q = tail * Rational( m_pow );
    if ( !is_integer( n1q ) )
        throw BugDetected( "m^l times the tail is not an integer" );

    SequenceCounts out;
    out.n1 = n1q.get_num();

    auto wc = detail::weight_classes( t );
    Integer n1_by_class = 0;
    Integer l_fact = factorial( l );
    detail::for_each_heavy_composition( wc, l, threshold, false, [ & ]( const std::vector< unsigned long >& c ) {
        Integer ways = l_fact;
        for ( std::size_t i = 0; i < c.size(); ++i ) {
            ways /= factorial( c[ i ] );
            ways *= pow( Integer( wc.multiplicity[ i ] ), c[ i ] );
        }
        n1_by_class += ways;
    } );
    if ( n1_by_class != out.n1 )
        throw BugDetected( "N1 from the convolution tail (" + out.n1.get_str() + ") disagrees with the class count ("
                           + n1_by_class.get_str() + ")" );

    if ( detail::falling( m, l ) <= Integer( std::to_string( limits.direct_count_cap ) ) ) {
        Integer n2 = 0;
        std::vector< bool > used( m, false );
        std::function< void( unsigned long, Rational ) > rec = [ & ]( unsigned long pos, Rational sum ) {
            if ( pos == l ) {
                if ( sum >= threshold )
                    ++n2;
                return;
            }
            for ( Vertex v = 0; v < m; ++v ) {
                if ( used[ v ] )
                    continue;
                used[ v ] = true;
                rec( pos + 1, sum + t[ v ] );
                used[ v ] = false;
            }
        };
        rec( 0, Rational( 0 ) );
        out.n2 = n2;
    } else {
        Integer n2 = 0;
        detail::for_each_heavy_composition( wc, l, threshold, true, [ & ]( const std::vector< unsigned long >& c ) {
            Integer ways = l_fact;
            for ( std::size_t i = 0; i < c.size(); ++i ) {
                ways /= factorial( c[ i ] );
                ways *= detail::falling( wc.multiplicity[ i ], c[ i ] );
            }
            n2 += ways;
        } );
        out.n2 = n2;
    }
    return out;
}

enum class BridgeDirection { CoverToDistribution, DistributionToHypergraph };

inline const char* to_string( BridgeDirection d )
{
    return d == BridgeDirection::CoverToDistribution ? "cover-to-dist" : "dist-to-hypergraph";
}

// Applicable: every check of the direction ran. Inapplicable: the density
// precondition on x fails. Vacuous: nu* = 0, so x^{-1} is undefined.
enum class BridgeStatus { Applicable, Inapplicable, Vacuous };

inline const char* to_string( BridgeStatus s )
{
    switch ( s ) {
    case BridgeStatus::Applicable: return "applicable";
    case BridgeStatus::Inapplicable: return "inapplicable";
    case BridgeStatus::Vacuous: return "vacuous";
    }
    return "?";
}

struct BridgeCheck
{
    std::string name;
    bool pass = false;
    Rational lhs;
    Rational rhs;
};

struct BridgeCertificate
{
    BridgeDirection direction = BridgeDirection::CoverToDistribution;
    BridgeStatus status = BridgeStatus::Applicable;
    std::string note;
    Hypergraph hypergraph{ 0, 1 };
    VertexWeights weight;
    DiscreteDistribution distribution;
    std::size_t m = 0;
    long l = 0;
    Rational d;
    Integer n;
    Integer n1;
    Integer n2;
    std::optional< Rational > nu_star;
    std::optional< Rational > tau_star;
    std::vector< BridgeCheck > checks;

    bool all_pass() const
    {
        return std::all_of( checks.begin(), checks.end(), []( const BridgeCheck& c ) { return c.pass; } );
    }

    const BridgeCheck* find( const std::string& name ) const
    {
        for ( const auto& c : checks )
            if ( c.name == name )
                return &c;
        return nullptr;
    }
};

namespace detail {

inline void check_eq( BridgeCertificate& c, std::string name, const Rational& lhs, const Rational& rhs )
{
    c.checks.push_back( { std::move( name ), lhs == rhs, lhs, rhs } );
}

inline void check_le( BridgeCertificate& c, std::string name, const Rational& lhs, const Rational& rhs )
{
    c.checks.push_back( { std::move( name ), lhs <= rhs, lhs, rhs } );
}

inline void check_lt( BridgeCertificate& c, std::string name, const Rational& lhs, const Rational& rhs )
{
    c.checks.push_back( { std::move( name ), lhs < rhs, lhs, rhs } );
}

// Smallest edge weight sum under t (1 for an edgeless hypergraph).
inline Rational min_edge_weight( const Hypergraph& h, const VertexWeights& t )
{
    std::optional< Rational > lo;
    for ( const auto& e : h.edges() ) {
        Rational s;
        for ( Vertex v : e )
            s += t[ v ];
        if ( !lo || s < *lo )
            lo = s;
    }
    return lo.value_or( Rational( 1 ) );
}

// The counting identities shared by both directions, at threshold one.
inline void add_counting_checks( BridgeCertificate& c, const BridgeLimits& limits )
{
    const unsigned long l = static_cast< unsigned long >( c.l );
    c.n = count_heavy_subsets( c.weight, l, Rational( 1 ), limits );
    auto seq = count_heavy_sequences( c.weight, l, Rational( 1 ), limits );
    c.n1 = seq.n1;
    c.n2 = seq.n2;
    Integer m_pow = pow( Integer( c.m ), l );
    Integer gap_bound = binomial( l, 2 ) * pow( Integer( c.m ), l - 1 );

    check_le( c, "edges <= N", Rational( Integer( c.hypergraph.edge_count() ) ), Rational( c.n ) );
    check_eq( c, "N2 == l! * N", Rational( c.n2 ), Rational( factorial( l ) * c.n ) );
    check_le( c, "0 <= N1 - N2", Rational( 0 ), Rational( Integer( c.n1 - c.n2 ) ) );
    check_le( c, "N1 - N2 <= C(l,2) * m^(l-1)", Rational( Integer( c.n1 - c.n2 ) ), Rational( gap_bound ) );
    Rational tail = iid_tail( weight_distribution( c.weight ), c.l, Rational( 1 ), limits.tail );
    check_eq( c, "N1 / m^l == Pr[sum t(v_i) >= 1]", make_rational( c.n1, m_pow ), tail );
}

} // namespace detail

// First direction. From an optimal fractional cover t of the l-graph H
// (l = k) on m vertices, with nu*(H) = x m, the variables X_i = t(v_i) for
// uniform v_i are i.i.d. with mean x, and |E(H)| <= N relates the edge count
// to Pr[X_1 + ... + X_l >= 1] = N1 / m^l. When
// 0 < x <= (1 + d/m) / (l + d) the rescaled variables X_i / x have mean one
// and must reach x^{-1} >= (l+d) m / (m+d).
//
// `cover`, when given, must be a minimum fractional cover of H.
inline BridgeCertificate cover_to_distribution( const Hypergraph& h, const Rational& d,
                                                const std::optional< VertexWeights >& cover = std::nullopt,
                                                const BridgeLimits& limits = {} )
{
    if ( d <= 0 )
        throw InvalidQuery( "deviation d must be positive" );
    if ( h.n() == 0 )
        throw InvalidQuery( "hypergraph has no vertices" );

    BridgeCertificate c;
    c.direction = BridgeDirection::CoverToDistribution;
    c.hypergraph = h;
    c.m = h.n();
    c.l = static_cast< long >( h.k() );
    c.d = d;

    DualityCertificate lp = duality_certificate( h );
    c.nu_star = lp.nu_star;
    c.tau_star = lp.tau_star;
    if ( cover ) {
        auto supplied = FractionalWeights::from_weights( Carrier::Vertices, *cover );
        if ( !is_fractional_cover( h, supplied ) )
            throw ValidationError( "supplied weights are not a fractional vertex cover" );
        if ( supplied.value != lp.tau_star )
            throw ValidationError( "supplied cover has weight " + to_string( supplied.value )
                                   + " but tau* = " + to_string( lp.tau_star ) );
        c.weight = *cover;
    } else {
        c.weight = lp.cover.weights;
    }
    c.distribution = weight_distribution( c.weight );

    Rational total;
    for ( const auto& w : c.weight )
        total += w;
    Rational m = Integer( c.m );
    Rational x = lp.nu_star / m;

    detail::check_le( c, "cover feasible: min edge weight >= 1", Rational( 1 ), detail::min_edge_weight( h, c.weight ) );
    detail::check_eq( c, "nu* == tau*", lp.nu_star, lp.tau_star );
    detail::check_eq( c, "sum t(v) == nu*", total, lp.nu_star );
    detail::check_eq( c, "mean of t(v) == x", mean( c.distribution ), x );
    detail::add_counting_checks( c, limits );

    if ( lp.nu_star == 0 ) {
        c.status = BridgeStatus::Vacuous;
        c.note = "nu* = 0: no edges to cover, x^{-1} undefined";
        return c;
    }
    Rational limit = ( 1 + d / m ) / ( c.l + d );
    if ( x > limit ) {
        c.status = BridgeStatus::Inapplicable;
        c.note = "x = " + to_string( x ) + " exceeds (1 + d/m)/(l + d) = " + to_string( limit );
        return c;
    }

    Rational inv = 1 / x;
    Rational finite_threshold = ( c.l + d ) * m / ( m + d );
    DiscreteDistribution rescaled = c.distribution.scaled( inv );
    Rational tail_one = iid_tail( c.distribution, c.l, Rational( 1 ), limits.tail );
    detail::check_le( c, "x^{-1} >= (l+d) m / (m+d)", finite_threshold, inv );
    detail::check_eq( c, "rescaled law has mean 1", mean( rescaled ), Rational( 1 ) );
    detail::check_eq( c, "Pr[sum X_i / x >= 1/x] == Pr[sum X_i >= 1]",
                      iid_tail( rescaled, c.l, inv, limits.tail ), tail_one );
    detail::check_le( c, "Pr[sum X_i >= 1] <= Pr[sum X_i / x >= (l+d) m / (m+d)]", tail_one,
                      iid_tail( rescaled, c.l, finite_threshold, limits.tail ) );
    return c;
}

// Second direction. For a mean-one law D on [0, l+d] with rational
// probabilities b_i / m', build the l-graph on m = r m' vertices whose
// vertex weights are blocks of r b_i copies of x_i / (l+d) (ascending atom
// order) and whose edges are the l-subsets of total weight >= 1. t is then
// a fractional cover of weight m / (l+d).
inline BridgeCertificate dist_to_hypergraph( const DiscreteDistribution& dist, long l, long d, long r,
                                             const BridgeLimits& limits = {} )
{
    if ( l < 1 || d < 1 || r < 1 )
        throw InvalidQuery( "dist_to_hypergraph needs l, d, r >= 1" );
    if ( dist.size() == 0 )
        throw ValidationError( "empty distribution" );
    if ( mean( dist ) != 1 )
        throw ValidationError( "distribution has mean " + to_string( mean( dist ) ) + ", not 1" );
    Rational top = l + d;
    if ( dist.max_value() > top )
        throw ValidationError( "distribution is not supported in [0, l+d]" );

    Integer m_prime = dist.common_denominator();
    Integer m_big = m_prime * r;
    if ( !m_big.fits_ulong_p() || binomial( m_big.get_ui(), static_cast< unsigned long >( l ) )
                                      > Integer( std::to_string( limits.max_edges ) ) )
        throw ResourceLimit( "C(m,l) exceeds the edge cap of " + std::to_string( limits.max_edges ),
                             "C(" + m_big.get_str() + "," + std::to_string( l ) + ")" );

    BridgeCertificate c;
    c.direction = BridgeDirection::DistributionToHypergraph;
    c.m = m_big.get_ui();
    c.l = l;
    c.d = d;
    c.distribution = dist;
    for ( const auto& a : dist.atoms() ) {
        Rational block = a.prob * Rational( m_big );
        if ( !is_integer( block ) )
            throw BugDetected( "block size is not an integer" );
        for ( unsigned long i = 0; i < block.get_num().get_ui(); ++i )
            c.weight.push_back( a.value / top );
    }

    std::vector< Edge > edges;
    detail::for_each_subset( c.m, static_cast< std::size_t >( l ), [ & ]( const std::vector< Vertex >& s ) {
        Rational sum;
        for ( Vertex v : s )
            sum += c.weight[ v ];
        if ( sum >= 1 )
            edges.push_back( s );
        return true;
    } );
    c.hypergraph = Hypergraph( c.m, static_cast< std::size_t >( l ), std::move( edges ) );

    Rational m = Integer( c.m );
    Rational total;
    for ( const auto& w : c.weight )
        total += w;

    detail::check_le( c, "cover feasible: min edge weight >= 1", Rational( 1 ),
                      detail::min_edge_weight( c.hypergraph, c.weight ) );
    detail::check_eq( c, "sum t(v) == m / (l+d)", total, m / top );
    bool law_recovered = weight_distribution( c.weight ).scaled( top ) == dist;
    detail::check_eq( c, "law of (l+d) t(v) == D", Rational( law_recovered ? 1 : 0 ), Rational( 1 ) );
    if ( c.hypergraph.edge_count() <= limits.lp_max_edges ) {
        DualityCertificate lp = duality_certificate( c.hypergraph );
        c.nu_star = lp.nu_star;
        c.tau_star = lp.tau_star;
        detail::check_le( c, "tau* <= sum t(v)", lp.tau_star, total );
        detail::check_lt( c, "nu* < (m+d)/(l+d)", lp.nu_star, ( m + d ) / top );
    }
    detail::add_counting_checks( c, limits );
    detail::check_eq( c, "N == edges", Rational( c.n ), Rational( Integer( c.hypergraph.edge_count() ) ) );
    detail::check_eq( c, "Pr[sum t(v_i) >= 1] == Pr[sum X_i >= l+d]",
                      iid_tail( weight_distribution( c.weight ), l, Rational( 1 ), limits.tail ),
                      iid_tail( dist, l, top, limits.tail ) );
    return c;
}

struct ProbeRow
{
    long r = 0;
    std::size_t m = 0;
    std::size_t edges = 0;
    Integer n;
    Integer n1;
    Integer n2;
    Rational density;  // |E| / C(m,l)
    Rational tail;     // Pr[X_1 + ... + X_l >= l+d] = N1 / m^l
    Rational observed; // |l! |E| / m^l - tail| = (N1 - N2) / m^l
    Rational gap_bound; // C(l,2) m^(l-1) / m^l
    bool dominated = false;
};

struct ProbeReport
{
    long l = 0;
    long d = 0;
    DiscreteDistribution distribution;
    std::vector< ProbeRow > rows;

    bool all_dominated() const
    {
        return std::all_of( rows.begin(), rows.end(), []( const ProbeRow& r ) { return r.dominated; } );
    }
};

// Tabulates dist_to_hypergraph over increasing replication factors r: the
// edge density approaches the tail as m grows, within C(l,2)/m.
inline ProbeReport equivalence_probe( long l, long d, const DiscreteDistribution& dist,
                                      const std::vector< long >& r_values, const BridgeLimits& limits = {} )
{
    BridgeLimits no_lp = limits;
    no_lp.lp_max_edges = 0;
    ProbeReport report;
    report.l = l;
    report.d = d;
    report.distribution = dist;
    Rational tail = iid_tail( dist, l, Rational( l + d ), limits.tail );
    for ( long r : r_values ) {
        BridgeCertificate c = dist_to_hypergraph( dist, l, d, r, no_lp );
        if ( !c.all_pass() )
            throw BugDetected( "bridge certificate failed inside the probe at r=" + std::to_string( r ) );
        ProbeRow row;
        row.r = r;
        row.m = c.m;
        row.edges = c.hypergraph.edge_count();
        row.n = c.n;
        row.n1 = c.n1;
        row.n2 = c.n2;
        Integer m_pow = pow( Integer( c.m ), static_cast< unsigned long >( l ) );
        Integer subsets = binomial( c.m, l );
        row.density = subsets == 0 ? Rational( 0 ) : make_rational( Integer( row.edges ), subsets );
        row.tail = tail;
        Rational scaled_density = row.density * Rational( factorial( l ) * binomial( c.m, l ) ) / Rational( m_pow );
        row.observed = abs( scaled_density - row.tail );
        row.gap_bound = make_rational( binomial( l, 2 ) * pow( Integer( c.m ), l - 1 ), m_pow );
        row.dominated = row.observed <= row.gap_bound && make_rational( c.n1, m_pow ) == tail;
        report.rows.push_back( std::move( row ) );
    }
    return report;
}

} // namespace fracmatch
