#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "distribution.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "thresholds.hpp"

namespace fracmatch {

struct ThetaSearchConfig
{
    int grid_points = 64;
    int refine_rounds = 6;
    double shrink = 0.25;
    long snap_denominator = 10'000;
    // Random grid seeds drawn for support sizes above two.
    std::size_t random_seeds = 512;
    // Best seeds that go through local refinement.
    std::size_t refine_top = 4;
    unsigned threads = 1;
    TailLimits tail;
};

// A mean-one candidate that beat the conjectured value. Logged, not fatal:
// the conjecture is open.
struct ThetaFinding
{
    std::uint64_t seed = 0;
    long l = 0;
    Rational d;
    DiscreteDistribution distribution;
    Rational value;
    std::string kind;
};

struct ThetaSearchResult
{
    DiscreteDistribution best;
    // Exact tail of `best` at threshold l + d: a lower bound on Theta^d(l).
    Rational value;
    Rational conjectured;
    Rational proved_cap;
    std::uint64_t evaluations = 0;
    bool budget_exhausted = false;
    std::vector< ThetaFinding > findings;
};

namespace detail {

// Free coordinates: s atom values in [0, l+d], then s-2 probabilities. The
// probabilities of the last two atoms follow from total mass one and mean
// one.
struct ThetaPoint
{
    std::vector< Rational > values;
    std::vector< Rational > probs;
};

inline std::optional< DiscreteDistribution > build_candidate( const ThetaPoint& p, const Rational& top )
{
    std::size_t s = p.values.size();
    if ( s < 2 || p.probs.size() != s - 2 )
        return std::nullopt;
    Rational rest = 1, moment = 1;
    for ( std::size_t i = 0; i + 2 < s; ++i ) {
        if ( p.probs[ i ] < 0 )
            return std::nullopt;
        rest -= p.probs[ i ];
        moment -= p.probs[ i ] * p.values[ i ];
    }
    for ( const auto& v : p.values )
        if ( v < 0 || v > top )
            return std::nullopt;
    if ( rest < 0 )
        return std::nullopt;
    const Rational& va = p.values[ s - 2 ];
    const Rational& vb = p.values[ s - 1 ];
    if ( va == vb )
        return std::nullopt;
    Rational qb = ( moment - va * rest ) / ( vb - va );
    Rational qa = rest - qb;
    if ( qa < 0 || qb < 0 )
        return std::nullopt;
    std::vector< Atom > atoms;
    for ( std::size_t i = 0; i + 2 < s; ++i )
        if ( p.probs[ i ] > 0 )
            atoms.push_back( { p.values[ i ], p.probs[ i ] } );
    if ( qa > 0 )
        atoms.push_back( { va, qa } );
    if ( qb > 0 )
        atoms.push_back( { vb, qb } );
    if ( atoms.empty() )
        return std::nullopt;
    return DiscreteDistribution( std::move( atoms ) );
}

// Floating counterpart used only to steer refinement. Sums within 1e-9 of
// the threshold count as reaching it.
inline std::optional< double > float_value( const std::vector< double >& values,
                                            const std::vector< double >& probs, long l, double top )
{
    std::size_t s = values.size();
    double rest = 1, moment = 1;
    for ( std::size_t i = 0; i + 2 < s; ++i ) {
        if ( probs[ i ] < 0 )
            return std::nullopt;
        rest -= probs[ i ];
        moment -= probs[ i ] * values[ i ];
    }
    if ( rest < -1e-12 )
        return std::nullopt;
    double va = values[ s - 2 ], vb = values[ s - 1 ];
    if ( std::fabs( vb - va ) < 1e-12 )
        return std::nullopt;
    double qb = ( moment - va * rest ) / ( vb - va );
    double qa = rest - qb;
    if ( qa < -1e-12 || qb < -1e-12 )
        return std::nullopt;
    std::vector< std::pair< double, double > > atoms;
    for ( std::size_t i = 0; i + 2 < s; ++i )
        atoms.emplace_back( values[ i ], probs[ i ] );
    atoms.emplace_back( va, std::max( 0.0, qa ) );
    atoms.emplace_back( vb, std::max( 0.0, qb ) );

    double reached = 0;
    std::map< long long, double > partial{ { 0, 1.0 } };
    const double scale = 1e9;
    for ( long step = 0; step < l; ++step ) {
        std::map< long long, double > next;
        for ( const auto& [ key, p ] : partial ) {
            double sum = static_cast< double >( key ) / scale;
            for ( const auto& [ v, q ] : atoms ) {
                if ( q <= 0 )
                    continue;
                double total = sum + v;
                if ( total >= top - 1e-9 )
                    reached += p * q;
                else
                    next[ std::llround( total * scale ) ] += p * q;
            }
        }
        partial = std::move( next );
    }
    return reached;
}

// Ordering for the returned best: higher value first, then the
// lexicographically smaller atom list.
inline bool better( const Rational& va, const DiscreteDistribution& a, const Rational& vb,
                    const DiscreteDistribution& b )
{
    if ( va != vb )
        return va > vb;
    const auto& x = a.atoms();
    const auto& y = b.atoms();
    return std::lexicographical_compare( x.begin(), x.end(), y.begin(), y.end(),
                                         []( const Atom& p, const Atom& q ) {
                                             if ( p.value != q.value )
                                                 return p.value < q.value;
                                             return p.prob < q.prob;
                                         } );
}

struct Evaluated
{
    ThetaPoint point;
    DiscreteDistribution dist;
    Rational value;
};

} // namespace detail

// Searches mean-one laws with at most `support_size` atoms in [0, l+d] for
// a large Pr[X_1 + ... + X_l >= l + d]. Every reported value is exact and
// hence a certified lower bound on Theta^d(l). A value above a proved upper
// bound throws BugDetected.
inline ThetaSearchResult theta_lower_search( long l, const Rational& d, int support_size,
                                             std::uint64_t budget, std::uint64_t seed,
                                             const ThetaSearchConfig& config = {} )
{
    if ( l < 1 || d <= 0 )
        throw InvalidQuery( "theta search needs l >= 1 and d > 0" );
    if ( support_size < 2 || support_size > 4 )
        throw InvalidQuery( "support size must be 2, 3 or 4" );
    if ( config.grid_points < 2 )
        throw InvalidQuery( "grid needs at least two points" );
    const Rational top = l + d;
    if ( top <= 1 )
        throw InvalidQuery( "no nondegenerate mean-one law is supported in [0, l+d] when l + d <= 1" );
    if ( budget == 0 )
        throw InvalidQuery( "search budget must be positive" );

    ThetaSearchResult result;
    result.conjectured = feige_conjecture_value( l, d );
    result.proved_cap = proved_deviation_cap( l, d );

    const long g = config.grid_points - 1;
    auto grid_value = [ & ]( long j ) -> Rational { return top * make_rational( j, g ); };

    // Seeds: every two-point grid law a < 1 <= b, then random grid points.
    std::vector< detail::ThetaPoint > seeds;
    for ( long i = 0; i <= g; ++i ) {
        Rational a = grid_value( i );
        if ( a >= 1 )
            break;
        for ( long j = i + 1; j <= g; ++j ) {
            Rational b = grid_value( j );
            if ( b < 1 )
                continue;
            seeds.push_back( { { a, b }, {} } );
        }
    }
    std::mt19937_64 rng( seed );
    if ( support_size > 2 ) {
        std::uniform_int_distribution< long > pick( 0, g );
        std::size_t s = static_cast< std::size_t >( support_size );
        for ( std::size_t n = 0, attempts = 0; n < config.random_seeds && attempts < 50 * config.random_seeds;
              ++attempts ) {
            detail::ThetaPoint p;
            for ( std::size_t i = 0; i < s; ++i )
                p.values.push_back( grid_value( pick( rng ) ) );
            Rational total;
            for ( std::size_t i = 0; i + 2 < s; ++i ) {
                p.probs.push_back( make_rational( pick( rng ), g ) );
                total += p.probs.back();
            }
            if ( total > 1 )
                continue;
            seeds.push_back( std::move( p ) );
            ++n;
        }
    }

    std::uint64_t seed_budget = std::min< std::uint64_t >( budget, seeds.size() );
    if ( seed_budget < seeds.size() ) {
        seeds.resize( seed_budget );
        result.budget_exhausted = true;
    }

    using Maybe = std::optional< detail::Evaluated >;
    auto evaluate_exact = [ & ]( const detail::ThetaPoint& p ) -> Maybe {
        auto dist = detail::build_candidate( p, top );
        if ( !dist )
            return std::nullopt;
        if ( mean( *dist ) != 1 )
            throw BugDetected( "candidate law lost its unit mean" );
        Rational v = iid_tail( *dist, l, top, config.tail );
        return detail::Evaluated{ p, std::move( *dist ), std::move( v ) };
    };

    auto evaluated = parallel_chunks< std::vector< Maybe > >(
        seeds.size(), config.threads,
        [ & ]( std::uint64_t begin, std::uint64_t end ) {
            std::vector< Maybe > out;
            for ( std::uint64_t i = begin; i < end; ++i )
                out.push_back( evaluate_exact( seeds[ i ] ) );
            return out;
        },
        64 );
    result.evaluations = seeds.size();

    std::vector< detail::Evaluated > pool;
    for ( auto& chunk : evaluated )
        for ( auto& e : chunk )
            if ( e )
                pool.push_back( std::move( *e ) );

    auto sort_pool = [ & ] {
        std::stable_sort( pool.begin(), pool.end(), []( const auto& a, const auto& b ) {
            return detail::better( a.value, a.dist, b.value, b.dist );
        } );
    };
    sort_pool();

    // Local refinement of the best seeds in floating point, then exact
    // re-evaluation of the snapped point.
    std::vector< detail::Evaluated > refined;
    double topd = to_double( top );
    std::size_t to_refine = std::min( config.refine_top, pool.size() );
    for ( std::size_t r = 0; r < to_refine && !result.budget_exhausted; ++r ) {
        const detail::ThetaPoint& start = pool[ r ].point;
        std::vector< double > values, probs;
        for ( const auto& v : start.values )
            values.push_back( to_double( v ) );
        for ( const auto& p : start.probs )
            probs.push_back( to_double( p ) );
        auto current = detail::float_value( values, probs, l, topd );
        if ( !current )
            continue;
        double value_step = topd / g;
        double prob_step = 1.0 / g;
        for ( int round = 0; round < config.refine_rounds && !result.budget_exhausted; ++round ) {
            bool improved = true;
            for ( int sweep = 0; improved && sweep < 32 && !result.budget_exhausted; ++sweep ) {
                improved = false;
                std::size_t dims = values.size() + probs.size();
                for ( std::size_t c = 0; c < dims && !result.budget_exhausted; ++c ) {
                    bool is_value = c < values.size();
                    double& x = is_value ? values[ c ] : probs[ c - values.size() ];
                    double step = is_value ? value_step : prob_step;
                    double hi = is_value ? topd : 1.0;
                    for ( double dir : { 1.0, -1.0 } ) {
                        if ( result.evaluations >= budget ) {
                            result.budget_exhausted = true;
                            break;
                        }
                        double saved = x;
                        x = std::clamp( saved + dir * step, 0.0, hi );
                        ++result.evaluations;
                        auto v = detail::float_value( values, probs, l, topd );
                        if ( v && *v > *current + 1e-12 ) {
                            current = v;
                            improved = true;
                        } else {
                            x = saved;
                        }
                    }
                }
            }
            value_step *= config.shrink;
            prob_step *= config.shrink;
        }
        if ( result.evaluations >= budget ) {
            result.budget_exhausted = true;
            break;
        }
        detail::ThetaPoint snapped;
        for ( double v : values )
            snapped.values.push_back( best_rational_approximation( v, config.snap_denominator ) );
        for ( double p : probs )
            snapped.probs.push_back( best_rational_approximation( p, config.snap_denominator ) );
        ++result.evaluations;
        if ( auto e = evaluate_exact( snapped ) )
            refined.push_back( std::move( *e ) );
    }
    for ( auto& e : refined )
        pool.push_back( std::move( e ) );
    sort_pool();

    if ( pool.empty() )
        throw InvalidQuery( "no feasible mean-one candidate within budget" );

    for ( const auto& e : pool ) {
        if ( e.value > result.proved_cap )
            throw BugDetected( "falsifies proven bound - implementation bug: tail " + to_string( e.value )
                               + " exceeds proved cap " + to_string( result.proved_cap ) + " at l="
                               + std::to_string( l ) + ", d=" + to_string( d ) );
        if ( e.value > result.conjectured ) {
            bool seen = std::any_of( result.findings.begin(), result.findings.end(),
                                     [ & ]( const ThetaFinding& f ) { return f.distribution == e.dist; } );
            if ( !seen )
                result.findings.push_back(
                    { seed, l, d, e.dist, e.value, "conjecture counterexample candidate" } );
        }
    }
    result.best = pool.front().dist;
    result.value = pool.front().value;
    return result;
}

} // namespace fracmatch
