#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace fracmatch {

// max{1/2, 1 - (1 - 1/k)^(k-d)}: the conjectured minimum d-degree density
// forcing a perfect matching. Known to be a lower bound on m_d(k).
inline Rational conjectured_md_threshold( long k, long d )
{
    if ( k < 2 || d < 1 || d > k - 1 )
        throw InvalidQuery( "conjectured threshold needs k >= 2 and 1 <= d <= k-1" );
    Rational space = 1 - pow( 1 - make_rational( 1, k ), static_cast< unsigned long >( k - d ) );
    return max( make_rational( 1, 2 ), space );
}

// Kuhn-Osthus-Townsend: (k-d)/k - (k-d-1)/k^(k-d), for k >= 3, 1 <= d <= k/2.
inline Rational kot_bound( long k, long d )
{
    if ( k < 3 || d < 1 || 2 * d > k )
        throw InvalidQuery( "KOT bound needs k >= 3 and 1 <= d <= k/2" );
    Rational first = make_rational( k - d, k );
    Rational second = make_rational( Integer( k - d - 1 ), pow( Integer( k ), static_cast< unsigned long >( k - d ) ) );
    return first - second;
}

// Han's g(k,d) = 1 - (1 - (k-d)(k-2d-1)/(k-1)^2) (1 - 1/k)^(k-d).
// Evaluated for any k >= 2, 1 <= d <= k-1; whether the value is a proved
// bound depends on the range (see han_g_proved_range).
inline Rational han_g( long k, long d )
{
    if ( k < 2 || d < 1 || d > k - 1 )
        throw InvalidQuery( "g(k,d) needs k >= 2 and 1 <= d <= k-1" );
    Rational inner = 1 - make_rational( ( k - d ) * ( k - 2 * d - 1 ), ( k - 1 ) * ( k - 1 ) );
    return 1 - inner * pow( 1 - make_rational( 1, k ), static_cast< unsigned long >( k - d ) );
}

// Han's theorem holds for k >= 3 and 1 <= d < k/2.
inline bool han_g_proved_range( long k, long d )
{
    return k >= 3 && d >= 1 && 2 * d < k;
}

inline Rational garnett_bound()
{
    return make_rational( 43, 50 );
}

// The two older constants for the Feige probability, in historical order.
inline Rational feige_original_bound() { return make_rational( 12, 13 ); }
inline Rational he_zhang_zhang_bound() { return make_rational( 7, 8 ); }

// Markov's inequality for a sum of l mean-one variables: l / (l + d).
inline Rational markov_bound( long l, const Rational& d )
{
    if ( l < 1 || d <= 0 )
        throw InvalidQuery( "Markov bound needs l >= 1 and d > 0" );
    return Rational( l ) / ( l + d );
}

// 1 - (1 - 1/(l+d))^l, the value attained by the two-point extremizer.
inline Rational feige_conjecture_value( long l, const Rational& d )
{
    if ( l < 1 || d <= 0 )
        throw InvalidQuery( "Feige value needs l >= 1 and d > 0" );
    return 1 - pow( 1 - 1 / ( l + d ), static_cast< unsigned long >( l ) );
}

// g(l+d, d) is a proved upper bound on the i.i.d. deviation probability
// only where Han's theorem applies to k = l+d, i.e. for integers 1 <= d < l.
inline bool deviation_g_applies( long l, const Rational& d )
{
    if ( !is_integer( d ) || !d.get_num().fits_slong_p() )
        return false;
    long di = d.get_num().get_si();
    return han_g_proved_range( l + di, di );
}

enum class BoundStatus { Proved, Conjectural, LowerBound, Inapplicable };

inline const char* to_string( BoundStatus s )
{
    switch ( s ) {
    case BoundStatus::Proved: return "proved";
    case BoundStatus::Conjectural: return "conjectural";
    case BoundStatus::LowerBound: return "lower-bound";
    case BoundStatus::Inapplicable: return "inapplicable";
    }
    return "?";
}

struct BoundEntry
{
    std::string name;
    Rational value;
    std::string provenance;
    BoundStatus status = BoundStatus::Proved;
};

struct BoundReport
{
    std::string kind; // "matching" or "deviation"
    std::vector< std::pair< std::string, std::string > > params;
    std::vector< BoundEntry > entries;
    // Name of the smallest proved upper bound, if any entry is one.
    std::optional< std::string > best;

    const BoundEntry* find( const std::string& name ) const
    {
        for ( const auto& e : entries )
            if ( e.name == name )
                return &e;
        return nullptr;
    }

    const BoundEntry* best_entry() const
    {
        return best ? find( *best ) : nullptr;
    }
};

namespace detail {

inline void select_best( BoundReport& report )
{
    const BoundEntry* best = nullptr;
    for ( const auto& e : report.entries ) {
        if ( e.value < 0 || e.value > 1 )
            throw BugDetected( "bound '" + e.name + "' = " + to_string( e.value ) + " outside [0,1]" );
        if ( e.status != BoundStatus::Proved )
            continue;
        if ( !best || e.value < best->value )
            best = &e;
    }
    if ( best )
        report.best = best->name;
}

} // namespace detail

// Every constant bounding m_d(k) / C(n-d, k-d) that applies at (k, d).
inline BoundReport matching_bound_report( long k, long d )
{
    if ( k < 2 || d < 1 || d > k - 1 )
        throw InvalidQuery( "matching report needs k >= 2 and 1 <= d <= k-1" );
    BoundReport r;
    r.kind = "matching";
    r.params = { { "k", std::to_string( k ) }, { "d", std::to_string( d ) } };
    r.entries.push_back( { "conjectured", conjectured_md_threshold( k, d ),
                           "Dirac-type matching conjecture; space/parity constructions",
                           BoundStatus::LowerBound } );
    if ( k >= 3 && 2 * d < k )
        r.entries.push_back( { "kot", kot_bound( k, d ), "Kuhn-Osthus-Townsend", BoundStatus::Proved } );
    else if ( k >= 3 && 2 * d == k )
        // At d = k/2 the constant drops below the parity lower bound 1/2.
        r.entries.push_back( { "kot", kot_bound( k, d ),
                               "Kuhn-Osthus-Townsend; at d = k/2 the constant is below the lower bound 1/2, "
                               "not a valid bound",
                               BoundStatus::Inapplicable } );
    if ( han_g_proved_range( k, d ) )
        r.entries.push_back( { "han", max( make_rational( 1, 2 ), han_g( k, d ) ),
                               "Han: max{delta(n,k,d), g(k,d)}; delta taken as its constant 1/2 "
                               "(asymptotic-only)",
                               BoundStatus::Proved } );
    if ( k >= 3 && 2 * d <= k )
        r.entries.push_back( { "main-43/50", 1 - make_rational( 7, 50 ),
                               "1 - 7/50 via the deviation-to-matching equivalence", BoundStatus::Proved } );
    detail::select_best( r );
    return r;
}

// Upper bounds on Pr[X_1 + ... + X_l >= l + d] for i.i.d. nonnegative
// mean-one X_i, together with the conjectured value.
inline BoundReport deviation_bound_report( long l, const Rational& d )
{
    if ( l < 1 || d <= 0 )
        throw InvalidQuery( "deviation report needs l >= 1 and d > 0" );
    BoundReport r;
    r.kind = "deviation";
    r.params = { { "l", std::to_string( l ) }, { "d", to_string( d ) } };
    r.entries.push_back( { "markov", markov_bound( l, d ), "Markov's inequality", BoundStatus::Proved } );
    r.entries.push_back( { "garnett", garnett_bound(),
                           d >= 1 ? "Garnett (d >= 1)" : "Garnett; stated for d >= 1 only",
                           d >= 1 ? BoundStatus::Proved : BoundStatus::Inapplicable } );
    if ( is_integer( d ) && d >= 1 ) {
        long di = d.get_num().get_si();
        bool applies = deviation_g_applies( l, d );
        Rational g = han_g( l + di, di );
        // Outside Han's range g can fall below the extremizer value (e.g.
        // g(4,2) = 5/16 < 7/16), and even below zero; report but never use.
        r.entries.push_back( { "han-g", max( g, Rational( 0 ) ),
                               applies ? "g(l+d,d) via Han's theorem (d < l)"
                                       : "g(l+d,d) outside Han's range (d >= l); raw value "
                                             + to_string( g ) + "; not a valid bound",
                               applies ? BoundStatus::Proved : BoundStatus::Inapplicable } );
    }
    r.entries.push_back( { "feige-conjectured", feige_conjecture_value( l, d ),
                           "Feige's conjecture; attained by the two-point extremizer",
                           BoundStatus::Conjectural } );
    detail::select_best( r );
    return r;
}

// The smallest proved upper bound on the i.i.d. deviation probability at
// (l, d): Markov, plus Garnett for d >= 1, plus g(l+d,d) where it applies.
inline Rational proved_deviation_cap( long l, const Rational& d )
{
    Rational cap = markov_bound( l, d );
    if ( d >= 1 )
        cap = min( cap, garnett_bound() );
    if ( deviation_g_applies( l, d ) ) {
        long di = d.get_num().get_si();
        cap = min( cap, han_g( l + di, di ) );
    }
    return cap;
}

} // namespace fracmatch
