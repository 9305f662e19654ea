#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace fracmatch {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational( long num, long den = 1 )
{
    if ( den == 0 )
        throw ValidationError( "zero denominator" );
    Rational q( num, den );
    q.canonicalize();
    return q;
}

inline Rational make_rational( const Integer& num, const Integer& den )
{
    if ( den == 0 )
        throw ValidationError( "zero denominator" );
    Rational q( num, den );
    q.canonicalize();
    return q;
}

// Canonical exact rendering: "p/q", or "p" when the denominator is one.
inline std::string to_string( const Rational& q )
{
    return q.get_str();
}

inline std::string to_string( const Integer& z )
{
    return z.get_str();
}

namespace detail {

inline bool is_integer_literal( std::string_view s )
{
    if ( s.empty() )
        return false;
    std::size_t i = ( s[ 0 ] == '-' || s[ 0 ] == '+' ) ? 1 : 0;
    if ( i == s.size() )
        return false;
    for ( ; i < s.size(); ++i )
        if ( s[ i ] < '0' || s[ i ] > '9' )
            return false;
    return true;
}

inline Integer parse_integer( std::string_view s )
{
    if ( !is_integer_literal( s ) )
        throw ValidationError( "not an integer: '" + std::string( s ) + "'" );
    if ( s[ 0 ] == '+' )
        s.remove_prefix( 1 );
    // Base 10 explicitly: gmp's automatic base would read "0125" as octal.
    return Integer( std::string( s ), 10 );
}

} // namespace detail

// Accepts "p/q", "p" and plain decimals such as "0.25" (converted exactly).
inline Rational parse_rational( std::string_view text )
{
    while ( !text.empty() && text.front() == ' ' )
        text.remove_prefix( 1 );
    while ( !text.empty() && text.back() == ' ' )
        text.remove_suffix( 1 );
    if ( text.empty() )
        throw ValidationError( "empty rational" );

    if ( auto slash = text.find( '/' ); slash != std::string_view::npos ) {
        Integer num = detail::parse_integer( text.substr( 0, slash ) );
        Integer den = detail::parse_integer( text.substr( slash + 1 ) );
        return make_rational( num, den );
    }
    if ( auto dot = text.find( '.' ); dot != std::string_view::npos ) {
        std::string_view whole = text.substr( 0, dot );
        std::string_view frac = text.substr( dot + 1 );
        std::string digits = std::string( whole ) + std::string( frac );
        if ( whole.empty() || whole == "-" || whole == "+" )
            digits = std::string( whole ) + "0" + std::string( frac );
        if ( frac.empty() || !detail::is_integer_literal( frac ) || frac[ 0 ] == '-'
             || frac[ 0 ] == '+' )
            throw ValidationError( "malformed decimal: '" + std::string( text ) + "'" );
        Integer num = detail::parse_integer( digits );
        Integer den;
        mpz_ui_pow_ui( den.get_mpz_t(), 10, frac.size() );
        return make_rational( num, den );
    }
    return Rational( detail::parse_integer( text ) );
}

inline Integer pow( const Integer& base, unsigned long exponent )
{
    Integer r;
    mpz_pow_ui( r.get_mpz_t(), base.get_mpz_t(), exponent );
    return r;
}

inline Rational pow( const Rational& base, unsigned long exponent )
{
    Integer num = pow( Integer( base.get_num() ), exponent );
    Integer den = pow( Integer( base.get_den() ), exponent );
    return make_rational( num, den );
}

inline Integer binomial( unsigned long n, unsigned long k )
{
    Integer r;
    mpz_bin_uiui( r.get_mpz_t(), n, k );
    return r;
}

inline Integer factorial( unsigned long n )
{
    Integer r;
    mpz_fac_ui( r.get_mpz_t(), n );
    return r;
}

inline Integer lcm( const Integer& a, const Integer& b )
{
    Integer r;
    mpz_lcm( r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t() );
    return r;
}

inline Rational abs( const Rational& q )
{
    return q < 0 ? Rational( -q ) : q;
}

inline Rational min( const Rational& a, const Rational& b ) { return b < a ? b : a; }
inline Rational max( const Rational& a, const Rational& b ) { return a < b ? b : a; }

inline double to_double( const Rational& q )
{
    return q.get_d();
}

inline bool is_integer( const Rational& q )
{
    return q.get_den() == 1;
}

// Integer division rounding half to even.
inline Integer round_half_even( const Rational& q )
{
    Integer num = q.get_num();
    Integer den = q.get_den();
    Integer floor_q;
    mpz_fdiv_q( floor_q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t() );
    Rational frac = q - Rational( floor_q );
    int cmp_half = cmp( frac, Rational( 1, 2 ) );
    if ( cmp_half > 0 )
        return floor_q + 1;
    if ( cmp_half < 0 )
        return floor_q;
    return mpz_even_p( floor_q.get_mpz_t() ) ? floor_q : Integer( floor_q + 1 );
}

// Fixed-point decimal with `significant` significant digits, rounded half
// to even. Zero renders as "0".
inline std::string to_decimal( const Rational& q, int significant = 12 )
{
    if ( significant < 1 )
        throw InvalidQuery( "decimal precision must be at least 1" );
    if ( q == 0 )
        return "0";

    bool negative = q < 0;
    Rational a = abs( q );

    // Exponent e with 10^e <= a < 10^(e+1).
    long e = static_cast< long >( std::floor( std::log10( a.get_d() ) ) );
    auto ten_pow = []( long p ) -> Rational {
        if ( p >= 0 )
            return Rational( pow( Integer( 10 ), static_cast< unsigned long >( p ) ) );
        return Rational( 1 ) / Rational( pow( Integer( 10 ), static_cast< unsigned long >( -p ) ) );
    };
    while ( a >= ten_pow( e + 1 ) )
        ++e;
    while ( a < ten_pow( e ) )
        --e;

    long shift = significant - 1 - e;
    Integer digits = round_half_even( a * ten_pow( shift ) );
    if ( digits == pow( Integer( 10 ), static_cast< unsigned long >( significant ) ) ) {
        ++e;
        --shift;
        digits = round_half_even( a * ten_pow( shift ) );
    }

    std::string s = digits.get_str();
    std::string out;
    if ( shift <= 0 ) {
        out = s + std::string( static_cast< std::size_t >( -shift ), '0' );
    } else if ( static_cast< std::size_t >( shift ) >= s.size() ) {
        out = "0." + std::string( static_cast< std::size_t >( shift ) - s.size(), '0' ) + s;
    } else {
        std::size_t point = s.size() - static_cast< std::size_t >( shift );
        out = s.substr( 0, point ) + "." + s.substr( point );
    }
    return negative ? "-" + out : out;
}

// Best rational approximation of x with denominator at most max_den
// (Stern-Brocot descent via continued fractions, with the semiconvergent
// check at the end).
inline Rational best_rational_approximation( double x, long max_den )
{
    if ( !std::isfinite( x ) )
        throw ValidationError( "cannot snap a non-finite value" );
    if ( max_den < 1 )
        throw InvalidQuery( "denominator bound must be positive" );
    bool negative = x < 0;
    double a = std::fabs( x );

    // Convergents p/q.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = a;
    for ( int iter = 0; iter < 64; ++iter ) {
        double fl = std::floor( r );
        if ( fl > 1e15 )
            break;
        long ai = static_cast< long >( fl );
        long p2 = ai * p1 + p0;
        long q2 = ai * q1 + q0;
        if ( q2 > max_den ) {
            // Semiconvergent with the largest admissible partial quotient.
            long t = ( max_den - q0 ) / q1;
            long ps = t * p1 + p0;
            long qs = t * q1 + q0;
            Rational semi( ps, qs ), conv( p1, q1 );
            semi.canonicalize();
            conv.canonicalize();
            Rational target( a );
            Rational best = abs( semi - target ) < abs( conv - target ) ? semi : conv;
            return negative ? Rational( -best ) : best;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = r - fl;
        if ( frac < 1e-15 )
            break;
        r = 1.0 / frac;
    }
    Rational conv( p1, q1 );
    conv.canonicalize();
    return negative ? Rational( -conv ) : conv;
}

} // namespace fracmatch
