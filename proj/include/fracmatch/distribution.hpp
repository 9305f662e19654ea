#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace fracmatch {

struct Atom
{
    Rational value;
    Rational prob;

    bool operator==( const Atom& ) const = default;
};

// A finitely supported law on [0, inf) with exact rational atoms. Atoms are
// sorted by value, values are distinct, probabilities positive and summing
// to exactly one.
class DiscreteDistribution
{
public:
    DiscreteDistribution() = default;

    // Sorts and merges equal values; rejects negative values, nonpositive
    // probabilities and totals other than one.
    explicit DiscreteDistribution( std::vector< Atom > atoms )
    {
        std::map< Rational, Rational > merged;
        for ( auto& a : atoms ) {
            if ( a.value < 0 )
                throw ValidationError( "negative atom value " + to_string( a.value ) );
            if ( a.prob <= 0 || a.prob > 1 )
                throw ValidationError( "atom probability " + to_string( a.prob ) + " outside (0,1]" );
            merged[ a.value ] += a.prob;
        }
        Rational total;
        for ( auto& [ v, p ] : merged ) {
            total += p;
            atoms_.push_back( { v, p } );
        }
        if ( total != 1 )
            throw ValidationError( "probabilities sum to " + to_string( total ) + ", not 1" );
    }

    static DiscreteDistribution point_mass( const Rational& value )
    {
        return DiscreteDistribution( { { value, Rational( 1 ) } } );
    }

    const std::vector< Atom >& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    Rational max_value() const { return atoms_.empty() ? Rational( 0 ) : atoms_.back().value; }

    // Least common denominator of the probabilities.
    Integer common_denominator() const
    {
        Integer l = 1;
        for ( const auto& a : atoms_ )
            l = lcm( l, Integer( a.prob.get_den() ) );
        return l;
    }

    // Law of c * X.
    DiscreteDistribution scaled( const Rational& c ) const
    {
        if ( c <= 0 )
            throw InvalidQuery( "scale factor must be positive" );
        std::vector< Atom > out;
        for ( const auto& a : atoms_ )
            out.push_back( { a.value * c, a.prob } );
        return DiscreteDistribution( std::move( out ) );
    }

    bool operator==( const DiscreteDistribution& ) const = default;

private:
    std::vector< Atom > atoms_;
};

inline Rational mean( const DiscreteDistribution& dist )
{
    Rational m;
    for ( const auto& a : dist.atoms() )
        m += a.value * a.prob;
    return m;
}

struct TailLimits
{
    // Cap on composite atoms formed in one convolution step before merging.
    std::uint64_t max_atoms = 10'000'000;
};

// Exact Pr[X_1 + ... + X_l >= t] for i.i.d. X_i with law `dist`.
//
// Iterated convolution with merging of equal partial sums. Because every
// atom is nonnegative, a partial sum that already reaches t stays there;
// that mass is moved to an accumulator and not convolved further.
inline Rational iid_tail( const DiscreteDistribution& dist, long l, const Rational& t,
                          const TailLimits& limits = {} )
{
    if ( l < 1 )
        throw InvalidQuery( "number of summands must be at least 1" );
    if ( dist.size() == 0 )
        throw ValidationError( "empty distribution" );

    Rational reached;
    std::map< Rational, Rational > partial{ { Rational( 0 ), Rational( 1 ) } };
    for ( long step = 0; step < l; ++step ) {
        std::uint64_t composite = static_cast< std::uint64_t >( partial.size() ) * dist.size();
        if ( composite > limits.max_atoms )
            throw ResourceLimit( "convolution step " + std::to_string( step + 1 ) + " exceeds the atom cap of "
                                     + std::to_string( limits.max_atoms ),
                                 std::to_string( composite ) + " composite atoms" );
        std::map< Rational, Rational > next;
        for ( const auto& [ s, p ] : partial ) {
            for ( const auto& a : dist.atoms() ) {
                Rational v = s + a.value;
                Rational q = p * a.prob;
                if ( v >= t )
                    reached += q;
                else
                    next[ v ] += q;
            }
        }
        partial = std::move( next );
    }
    return reached;
}

// The law taking value l + d with probability 1/(l+d) and 0 otherwise.
inline DiscreteDistribution conjectured_extremizer( long l, const Rational& d )
{
    Rational top = l + d;
    if ( top <= 1 )
        throw InvalidQuery( "extremizer needs l + d > 1" );
    return DiscreteDistribution( { { Rational( 0 ), 1 - 1 / top }, { top, 1 / top } } );
}

// Y_delta: 0 with probability delta, otherwise X / (1 - delta). Keeps the mean.
inline DiscreteDistribution damping_transform( const DiscreteDistribution& dist, const Rational& delta )
{
    if ( delta <= 0 || delta >= 1 )
        throw InvalidQuery( "damping parameter must lie in (0,1)" );
    Rational keep = 1 - delta;
    std::vector< Atom > out{ { Rational( 0 ), delta } };
    for ( const auto& a : dist.atoms() )
        out.push_back( { a.value / keep, a.prob * keep } );
    return DiscreteDistribution( std::move( out ) );
}

} // namespace fracmatch
