#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace fracmatch {

// maximize c.x  subject to  A x <= b,  x >= 0.
struct LinearProgram
{
    std::vector< std::vector< Rational > > a;
    std::vector< Rational > b;
    std::vector< Rational > c;

    std::size_t rows() const { return b.size(); }
    std::size_t cols() const { return c.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector< Rational > primal;
    // One multiplier per row of A; a feasible solution of the dual
    // minimize b.y  s.t.  A^T y >= c, y >= 0  with b.y == value.
    std::vector< Rational > dual;
    std::size_t pivots = 0;
};

namespace detail {

// Dense exact tableau. Columns 0..n-1 are structural, n..n+m-1 slacks and,
// during phase one, column n+m the auxiliary variable.
class Tableau
{
public:
    Tableau( const LinearProgram& lp, bool with_auxiliary )
        : m_( lp.rows() )
        , n_( lp.cols() )
        , width_( n_ + m_ + ( with_auxiliary ? 1 : 0 ) )
        , t_( m_, std::vector< Rational >( width_ ) )
        , rhs_( lp.b )
        , basis_( m_ )
        , z_( width_ )
    {
        for ( std::size_t i = 0; i < m_; ++i ) {
            if ( lp.a[ i ].size() != n_ )
                throw SolverError( "constraint row has wrong width" );
            for ( std::size_t j = 0; j < n_; ++j )
                t_[ i ][ j ] = lp.a[ i ][ j ];
            t_[ i ][ n_ + i ] = 1;
            if ( with_auxiliary )
                t_[ i ][ width_ - 1 ] = -1;
            basis_[ i ] = n_ + i;
        }
    }

    // Sets the objective (over all columns) and recomputes reduced costs for
    // the current basis.
    void set_objective( const std::vector< Rational >& cost )
    {
        cost_ = cost;
        cost_.resize( width_ );
        for ( std::size_t j = 0; j < width_; ++j ) {
            Rational zj = cost_[ j ];
            for ( std::size_t i = 0; i < m_; ++i )
                if ( t_[ i ][ j ] != 0 )
                    zj -= cost_[ basis_[ i ] ] * t_[ i ][ j ];
            z_[ j ] = zj;
        }
        objective_ = 0;
        for ( std::size_t i = 0; i < m_; ++i )
            objective_ += cost_[ basis_[ i ] ] * rhs_[ i ];
    }

    void pivot( std::size_t row, std::size_t col )
    {
        Rational p = t_[ row ][ col ];
        for ( auto& x : t_[ row ] )
            if ( x != 0 )
                x /= p;
        rhs_[ row ] /= p;
        for ( std::size_t i = 0; i < m_; ++i ) {
            if ( i == row || t_[ i ][ col ] == 0 )
                continue;
            Rational f = t_[ i ][ col ];
            for ( std::size_t j = 0; j < width_; ++j )
                if ( t_[ row ][ j ] != 0 )
                    t_[ i ][ j ] -= f * t_[ row ][ j ];
            rhs_[ i ] -= f * rhs_[ row ];
        }
        if ( z_[ col ] != 0 ) {
            Rational f = z_[ col ];
            for ( std::size_t j = 0; j < width_; ++j )
                if ( t_[ row ][ j ] != 0 )
                    z_[ j ] -= f * t_[ row ][ j ];
            objective_ += f * rhs_[ row ];
        }
        basis_[ row ] = col;
        ++pivots_;
    }

    // Bland's rule: entering column is the lowest index with positive
    // reduced cost; leaving row minimizes the ratio, ties to the lowest
    // basic variable index. Returns false when unbounded.
    bool optimize( std::size_t usable_width )
    {
        while ( true ) {
            std::optional< std::size_t > enter;
            for ( std::size_t j = 0; j < usable_width; ++j )
                if ( z_[ j ] > 0 ) {
                    enter = j;
                    break;
                }
            if ( !enter )
                return true;
            std::optional< std::size_t > leave;
            Rational best;
            for ( std::size_t i = 0; i < m_; ++i ) {
                if ( t_[ i ][ *enter ] <= 0 )
                    continue;
                Rational ratio = rhs_[ i ] / t_[ i ][ *enter ];
                if ( !leave || ratio < best
                     || ( ratio == best && basis_[ i ] < basis_[ *leave ] ) ) {
                    leave = i;
                    best = ratio;
                }
            }
            if ( !leave )
                return false;
            pivot( *leave, *enter );
        }
    }

    std::size_t rows() const { return m_; }
    std::size_t width() const { return width_; }
    const Rational& rhs( std::size_t i ) const { return rhs_[ i ]; }
    const Rational& at( std::size_t i, std::size_t j ) const { return t_[ i ][ j ]; }
    const Rational& reduced_cost( std::size_t j ) const { return z_[ j ]; }
    std::size_t basic( std::size_t i ) const { return basis_[ i ]; }
    const Rational& objective() const { return objective_; }
    std::size_t pivots() const { return pivots_; }

private:
    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector< std::vector< Rational > > t_;
    std::vector< Rational > rhs_;
    std::vector< std::size_t > basis_;
    std::vector< Rational > cost_;
    std::vector< Rational > z_;
    Rational objective_;
    std::size_t pivots_ = 0;
};

} // namespace detail

// Exact two-phase primal simplex with Bland's anti-cycling rule.
inline LpSolution solve( const LinearProgram& lp )
{
    const std::size_t m = lp.rows();
    const std::size_t n = lp.cols();
    if ( lp.a.size() != m )
        throw SolverError( "row count mismatch between A and b" );

    std::size_t most_negative = m;
    for ( std::size_t i = 0; i < m; ++i )
        if ( lp.b[ i ] < 0 && ( most_negative == m || lp.b[ i ] < lp.b[ most_negative ] ) )
            most_negative = i;

    bool phase_one = most_negative != m;
    detail::Tableau tab( lp, phase_one );
    LpSolution sol;

    if ( phase_one ) {
        // Auxiliary problem: maximize -x0 with A x - x0 <= b.
        std::size_t aux = tab.width() - 1;
        std::vector< Rational > cost( tab.width() );
        cost[ aux ] = -1;
        tab.pivot( most_negative, aux );
        tab.set_objective( cost );
        if ( !tab.optimize( tab.width() ) )
            throw SolverError( "auxiliary problem reported unbounded" );
        if ( tab.objective() < 0 ) {
            sol.status = LpStatus::Infeasible;
            sol.pivots = tab.pivots();
            return sol;
        }
        // Drive the auxiliary variable out of the basis if it is still there
        // (it is at zero).
        for ( std::size_t i = 0; i < tab.rows(); ++i ) {
            if ( tab.basic( i ) != aux )
                continue;
            std::optional< std::size_t > col;
            for ( std::size_t j = 0; j < aux; ++j )
                if ( tab.at( i, j ) != 0 ) {
                    col = j;
                    break;
                }
            if ( !col )
                throw SolverError( "auxiliary variable cannot leave the basis" );
            tab.pivot( i, *col );
        }
    }

    std::vector< Rational > cost( tab.width() );
    for ( std::size_t j = 0; j < n; ++j )
        cost[ j ] = lp.c[ j ];
    tab.set_objective( cost );
    // In phase two the auxiliary column (if any) is never allowed to enter.
    if ( !tab.optimize( n + m ) ) {
        sol.status = LpStatus::Unbounded;
        sol.pivots = tab.pivots();
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.value = tab.objective();
    sol.primal.assign( n, Rational( 0 ) );
    for ( std::size_t i = 0; i < tab.rows(); ++i )
        if ( tab.basic( i ) < n )
            sol.primal[ tab.basic( i ) ] = tab.rhs( i );
    sol.dual.resize( m );
    for ( std::size_t i = 0; i < m; ++i )
        sol.dual[ i ] = -tab.reduced_cost( n + i );
    sol.pivots = tab.pivots();
    return sol;
}

} // namespace fracmatch
