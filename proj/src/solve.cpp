#include "besg/solve.hpp"

#include <functional>
#include <unordered_map>

namespace besg
{

bool eval_formula( const formula& f, const environment& env )
{
    switch ( f.kind() )
    {
    case formula_kind::true_value:
        return true;
    case formula_kind::false_value:
        return false;
    case formula_kind::variable:
        return env( f.name() );
    case formula_kind::conjunction:
        return eval_formula( f.left(), env ) && eval_formula( f.right(), env );
    case formula_kind::disjunction:
        return eval_formula( f.left(), env ) || eval_formula( f.right(), env );
    }
    return false;
}

namespace
{

environment solve_suffix( const bes& e, std::size_t from, const environment& env )
{
    if ( from == e.equation_count() )
        return env;

    const auto& eq = e[ from ];
    const bool extremal = eq.sign == fixpoint_sign::nu;
    const auto inner = solve_suffix( e, from + 1, env.updated( eq.lhs, extremal ) );
    const bool value = eval_formula( eq.rhs, inner );
    return solve_suffix( e, from + 1, env.updated( eq.lhs, value ) );
}

// Formulae built during elimination are DAGs; constants are folded so that
// they stay small. This never leaks out of the solver.
formula fold_and( formula l, formula r )
{
    if ( l.kind() == formula_kind::false_value || r.kind() == formula_kind::false_value )
        return formula::make_false();
    if ( l.kind() == formula_kind::true_value )
        return r;
    if ( r.kind() == formula_kind::true_value )
        return l;
    if ( l.identity() == r.identity() )
        return l;
    return formula::make_and( std::move( l ), std::move( r ) );
}

formula fold_or( formula l, formula r )
{
    if ( l.kind() == formula_kind::true_value || r.kind() == formula_kind::true_value )
        return formula::make_true();
    if ( l.kind() == formula_kind::false_value )
        return r;
    if ( r.kind() == formula_kind::false_value )
        return l;
    if ( l.identity() == r.identity() )
        return l;
    return formula::make_or( std::move( l ), std::move( r ) );
}

formula substitute_folding( const formula& f, const std::string& name, const formula& value )
{
    std::unordered_map<const void*, formula> memo;
    std::function<formula( const formula& )> go = [ & ]( const formula& g ) -> formula {
        switch ( g.kind() )
        {
        case formula_kind::variable:
            return g.name() == name ? value : g;
        case formula_kind::conjunction:
        case formula_kind::disjunction: {
            if ( auto it = memo.find( g.identity() ); it != memo.end() )
                return it->second;
            auto l = go( g.left() );
            auto r = go( g.right() );
            formula result = g;
            if ( l.identity() != g.left().identity() || r.identity() != g.right().identity() )
                result = g.kind() == formula_kind::conjunction ? fold_and( std::move( l ), std::move( r ) )
                                                               : fold_or( std::move( l ), std::move( r ) );
            memo.emplace( g.identity(), result );
            return result;
        }
        default:
            return g;
        }
    };
    return go( f );
}

bool eval_shared( const formula& f, const environment& env, std::unordered_map<const void*, bool>& memo )
{
    switch ( f.kind() )
    {
    case formula_kind::true_value:
        return true;
    case formula_kind::false_value:
        return false;
    case formula_kind::variable:
        return env( f.name() );
    default:
        break;
    }
    if ( auto it = memo.find( f.identity() ); it != memo.end() )
        return it->second;
    bool value = f.kind() == formula_kind::conjunction
                         ? eval_shared( f.left(), env, memo ) && eval_shared( f.right(), env, memo )
                         : eval_shared( f.left(), env, memo ) || eval_shared( f.right(), env, memo );
    memo.emplace( f.identity(), value );
    return value;
}

} // namespace

environment solve_recursive( const bes& e, const environment& env )
{
    return solve_suffix( e, 0, env );
}

environment solve_gauss( const bes& e, const environment& env )
{
    const auto n = e.equation_count();
    std::vector<formula> rhs;
    rhs.reserve( n );
    for ( const auto& eq : e )
        rhs.push_back( eq.rhs );

    // Backward: afterwards rhs[i] mentions only earlier bound variables and
    // free variables.
    for ( std::size_t i = n; i-- > 0; )
    {
        const auto& eq = e[ i ];
        rhs[ i ] = substitute_folding( rhs[ i ], eq.lhs, formula::make_constant( eq.sign == fixpoint_sign::nu ) );
        for ( std::size_t j = 0; j < i; ++j )
            rhs[ j ] = substitute_folding( rhs[ j ], eq.lhs, rhs[ i ] );
    }

    environment result = env;
    for ( std::size_t i = 0; i < n; ++i )
    {
        std::unordered_map<const void*, bool> memo;
        result.set( e[ i ].lhs, eval_shared( rhs[ i ], result, memo ) );
    }
    return result;
}

environment solve( const bes& e, const environment& env, solve_method method )
{
    return method == solve_method::recursive ? solve_recursive( e, env ) : solve_gauss( e, env );
}

} // namespace besg
