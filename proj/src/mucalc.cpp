#include "besg/mucalc.hpp"

#include "besg/error.hpp"

#include <algorithm>

namespace besg
{

std::set<action_id> resolve( const lts& l, const action_set& a )
{
    std::set<action_id> result;
    for ( action_id i = 0; i < l.action_count(); ++i )
        if ( a.actions.contains( l.action_name( i ) ) != a.complement )
            result.insert( i );
    return result;
}

namespace
{

using bitset = std::vector<bool>;

class semantics
{
    const lts& _l;
    std::map<std::string, bitset> _env;

public:
    semantics( const lts& l, const state_environment& theta ) : _l{ l }
    {
        for ( const auto& [ x, states ] : theta )
        {
            bitset b( l.state_count() );
            for ( auto s : states )
                b.at( s ) = true;
            _env.emplace( x, std::move( b ) );
        }
    }

    bitset eval( const mu_formula& f )
    {
        const auto n = _l.state_count();
        switch ( f.kind() )
        {
        case mu_kind::true_value:
            return bitset( n, true );
        case mu_kind::false_value:
            return bitset( n, false );
        case mu_kind::variable: {
            auto it = _env.find( f.name() );
            return it == _env.end() ? bitset( n, false ) : it->second;
        }
        case mu_kind::conjunction:
        case mu_kind::disjunction: {
            auto l = eval( f.left() );
            const auto r = eval( f.right() );
            for ( std::size_t s = 0; s < n; ++s )
                l[ s ] = f.kind() == mu_kind::conjunction ? l[ s ] && r[ s ] : l[ s ] || r[ s ];
            return l;
        }
        case mu_kind::box:
        case mu_kind::diamond: {
            const auto acts = resolve( _l, f.actions() );
            const auto body = eval( f.body() );
            const bool box = f.kind() == mu_kind::box;
            bitset result( n, box );
            for ( state_id s = 0; s < n; ++s )
                for ( const auto& [ a, t ] : _l.successors( s ) )
                    if ( acts.contains( a ) && body[ t ] != box )
                        result[ s ] = !box;
            return result;
        }
        case mu_kind::nu:
        case mu_kind::mu: {
            const auto saved = _env.find( f.name() ) == _env.end() ? std::optional<bitset>{}
                                                                    : std::optional<bitset>{ _env[ f.name() ] };
            bitset approx( n, f.kind() == mu_kind::nu );
            for ( ;; )
            {
                _env[ f.name() ] = approx;
                auto next = eval( f.body() );
                if ( next == approx )
                    break;
                approx = std::move( next );
            }
            if ( saved )
                _env[ f.name() ] = *saved;
            else
                _env.erase( f.name() );
            return approx;
        }
        }
        return bitset( n, false );
    }
};

void check_names( const lts& l, const mu_formula& f )
{
    std::set<std::string> vars = free_variables( f );
    for ( const auto& x : binders( f ) )
        vars.insert( x );
    std::set<std::string> seen;
    for ( const auto& x : vars )
        for ( state_id s = 0; s < l.state_count(); ++s )
            if ( !seen.insert( indexed_variable( x, l, s ) ).second )
                throw well_formedness_error( "indexed variable " + indexed_variable( x, l, s ) + " is ambiguous" );
}

void encode_into( const lts& l, const mu_formula& f, std::vector<equation>& out )
{
    switch ( f.kind() )
    {
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        encode_into( l, f.left(), out );
        encode_into( l, f.right(), out );
        break;
    case mu_kind::box:
    case mu_kind::diamond:
        encode_into( l, f.body(), out );
        break;
    case mu_kind::nu:
    case mu_kind::mu: {
        const auto sign = f.kind() == mu_kind::nu ? fixpoint_sign::nu : fixpoint_sign::mu;
        std::vector<equation> block;
        for ( state_id s = 0; s < l.state_count(); ++s )
            block.push_back( { sign, indexed_variable( f.name(), l, s ), rhs_s( l, s, f.body() ) } );
        std::sort( block.begin(), block.end(),
                   []( const equation& a, const equation& b ) { return a.lhs < b.lhs; } );
        out.insert( out.end(), block.begin(), block.end() );
        encode_into( l, f.body(), out );
        break;
    }
    default:
        break;
    }
}

void modalities_disjoint( const lts& l, const std::set<std::string>& hidden, const mu_formula& f, bool& safe )
{
    switch ( f.kind() )
    {
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        modalities_disjoint( l, hidden, f.left(), safe );
        modalities_disjoint( l, hidden, f.right(), safe );
        break;
    case mu_kind::box:
    case mu_kind::diamond:
        for ( auto a : resolve( l, f.actions() ) )
            if ( hidden.contains( l.action_name( a ) ) )
                safe = false;
        // Explicitly named actions count even when l has no such action.
        if ( !f.actions().complement )
            for ( const auto& a : f.actions().actions )
                if ( hidden.contains( a ) )
                    safe = false;
        modalities_disjoint( l, hidden, f.body(), safe );
        break;
    case mu_kind::nu:
    case mu_kind::mu:
        modalities_disjoint( l, hidden, f.body(), safe );
        break;
    default:
        break;
    }
}

} // namespace

state_set mc_semantics( const lts& l, const mu_formula& f, const state_environment& theta )
{
    check_well_formed( f );
    const auto bits = semantics{ l, theta }.eval( f );
    state_set result;
    for ( state_id s = 0; s < bits.size(); ++s )
        if ( bits[ s ] )
            result.insert( s );
    return result;
}

std::string indexed_variable( const std::string& x, const lts& l, state_id s )
{
    return x + "_" + l.state_name( s );
}

formula rhs_s( const lts& l, state_id s, const mu_formula& f )
{
    switch ( f.kind() )
    {
    case mu_kind::true_value:
        return formula::make_true();
    case mu_kind::false_value:
        return formula::make_false();
    case mu_kind::variable:
        return formula::make_variable( indexed_variable( f.name(), l, s ) );
    case mu_kind::conjunction:
        return formula::make_and( rhs_s( l, s, f.left() ), rhs_s( l, s, f.right() ) );
    case mu_kind::disjunction:
        return formula::make_or( rhs_s( l, s, f.left() ), rhs_s( l, s, f.right() ) );
    case mu_kind::box:
    case mu_kind::diamond: {
        const auto acts = resolve( l, f.actions() );
        std::vector<formula> operands;
        for ( const auto& [ a, t ] : l.successors( s ) )
            if ( acts.contains( a ) )
                operands.push_back( rhs_s( l, t, f.body() ) );
        return f.kind() == mu_kind::box ? big_and( std::move( operands ) ) : big_or( std::move( operands ) );
    }
    case mu_kind::nu:
    case mu_kind::mu:
        return formula::make_variable( indexed_variable( f.name(), l, s ) );
    }
    return formula::make_false();
}

bes encode( const lts& l, const mu_formula& f )
{
    check_well_formed( f );
    check_names( l, f );
    std::vector<equation> eqs;
    encode_into( l, f, eqs );
    return bes{ std::move( eqs ) };
}

environment encode_environment( const lts& l, const mu_formula& f, const state_environment& theta )
{
    std::map<std::string, bool> values;
    for ( const auto& y : free_variables( f ) )
    {
        const auto it = theta.find( y );
        for ( state_id t = 0; t < l.state_count(); ++t )
            values[ indexed_variable( y, l, t ) ] = it != theta.end() && it->second.contains( t );
    }
    return environment{ std::move( values ) };
}

bool is_safe_abstraction( const lts& l, const std::set<std::string>& hidden, const mu_formula& f )
{
    bool safe = true;
    modalities_disjoint( l, hidden, f, safe );
    return safe;
}

} // namespace besg
