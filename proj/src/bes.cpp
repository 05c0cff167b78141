#include "besg/bes.hpp"

#include "besg/error.hpp"

#include <functional>

namespace besg
{

const char* to_string( fixpoint_sign sign )
{
    return sign == fixpoint_sign::mu ? "mu" : "nu";
}

bes::bes( std::vector<equation> equations ) : _equations{ std::move( equations ) }
{
    _index.reserve( _equations.size() );
    for ( std::size_t i = 0; i < _equations.size(); ++i )
    {
        if ( !_index.emplace( _equations[ i ].lhs, i ).second )
            throw well_formedness_error( "variable " + _equations[ i ].lhs + " is bound by more than one equation" );
    }
}

std::optional<std::size_t> bes::position_of( const std::string& name ) const
{
    if ( auto it = _index.find( name ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

const equation* bes::find( const std::string& name ) const
{
    if ( auto it = _index.find( name ); it != _index.end() )
        return &_equations[ it->second ];
    return nullptr;
}

std::set<std::string> bnd( const bes& e )
{
    std::set<std::string> result;
    for ( const auto& eq : e )
        result.insert( eq.lhs );
    return result;
}

std::set<std::string> occ( const bes& e )
{
    std::set<std::string> result;
    for ( const auto& eq : e )
        result.merge( occ( eq.rhs ) );
    return result;
}

bool is_closed( const bes& e )
{
    for ( const auto& x : occ( e ) )
        if ( !e.binds( x ) )
            return false;
    return true;
}

namespace
{

void operators_of( const formula& f, bool& has_and, bool& has_or )
{
    if ( f.kind() == formula_kind::conjunction )
        has_and = true;
    else if ( f.kind() == formula_kind::disjunction )
        has_or = true;
    else
        return;
    operators_of( f.left(), has_and, has_or );
    operators_of( f.right(), has_and, has_or );
}

} // namespace

bool is_simple_form( const bes& e )
{
    for ( const auto& eq : e )
    {
        bool has_and = false;
        bool has_or = false;
        operators_of( eq.rhs, has_and, has_or );
        if ( has_and && has_or )
            return false;
    }
    return true;
}

std::vector<unsigned> ranks( const bes& e )
{
    // block(s, eps) = 0 for nu and 1 for mu; each sign change to the right
    // adds one.
    std::vector<unsigned> result( e.equation_count() );
    for ( std::size_t i = e.equation_count(); i-- > 0; )
    {
        if ( i + 1 == e.equation_count() )
            result[ i ] = e[ i ].sign == fixpoint_sign::nu ? 0 : 1;
        else if ( e[ i ].sign == e[ i + 1 ].sign )
            result[ i ] = result[ i + 1 ];
        else
            result[ i ] = result[ i + 1 ] + 1;
    }
    return result;
}

unsigned rank( const bes& e, const std::string& x )
{
    const auto pos = e.position_of( x );
    if ( !pos )
        throw precondition_error( "variable not bound: " + x );

    auto sign = e[ *pos ].sign;
    unsigned alternations = 0;
    for ( std::size_t j = *pos + 1; j < e.equation_count(); ++j )
    {
        if ( e[ j ].sign != sign )
        {
            ++alternations;
            sign = e[ j ].sign;
        }
    }
    return alternations + ( sign == fixpoint_sign::nu ? 0 : 1 );
}

bes substitute( const bes& e, const std::string& x, bool b )
{
    if ( e.binds( x ) )
        throw precondition_error( "cannot substitute bound variable " + x );

    const auto value = formula::make_constant( b );
    std::vector<equation> eqs;
    eqs.reserve( e.equation_count() );
    for ( const auto& eq : e )
        eqs.push_back( { eq.sign, eq.lhs, substitute( eq.rhs, x, value ) } );
    return bes{ std::move( eqs ) };
}

std::size_t size( const bes& e )
{
    std::size_t total = 0;
    for ( const auto& eq : e )
        total += 1 + size( eq.rhs );
    return total;
}

bool equal_up_to_renaming( const bes& a, const bes& b )
{
    if ( a.equation_count() != b.equation_count() )
        return false;

    std::unordered_map<std::string, std::string> rename;
    for ( std::size_t i = 0; i < a.equation_count(); ++i )
    {
        if ( a[ i ].sign != b[ i ].sign )
            return false;
        rename.emplace( a[ i ].lhs, b[ i ].lhs );
    }

    std::function<bool( const formula&, const formula& )> same = [ & ]( const formula& f, const formula& g ) {
        if ( f.kind() != g.kind() )
            return false;
        switch ( f.kind() )
        {
        case formula_kind::variable: {
            auto it = rename.find( f.name() );
            if ( it != rename.end() )
                return it->second == g.name();
            return !b.binds( g.name() ) && f.name() == g.name();
        }
        case formula_kind::conjunction:
        case formula_kind::disjunction:
            return same( f.left(), g.left() ) && same( f.right(), g.right() );
        default:
            return true;
        }
    };

    for ( std::size_t i = 0; i < a.equation_count(); ++i )
        if ( !same( a[ i ].rhs, b[ i ].rhs ) )
            return false;
    return true;
}

} // namespace besg
