#include "besg/formula.hpp"

#include "besg/error.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <tuple>
#include <unordered_map>

namespace besg
{

struct formula::node
{
    formula_kind kind;
    std::string name;
    formula left;
    formula right;
    std::size_t size;
    std::size_t hash;
};

namespace
{

std::size_t mix( std::size_t seed, std::size_t value )
{
    return seed ^ ( value + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

} // namespace

formula::formula() : formula{ make_true() } {}

formula formula::make_true()
{
    static const auto shared = std::make_shared<const node>(
            node{ formula_kind::true_value, {}, formula{ nullptr }, formula{ nullptr }, 1, 0x51 } );
    return formula{ shared };
}

formula formula::make_false()
{
    static const auto shared = std::make_shared<const node>(
            node{ formula_kind::false_value, {}, formula{ nullptr }, formula{ nullptr }, 1, 0xa3 } );
    return formula{ shared };
}

formula formula::make_constant( bool value )
{
    return value ? make_true() : make_false();
}

formula formula::make_variable( std::string name )
{
    const auto h = mix( 0x17, std::hash<std::string>{}( name ) );
    return formula{ std::make_shared<const node>(
            node{ formula_kind::variable, std::move( name ), formula{ nullptr }, formula{ nullptr }, 1, h } ) };
}

formula formula::make_and( formula left, formula right )
{
    const auto s = 1 + left.tree_size() + right.tree_size();
    const auto h = mix( mix( 0x2b, left.hash() ), right.hash() );
    return formula{ std::make_shared<const node>(
            node{ formula_kind::conjunction, {}, std::move( left ), std::move( right ), s, h } ) };
}

formula formula::make_or( formula left, formula right )
{
    const auto s = 1 + left.tree_size() + right.tree_size();
    const auto h = mix( mix( 0x3d, left.hash() ), right.hash() );
    return formula{ std::make_shared<const node>(
            node{ formula_kind::disjunction, {}, std::move( left ), std::move( right ), s, h } ) };
}

formula_kind formula::kind() const noexcept
{
    return _node->kind;
}

bool formula::is_constant() const noexcept
{
    return kind() == formula_kind::true_value || kind() == formula_kind::false_value;
}

bool formula::is_binary() const noexcept
{
    return kind() == formula_kind::conjunction || kind() == formula_kind::disjunction;
}

const std::string& formula::name() const
{
    assert( is_variable() );
    return _node->name;
}

const formula& formula::left() const
{
    assert( is_binary() );
    return _node->left;
}

const formula& formula::right() const
{
    assert( is_binary() );
    return _node->right;
}

std::size_t formula::tree_size() const noexcept
{
    return _node ? _node->size : 0;
}

std::size_t formula::hash() const noexcept
{
    return _node ? _node->hash : 0;
}

bool operator==( const formula& a, const formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( !a._node || !b._node )
        return false;
    if ( a.hash() != b.hash() || a.tree_size() != b.tree_size() || a.kind() != b.kind() )
        return false;

    switch ( a.kind() )
    {
    case formula_kind::true_value:
    case formula_kind::false_value:
        return true;
    case formula_kind::variable:
        return a.name() == b.name();
    default:
        return a.left() == b.left() && a.right() == b.right();
    }
}

namespace
{

// Token rank within the preorder sequence; identifiers share a rank and are
// then compared by name.
int token_rank( formula_kind k )
{
    switch ( k )
    {
    case formula_kind::true_value:
        return 0;
    case formula_kind::false_value:
        return 1;
    case formula_kind::variable:
        return 2;
    case formula_kind::conjunction:
        return 3;
    case formula_kind::disjunction:
        return 4;
    }
    return 5;
}

void preorder( const formula& f, std::vector<const formula*>& out )
{
    out.push_back( &f );
    if ( f.is_binary() )
    {
        preorder( f.left(), out );
        preorder( f.right(), out );
    }
}

} // namespace

bool formula_precedes( const formula& a, const formula& b )
{
    if ( a.tree_size() != b.tree_size() )
        return a.tree_size() > b.tree_size();

    std::vector<const formula*> ta;
    std::vector<const formula*> tb;
    preorder( a, ta );
    preorder( b, tb );
    for ( std::size_t i = 0; i < ta.size() && i < tb.size(); ++i )
    {
        const auto ra = token_rank( ta[ i ]->kind() );
        const auto rb = token_rank( tb[ i ]->kind() );
        if ( ra != rb )
            return ra < rb;
        if ( ta[ i ]->is_variable() && ta[ i ]->name() != tb[ i ]->name() )
            return ta[ i ]->name() < tb[ i ]->name();
    }
    return ta.size() < tb.size();
}

namespace
{

void collect_occ( const formula& f, std::set<std::string>& out )
{
    switch ( f.kind() )
    {
    case formula_kind::variable:
        out.insert( f.name() );
        break;
    case formula_kind::conjunction:
    case formula_kind::disjunction:
        collect_occ( f.left(), out );
        collect_occ( f.right(), out );
        break;
    default:
        break;
    }
}

} // namespace

std::set<std::string> occ( const formula& f )
{
    std::set<std::string> result;
    collect_occ( f, result );
    return result;
}

formula substitute( const formula& f, const std::string& name, const formula& value )
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
                result = g.kind() == formula_kind::conjunction ? formula::make_and( std::move( l ), std::move( r ) )
                                                               : formula::make_or( std::move( l ), std::move( r ) );
            memo.emplace( g.identity(), result );
            return result;
        }
        default:
            return g;
        }
    };
    return go( f );
}

namespace
{

formula big_fold( std::vector<formula> fs, bool conjunctive )
{
    std::sort( fs.begin(), fs.end(), formula_order{} );
    fs.erase( std::unique( fs.begin(), fs.end() ), fs.end() );

    if ( fs.empty() )
        return formula::make_constant( conjunctive );

    auto combine = [ conjunctive ]( formula l, formula r ) {
        return conjunctive ? formula::make_and( std::move( l ), std::move( r ) )
                           : formula::make_or( std::move( l ), std::move( r ) );
    };

    // Innermost operand is the duplicated greatest element.
    formula acc = combine( fs.back(), fs.back() );
    for ( std::size_t i = fs.size() - 1; i-- > 0; )
        acc = combine( fs[ i ], std::move( acc ) );
    return acc;
}

} // namespace

formula big_and( std::vector<formula> fs )
{
    return big_fold( std::move( fs ), true );
}

formula big_or( std::vector<formula> fs )
{
    return big_fold( std::move( fs ), false );
}

std::size_t size( const formula& f )
{
    return f.tree_size();
}

bool is_identifier( const std::string& s )
{
    if ( s.empty() )
        return false;
    return std::all_of( s.begin(), s.end(), []( char c ) {
        return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '_'
               || c == '\'';
    } );
}

parse_error::parse_error( const std::string& message, std::size_t line, std::size_t column )
        : error{ line ? message + " (line " + std::to_string( line ) + ", column " + std::to_string( column ) + ")"
                      : message },
          _line{ line }, _column{ column }
{
}

} // namespace besg
