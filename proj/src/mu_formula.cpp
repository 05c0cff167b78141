#include "besg/mu_formula.hpp"

#include "besg/error.hpp"

#include <cassert>

namespace besg
{

struct mu_formula::node
{
    mu_kind kind;
    std::string name;
    action_set actions;
    mu_formula left;
    mu_formula right;
};

mu_formula::mu_formula() : mu_formula{ make_true() } {}

mu_formula mu_formula::make_true()
{
    static const auto shared =
            std::make_shared<const node>( node{ mu_kind::true_value, {}, {}, mu_formula{ nullptr }, mu_formula{ nullptr } } );
    return mu_formula{ shared };
}

mu_formula mu_formula::make_false()
{
    static const auto shared = std::make_shared<const node>(
            node{ mu_kind::false_value, {}, {}, mu_formula{ nullptr }, mu_formula{ nullptr } } );
    return mu_formula{ shared };
}

mu_formula mu_formula::make_variable( std::string name )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::variable, std::move( name ), {}, mu_formula{ nullptr }, mu_formula{ nullptr } } ) };
}

mu_formula mu_formula::make_and( mu_formula left, mu_formula right )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::conjunction, {}, {}, std::move( left ), std::move( right ) } ) };
}

mu_formula mu_formula::make_or( mu_formula left, mu_formula right )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::disjunction, {}, {}, std::move( left ), std::move( right ) } ) };
}

mu_formula mu_formula::make_box( action_set actions, mu_formula body )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::box, {}, std::move( actions ), std::move( body ), mu_formula{ nullptr } } ) };
}

mu_formula mu_formula::make_diamond( action_set actions, mu_formula body )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::diamond, {}, std::move( actions ), std::move( body ), mu_formula{ nullptr } } ) };
}

mu_formula mu_formula::make_nu( std::string name, mu_formula body )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::nu, std::move( name ), {}, std::move( body ), mu_formula{ nullptr } } ) };
}

mu_formula mu_formula::make_mu( std::string name, mu_formula body )
{
    return mu_formula{ std::make_shared<const node>(
            node{ mu_kind::mu, std::move( name ), {}, std::move( body ), mu_formula{ nullptr } } ) };
}

mu_kind mu_formula::kind() const noexcept
{
    return _node->kind;
}

const std::string& mu_formula::name() const
{
    assert( kind() == mu_kind::variable || is_fixpoint() );
    return _node->name;
}

const mu_formula& mu_formula::left() const
{
    assert( kind() == mu_kind::conjunction || kind() == mu_kind::disjunction );
    return _node->left;
}

const mu_formula& mu_formula::right() const
{
    assert( kind() == mu_kind::conjunction || kind() == mu_kind::disjunction );
    return _node->right;
}

const mu_formula& mu_formula::body() const
{
    assert( is_modality() || is_fixpoint() );
    return _node->left;
}

const action_set& mu_formula::actions() const
{
    assert( is_modality() );
    return _node->actions;
}

bool operator==( const mu_formula& a, const mu_formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( !a._node || !b._node || a.kind() != b.kind() )
        return false;
    switch ( a.kind() )
    {
    case mu_kind::true_value:
    case mu_kind::false_value:
        return true;
    case mu_kind::variable:
        return a.name() == b.name();
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        return a.left() == b.left() && a.right() == b.right();
    case mu_kind::box:
    case mu_kind::diamond:
        return a.actions() == b.actions() && a.body() == b.body();
    case mu_kind::nu:
    case mu_kind::mu:
        return a.name() == b.name() && a.body() == b.body();
    }
    return false;
}

namespace
{

void collect_binders( const mu_formula& f, std::vector<std::string>& out )
{
    switch ( f.kind() )
    {
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        collect_binders( f.left(), out );
        collect_binders( f.right(), out );
        break;
    case mu_kind::box:
    case mu_kind::diamond:
        collect_binders( f.body(), out );
        break;
    case mu_kind::nu:
    case mu_kind::mu:
        out.push_back( f.name() );
        collect_binders( f.body(), out );
        break;
    default:
        break;
    }
}

void collect_free( const mu_formula& f, std::set<std::string>& bound, std::set<std::string>& out )
{
    switch ( f.kind() )
    {
    case mu_kind::variable:
        if ( !bound.contains( f.name() ) )
            out.insert( f.name() );
        break;
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        collect_free( f.left(), bound, out );
        collect_free( f.right(), bound, out );
        break;
    case mu_kind::box:
    case mu_kind::diamond:
        collect_free( f.body(), bound, out );
        break;
    case mu_kind::nu:
    case mu_kind::mu: {
        const bool fresh = bound.insert( f.name() ).second;
        collect_free( f.body(), bound, out );
        if ( fresh )
            bound.erase( f.name() );
        break;
    }
    default:
        break;
    }
}

std::string well_formedness_problem( const mu_formula& f )
{
    std::set<std::string> seen;
    const auto bs = binders( f );
    for ( const auto& x : bs )
        if ( !seen.insert( x ).second )
            return "variable " + x + " is bound more than once";
    for ( const auto& x : free_variables( f ) )
        if ( seen.contains( x ) )
            return "variable " + x + " occurs outside its binder";
    return {};
}

} // namespace

std::vector<std::string> binders( const mu_formula& f )
{
    std::vector<std::string> out;
    collect_binders( f, out );
    return out;
}

std::set<std::string> free_variables( const mu_formula& f )
{
    std::set<std::string> bound, out;
    collect_free( f, bound, out );
    return out;
}

bool is_well_formed( const mu_formula& f )
{
    return well_formedness_problem( f ).empty();
}

void check_well_formed( const mu_formula& f )
{
    if ( auto problem = well_formedness_problem( f ); !problem.empty() )
        throw well_formedness_error( problem );
}

} // namespace besg
