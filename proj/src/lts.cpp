#include "besg/lts.hpp"

#include "besg/error.hpp"

#include <algorithm>
#include <map>

namespace besg
{

namespace
{

void require_unique( const std::vector<std::string>& names, const char* what )
{
    std::set<std::string> seen;
    for ( const auto& n : names )
        if ( !seen.insert( n ).second )
            throw well_formedness_error( std::string{ "duplicate " } + what + " " + n );
}

} // namespace

lts::lts( std::vector<std::string> states, std::vector<std::string> actions, std::vector<transition> transitions,
          state_id initial )
        : _states{ std::move( states ) }, _actions{ std::move( actions ) },
          _transitions{ std::move( transitions ) }, _initial{ initial }
{
    if ( _states.empty() )
        throw well_formedness_error( "a transition system needs at least one state" );
    if ( _actions.empty() )
        throw well_formedness_error( "a transition system needs at least one action" );
    if ( _initial >= _states.size() )
        throw well_formedness_error( "initial state out of range" );
    require_unique( _states, "state" );
    require_unique( _actions, "action" );

    std::sort( _transitions.begin(), _transitions.end() );
    _transitions.erase( std::unique( _transitions.begin(), _transitions.end() ), _transitions.end() );
    _out.resize( _states.size() );
    for ( const auto& t : _transitions )
    {
        if ( t.from >= _states.size() || t.to >= _states.size() || t.action >= _actions.size() )
            throw well_formedness_error( "transition refers to an unknown state or action" );
        _out[ t.from ].emplace_back( t.action, t.to );
    }
}

lts lts::from_triples( const std::vector<std::tuple<std::string, std::string, std::string>>& triples )
{
    std::vector<std::string> states, actions;
    std::map<std::string, std::size_t> state_ids, action_ids;
    auto intern = []( std::map<std::string, std::size_t>& ids, std::vector<std::string>& names,
                      const std::string& n ) {
        auto [ it, inserted ] = ids.emplace( n, names.size() );
        if ( inserted )
            names.push_back( n );
        return it->second;
    };

    std::vector<transition> ts;
    for ( const auto& [ from, action, to ] : triples )
    {
        const auto f = intern( state_ids, states, from );
        const auto a = intern( action_ids, actions, action );
        const auto t = intern( state_ids, states, to );
        ts.push_back( { f, a, t } );
    }
    return lts{ std::move( states ), std::move( actions ), std::move( ts ) };
}

std::optional<state_id> lts::find_state( const std::string& name ) const
{
    auto it = std::find( _states.begin(), _states.end(), name );
    if ( it == _states.end() )
        return std::nullopt;
    return static_cast<state_id>( it - _states.begin() );
}

std::optional<action_id> lts::find_action( const std::string& name ) const
{
    auto it = std::find( _actions.begin(), _actions.end(), name );
    if ( it == _actions.end() )
        return std::nullopt;
    return static_cast<action_id>( it - _actions.begin() );
}

lts_quotient lts_bisim_minimise( const lts& l )
{
    std::vector<std::vector<labelled_edge>> succ( l.state_count() );
    for ( state_id s = 0; s < l.state_count(); ++s )
        for ( const auto& [ a, t ] : l.successors( s ) )
            succ[ s ].emplace_back( a, t );
    auto classes = refine( std::vector<std::size_t>( l.state_count(), 0 ), succ );

    std::vector<std::string> names( classes.block_count );
    std::vector<bool> named( classes.block_count );
    for ( state_id s = 0; s < l.state_count(); ++s )
        if ( !named[ classes.block[ s ] ] )
        {
            named[ classes.block[ s ] ] = true;
            names[ classes.block[ s ] ] = l.state_name( s );
        }
    std::vector<transition> ts;
    for ( const auto& t : l.transitions() )
        ts.push_back( { classes.block[ t.from ], t.action, classes.block[ t.to ] } );
    const auto initial = classes.block[ l.initial() ];
    return { lts{ std::move( names ), l.actions(), std::move( ts ), initial }, std::move( classes ) };
}

lts abstract( const lts& l, const std::set<std::string>& hidden )
{
    if ( l.find_action( tau_action ) )
        throw precondition_error( "action tau already occurs in the transition system" );

    auto actions = l.actions();
    const action_id tau = actions.size();
    actions.emplace_back( tau_action );
    std::vector<transition> ts;
    for ( const auto& t : l.transitions() )
        ts.push_back( { t.from, hidden.contains( l.action_name( t.action ) ) ? tau : t.action, t.to } );
    return lts{ l.states(), std::move( actions ), std::move( ts ), l.initial() };
}

} // namespace besg
