#pragma once

#include "besg/partition.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace besg
{

using state_id = std::size_t;
using action_id = std::size_t;

struct transition
{
    state_id from;
    action_id action;
    state_id to;

    auto operator<=>( const transition& ) const = default;
};

// Labelled transition system <S, Act, ->. States and actions are named;
// transitions form a set.
class lts
{
    std::vector<std::string> _states;
    std::vector<std::string> _actions;
    std::vector<transition> _transitions;
    // Outgoing transitions per state, sorted.
    std::vector<std::vector<std::pair<action_id, state_id>>> _out;
    state_id _initial = 0;

public:
    // Throws well_formedness_error if S or Act is empty, a name repeats, or
    // a transition refers to an unknown state or action.
    lts( std::vector<std::string> states, std::vector<std::string> actions, std::vector<transition> transitions,
         state_id initial = 0 );

    // States and actions in order of first appearance; the first state is
    // initial.
    static lts from_triples( const std::vector<std::tuple<std::string, std::string, std::string>>& triples );

    std::size_t state_count() const noexcept { return _states.size(); }
    std::size_t action_count() const noexcept { return _actions.size(); }
    const std::string& state_name( state_id s ) const { return _states.at( s ); }
    const std::string& action_name( action_id a ) const { return _actions.at( a ); }
    const std::vector<std::string>& states() const noexcept { return _states; }
    const std::vector<std::string>& actions() const noexcept { return _actions; }
    const std::vector<transition>& transitions() const noexcept { return _transitions; }
    state_id initial() const noexcept { return _initial; }

    std::optional<state_id> find_state( const std::string& name ) const;
    std::optional<action_id> find_action( const std::string& name ) const;

    // Sorted (action, target) pairs leaving s.
    const std::vector<std::pair<action_id, state_id>>& successors( state_id s ) const { return _out.at( s ); }
};

struct lts_quotient
{
    lts system;
    partition classes;
};

// Coarsest strong bisimulation and the quotient. A quotient state carries
// the name of its least member.
lts_quotient lts_bisim_minimise( const lts& l );

// Relabels the hidden actions to "tau". Throws precondition_error if tau
// is already an action.
lts abstract( const lts& l, const std::set<std::string>& hidden );

inline constexpr const char* tau_action = "tau";

} // namespace besg
