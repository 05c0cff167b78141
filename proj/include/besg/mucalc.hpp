#pragma once

#include "besg/bes.hpp"
#include "besg/lts.hpp"
#include "besg/mu_formula.hpp"
#include "besg/solve.hpp"

#include <map>
#include <set>
#include <string>

namespace besg
{

using state_set = std::set<state_id>;
using state_environment = std::map<std::string, state_set>;

// The actions of l denoted by a (possibly complemented) action set.
std::set<action_id> resolve( const lts& l, const action_set& a );

// States satisfying f. Fixpoints are computed by iteration from the empty
// set (mu) or all states (nu); variables missing from theta denote the
// empty set.
state_set mc_semantics( const lts& l, const mu_formula& f, const state_environment& theta = {} );

// Name of the proposition variable X_s for fixpoint variable X and state s.
std::string indexed_variable( const std::string& x, const lts& l, state_id s );

// RHS_s(f).
formula rhs_s( const lts& l, state_id s, const mu_formula& f );

// E(L, f): one block per fixpoint in preorder, each sorted on its
// left-hand sides. Throws well_formedness_error for ill-formed f or when
// two indexed variables would share a name.
bes encode( const lts& l, const mu_formula& f );

// Environment mapping Y_t to whether t is in theta(Y).
environment encode_environment( const lts& l, const mu_formula& f, const state_environment& theta );

// Every modality's action set is disjoint from the hidden actions.
bool is_safe_abstraction( const lts& l, const std::set<std::string>& hidden, const mu_formula& f );

} // namespace besg
