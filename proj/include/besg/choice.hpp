#pragma once

#include "besg/structure_graph.hpp"

#include <map>
#include <vector>

namespace besg
{

// A partial map picking one successor for every vertex decorated with
// `bullet` (conj or disj) that has successors.
struct choice_function
{
    decoration bullet = decoration::conj;
    std::map<vertex_id, vertex_id> pick;
};

// Keeps only the chosen edge at every vertex in the domain and drops the
// `bullet` decoration everywhere. Throws precondition_error when gamma has
// the wrong domain or picks a non-successor.
structure_graph apply_choice( const structure_graph& g, const choice_function& gamma );

// Every choice function for `bullet`. Domain vertices vary in id order,
// the last one fastest; successors are tried in ascending order.
std::vector<choice_function> enumerate_choices( const structure_graph& g, decoration bullet );

// Value of phi(root) under the solution of to_bes(g) for a normalised,
// BESsy graph without free variables that lacks conj or disj vertices.
// Decided on lassoes: with no conj vertices the root is true iff it
// reaches top or a cycle whose highest rank is even; dually otherwise.
// Throws precondition_error ("mixed graph") if both decorations occur.
bool solve_lasso( const structure_graph& g );

} // namespace besg
