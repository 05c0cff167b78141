#pragma once

#include "besg/partition.hpp"
#include "besg/structure_graph.hpp"

namespace besg
{

struct quotient
{
    structure_graph graph;
    // Maps each vertex of the source graph to its vertex in `graph`.
    partition classes;
};

// Coarsest bisimulation on g: related vertices agree on decoration, rank
// and free variable, and reach the same classes.
partition bisimulation_classes( const structure_graph& g );

// The quotient g/~. Quotient vertices are ordered by their least member;
// each keeps the term of that member.
quotient bisim_minimise( const structure_graph& g );

// Whether the roots of a and b are bisimilar.
bool bisim_equiv( const structure_graph& a, const structure_graph& b );

} // namespace besg
