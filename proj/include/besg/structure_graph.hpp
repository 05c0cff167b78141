#pragma once

#include "besg/bes.hpp"
#include "besg/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace besg
{

using vertex_id = std::size_t;

enum class decoration : std::uint8_t
{
    none,
    conj,   // top-level conjunction
    disj,   // top-level disjunction
    top,    // true
    bottom, // false
};

const char* to_string( decoration d );

struct vertex
{
    decoration dec = decoration::none;
    std::optional<unsigned> rank;
    std::optional<std::string> free_var;
    // Sorted, without duplicates.
    std::vector<vertex_id> successors;
    // The term a vertex was generated from, when built from an equation
    // system. Not part of the vertex identity in bisimulation.
    std::optional<formula> term;

    bool has_successors() const noexcept { return !successors.empty(); }
};

// A vertex-labelled graph <T, t, ->, d, r, fv>. Vertices are numbered
// 0..size()-1. Immutable after construction.
class structure_graph
{
    std::vector<vertex> _vertices;
    vertex_id _root = 0;

public:
    // Normalises successor lists; throws precondition_error on dangling
    // edges or an out-of-range root.
    structure_graph( std::vector<vertex> vertices, vertex_id root );

    std::size_t size() const noexcept { return _vertices.size(); }
    vertex_id root() const noexcept { return _root; }
    const vertex& operator[]( vertex_id u ) const { return _vertices[ u ]; }
    const std::vector<vertex>& vertices() const noexcept { return _vertices; }

    std::size_t edge_count() const;
    std::size_t ranked_count() const;
    bool has_edge( vertex_id from, vertex_id to ) const;

    // Vertex generated from `term`, if any.
    std::optional<vertex_id> find_term( const formula& term ) const;

    // Same graph with another root, restricted to what that root reaches;
    // vertex ids are renumbered in order.
    structure_graph reachable_from( vertex_id new_root ) const;
};

// The reachable part of the structure graph <E, f> generated by the
// deduction rules. Vertex ids follow depth-first first-visit order.
structure_graph build( const bes& e, const formula& f );

bool is_bessy( const structure_graph& g );

// Every unranked vertex with a successor gets rank 0.
structure_graph normalise( const structure_graph& g );

// Name of the fresh variable representing ranked vertex u.
std::string vertex_variable( vertex_id u );

// phi(u); throws precondition_error if g is not BESsy.
formula phi( const structure_graph& g, vertex_id u );
formula phi( const structure_graph& g );

// rhs(u) for a ranked vertex u.
formula rhs_of( const structure_graph& g, vertex_id u );

// One equation per ranked vertex, ordered by descending rank and then by
// ascending vertex id.
bes to_bes( const structure_graph& g );

// Relevant variables: least set containing occ(f) and closed under the
// right-hand sides of bound variables.
std::set<std::string> kappa( const bes& e, const formula& f );

// Keeps the equations whose left-hand side is in ks, in order.
bes restrict( const bes& e, const std::set<std::string>& ks );

} // namespace besg
