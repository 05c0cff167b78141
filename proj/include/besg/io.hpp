#pragma once

#include "besg/bes.hpp"
#include "besg/lts.hpp"
#include "besg/mu_formula.hpp"
#include "besg/structure_graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace besg
{

// Proposition formulae and equation systems:
//   eqn  := ("mu" | "nu") IDENT "=" form ";"
//   form := "true" | "false" | IDENT | "(" form ")" | form "&&" form | form "||" form
// && binds tighter than ||; both associate to the left. `%` starts a
// comment that runs to the end of the line.
formula parse_formula( std::string_view text );
bes parse_bes( std::string_view text );

// Compound operands are always parenthesised, so printing is injective.
std::string print_formula( const formula& f );
// One equation per line.
std::string print_bes( const bes& e );

// Structure graphs:
//   sg <vertices> <root>
//   v <id> [rank=<n>] [dec=and|or|top|bot] [fv=<ident>]
//   e <from> <to>
structure_graph parse_sg( std::string_view text );
std::string print_sg( const structure_graph& g );

// Graphviz rendering with Unicode decorations; the root has a double
// border.
std::string print_dot( const structure_graph& g );

// One line per vertex with ASCII decorations, e.g. `0: \/ 3 -> 1 4`.
std::string describe_sg( const structure_graph& g );
// Vertex label `<id> <dec> <rank> <fv>`, with either glyph set.
std::string vertex_label( const structure_graph& g, vertex_id u, bool unicode );

// Aldebaran format. State k is named s<k>.
lts parse_aut( std::string_view text );
// States are written by index.
std::string print_aut( const lts& l );

// Modal mu-calculus:
//   f := true | false | X | f && f | f || f | [A]f | <A>f | nu X. f | mu X. f | (f)
//   A := [!] a, b, ...
// Fixpoints extend as far to the right as possible; && binds tighter than
// ||; modalities bind tightest.
mu_formula parse_mcf( std::string_view text );
std::string print_mcf( const mu_formula& f );

nlohmann::json to_json( const bes& e );
nlohmann::json to_json( const structure_graph& g );
nlohmann::json to_json( const lts& l );

} // namespace besg
