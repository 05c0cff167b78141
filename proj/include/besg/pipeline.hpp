#pragma once

#include "besg/bes.hpp"
#include "besg/lts.hpp"
#include "besg/mu_formula.hpp"
#include "besg/solve.hpp"
#include "besg/structure_graph.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace besg
{

struct pipeline_options
{
    bool normalise = false;
    // Root state for local model checking; the initial state by default.
    std::optional<std::string> state;
    // Use the conjunction over all states as root.
    bool global = false;
    solve_method method = solve_method::gauss;
    environment env;
};

struct stage_timing
{
    std::string stage;
    double milliseconds = 0;
};

struct pipeline_report
{
    std::string root;
    std::size_t bes_size = 0;
    std::size_t bes_equations = 0;
    std::size_t graph_vertices = 0;
    std::size_t graph_edges = 0;
    bool normalised = false;
    std::size_t quotient_vertices = 0;
    std::size_t quotient_edges = 0;
    std::size_t minimised_size = 0;
    std::size_t minimised_equations = 0;
    bool root_value = false;
    // Solutions of the original and the minimised system on their bound
    // variables.
    std::map<std::string, bool> solution;
    std::map<std::string, bool> minimised_solution;
    bes minimised;
    std::vector<stage_timing> timings;
};

// build -> [normalise] -> minimise -> to_bes -> solve, for the formula f
// over e.
pipeline_report run_pipeline( const bes& e, const formula& f, const pipeline_options& options = {} );

// encode, then the above with root RHS_s(phi) for the chosen state, or
// the conjunction over all states when options.global is set.
pipeline_report run_pipeline( const lts& l, const mu_formula& phi, const pipeline_options& options = {} );

nlohmann::json to_json( const pipeline_report& r );
std::string print_report( const pipeline_report& r );

} // namespace besg
