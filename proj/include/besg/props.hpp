#pragma once

#include "besg/bes.hpp"
#include "besg/lts.hpp"
#include "besg/mu_formula.hpp"
#include "besg/solve.hpp"
#include "besg/structure_graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace besg::props
{

using rng = std::mt19937_64;

struct result
{
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && cases > 0; }
    void fail( const std::string& what );
};

// Random instances. Bound variables are X0, X1, ...; free ones F0, F1, ...
formula random_formula( rng& gen, const std::vector<std::string>& vars, unsigned depth );
bes random_bes( rng& gen, std::size_t max_equations, std::size_t free_variables, unsigned depth );
// An environment assigning random values to F0..F(n-1).
environment random_environment( rng& gen, std::size_t free_variables );
// States s0.., actions a, b, c, ... Every state has at least one action
// available to some state.
lts random_lts( rng& gen, std::size_t max_states, std::size_t max_actions );
// Closed, well-formed formula whose outermost operator is a fixpoint.
// At most `fixpoints` binders; modalities range over subsets of `actions`
// and their complements.
mu_formula random_mu_formula( rng& gen, const std::vector<std::string>& actions, unsigned depth, unsigned fixpoints );
// Normalised, BESsy graph without free variables. Vertex 0 is the root.
// No vertex carries the `forbidden` decoration.
structure_graph random_normalised_graph( rng& gen, std::size_t max_vertices,
                                         std::optional<decoration> forbidden = std::nullopt );

// The cyclic process P_N = a^N b^N P_N with states P1..PN, Q1..QN, where
// P1 -a-> QN, P(n+1) -a-> Pn, Q1 -b-> PN and Q(n+1) -b-> Qn. PN is initial.
lts cyclic_process( std::size_t n );

// Reference solver for small systems, Gauss elimination beyond that.
environment solve_small( const bes& e, const environment& env = {} );

result check_gauss_agreement( std::uint64_t seed, std::size_t cases );
result check_round_trip( std::uint64_t seed, std::size_t cases );
result check_mader( std::uint64_t seed, std::size_t cases );
std::vector<result> check_solution_preservation( std::uint64_t seed, std::size_t cases );
std::vector<result> check_bisimulation_laws( std::uint64_t seed, std::size_t cases );
std::vector<result> check_choice_functions( std::uint64_t seed, std::size_t cases );
result check_lasso( std::uint64_t seed, std::size_t cases );

// All of the above with the case counts used for acceptance.
std::vector<result> check_all( std::uint64_t seed );

} // namespace besg::props
