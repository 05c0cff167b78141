#include "besg/choice.hpp"
#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/props.hpp"
#include "besg/solve.hpp"

#include <doctest.h>

using namespace besg;

namespace
{

// 0 picks between an odd and an even self-loop.
structure_graph two_loops()
{
    return parse_sg( "sg 3 0\n"
                     "v 0 rank=0 dec=or\n"
                     "v 1 rank=1\n"
                     "v 2 rank=2\n"
                     "e 0 1\ne 0 2\ne 1 1\ne 2 2\n" );
}

bool reference( const structure_graph& g )
{
    return eval_formula( phi( g ), solve_recursive( to_bes( g ) ) );
}

} // namespace

TEST_CASE( "enumerating choice functions" )
{
    const auto g = two_loops();
    const auto disj = enumerate_choices( g, decoration::disj );
    REQUIRE( disj.size() == 2 );
    CHECK( disj[ 0 ].pick.at( 0 ) == 1 );
    CHECK( disj[ 1 ].pick.at( 0 ) == 2 );
    const auto conj = enumerate_choices( g, decoration::conj );
    REQUIRE( conj.size() == 1 );
    CHECK( conj[ 0 ].pick.empty() );
}

TEST_CASE( "odometer order varies the last vertex fastest" )
{
    const auto g = parse_sg( "sg 4 0\n"
                             "v 0 rank=0 dec=and\nv 1 rank=0 dec=and\nv 2 rank=0\nv 3 rank=1\n"
                             "e 0 1\ne 0 2\ne 1 2\ne 1 3\ne 2 2\ne 3 3\n" );
    const auto all = enumerate_choices( g, decoration::conj );
    REQUIRE( all.size() == 4 );
    CHECK( all[ 0 ].pick == std::map<vertex_id, vertex_id>{ { 0, 1 }, { 1, 2 } } );
    CHECK( all[ 1 ].pick == std::map<vertex_id, vertex_id>{ { 0, 1 }, { 1, 3 } } );
    CHECK( all[ 2 ].pick == std::map<vertex_id, vertex_id>{ { 0, 2 }, { 1, 2 } } );
}

TEST_CASE( "applying a choice keeps one edge and drops the decoration" )
{
    const auto g = two_loops();
    const auto h = apply_choice( g, { decoration::disj, { { 0, 2 } } } );
    CHECK( h[ 0 ].successors == std::vector<vertex_id>{ 2 } );
    CHECK( h[ 0 ].dec == decoration::none );
    CHECK( h[ 0 ].rank == 0u );
    CHECK( h.edge_count() == 3 );

    CHECK_THROWS_AS( apply_choice( g, { decoration::disj, { { 0, 0 } } } ), precondition_error );
    CHECK_THROWS_AS( apply_choice( g, { decoration::disj, {} } ), precondition_error );
    CHECK_THROWS_AS( apply_choice( g, { decoration::disj, { { 0, 1 }, { 1, 1 } } } ), precondition_error );
}

TEST_CASE( "choices bound the solution" )
{
    const auto g = two_loops();
    CHECK( reference( g ) );
    CHECK_FALSE( reference( apply_choice( g, { decoration::disj, { { 0, 1 } } } ) ) );
    CHECK( reference( apply_choice( g, { decoration::disj, { { 0, 2 } } } ) ) );
}

TEST_CASE( "lasso solving" )
{
    const auto g = two_loops();
    CHECK( solve_lasso( g ) );
    CHECK_FALSE( solve_lasso( apply_choice( g, { decoration::disj, { { 0, 1 } } } ) ) );

    // The highest rank on the only cycle is odd.
    const auto odd = parse_sg( "sg 2 0\nv 0 rank=2 dec=and\nv 1 rank=3\ne 0 1\ne 1 0\ne 0 0\n" );
    CHECK_FALSE( solve_lasso( odd ) );
    CHECK( solve_lasso( odd ) == reference( odd ) );

    const auto leaf = parse_sg( "sg 2 0\nv 0 rank=1 dec=or\nv 1 dec=top\ne 0 1\ne 0 0\n" );
    CHECK( solve_lasso( leaf ) );
    const auto bottom = parse_sg( "sg 2 0\nv 0 rank=0 dec=and\nv 1 dec=bot\ne 0 1\ne 0 0\n" );
    CHECK_FALSE( solve_lasso( bottom ) );
}

TEST_CASE( "lasso solving rejects mixed graphs" )
{
    const auto mixed = parse_sg( "sg 2 0\nv 0 rank=0 dec=and\nv 1 rank=0 dec=or\ne 0 1\ne 1 0\ne 1 1\n" );
    CHECK_THROWS_AS( solve_lasso( mixed ), precondition_error );
}

TEST_CASE( "choice function properties on random graphs" )
{
    for ( const auto& r : props::check_choice_functions( 3, 60 ) )
    {
        INFO( r.name << ": " << r.first_failure );
        CHECK( r.passed() );
    }
    const auto lasso = props::check_lasso( 5, 100 );
    INFO( lasso.first_failure );
    CHECK( lasso.passed() );
}
