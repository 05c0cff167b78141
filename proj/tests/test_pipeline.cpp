#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/mucalc.hpp"
#include "besg/pipeline.hpp"
#include "besg/props.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace besg;

namespace
{

pipeline_report run( const char* aut, const char* mcf, pipeline_options options = {} )
{
    return run_pipeline( parse_aut( test::read_data( aut ) ), parse_mcf( test::read_data( mcf ) ), options );
}

} // namespace

TEST_CASE( "normalised pipeline on the mutex variant" )
{
    pipeline_options options;
    options.normalise = true;
    const auto r = run( "mutex_variant.aut", "mutex_variant.mcf", options );
    CHECK( r.root == "X_s0" );
    CHECK( r.bes_size == 26 );
    CHECK( r.bes_equations == 3 );
    CHECK( r.normalised );
    CHECK( r.quotient_vertices == 4 );
    CHECK( r.minimised_equations == 3 );
    CHECK( r.minimised_size == 18 );
    CHECK( r.root_value );
    CHECK( size( r.minimised ) == r.minimised_size );
}

TEST_CASE( "without normalisation the minimised system is larger" )
{
    const auto r = run( "mutex_variant.aut", "mutex_variant.mcf" );
    CHECK_FALSE( r.normalised );
    CHECK( r.bes_size == 26 );
    CHECK( r.minimised_size > 18 );
}

TEST_CASE( "pipeline on the mutual exclusion example" )
{
    const auto r = run( "mutex.aut", "mutex.mcf" );
    CHECK( r.bes_equations == 8 );
    CHECK( r.root_value );
    CHECK( r.solution.size() == 8 );
    for ( const auto& [ x, b ] : r.solution )
        CHECK( b );
    CHECK( r.minimised_solution.size() == r.minimised_equations );
    CHECK( r.graph_vertices >= r.quotient_vertices );
}

TEST_CASE( "choosing the root state" )
{
    pipeline_options options;
    options.state = "s2";
    const auto r = run( "mutex.aut", "mutex.mcf", options );
    CHECK( r.root == "X_s2" );
    options.state = "s9";
    CHECK_THROWS_AS( run( "mutex.aut", "mutex.mcf", options ), precondition_error );
}

TEST_CASE( "global roots conjoin all states" )
{
    pipeline_options options;
    options.global = true;
    const auto r = run( "mutex.aut", "mutex.mcf", options );
    CHECK( r.root_value );
    CHECK( r.root.find( "&&" ) != std::string::npos );
}

TEST_CASE( "an empty modality holds everywhere" )
{
    const auto l = props::cyclic_process( 2 );
    pipeline_options options;
    options.global = true;
    const auto r = run_pipeline( l, parse_mcf( "nu X. true" ), options );
    CHECK( r.root_value );
    for ( const auto& [ x, b ] : r.solution )
        CHECK( b );
}

TEST_CASE( "the cyclic process collapses to one vertex" )
{
    for ( std::size_t n = 1; n <= 8; ++n )
    {
        const auto r = run_pipeline( props::cyclic_process( n ), parse_mcf( "nu X. <a,b>X" ) );
        CHECK( r.root == "X_P" + std::to_string( n ) );
        CHECK( r.bes_size == 8 * n );
        CHECK( r.quotient_vertices == 1 );
        CHECK( r.minimised_size == 4 );
        CHECK( r.root_value );
    }
}

TEST_CASE( "equation system input" )
{
    const auto e = parse_bes( test::read_data( "structure_graph_example.bes" ) );
    pipeline_options options;
    options.env = environment{ { { "Z", true } } };
    const auto r = run_pipeline( e, parse_formula( "X && Y" ), options );
    CHECK( r.bes_size == 18 );
    CHECK( r.graph_vertices == 5 );
    CHECK( r.graph_edges == 8 );
    CHECK( r.root_value );
}

TEST_CASE( "reports" )
{
    const auto r = run( "mutex_variant.aut", "mutex_variant.mcf" );
    const auto j = to_json( r );
    CHECK( j[ "bes" ][ "size" ] == 26 );
    CHECK( j[ "minimised" ][ "size" ] == r.minimised_size );
    CHECK( j[ "root_value" ] == true );
    CHECK( j.contains( "timings_ms" ) );
    const auto text = print_report( r );
    CHECK( text.find( "bes: 3 equations, size 26" ) != std::string::npos );
}
