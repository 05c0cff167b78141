#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/solve.hpp"
#include "besg/structure_graph.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace besg;

namespace
{

const bes& example()
{
    static const bes e = parse_bes( test::read_data( "structure_graph_example.bes" ) );
    return e;
}

vertex_id at( const structure_graph& g, const char* term )
{
    const auto u = g.find_term( parse_formula( term ) );
    REQUIRE( u.has_value() );
    return *u;
}

structure_graph normalisation_example()
{
    return parse_sg( test::read_data( "normalisation_example.sg" ) );
}

} // namespace

TEST_CASE( "building the example graph" )
{
    const auto g = build( example(), parse_formula( "X && Y" ) );
    REQUIRE( g.size() == 5 );
    CHECK( g.edge_count() == 8 );
    CHECK( g.ranked_count() == 3 );

    const auto xy = at( g, "X && Y" ), x = at( g, "X" ), y = at( g, "Y" ), w = at( g, "W" ), z = at( g, "Z" );
    CHECK( g.root() == xy );
    CHECK( xy == 0 );

    CHECK( g[ xy ].dec == decoration::conj );
    CHECK_FALSE( g[ xy ].rank );
    CHECK( g[ x ].dec == decoration::disj );
    CHECK( g[ x ].rank == 3u );
    CHECK( g[ y ].dec == decoration::disj );
    CHECK( g[ y ].rank == 2u );
    CHECK( g[ w ].dec == decoration::disj );
    CHECK( g[ w ].rank == 1u );
    CHECK( g[ z ].dec == decoration::none );
    CHECK( g[ z ].free_var == std::string{ "Z" } );
    CHECK_FALSE( g[ z ].rank );

    for ( const auto& [ a, b ] : std::vector<std::pair<vertex_id, vertex_id>>{
              { xy, x }, { xy, y }, { x, xy }, { x, z }, { y, xy }, { y, w }, { w, z }, { w, w } } )
        CHECK( g.has_edge( a, b ) );
    CHECK_FALSE( g.find_term( parse_formula( "Z || W" ) ) );
    CHECK( is_bessy( g ) );
}

TEST_CASE( "vertex ids follow depth-first discovery" )
{
    const auto g = build( example(), parse_formula( "true || X" ) );
    CHECK( g.size() == 7 );
    CHECK( g[ 0 ].dec == decoration::disj );
    CHECK( g[ 1 ].dec == decoration::top );
    CHECK( at( g, "X" ) == 2 );
    CHECK( at( g, "X && Y" ) == 3 );
}

TEST_CASE( "constants and free variables are leaves" )
{
    const auto e = parse_bes( "nu X = false;" );
    const auto g = build( e, parse_formula( "X" ) );
    REQUIRE( g.size() == 2 );
    CHECK( g[ 0 ].rank == 0u );
    CHECK( g[ 0 ].dec == decoration::none );
    CHECK( g[ 1 ].dec == decoration::bottom );
    CHECK( g.has_edge( 0, 1 ) );

    const auto h = build( bes{}, parse_formula( "A" ) );
    REQUIRE( h.size() == 1 );
    CHECK( h[ 0 ].free_var == std::string{ "A" } );
}

TEST_CASE( "a variable defined by a variable points to it" )
{
    const auto g = build( parse_bes( "mu X = Y; nu Y = Y && Y;" ), parse_formula( "X" ) );
    const auto x = at( g, "X" ), y = at( g, "Y" );
    CHECK( g[ x ].dec == decoration::none );
    CHECK( g[ x ].successors == std::vector<vertex_id>{ y } );
    CHECK( g[ y ].dec == decoration::conj );
    CHECK( g[ y ].successors == std::vector<vertex_id>{ y } );
}

TEST_CASE( "ranked operands are not flattened" )
{
    const auto g = build( parse_bes( "nu X = X || Y; nu Y = X || X;" ), parse_formula( "X || (Y || true)" ) );
    const auto root = g.root();
    CHECK( g[ root ].dec == decoration::disj );
    CHECK( g[ root ].successors.size() == 3 );
    CHECK( g.has_edge( root, at( g, "X" ) ) );
    CHECK( g.has_edge( root, at( g, "Y" ) ) );
    CHECK_FALSE( g.find_term( parse_formula( "Y || true" ) ) );
}

TEST_CASE( "structure graphs validate their input" )
{
    CHECK_THROWS_AS( structure_graph( { vertex{} }, 1 ), precondition_error );
    vertex v;
    v.successors = { 3 };
    CHECK_THROWS_AS( structure_graph( { v }, 0 ), precondition_error );
    v.successors = { 0, 0 };
    CHECK( structure_graph( { v }, 0 )[ 0 ].successors == std::vector<vertex_id>{ 0 } );
}

TEST_CASE( "BESsy graphs" )
{
    CHECK( is_bessy( normalisation_example() ) );

    // An unranked cycle.
    vertex a;
    a.dec = decoration::conj;
    a.successors = { 1 };
    vertex b = a;
    b.successors = { 0 };
    CHECK_FALSE( is_bessy( structure_graph( { a, b }, 0 ) ) );

    // A conjunction without successors.
    vertex c;
    c.dec = decoration::conj;
    CHECK_FALSE( is_bessy( structure_graph( { c }, 0 ) ) );

    // Top with a successor.
    vertex t;
    t.dec = decoration::top;
    t.successors = { 0 };
    t.rank = 0;
    CHECK_FALSE( is_bessy( structure_graph( { t }, 0 ) ) );

    CHECK_THROWS_AS( phi( structure_graph( { a, b }, 0 ) ), precondition_error );
}

TEST_CASE( "the equation system of a structure graph" )
{
    const auto t = normalisation_example();
    const auto e = to_bes( t );
    CHECK( print_bes( e ) ==
           "mu X_1 = (X_1 && (X_2 && X_2)) || (X_3 || X_3);\n"
           "nu X_2 = (X_1 && (X_2 && X_2)) || (X_4 || X_4);\n"
           "mu X_3 = X_3;\n"
           "mu X_4 = X_3 || (X_4 || X_4);\n" );
    CHECK( phi( t ) == parse_formula( "X_1 && (X_2 && X_2)" ) );
    CHECK( rhs_of( t, 3 ) == parse_formula( "X_3" ) );
    CHECK( vertex_variable( 12 ) == "X_12" );
}

TEST_CASE( "normalisation ranks unranked vertices with successors" )
{
    const auto n = normalise( normalisation_example() );
    CHECK( n[ 0 ].rank == 0u );
    CHECK( n[ 0 ].dec == decoration::conj );
    CHECK( n[ 1 ].rank == 3u );
    CHECK( is_bessy( n ) );
    CHECK( phi( n ) == parse_formula( "X_0" ) );
    CHECK( print_bes( to_bes( n ) ) ==
           "mu X_1 = X_0 || (X_3 || X_3);\n"
           "nu X_2 = X_0 || (X_4 || X_4);\n"
           "mu X_3 = X_3;\n"
           "mu X_4 = X_3 || (X_4 || X_4);\n"
           "nu X_0 = X_1 && (X_2 && X_2);\n" );

    const auto nn = normalise( n );
    CHECK( to_bes( nn ) == to_bes( n ) );
}

TEST_CASE( "leaves stay unranked under normalisation" )
{
    const auto g = build( parse_bes( "nu X = true;" ), parse_formula( "X && Y" ) );
    const auto n = normalise( g );
    CHECK( n[ at( n, "Y" ) ].rank == std::nullopt );
    CHECK( n[ at( n, "true" ) ].rank == std::nullopt );
}

TEST_CASE( "graph variables must not clash with free variables" )
{
    const auto g = build( parse_bes( "mu X = X_0;" ), parse_formula( "X" ) );
    CHECK_THROWS_AS( to_bes( g ), precondition_error );
}

TEST_CASE( "translating back preserves the solution" )
{
    const auto& e = example();
    const auto f = parse_formula( "X && Y" );
    const auto g = build( e, f );
    for ( const bool z : { false, true } )
    {
        const environment env{ { { "Z", z } } };
        const auto original = solve_recursive( e, env );
        const auto translated = solve_recursive( to_bes( g ), env );
        CHECK( eval_formula( f, original ) == eval_formula( phi( g ), translated ) );
    }
}

TEST_CASE( "relevant variables" )
{
    const auto e = parse_bes( "mu A = B; nu B = B; mu C = A; nu D = Z;" );
    CHECK( kappa( e, parse_formula( "A" ) ) == std::set<std::string>{ "A", "B" } );
    CHECK( kappa( e, parse_formula( "D || C" ) ) == std::set<std::string>{ "A", "B", "C", "D", "Z" } );
    CHECK( restrict( e, { "B", "D" } ) == parse_bes( "nu B = B; nu D = Z;" ) );
}

TEST_CASE( "restricting to the reachable part renumbers vertices" )
{
    const auto g = build( example(), parse_formula( "X && Y" ) );
    const auto w = at( g, "W" );
    const auto h = g.reachable_from( w );
    CHECK( h.size() == 2 );
    CHECK( h.root() == 1 );
    CHECK( h[ 1 ].rank == 1u );
    CHECK( h[ 0 ].free_var == std::string{ "Z" } );
}
