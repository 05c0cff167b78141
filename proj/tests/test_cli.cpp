#include "cli.hpp"
#include "test_util.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace besg;

namespace
{

struct outcome
{
    int code;
    std::string out;
    std::string err;
};

outcome run( std::vector<std::string> args )
{
    std::ostringstream out, err;
    const int code = run_cli( args, out, err );
    return { code, out.str(), err.str() };
}

std::string data( const char* name )
{
    return test::data_path( name );
}

std::string scratch( const char* name, const std::string& contents )
{
    const auto path = std::filesystem::temp_directory_path() / ( std::string{ "besg_test_" } + name );
    std::ofstream{ path } << contents;
    return path.string();
}

} // namespace

TEST_CASE( "usage errors" )
{
    CHECK( run( {} ).code == exit_usage );
    CHECK( run( { "frobnicate" } ).code == exit_usage );
    CHECK( run( { "solve" } ).code == exit_usage );
    CHECK( run( { "--format", "xml", "solve", data( "structure_graph_example.bes" ) } ).code == exit_usage );
    CHECK( run( { "solve", "/nonexistent/file.bes" } ).code == exit_usage );
    CHECK( run( { "--help" } ).code == exit_ok );
}

TEST_CASE( "solve" )
{
    const auto r = run( { "solve", data( "structure_graph_example.bes" ), "--env", "Z=true" } );
    CHECK( r.code == exit_ok );
    CHECK( r.out == "X = true\nY = true\nW = true\n" );

    const auto only = run( { "solve", data( "structure_graph_example.bes" ), "--var", "W", "--method", "recursive" } );
    CHECK( only.out == "W = false\n" );

    const auto j = run( { "--format", "json", "solve", data( "structure_graph_example.bes" ) } );
    CHECK( nlohmann::json::parse( j.out )[ "X" ] == false );
}

TEST_CASE( "parse errors exit with 2" )
{
    const auto r = run( { "solve", scratch( "bad.bes", "mu X = (X && ;" ) } );
    CHECK( r.code == exit_parse );
    CHECK( r.err.find( "line 1" ) != std::string::npos );
    CHECK( run( { "solve", scratch( "dup.bes", "mu X = X; nu X = X;" ) } ).code == exit_parse );
}

TEST_CASE( "graph commands" )
{
    const auto built = run( { "build", data( "structure_graph_example.bes" ), "--root", "X && Y" } );
    REQUIRE( built.code == exit_ok );
    CHECK( built.out.starts_with( "sg 5 0\n" ) );
    const auto sg = scratch( "example.sg", built.out );

    const auto min = run( { "minimise", sg } );
    CHECK( min.out == built.out );

    const auto dot = run( { "--format", "dot", "dot", sg } );
    CHECK( dot.out.starts_with( "digraph" ) );
    CHECK( run( { "dot", sg } ).out.starts_with( "root 0\n" ) );

    const auto bes = run( { "to-bes", data( "normalisation_example.sg" ) } );
    CHECK( bes.out.starts_with( "mu X_1 = (X_1 && (X_2 && X_2)) || (X_3 || X_3);\n" ) );

    const auto norm = run( { "normalise", data( "normalisation_example.sg" ) } );
    CHECK( norm.out.find( "v 0 rank=0 dec=and\n" ) != std::string::npos );
}

TEST_CASE( "non-BESsy input exits with 3" )
{
    const auto sg = scratch( "cycle.sg", "sg 2 0\nv 0 dec=and\nv 1 dec=and\ne 0 1\ne 1 0\n" );
    const auto r = run( { "to-bes", sg } );
    CHECK( r.code == exit_precondition );
    CHECK_FALSE( r.err.empty() );
}

TEST_CASE( "model checking commands" )
{
    const auto enc = run( { "encode", data( "mutex.aut" ), data( "mutex.mcf" ) } );
    CHECK( enc.code == exit_ok );
    CHECK( enc.out.starts_with( "nu X_s0 = Y_s0;\n" ) );

    const auto mc = run( { "mc", data( "channel.aut" ), data( "channel.mcf" ), "--state", "s1" } );
    CHECK( mc.out == "s1 = true\n" );

    const auto open = scratch( "open.mcf", "<r>Y" );
    CHECK( run( { "mc", data( "channel.aut" ), open, "--theta", "Y=s1" } ).out ==
           "s0 = true\ns1 = false\ns2 = false\n" );

    const auto min = run( { "lts-min", data( "mutex.aut" ) } );
    CHECK( min.code == exit_ok );
    CHECK( min.out.starts_with( "des (0, 6, 4)" ) );
}

TEST_CASE( "abstraction" )
{
    CHECK( run( { "abstract", data( "mutex.aut" ), "--hide", "w_s,w_e" } ).out.find( "\"tau\"" ) !=
           std::string::npos );
    const auto unsafe = run( { "abstract", data( "mutex.aut" ), "--hide", "r_s", "--check-safe", data( "mutex.mcf" ) } );
    CHECK( unsafe.code == exit_precondition );
    CHECK( run( { "abstract", data( "mutex.aut" ), "--hide", "w_s", "--check-safe", data( "mutex.mcf" ) } ).code ==
           exit_precondition );
}

TEST_CASE( "pipeline" )
{
    const auto r = run( { "pipeline", data( "mutex_variant.aut" ), data( "mutex_variant.mcf" ), "--normalise" } );
    CHECK( r.code == exit_ok );
    CHECK( r.out.find( "minimised bes: 3 equations, size 18" ) != std::string::npos );

    const auto j = run( { "--format", "json", "pipeline", data( "structure_graph_example.bes" ), "--root", "X",
                          "--env", "Z=true" } );
    REQUIRE( j.code == exit_ok );
    CHECK( nlohmann::json::parse( j.out )[ "root_value" ] == true );

    CHECK( run( { "pipeline", data( "structure_graph_example.bes" ) } ).code == exit_usage );
}

TEST_CASE( "property suite" )
{
    const auto r = run( { "--seed", "3", "check" } );
    CHECK( r.code == exit_ok );
    CHECK( r.out.find( "FAIL" ) == std::string::npos );
}
