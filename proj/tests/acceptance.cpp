// Acceptance criteria. One PASS/FAIL line per criterion; the exit status
// is the number of failed criteria.

#include "besg/bisimulation.hpp"
#include "besg/io.hpp"
#include "besg/lts.hpp"
#include "besg/mucalc.hpp"
#include "besg/pipeline.hpp"
#include "besg/props.hpp"
#include "besg/structure_graph.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace besg;

namespace
{

struct verdict
{
    bool ok = true;
    std::ostringstream detail;

    // Records a failed expectation; returns `condition`.
    bool expect( bool condition, const std::string& what )
    {
        if ( !condition )
        {
            ok = false;
            detail << ( detail.tellp() > 0 ? "; " : "" ) << what;
        }
        return condition;
    }

    template<typename T>
    bool expect_eq( const T& actual, const T& expected, const std::string& what )
    {
        std::ostringstream s;
        s << what << " = " << actual << ", expected " << expected;
        return expect( actual == expected, s.str() );
    }

    void note( const std::string& text ) { detail << ( detail.tellp() > 0 ? "; " : "" ) << text; }

    void suite( const props::result& r )
    {
        std::ostringstream s;
        s << r.name << ": " << r.failures << "/" << r.cases << " failed";
        if ( !r.first_failure.empty() )
            s << " [" << r.first_failure << "]";
        expect( r.passed(), s.str() );
    }
};

struct criterion
{
    int number;
    std::string title;
    double limit_seconds;
    std::function<void( verdict& )> body;
};

vertex_id term_vertex( const structure_graph& g, const char* term, verdict& v )
{
    const auto u = g.find_term( parse_formula( term ) );
    v.expect( u.has_value(), std::string{ "no vertex for " } + term );
    return u.value_or( 0 );
}

void golden_structure_graph( verdict& v )
{
    const auto e = parse_bes( test::read_data( "structure_graph_example.bes" ) );
    const auto g = build( e, parse_formula( "X && Y" ) );
    v.expect_eq( g.size(), std::size_t{ 5 }, "vertices" );
    v.expect_eq( g.edge_count(), std::size_t{ 8 }, "edges" );

    const auto x = term_vertex( g, "X", v ), y = term_vertex( g, "Y", v ), w = term_vertex( g, "W", v );
    const auto z = term_vertex( g, "Z", v ), xy = term_vertex( g, "X && Y", v );
    if ( !v.ok )
        return;

    const auto labelled = [ & ]( vertex_id u, decoration d, std::optional<unsigned> r, const char* name ) {
        v.expect( g[ u ].dec == d && g[ u ].rank == r && !g[ u ].free_var, std::string{ "label of " } + name );
    };
    labelled( x, decoration::disj, 3, "X" );
    labelled( y, decoration::disj, 2, "Y" );
    labelled( w, decoration::disj, 1, "W" );
    labelled( xy, decoration::conj, std::nullopt, "X && Y" );
    v.expect( g[ z ].dec == decoration::none && !g[ z ].rank && g[ z ].free_var == std::string{ "Z" }, "label of Z" );

    for ( const auto& [ a, b ] : std::vector<std::pair<vertex_id, vertex_id>>{
              { x, z }, { x, xy }, { y, w }, { y, xy }, { xy, y }, { xy, x }, { w, z }, { w, w } } )
        v.expect( g.has_edge( a, b ), "missing edge " + std::to_string( a ) + " -> " + std::to_string( b ) );
    v.expect( !g.find_term( parse_formula( "Z || W" ) ), "Z || W has a vertex" );
}

void normalisation_example( verdict& v )
{
    // Vertices t, u, w, v, x are numbered 0..4.
    const auto t = parse_sg( test::read_data( "normalisation_example.sg" ) );
    const auto n = normalise( t );
    const auto before = to_bes( t );
    const auto after = to_bes( n );

    const auto expected_before = parse_bes( "mu X_u = (X_u && (X_w && X_w)) || (X_v || X_v);"
                                            "nu X_w = (X_u && (X_w && X_w)) || (X_x || X_x);"
                                            "mu X_v = X_v;"
                                            "mu X_x = X_v || (X_x || X_x);" );
    // The last right-hand side follows the edges of N(t) to N(u) and N(w).
    const auto expected_after = parse_bes( "mu X_Nu = X_Nt || (X_Nv || X_Nv);"
                                           "nu X_Nw = X_Nt || (X_Nx || X_Nx);"
                                           "mu X_Nv = X_Nv;"
                                           "mu X_Nx = X_Nv || (X_Nx || X_Nx);"
                                           "nu X_Nt = X_Nu && (X_Nw && X_Nw);" );
    v.expect( equal_up_to_renaming( before, expected_before ), "to_bes(t) = " + print_bes( before ) );
    v.expect( equal_up_to_renaming( after, expected_after ), "to_bes(N(t)) = " + print_bes( after ) );

    const auto s = solve_recursive( before );
    const auto sn = solve_recursive( after );
    for ( vertex_id u = 1; u <= 4; ++u )
        v.expect( s( vertex_variable( u ) ) == sn( vertex_variable( u ) ),
                  "h disagrees on " + vertex_variable( u ) );
    v.expect( eval_formula( phi( t ), s ) == eval_formula( phi( n ), sn ), "root values differ" );
}

void mutex_variant_sizes( verdict& v )
{
    const auto l = parse_aut( test::read_data( "mutex_variant.aut" ) );
    const auto e = encode( l, parse_mcf( test::read_data( "mutex_variant.mcf" ) ) );
    const auto g = build( e, formula::make_variable( indexed_variable( "X", l, l.initial() ) ) );
    v.expect_eq( size( e ), std::size_t{ 26 }, "size(E)" );
    v.expect_eq( size( to_bes( bisim_minimise( normalise( g ) ).graph ) ), std::size_t{ 18 },
                 "size after normalising and minimising" );
    const auto plain = size( to_bes( bisim_minimise( g ).graph ) );
    v.expect( plain > 18, "size without normalisation = " + std::to_string( plain ) );
}

void channel_application( verdict& v )
{
    const auto l = parse_aut( test::read_data( "channel.aut" ) );
    const auto f = parse_mcf( test::read_data( "channel.mcf" ) );
    const auto r = run_pipeline( l, f );
    v.expect_eq( r.bes_size, std::size_t{ 52 }, "BES size" );
    v.expect_eq( r.minimised_size, std::size_t{ 14 }, "minimised size" );
    v.expect_eq( r.bes_equations, std::size_t{ 9 }, "equations" );
    v.expect_eq( r.minimised_equations, std::size_t{ 3 }, "minimised equations" );
    v.expect_eq( r.quotient_vertices, std::size_t{ 4 }, "quotient vertices" );

    bool all_true = r.root_value;
    for ( const auto& [ x, b ] : r.solution )
        all_true = all_true && b;
    for ( const auto& [ x, b ] : r.minimised_solution )
        all_true = all_true && b;
    v.expect( all_true, "not every solution is true" );

    const auto sat = mc_semantics( l, f );
    const auto solution = solve_gauss( encode( l, f ) );
    for ( state_id s = 0; s < l.state_count(); ++s )
        v.expect( sat.contains( s ) == solution( indexed_variable( "X", l, s ) ),
                  "model checking disagrees at " + l.state_name( s ) );
}

void cyclic_process_family( verdict& v )
{
    const auto phi = parse_mcf( "nu X. <a,b>X" );
    const auto reference = build( parse_bes( "nu Y = Y || Y;" ), parse_formula( "Y" ) );
    for ( std::size_t n = 1; n <= 50 && v.ok; ++n )
    {
        const auto tag = " at N=" + std::to_string( n );
        const auto l = props::cyclic_process( n );
        const auto e = encode( l, phi );
        v.expect_eq( e.equation_count(), 2 * n, "equations" + tag );
        for ( const auto& eq : e )
            v.expect( 1 + size( eq.rhs ) == 4, "equation size" + tag );
        v.expect_eq( size( e ), 8 * n, "size" + tag );

        const auto g = build( e, formula::make_variable( indexed_variable( "X", l, l.initial() ) ) );
        v.expect( bisim_equiv( g, reference ), "not bisimilar to nu Y = Y || Y" + tag );
        const auto q = bisim_minimise( g );
        v.expect_eq( q.graph.ranked_count(), std::size_t{ 1 }, "ranked quotient vertices" + tag );

        const auto minimal = lts_bisim_minimise( l ).system;
        v.expect_eq( minimal.state_count(), 2 * n, "states after minimising the process" + tag );
        const auto process_side = size( encode( minimal, phi ) );
        const auto graph_side = size( to_bes( q.graph ) );
        v.expect( process_side > graph_side, "no strict gap" + tag );
    }
}

void mader( verdict& v )
{
    v.suite( props::check_mader( 2024, 500 ) );
}

void solution_preservation( verdict& v )
{
    for ( const auto& r : props::check_solution_preservation( 2025, 500 ) )
        v.suite( r );
}

void bisimulation_laws( verdict& v )
{
    for ( const auto& r : props::check_bisimulation_laws( 2026, 200 ) )
        v.suite( r );
    const auto x = parse_formula( "X" );
    v.expect( !bisim_equiv( build( bes{}, parse_formula( "X && X" ) ), build( bes{}, x ) ), "X && X ~ X" );
    v.expect( !bisim_equiv( build( bes{}, parse_formula( "X || X" ) ), build( bes{}, x ) ), "X || X ~ X" );
}

void choice_functions( verdict& v )
{
    for ( const auto& r : props::check_choice_functions( 2027, 100 ) )
        v.suite( r );
}

void lasso( verdict& v )
{
    v.suite( props::check_lasso( 2028, 200 ) );
}

} // namespace

int main()
{
    const std::vector<criterion> criteria{
        { 1, "golden structure graph of the three-equation example", 1, golden_structure_graph },
        { 2, "normalisation example: equation systems and injection", 1, normalisation_example },
        { 3, "mutex variant sizes 26 and 18", 1, mutex_variant_sizes },
        { 4, "channel pipeline 52 -> 14, 9 -> 3 equations, 4 quotient vertices", 1, channel_application },
        { 5, "cyclic process family N = 1..50", 5, cyclic_process_family },
        { 6, "model checking matches the encoded solution", 60, mader },
        { 7, "solution preservation suite", 60, solution_preservation },
        { 8, "bisimilarity laws suite", 30, bisimulation_laws },
        { 9, "choice function oracle", 60, choice_functions },
        { 10, "lasso solver agrees with the recursive solver", 30, lasso },
    };

    int failed = 0;
    for ( const auto& c : criteria )
    {
        verdict v;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            c.body( v );
        }
        catch ( const std::exception& e )
        {
            v.expect( false, std::string{ "exception: " } + e.what() );
        }
        const double seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
        std::ostringstream limit;
        limit << "took " << seconds << " s, limit " << c.limit_seconds << " s";
        v.expect( seconds < c.limit_seconds, limit.str() );

        failed += !v.ok;
        std::printf( "%s criterion %2d: %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                     v.ok ? "" : ": ", v.ok ? "" : v.detail.str().c_str() );
    }
    std::printf( "%d of %zu criteria passed\n", static_cast<int>( criteria.size() ) - failed, criteria.size() );
    return failed;
}
