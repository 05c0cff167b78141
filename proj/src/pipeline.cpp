#include "besg/pipeline.hpp"

#include "besg/bisimulation.hpp"
#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/mucalc.hpp"

#include <chrono>
#include <sstream>

namespace besg
{

namespace
{

class stopwatch
{
    std::vector<stage_timing>& _out;
    std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();

public:
    explicit stopwatch( std::vector<stage_timing>& out ) : _out{ out } {}

    void lap( std::string stage )
    {
        const auto now = std::chrono::steady_clock::now();
        _out.push_back( { std::move( stage ), std::chrono::duration<double, std::milli>( now - _start ).count() } );
        _start = now;
    }
};

std::map<std::string, bool> bound_values( const bes& e, const environment& solution )
{
    std::map<std::string, bool> out;
    for ( const auto& eq : e )
        out.emplace( eq.lhs, solution( eq.lhs ) );
    return out;
}

pipeline_report run_stages( const bes& e, const formula& f, const pipeline_options& options,
                            std::vector<stage_timing> timings )
{
    pipeline_report r;
    r.timings = std::move( timings );
    stopwatch clock{ r.timings };

    r.root = print_formula( f );
    r.bes_size = size( e );
    r.bes_equations = e.equation_count();

    auto graph = build( e, f );
    r.graph_vertices = graph.size();
    r.graph_edges = graph.edge_count();
    clock.lap( "build" );

    if ( options.normalise )
    {
        graph = normalise( graph );
        r.normalised = true;
        clock.lap( "normalise" );
    }

    const auto q = bisim_minimise( graph );
    r.quotient_vertices = q.graph.size();
    r.quotient_edges = q.graph.edge_count();
    clock.lap( "minimise" );

    r.minimised = to_bes( q.graph );
    r.minimised_size = size( r.minimised );
    r.minimised_equations = r.minimised.equation_count();
    clock.lap( "to-bes" );

    const auto reduced = solve( r.minimised, options.env, options.method );
    r.minimised_solution = bound_values( r.minimised, reduced );
    r.root_value = eval_formula( phi( q.graph ), reduced );
    clock.lap( "solve-minimised" );

    r.solution = bound_values( e, solve( e, options.env, options.method ) );
    clock.lap( "solve-original" );
    return r;
}

} // namespace

pipeline_report run_pipeline( const bes& e, const formula& f, const pipeline_options& options )
{
    return run_stages( e, f, options, {} );
}

pipeline_report run_pipeline( const lts& l, const mu_formula& property, const pipeline_options& options )
{
    std::vector<stage_timing> timings;
    stopwatch clock{ timings };
    const auto e = encode( l, property );
    clock.lap( "encode" );

    formula root;
    if ( options.global )
    {
        std::vector<formula> all;
        for ( state_id s = 0; s < l.state_count(); ++s )
            all.push_back( rhs_s( l, s, property ) );
        root = big_and( std::move( all ) );
    }
    else
    {
        auto s = l.initial();
        if ( options.state )
        {
            const auto found = l.find_state( *options.state );
            if ( !found )
                throw precondition_error( "unknown state " + *options.state );
            s = *found;
        }
        root = rhs_s( l, s, property );
    }
    return run_stages( e, root, options, std::move( timings ) );
}

nlohmann::json to_json( const pipeline_report& r )
{
    auto timings = nlohmann::json::object();
    for ( const auto& t : r.timings )
        timings[ t.stage ] = t.milliseconds;
    return { { "root", r.root },
             { "bes", { { "size", r.bes_size }, { "equations", r.bes_equations } } },
             { "graph", { { "vertices", r.graph_vertices }, { "edges", r.graph_edges }, { "normalised", r.normalised } } },
             { "quotient", { { "vertices", r.quotient_vertices }, { "edges", r.quotient_edges } } },
             { "minimised", { { "size", r.minimised_size }, { "equations", r.minimised_equations } } },
             { "root_value", r.root_value },
             { "solution", r.solution },
             { "minimised_solution", r.minimised_solution },
             { "timings_ms", std::move( timings ) } };
}

std::string print_report( const pipeline_report& r )
{
    std::ostringstream out;
    out << "root: " << r.root << '\n';
    out << "bes: " << r.bes_equations << " equations, size " << r.bes_size << '\n';
    out << "structure graph: " << r.graph_vertices << " vertices, " << r.graph_edges << " edges"
        << ( r.normalised ? " (normalised)" : "" ) << '\n';
    out << "quotient: " << r.quotient_vertices << " vertices, " << r.quotient_edges << " edges\n";
    out << "minimised bes: " << r.minimised_equations << " equations, size " << r.minimised_size << '\n';
    out << "root value: " << ( r.root_value ? "true" : "false" ) << '\n';
    out << "solution:\n";
    for ( const auto& [ x, v ] : r.solution )
        out << "  " << x << " = " << ( v ? "true" : "false" ) << '\n';
    out << "minimised solution:\n";
    for ( const auto& [ x, v ] : r.minimised_solution )
        out << "  " << x << " = " << ( v ? "true" : "false" ) << '\n';
    out << "timings (ms):\n";
    for ( const auto& t : r.timings )
        out << "  " << t.stage << ' ' << t.milliseconds << '\n';
    return out.str();
}

} // namespace besg
