#include "cli.hpp"

#include "besg/bisimulation.hpp"
#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/mucalc.hpp"
#include "besg/pipeline.hpp"
#include "besg/props.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace besg
{

namespace
{

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file( const std::string& path )
{
    std::ifstream in{ path, std::ios::binary };
    if ( !in )
        throw usage_error( "cannot read " + path );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split( const std::string& s, char sep )
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{ s };
    while ( std::getline( in, item, sep ) )
        if ( !item.empty() )
            out.push_back( item );
    return out;
}

bool parse_bool( const std::string& s )
{
    if ( s == "true" || s == "1" )
        return true;
    if ( s == "false" || s == "0" )
        return false;
    throw usage_error( "expected true or false, got '" + s + "'" );
}

class command_line
{
    std::ostream& _out;
    std::string _format = "text";
    std::uint64_t _seed = 1;

    // Arguments shared by several subcommands.
    std::string _input;
    std::string _second;
    std::string _root;
    std::string _method = "gauss";
    std::string _state;
    std::string _hide;
    std::string _safe_for;
    std::vector<std::string> _vars;
    std::vector<std::string> _env;
    std::vector<std::string> _theta;
    bool _normalise = false;
    bool _global = false;

    void emit_graph( const structure_graph& g )
    {
        if ( _format == "json" )
            _out << to_json( g ).dump( 2 ) << '\n';
        else if ( _format == "dot" )
            _out << print_dot( g );
        else
            _out << print_sg( g );
    }

    void emit_bes( const bes& e )
    {
        if ( _format == "dot" )
            throw usage_error( "equation systems have no dot rendering" );
        if ( _format == "json" )
            _out << to_json( e ).dump( 2 ) << '\n';
        else
            _out << print_bes( e );
    }

    void emit_lts( const lts& l )
    {
        if ( _format == "dot" )
            throw usage_error( "transition systems have no dot rendering" );
        if ( _format == "json" )
            _out << to_json( l ).dump( 2 ) << '\n';
        else
            _out << print_aut( l );
    }

    environment parse_env() const
    {
        environment env;
        for ( const auto& item : _env )
        {
            const auto eq = item.find( '=' );
            if ( eq == std::string::npos )
                throw usage_error( "expected X=true|false, got '" + item + "'" );
            env.set( item.substr( 0, eq ), parse_bool( item.substr( eq + 1 ) ) );
        }
        return env;
    }

    state_environment parse_theta( const lts& l ) const
    {
        state_environment theta;
        for ( const auto& item : _theta )
        {
            const auto eq = item.find( '=' );
            if ( eq == std::string::npos )
                throw usage_error( "expected X=s1,s2, got '" + item + "'" );
            auto& states = theta[ item.substr( 0, eq ) ];
            for ( const auto& name : split( item.substr( eq + 1 ), ',' ) )
            {
                const auto s = l.find_state( name );
                if ( !s )
                    throw usage_error( "unknown state " + name );
                states.insert( *s );
            }
        }
        return theta;
    }

    solve_method method() const
    {
        return _method == "recursive" ? solve_method::recursive : solve_method::gauss;
    }

public:
    explicit command_line( std::ostream& out ) : _out{ out } {}

    int run( const std::vector<std::string>& args, std::ostream& err )
    {
        CLI::App app{ "Boolean equation systems and their structure graphs", "besg" };
        app.fallthrough();
        app.require_subcommand( 1 );
        app.add_option( "--format", _format, "Output format" )->check( CLI::IsMember( { "text", "dot", "json" } ) );
        app.add_option( "--seed", _seed, "Seed for the random instances of `check`" );

        auto* solve_cmd = app.add_subcommand( "solve", "Solve an equation system" );
        solve_cmd->add_option( "file", _input, "Equation system" )->required();
        solve_cmd->add_option( "--var", _vars, "Report only these variables" );
        solve_cmd->add_option( "--env", _env, "Value of a free variable, X=true|false" );
        solve_cmd->add_option( "--method", _method, "Solver" )
                ->check( CLI::IsMember( { "recursive", "gauss" } ) );

        auto* build_cmd = app.add_subcommand( "build", "Structure graph of an equation system and a formula" );
        build_cmd->add_option( "file", _input, "Equation system" )->required();
        build_cmd->add_option( "--root", _root, "Root formula" )->required();

        auto* minimise_cmd = app.add_subcommand( "minimise", "Quotient modulo bisimilarity" );
        minimise_cmd->add_option( "file", _input, "Structure graph" )->required();
        auto* normalise_cmd = app.add_subcommand( "normalise", "Rank every unranked vertex with successors" );
        normalise_cmd->add_option( "file", _input, "Structure graph" )->required();
        auto* to_bes_cmd = app.add_subcommand( "to-bes", "Equation system of a BESsy structure graph" );
        to_bes_cmd->add_option( "file", _input, "Structure graph" )->required();
        auto* dot_cmd = app.add_subcommand( "dot", "Render a structure graph" );
        dot_cmd->add_option( "file", _input, "Structure graph" )->required();

        auto* encode_cmd = app.add_subcommand( "encode", "Equation system for a model checking problem" );
        encode_cmd->add_option( "lts", _input, "Transition system (.aut)" )->required();
        encode_cmd->add_option( "formula", _second, "Mu-calculus formula" )->required();

        auto* mc_cmd = app.add_subcommand( "mc", "Model check a mu-calculus formula" );
        mc_cmd->add_option( "lts", _input, "Transition system (.aut)" )->required();
        mc_cmd->add_option( "formula", _second, "Mu-calculus formula" )->required();
        mc_cmd->add_option( "--state", _state, "Only report this state" );
        mc_cmd->add_option( "--theta", _theta, "States of a free variable, X=s1,s2" );

        auto* lts_min_cmd = app.add_subcommand( "lts-min", "Minimise a transition system modulo bisimilarity" );
        lts_min_cmd->add_option( "lts", _input, "Transition system (.aut)" )->required();

        auto* abstract_cmd = app.add_subcommand( "abstract", "Hide actions" );
        abstract_cmd->add_option( "lts", _input, "Transition system (.aut)" )->required();
        abstract_cmd->add_option( "--hide", _hide, "Comma separated actions" )->required();
        abstract_cmd->add_option( "--check-safe", _safe_for, "Refuse unless safe for this formula" );

        auto* pipeline_cmd = app.add_subcommand( "pipeline", "Encode, build, minimise and solve" );
        pipeline_cmd->add_option( "input", _input, "Transition system (.aut) or equation system (.bes)" )->required();
        pipeline_cmd->add_option( "formula", _second, "Mu-calculus formula, for transition systems" );
        pipeline_cmd->add_option( "--root", _root, "Root formula, for equation systems" );
        pipeline_cmd->add_option( "--state", _state, "Root state" );
        pipeline_cmd->add_option( "--env", _env, "Value of a free variable, X=true|false" );
        pipeline_cmd->add_flag( "--global", _global, "Conjunction over all states as root" );
        pipeline_cmd->add_flag( "--normalise", _normalise, "Normalise before minimising" );
        pipeline_cmd->add_option( "--method", _method, "Solver" )
                ->check( CLI::IsMember( { "recursive", "gauss" } ) );

        auto* check_cmd = app.add_subcommand( "check", "Run the randomised property suite" );
        check_cmd->add_option( "--seed", _seed, "Seed" );

        try
        {
            std::vector<std::string> reversed( args.rbegin(), args.rend() );
            app.parse( reversed );
        }
        catch ( const CLI::ParseError& e )
        {
            const auto code = app.exit( e, _out, err );
            return code == 0 ? exit_ok : exit_usage;
        }

        if ( *solve_cmd )
            return solve();
        if ( *build_cmd )
        {
            emit_graph( build( parse_bes( read_file( _input ) ), parse_formula( _root ) ) );
            return exit_ok;
        }
        if ( *minimise_cmd )
        {
            emit_graph( bisim_minimise( parse_sg( read_file( _input ) ) ).graph );
            return exit_ok;
        }
        if ( *normalise_cmd )
        {
            emit_graph( normalise( parse_sg( read_file( _input ) ) ) );
            return exit_ok;
        }
        if ( *to_bes_cmd )
        {
            emit_bes( to_bes( parse_sg( read_file( _input ) ) ) );
            return exit_ok;
        }
        if ( *dot_cmd )
        {
            const auto g = parse_sg( read_file( _input ) );
            if ( _format == "text" )
                _out << describe_sg( g );
            else
                emit_graph( g );
            return exit_ok;
        }
        if ( *encode_cmd )
        {
            emit_bes( encode( parse_aut( read_file( _input ) ), parse_mcf( read_file( _second ) ) ) );
            return exit_ok;
        }
        if ( *mc_cmd )
            return model_check();
        if ( *lts_min_cmd )
        {
            emit_lts( lts_bisim_minimise( parse_aut( read_file( _input ) ) ).system );
            return exit_ok;
        }
        if ( *abstract_cmd )
            return hide();
        if ( *pipeline_cmd )
            return pipeline();
        if ( *check_cmd )
            return check();
        return exit_usage;
    }

private:
    int solve()
    {
        const auto e = parse_bes( read_file( _input ) );
        const auto solution = besg::solve( e, parse_env(), method() );
        std::vector<std::string> names = _vars;
        if ( names.empty() )
            for ( const auto& eq : e )
                names.push_back( eq.lhs );

        if ( _format == "dot" )
            throw usage_error( "solutions have no dot rendering" );
        if ( _format == "json" )
        {
            auto j = nlohmann::json::object();
            for ( const auto& x : names )
                j[ x ] = solution( x );
            _out << j.dump( 2 ) << '\n';
        }
        else
            for ( const auto& x : names )
                _out << x << " = " << ( solution( x ) ? "true" : "false" ) << '\n';
        return exit_ok;
    }

    int model_check()
    {
        const auto l = parse_aut( read_file( _input ) );
        const auto f = parse_mcf( read_file( _second ) );
        const auto sat = mc_semantics( l, f, parse_theta( l ) );
        std::vector<state_id> states;
        if ( !_state.empty() )
        {
            const auto s = l.find_state( _state );
            if ( !s )
                throw usage_error( "unknown state " + _state );
            states.push_back( *s );
        }
        else
            for ( state_id s = 0; s < l.state_count(); ++s )
                states.push_back( s );

        if ( _format == "dot" )
            throw usage_error( "model checking results have no dot rendering" );
        if ( _format == "json" )
        {
            auto j = nlohmann::json::object();
            for ( auto s : states )
                j[ l.state_name( s ) ] = sat.contains( s );
            _out << j.dump( 2 ) << '\n';
        }
        else
            for ( auto s : states )
                _out << l.state_name( s ) << " = " << ( sat.contains( s ) ? "true" : "false" ) << '\n';
        return exit_ok;
    }

    int hide()
    {
        const auto l = parse_aut( read_file( _input ) );
        const auto hidden_list = split( _hide, ',' );
        const std::set<std::string> hidden( hidden_list.begin(), hidden_list.end() );
        if ( !_safe_for.empty() && !is_safe_abstraction( l, hidden, parse_mcf( read_file( _safe_for ) ) ) )
            throw precondition_error( "hiding " + _hide + " is not a safe abstraction for the formula" );
        emit_lts( abstract( l, hidden ) );
        return exit_ok;
    }

    int pipeline()
    {
        pipeline_options options;
        options.normalise = _normalise;
        options.global = _global;
        options.method = method();
        options.env = parse_env();
        if ( !_state.empty() )
            options.state = _state;

        pipeline_report report;
        if ( _input.ends_with( ".bes" ) )
        {
            if ( _root.empty() )
                throw usage_error( "an equation system needs --root" );
            report = run_pipeline( parse_bes( read_file( _input ) ), parse_formula( _root ), options );
        }
        else
        {
            if ( _second.empty() )
                throw usage_error( "a transition system needs a formula" );
            report = run_pipeline( parse_aut( read_file( _input ) ), parse_mcf( read_file( _second ) ), options );
        }

        if ( _format == "json" )
            _out << to_json( report ).dump( 2 ) << '\n';
        else if ( _format == "dot" )
            throw usage_error( "reports have no dot rendering" );
        else
            _out << print_report( report );
        return exit_ok;
    }

    int check()
    {
        bool all = true;
        for ( const auto& r : props::check_all( _seed ) )
        {
            _out << ( r.passed() ? "PASS " : "FAIL " ) << r.name << " (" << r.cases << " cases, " << r.failures
                 << " failures)\n";
            if ( !r.passed() && !r.first_failure.empty() )
                _out << "  first counterexample:\n" << r.first_failure << '\n';
            all = all && r.passed();
        }
        return all ? exit_ok : exit_precondition;
    }
};

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    try
    {
        return command_line{ out }.run( args, err );
    }
    catch ( const usage_error& e )
    {
        err << "besg: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const parse_error& e )
    {
        err << "besg: parse error: " << e.what() << '\n';
        return exit_parse;
    }
    catch ( const well_formedness_error& e )
    {
        err << "besg: " << e.what() << '\n';
        return exit_parse;
    }
    catch ( const precondition_error& e )
    {
        err << "besg: " << e.what() << '\n';
        return exit_precondition;
    }
}

} // namespace besg
