#include "besg/props.hpp"

#include "besg/bisimulation.hpp"
#include "besg/choice.hpp"
#include "besg/error.hpp"
#include "besg/io.hpp"
#include "besg/mucalc.hpp"

#include <algorithm>

namespace besg::props
{

void result::fail( const std::string& what )
{
    if ( failures++ == 0 )
        first_failure = what;
}

namespace
{

std::size_t uniform( rng& gen, std::size_t lo, std::size_t hi )
{
    return std::uniform_int_distribution<std::size_t>{ lo, hi }( gen );
}

bool coin( rng& gen, double p = 0.5 )
{
    return std::bernoulli_distribution{ p }( gen );
}

std::vector<std::string> numbered( const char* prefix, std::size_t n )
{
    std::vector<std::string> out;
    for ( std::size_t i = 0; i < n; ++i )
        out.push_back( prefix + std::to_string( i ) );
    return out;
}

std::string show( const bool b )
{
    return b ? "true" : "false";
}

} // namespace

formula random_formula( rng& gen, const std::vector<std::string>& vars, unsigned depth )
{
    if ( depth == 0 || coin( gen, 0.3 ) )
    {
        const auto pick = uniform( gen, 0, vars.size() + 1 );
        if ( pick < vars.size() )
            return formula::make_variable( vars[ pick ] );
        return formula::make_constant( pick == vars.size() );
    }
    auto l = random_formula( gen, vars, depth - 1 );
    auto r = random_formula( gen, vars, depth - 1 );
    return coin( gen ) ? formula::make_and( std::move( l ), std::move( r ) )
                       : formula::make_or( std::move( l ), std::move( r ) );
}

bes random_bes( rng& gen, std::size_t max_equations, std::size_t free_variables, unsigned depth )
{
    const auto n = uniform( gen, 0, max_equations );
    auto vars = numbered( "X", n );
    const auto bound = vars;
    for ( const auto& f : numbered( "F", free_variables ) )
        vars.push_back( f );

    std::vector<equation> eqs;
    for ( const auto& x : bound )
        eqs.push_back( { coin( gen ) ? fixpoint_sign::mu : fixpoint_sign::nu, x,
                         random_formula( gen, vars, static_cast<unsigned>( uniform( gen, 0, depth ) ) ) } );
    return bes{ std::move( eqs ) };
}

environment random_environment( rng& gen, std::size_t free_variables )
{
    environment env;
    for ( const auto& f : numbered( "F", free_variables ) )
        env.set( f, coin( gen ) );
    return env;
}

lts random_lts( rng& gen, std::size_t max_states, std::size_t max_actions )
{
    const auto states = uniform( gen, 1, max_states );
    const auto actions = uniform( gen, 1, max_actions );
    std::vector<std::string> action_names;
    for ( std::size_t a = 0; a < actions; ++a )
        action_names.push_back( std::string( 1, static_cast<char>( 'a' + a ) ) );

    std::vector<transition> ts;
    const auto count = uniform( gen, 0, states * 3 );
    for ( std::size_t i = 0; i < count; ++i )
        ts.push_back( { uniform( gen, 0, states - 1 ), uniform( gen, 0, actions - 1 ), uniform( gen, 0, states - 1 ) } );
    return lts{ numbered( "s", states ), std::move( action_names ), std::move( ts ) };
}

lts cyclic_process( const std::size_t n )
{
    if ( n == 0 )
        throw precondition_error( "cyclic_process needs n >= 1" );
    std::vector<std::string> states;
    for ( std::size_t i = 1; i <= n; ++i )
        states.push_back( "P" + std::to_string( i ) );
    for ( std::size_t i = 1; i <= n; ++i )
        states.push_back( "Q" + std::to_string( i ) );
    const auto p = [ & ]( std::size_t i ) { return i - 1; };
    const auto q = [ & ]( std::size_t i ) { return n + i - 1; };

    std::vector<transition> ts{ { p( 1 ), 0, q( n ) }, { q( 1 ), 1, p( n ) } };
    for ( std::size_t i = 1; i < n; ++i )
    {
        ts.push_back( { p( i + 1 ), 0, p( i ) } );
        ts.push_back( { q( i + 1 ), 1, q( i ) } );
    }
    return lts{ std::move( states ), { "a", "b" }, std::move( ts ), p( n ) };
}

namespace
{

class mu_generator
{
    rng& _gen;
    const std::vector<std::string>& _actions;
    unsigned _fixpoints_left;
    std::vector<std::string> _scope;
    std::size_t _next_name = 0;

    action_set random_actions()
    {
        action_set a;
        a.complement = coin( _gen, 0.3 );
        for ( const auto& x : _actions )
            if ( coin( _gen ) )
                a.actions.insert( x );
        return a;
    }

public:
    mu_generator( rng& gen, const std::vector<std::string>& actions, unsigned fixpoints )
            : _gen{ gen }, _actions{ actions }, _fixpoints_left{ fixpoints }
    {
    }

    mu_formula fixpoint( unsigned depth )
    {
        --_fixpoints_left;
        auto name = std::string( 1, static_cast<char>( 'X' + _next_name++ ) );
        _scope.push_back( name );
        auto body = any( depth == 0 ? 0 : depth - 1 );
        _scope.pop_back();
        return coin( _gen ) ? mu_formula::make_nu( std::move( name ), std::move( body ) )
                            : mu_formula::make_mu( std::move( name ), std::move( body ) );
    }

    mu_formula any( unsigned depth )
    {
        if ( depth == 0 || coin( _gen, 0.2 ) )
        {
            const auto pick = uniform( _gen, 0, _scope.size() + 1 );
            if ( pick < _scope.size() )
                return mu_formula::make_variable( _scope[ pick ] );
            return pick == _scope.size() ? mu_formula::make_true() : mu_formula::make_false();
        }
        switch ( uniform( _gen, 0, 5 ) )
        {
        case 0:
            return mu_formula::make_and( any( depth - 1 ), any( depth - 1 ) );
        case 1:
            return mu_formula::make_or( any( depth - 1 ), any( depth - 1 ) );
        case 2:
            return mu_formula::make_box( random_actions(), any( depth - 1 ) );
        case 3:
            return mu_formula::make_diamond( random_actions(), any( depth - 1 ) );
        default:
            if ( _fixpoints_left > 0 )
                return fixpoint( depth );
            return coin( _gen ) ? mu_formula::make_diamond( random_actions(), any( depth - 1 ) )
                                : mu_formula::make_box( random_actions(), any( depth - 1 ) );
        }
    }
};

} // namespace

mu_formula random_mu_formula( rng& gen, const std::vector<std::string>& actions, unsigned depth, unsigned fixpoints )
{
    mu_generator g{ gen, actions, std::max( fixpoints, 1u ) };
    return g.fixpoint( depth );
}

structure_graph random_normalised_graph( rng& gen, std::size_t max_vertices, std::optional<decoration> forbidden )
{
    const auto n = uniform( gen, 1, max_vertices );
    std::vector<vertex> vertices( n );
    for ( auto& v : vertices )
    {
        const auto kind = uniform( gen, 0, 9 );
        if ( kind == 0 )
        {
            v.dec = decoration::top;
            continue;
        }
        if ( kind == 1 )
        {
            v.dec = decoration::bottom;
            continue;
        }
        v.rank = static_cast<unsigned>( uniform( gen, 0, 3 ) );
        const auto k = uniform( gen, 1, std::min<std::size_t>( 3, n ) );
        while ( v.successors.size() < k )
        {
            const auto s = uniform( gen, 0, n - 1 );
            if ( std::find( v.successors.begin(), v.successors.end(), s ) == v.successors.end() )
                v.successors.push_back( s );
        }
        if ( k > 1 || coin( gen, 0.3 ) )
        {
            v.dec = coin( gen ) ? decoration::conj : decoration::disj;
            if ( forbidden && v.dec == *forbidden )
                v.dec = v.dec == decoration::conj ? decoration::disj : decoration::conj;
        }
    }
    return structure_graph{ std::move( vertices ), 0 };
}

environment solve_small( const bes& e, const environment& env )
{
    return e.equation_count() <= 10 ? solve_recursive( e, env ) : solve_gauss( e, env );
}

result check_gauss_agreement( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result r{ "gauss elimination agrees with the recursive solution", 0, 0, {} };
    for ( std::size_t i = 0; i < cases; ++i, ++r.cases )
    {
        const auto e = random_bes( gen, 8, 0, 3 );
        const auto a = solve_recursive( e );
        const auto b = solve_gauss( e );
        for ( const auto& eq : e )
            if ( a( eq.lhs ) != b( eq.lhs ) )
            {
                r.fail( print_bes( e ) + "differs on " + eq.lhs );
                break;
            }
    }
    return r;
}

result check_round_trip( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result r{ "printing and parsing equation systems round-trips", 0, 0, {} };
    for ( std::size_t i = 0; i < cases; ++i, ++r.cases )
    {
        const auto e = random_bes( gen, 6, 2, 4 );
        const auto text = print_bes( e );
        try
        {
            if ( !( parse_bes( text ) == e ) )
                r.fail( text );
        }
        catch ( const error& ex )
        {
            r.fail( text + ex.what() );
        }
    }
    return r;
}

result check_mader( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result r{ "model checking agrees with the encoded equation system", 0, 0, {} };
    for ( std::size_t i = 0; i < cases; ++i, ++r.cases )
    {
        const auto l = random_lts( gen, 6, 3 );
        const auto f = random_mu_formula( gen, l.actions(), static_cast<unsigned>( uniform( gen, 1, 5 ) ),
                                          static_cast<unsigned>( uniform( gen, 1, 2 ) ) );
        const auto sat = mc_semantics( l, f );
        const auto e = encode( l, f );
        const auto solution = solve_small( e );
        for ( state_id s = 0; s < l.state_count(); ++s )
        {
            const bool expected = sat.contains( s );
            const bool actual = solution( indexed_variable( f.name(), l, s ) );
            if ( expected != actual )
            {
                r.fail( print_aut( l ) + print_mcf( f ) + " at " + l.state_name( s ) + ": semantics "
                        + show( expected ) + ", equation system " + show( actual ) );
                break;
            }
        }
    }
    return r;
}

std::vector<result> check_solution_preservation( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result transformation{ "the structure graph translation preserves the solution", 0, 0, {} };
    result minimisation{ "minimisation preserves the root value", 0, 0, {} };
    result quotient_sound{ "the quotient is bisimilar to its source", 0, 0, {} };
    result normal_vars{ "normalisation preserves the value of every variable", 0, 0, {} };
    result normal_root{ "normalisation preserves the root value", 0, 0, {} };
    result normal_idem{ "normalising twice is bisimilar to normalising once", 0, 0, {} };

    constexpr std::size_t free = 2;
    for ( std::size_t i = 0; i < cases; ++i )
    {
        const auto e = random_bes( gen, 6, free, 5 );
        auto vars = numbered( "F", free );
        for ( const auto& eq : e )
            vars.push_back( eq.lhs );
        const auto f = random_formula( gen, vars, static_cast<unsigned>( uniform( gen, 0, 5 ) ) );
        const auto eta = random_environment( gen, free );
        const auto context = print_bes( e ) + "root " + print_formula( f );

        const bool expected = eval_formula( f, solve_small( e, eta ) );
        const auto t = build( e, f );
        const auto te = to_bes( t );
        const auto t_solution = solve_small( te, eta );
        const bool via_graph = eval_formula( phi( t ), t_solution );
        ++transformation.cases;
        if ( expected != via_graph )
            transformation.fail( context );

        const auto q = bisim_minimise( t );
        ++minimisation.cases;
        if ( eval_formula( phi( q.graph ), solve_small( to_bes( q.graph ), eta ) ) != expected )
            minimisation.fail( context );
        ++quotient_sound.cases;
        if ( !bisim_equiv( t, q.graph ) )
            quotient_sound.fail( context );

        const auto n = normalise( t );
        const auto n_solution = solve_small( to_bes( n ), eta );
        ++normal_vars.cases;
        for ( const auto& eq : te )
            if ( t_solution( eq.lhs ) != n_solution( eq.lhs ) )
            {
                normal_vars.fail( context + " variable " + eq.lhs );
                break;
            }
        ++normal_root.cases;
        if ( eval_formula( phi( n ), n_solution ) != via_graph )
            normal_root.fail( context );
        ++normal_idem.cases;
        if ( !bisim_equiv( normalise( n ), n ) )
            normal_idem.fail( context );
    }
    return { transformation, minimisation, quotient_sound, normal_vars, normal_root, normal_idem };
}

namespace
{

// A formula related to f by commutativity, associativity and weak
// idempotence, applied at random positions.
formula rewrite( rng& gen, const formula& f )
{
    if ( !f.is_binary() )
        return f;
    const bool conj = f.kind() == formula_kind::conjunction;
    auto make = [ conj ]( formula l, formula r ) {
        return conj ? formula::make_and( std::move( l ), std::move( r ) )
                    : formula::make_or( std::move( l ), std::move( r ) );
    };
    auto l = rewrite( gen, f.left() );
    auto r = rewrite( gen, f.right() );
    switch ( uniform( gen, 0, 3 ) )
    {
    case 0:
        return make( std::move( r ), std::move( l ) );
    case 1:
        if ( l.kind() == f.kind() )
            return make( l.left(), make( l.right(), std::move( r ) ) );
        break;
    case 2:
        if ( l.kind() == f.kind() && l.left() == l.right() )
            return make( l.left(), std::move( r ) );
        break;
    default:
        break;
    }
    return make( std::move( l ), std::move( r ) );
}

} // namespace

std::vector<result> check_bisimulation_laws( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result congruence{ "bisimilarity is a congruence for conjunction and disjunction", 0, 0, {} };
    result associativity{ "conjunction and disjunction are associative up to bisimilarity", 0, 0, {} };
    result commutativity{ "conjunction and disjunction are commutative up to bisimilarity", 0, 0, {} };
    result idempotence{ "weak idempotence holds up to bisimilarity", 0, 0, {} };
    result duplication{ "duplicating a formula of another shape is not bisimilar", 0, 0, {} };

    constexpr std::size_t free = 2;
    for ( std::size_t i = 0; i < cases; ++i )
    {
        const auto e = i % 4 == 0 ? bes{} : random_bes( gen, 4, free, 3 );
        auto vars = numbered( "F", free );
        for ( const auto& eq : e )
            vars.push_back( eq.lhs );
        const auto f = random_formula( gen, vars, 4 );
        const auto g = random_formula( gen, vars, 4 );
        const auto h = random_formula( gen, vars, 4 );
        const auto context = print_bes( e ) + "f = " + print_formula( f ) + ", g = " + print_formula( g )
                             + ", h = " + print_formula( h );
        auto equiv = [ &e ]( const formula& a, const formula& b ) { return bisim_equiv( build( e, a ), build( e, b ) ); };
        using make_fn = formula ( * )( formula, formula );

        for ( make_fn op : { &formula::make_and, &formula::make_or } )
        {
            const auto f2 = rewrite( gen, f );
            const auto g2 = rewrite( gen, g );
            ++congruence.cases;
            if ( !equiv( f, f2 ) || !equiv( g, g2 ) || !equiv( op( f, g ), op( f2, g2 ) ) )
                congruence.fail( context + ", f' = " + print_formula( f2 ) + ", g' = " + print_formula( g2 ) );

            ++associativity.cases;
            if ( !equiv( op( op( f, g ), h ), op( f, op( g, h ) ) ) )
                associativity.fail( context );
            ++commutativity.cases;
            if ( !equiv( op( f, g ), op( g, f ) ) )
                commutativity.fail( context );
            ++idempotence.cases;
            if ( !equiv( op( op( f, f ), g ), op( f, g ) ) )
                idempotence.fail( context );
        }

        // The literal instance <eps, X && X> versus <eps, X>, then random
        // formulae whose top-level connective differs from the duplicating
        // one.
        const auto x = formula::make_variable( "X" );
        ++duplication.cases;
        if ( bisim_equiv( build( bes{}, formula::make_and( x, x ) ), build( bes{}, x ) ) )
            duplication.fail( "X && X" );
        if ( f.kind() != formula_kind::conjunction )
        {
            ++duplication.cases;
            if ( equiv( formula::make_and( f, f ), f ) )
                duplication.fail( context + " (conjunction)" );
        }
        if ( f.kind() != formula_kind::disjunction )
        {
            ++duplication.cases;
            if ( equiv( formula::make_or( f, f ), f ) )
                duplication.fail( context + " (disjunction)" );
        }
    }
    return { congruence, associativity, commutativity, idempotence, duplication };
}

std::vector<result> check_choice_functions( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result conj_below{ "every conjunctive choice yields a larger solution", 0, 0, {} };
    result conj_attained{ "some conjunctive choice yields the same solution", 0, 0, {} };
    result disj_above{ "every disjunctive choice yields a smaller solution", 0, 0, {} };
    result disj_attained{ "some disjunctive choice yields the same solution", 0, 0, {} };

    for ( std::size_t i = 0; i < cases; ++i )
    {
        const auto t = random_normalised_graph( gen, 8 );
        const auto e = to_bes( t );
        const auto solution = solve_recursive( e );
        std::vector<std::string> names;
        for ( const auto& eq : e )
            names.push_back( eq.lhs );
        const auto context = print_sg( t );

        for ( auto bullet : { decoration::conj, decoration::disj } )
        {
            bool attained = false;
            bool ordered = true;
            for ( const auto& gamma : enumerate_choices( t, bullet ) )
            {
                const auto chosen = solve_recursive( to_bes( apply_choice( t, gamma ) ) );
                ordered = ordered
                          && ( bullet == decoration::conj ? below_on( solution, chosen, names )
                                                          : below_on( chosen, solution, names ) );
                attained = attained || ( below_on( solution, chosen, names ) && below_on( chosen, solution, names ) );
            }
            auto& monotone = bullet == decoration::conj ? conj_below : disj_above;
            auto& exists = bullet == decoration::conj ? conj_attained : disj_attained;
            ++monotone.cases;
            ++exists.cases;
            if ( !ordered )
                monotone.fail( context );
            if ( !attained )
                exists.fail( context );
        }
    }
    return { conj_below, conj_attained, disj_above, disj_attained };
}

result check_lasso( std::uint64_t seed, std::size_t cases )
{
    rng gen{ seed };
    result r{ "the lasso criterion decides degenerate graphs", 0, 0, {} };
    for ( std::size_t i = 0; i < cases; ++i, ++r.cases )
    {
        const auto forbidden = i % 2 == 0 ? decoration::conj : decoration::disj;
        const auto t = random_normalised_graph( gen, 8, forbidden );
        const bool expected = eval_formula( phi( t ), solve_recursive( to_bes( t ) ) );
        const bool actual = solve_lasso( t );
        if ( expected != actual )
            r.fail( print_sg( t ) + "expected " + show( expected ) );
    }
    return r;
}

std::vector<result> check_all( std::uint64_t seed )
{
    std::vector<result> out;
    out.push_back( check_gauss_agreement( seed, 500 ) );
    out.push_back( check_round_trip( seed + 1, 1000 ) );
    out.push_back( check_mader( seed + 2, 500 ) );
    for ( auto& r : check_solution_preservation( seed + 3, 500 ) )
        out.push_back( std::move( r ) );
    for ( auto& r : check_bisimulation_laws( seed + 4, 200 ) )
        out.push_back( std::move( r ) );
    for ( auto& r : check_choice_functions( seed + 5, 100 ) )
        out.push_back( std::move( r ) );
    out.push_back( check_lasso( seed + 6, 200 ) );
    return out;
}

} // namespace besg::props
