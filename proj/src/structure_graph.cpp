#include "besg/structure_graph.hpp"

#include "besg/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace besg
{

const char* to_string( decoration d )
{
    switch ( d )
    {
    case decoration::none:
        return "none";
    case decoration::conj:
        return "and";
    case decoration::disj:
        return "or";
    case decoration::top:
        return "top";
    case decoration::bottom:
        return "bot";
    }
    return "?";
}

structure_graph::structure_graph( std::vector<vertex> vertices, vertex_id root )
        : _vertices{ std::move( vertices ) }, _root{ root }
{
    if ( _vertices.empty() || _root >= _vertices.size() )
        throw precondition_error( "structure graph root out of range" );
    for ( auto& v : _vertices )
    {
        std::sort( v.successors.begin(), v.successors.end() );
        v.successors.erase( std::unique( v.successors.begin(), v.successors.end() ), v.successors.end() );
        if ( !v.successors.empty() && v.successors.back() >= _vertices.size() )
            throw precondition_error( "edge to a vertex outside the graph" );
    }
}

std::size_t structure_graph::edge_count() const
{
    std::size_t n = 0;
    for ( const auto& v : _vertices )
        n += v.successors.size();
    return n;
}

std::size_t structure_graph::ranked_count() const
{
    return static_cast<std::size_t>(
            std::count_if( _vertices.begin(), _vertices.end(), []( const vertex& v ) { return v.rank.has_value(); } ) );
}

bool structure_graph::has_edge( vertex_id from, vertex_id to ) const
{
    const auto& s = _vertices.at( from ).successors;
    return std::binary_search( s.begin(), s.end(), to );
}

std::optional<vertex_id> structure_graph::find_term( const formula& term ) const
{
    for ( vertex_id u = 0; u < _vertices.size(); ++u )
        if ( _vertices[ u ].term && *_vertices[ u ].term == term )
            return u;
    return std::nullopt;
}

structure_graph structure_graph::reachable_from( vertex_id new_root ) const
{
    std::vector<bool> seen( size() );
    std::vector<vertex_id> stack{ new_root };
    seen.at( new_root ) = true;
    while ( !stack.empty() )
    {
        const auto u = stack.back();
        stack.pop_back();
        for ( auto v : _vertices[ u ].successors )
            if ( !seen[ v ] )
            {
                seen[ v ] = true;
                stack.push_back( v );
            }
    }

    std::vector<vertex_id> renumber( size() );
    std::vector<vertex> kept;
    for ( vertex_id u = 0; u < size(); ++u )
        if ( seen[ u ] )
        {
            renumber[ u ] = kept.size();
            kept.push_back( _vertices[ u ] );
        }
    for ( auto& v : kept )
        for ( auto& s : v.successors )
            s = renumber[ s ];
    return structure_graph{ std::move( kept ), renumber[ new_root ] };
}

namespace
{

// Two strata: static predicates first (decoration, rank, free variable),
// then edges, so every negative premise is decided before an edge is
// derived.
class sos_builder
{
    struct predicates
    {
        decoration dec = decoration::none;
        std::optional<unsigned> rank;
        std::optional<std::string> free_var;
    };

    const bes& _e;
    std::vector<unsigned> _ranks;
    std::unordered_map<formula, std::vector<formula>, formula_hash> _edges;

public:
    explicit sos_builder( const bes& e ) : _e{ e }, _ranks{ ranks( e ) } {}

    predicates predicates_of( const formula& f ) const
    {
        predicates p;
        switch ( f.kind() )
        {
        case formula_kind::true_value:
            p.dec = decoration::top;
            break;
        case formula_kind::false_value:
            p.dec = decoration::bottom;
            break;
        case formula_kind::conjunction:
            p.dec = decoration::conj;
            break;
        case formula_kind::disjunction:
            p.dec = decoration::disj;
            break;
        case formula_kind::variable:
            if ( auto pos = _e.position_of( f.name() ) )
            {
                p.rank = _ranks[ *pos ];
                // Inherit the connective of an unranked right-hand side;
                // only binary terms are unranked and decorated.
                const auto& rhs = _e[ *pos ].rhs;
                if ( rhs.kind() == formula_kind::conjunction )
                    p.dec = decoration::conj;
                else if ( rhs.kind() == formula_kind::disjunction )
                    p.dec = decoration::disj;
            }
            else
                p.free_var = f.name();
            break;
        }
        return p;
    }

    const std::vector<formula>& edges_of( const formula& f )
    {
        if ( auto it = _edges.find( f ); it != _edges.end() )
            return it->second;

        std::vector<formula> out;
        auto append = [ &out ]( const formula& g ) {
            if ( std::find( out.begin(), out.end(), g ) == out.end() )
                out.push_back( g );
        };

        if ( f.is_binary() )
        {
            const auto same = f.kind() == formula_kind::conjunction ? decoration::conj : decoration::disj;
            for ( const formula* operand : { &f.left(), &f.right() } )
            {
                const auto p = predicates_of( *operand );
                if ( p.dec == same && !p.rank )
                {
                    // Flatten nested occurrences of the same connective.
                    for ( const auto& g : edges_of( *operand ) )
                        append( g );
                }
                else
                    append( *operand );
            }
        }
        else if ( f.is_variable() )
        {
            if ( const auto* eq = _e.find( f.name() ) )
            {
                if ( eq->rhs.is_binary() )
                {
                    for ( const auto& g : edges_of( eq->rhs ) )
                        append( g );
                }
                else
                    append( eq->rhs );
            }
        }

        return _edges.emplace( f, std::move( out ) ).first->second;
    }

    structure_graph run( const formula& root )
    {
        std::unordered_map<formula, vertex_id, formula_hash> ids;
        std::vector<formula> terms;

        // Preorder depth-first numbering, successors in derivation order.
        struct frame
        {
            formula term;
            std::size_t next = 0;
        };
        std::vector<frame> stack;
        auto visit = [ & ]( const formula& t ) {
            ids.emplace( t, terms.size() );
            terms.push_back( t );
            stack.push_back( { t, 0 } );
        };
        visit( root );
        while ( !stack.empty() )
        {
            auto& top = stack.back();
            const auto& succ = edges_of( top.term );
            if ( top.next == succ.size() )
            {
                stack.pop_back();
                continue;
            }
            const auto next = succ[ top.next++ ];
            if ( !ids.contains( next ) )
                visit( next );
        }

        std::vector<vertex> vertices( terms.size() );
        for ( vertex_id u = 0; u < terms.size(); ++u )
        {
            auto p = predicates_of( terms[ u ] );
            auto& v = vertices[ u ];
            v.dec = p.dec;
            v.rank = p.rank;
            v.free_var = std::move( p.free_var );
            v.term = terms[ u ];
            for ( const auto& g : edges_of( terms[ u ] ) )
                v.successors.push_back( ids.at( g ) );
        }
        return structure_graph{ std::move( vertices ), 0 };
    }
};

} // namespace

structure_graph build( const bes& e, const formula& f )
{
    return sos_builder{ e }.run( f );
}

bool is_bessy( const structure_graph& g )
{
    for ( const auto& v : g.vertices() )
    {
        const bool leaf_label = v.dec == decoration::top || v.dec == decoration::bottom || v.free_var.has_value();
        if ( leaf_label && v.has_successors() )
            return false;
        const bool structured = v.dec == decoration::conj || v.dec == decoration::disj || v.rank.has_value();
        if ( structured != v.has_successors() )
            return false;
        if ( v.successors.size() > 1 && v.dec != decoration::conj && v.dec != decoration::disj )
            return false;
    }

    // Every cycle has a ranked vertex: the unranked part must be acyclic.
    std::vector<std::size_t> indegree( g.size() );
    for ( const auto& v : g.vertices() )
        if ( !v.rank )
            for ( auto s : v.successors )
                if ( !g[ s ].rank )
                    ++indegree[ s ];
    std::deque<vertex_id> ready;
    std::size_t unranked = 0;
    for ( vertex_id u = 0; u < g.size(); ++u )
        if ( !g[ u ].rank )
        {
            ++unranked;
            if ( indegree[ u ] == 0 )
                ready.push_back( u );
        }
    std::size_t removed = 0;
    while ( !ready.empty() )
    {
        const auto u = ready.front();
        ready.pop_front();
        ++removed;
        for ( auto s : g[ u ].successors )
            if ( !g[ s ].rank && --indegree[ s ] == 0 )
                ready.push_back( s );
    }
    return removed == unranked;
}

structure_graph normalise( const structure_graph& g )
{
    auto vertices = g.vertices();
    for ( auto& v : vertices )
        if ( !v.rank && v.has_successors() )
            v.rank = 0;
    return structure_graph{ std::move( vertices ), g.root() };
}

std::string vertex_variable( vertex_id u )
{
    return "X_" + std::to_string( u );
}

namespace
{

class phi_evaluator
{
    const structure_graph& _g;
    std::vector<std::optional<formula>> _memo;

public:
    explicit phi_evaluator( const structure_graph& g ) : _g{ g }, _memo( g.size() )
    {
        if ( !is_bessy( g ) )
            throw precondition_error( "structure graph is not BESsy" );
    }

    std::vector<formula> successors( vertex_id u )
    {
        std::vector<formula> fs;
        for ( auto s : _g[ u ].successors )
            fs.push_back( ( *this )( s ) );
        return fs;
    }

    formula operator()( vertex_id u )
    {
        if ( _memo[ u ] )
            return *_memo[ u ];

        const auto& v = _g[ u ];
        formula result;
        if ( v.dec == decoration::conj && !v.rank )
            result = big_and( successors( u ) );
        else if ( v.dec == decoration::disj && !v.rank )
            result = big_or( successors( u ) );
        else if ( v.dec == decoration::top )
            result = formula::make_true();
        else if ( v.dec == decoration::bottom )
            result = formula::make_false();
        else if ( v.free_var )
            result = formula::make_variable( *v.free_var );
        else
            result = formula::make_variable( vertex_variable( u ) );

        _memo[ u ] = result;
        return result;
    }

    formula rhs( vertex_id u )
    {
        const auto& v = _g[ u ];
        if ( !v.rank )
            throw precondition_error( "rhs of unranked vertex " + std::to_string( u ) );
        if ( v.dec == decoration::conj )
            return big_and( successors( u ) );
        if ( v.dec == decoration::disj )
            return big_or( successors( u ) );
        if ( v.successors.size() != 1 )
            throw precondition_error( "ranked vertex " + std::to_string( u ) + " needs exactly one successor" );
        return ( *this )( v.successors.front() );
    }
};

} // namespace

formula phi( const structure_graph& g, vertex_id u )
{
    return phi_evaluator{ g }( u );
}

formula phi( const structure_graph& g )
{
    return phi( g, g.root() );
}

formula rhs_of( const structure_graph& g, vertex_id u )
{
    return phi_evaluator{ g }.rhs( u );
}

bes to_bes( const structure_graph& g )
{
    phi_evaluator eval{ g };

    std::vector<vertex_id> ranked;
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        if ( g[ u ].rank )
            ranked.push_back( u );
        if ( g[ u ].free_var && g[ u ].free_var->starts_with( "X_" ) )
        {
            const auto suffix = g[ u ].free_var->substr( 2 );
            if ( !suffix.empty() && suffix.find_first_not_of( "0123456789" ) == std::string::npos )
                throw precondition_error( "free variable " + *g[ u ].free_var + " clashes with a vertex variable" );
        }
    }
    std::stable_sort( ranked.begin(), ranked.end(),
                      [ & ]( vertex_id a, vertex_id b ) { return *g[ a ].rank > *g[ b ].rank; } );

    std::vector<equation> eqs;
    eqs.reserve( ranked.size() );
    for ( auto u : ranked )
        eqs.push_back( { *g[ u ].rank % 2 == 1 ? fixpoint_sign::mu : fixpoint_sign::nu, vertex_variable( u ),
                         eval.rhs( u ) } );
    return bes{ std::move( eqs ) };
}

std::set<std::string> kappa( const bes& e, const formula& f )
{
    auto result = occ( f );
    std::vector<std::string> pending( result.begin(), result.end() );
    while ( !pending.empty() )
    {
        const auto x = std::move( pending.back() );
        pending.pop_back();
        if ( const auto* eq = e.find( x ) )
            for ( const auto& y : occ( eq->rhs ) )
                if ( result.insert( y ).second )
                    pending.push_back( y );
    }
    return result;
}

bes restrict( const bes& e, const std::set<std::string>& ks )
{
    std::vector<equation> eqs;
    for ( const auto& eq : e )
        if ( ks.contains( eq.lhs ) )
            eqs.push_back( eq );
    return bes{ std::move( eqs ) };
}

} // namespace besg
