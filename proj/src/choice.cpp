#include "besg/choice.hpp"

#include "besg/error.hpp"

#include <algorithm>
#include <functional>

namespace besg
{

namespace
{

std::vector<vertex_id> choice_domain( const structure_graph& g, decoration bullet )
{
    if ( bullet != decoration::conj && bullet != decoration::disj )
        throw precondition_error( "choice functions resolve conjunctions or disjunctions only" );
    std::vector<vertex_id> dom;
    for ( vertex_id u = 0; u < g.size(); ++u )
        if ( g[ u ].dec == bullet && g[ u ].has_successors() )
            dom.push_back( u );
    return dom;
}

// Tarjan's algorithm restricted to the vertices accepted by `keep`;
// returns the component index per vertex (npos outside the subgraph) and
// whether each component contains a cycle.
struct scc_result
{
    static constexpr std::size_t npos = static_cast<std::size_t>( -1 );
    std::vector<std::size_t> component;
    std::vector<bool> cyclic;
};

scc_result strongly_connected( const structure_graph& g, const std::function<bool( vertex_id )>& keep )
{
    const auto n = g.size();
    scc_result result;
    result.component.assign( n, scc_result::npos );
    std::vector<std::size_t> index( n, scc_result::npos ), low( n );
    std::vector<bool> on_stack( n );
    std::vector<vertex_id> stack;
    std::size_t counter = 0;

    struct frame
    {
        vertex_id u;
        std::size_t next;
    };
    for ( vertex_id start = 0; start < n; ++start )
    {
        if ( !keep( start ) || index[ start ] != scc_result::npos )
            continue;
        std::vector<frame> calls{ { start, 0 } };
        index[ start ] = low[ start ] = counter++;
        stack.push_back( start );
        on_stack[ start ] = true;
        while ( !calls.empty() )
        {
            auto& [ u, next ] = calls.back();
            const auto& succ = g[ u ].successors;
            if ( next < succ.size() )
            {
                const auto v = succ[ next++ ];
                if ( !keep( v ) )
                    continue;
                if ( index[ v ] == scc_result::npos )
                {
                    index[ v ] = low[ v ] = counter++;
                    stack.push_back( v );
                    on_stack[ v ] = true;
                    calls.push_back( { v, 0 } );
                }
                else if ( on_stack[ v ] )
                    low[ u ] = std::min( low[ u ], index[ v ] );
                continue;
            }
            const auto done = u;
            calls.pop_back();
            if ( !calls.empty() )
                low[ calls.back().u ] = std::min( low[ calls.back().u ], low[ done ] );
            if ( low[ done ] == index[ done ] )
            {
                const auto id = result.cyclic.size();
                std::size_t members = 0;
                vertex_id w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[ w ] = false;
                    result.component[ w ] = id;
                    ++members;
                } while ( w != done );
                result.cyclic.push_back( members > 1 || g.has_edge( done, done ) );
            }
        }
    }
    return result;
}

// Whether some cycle among `reach` has a highest rank of the given parity.
bool dominated_cycle( const structure_graph& g, const std::vector<bool>& reach, unsigned parity )
{
    std::vector<unsigned> candidates;
    for ( vertex_id u = 0; u < g.size(); ++u )
        if ( reach[ u ] && g[ u ].rank && *g[ u ].rank % 2 == parity )
            candidates.push_back( *g[ u ].rank );
    std::sort( candidates.begin(), candidates.end() );
    candidates.erase( std::unique( candidates.begin(), candidates.end() ), candidates.end() );

    for ( auto r : candidates )
    {
        const auto sccs = strongly_connected(
                g, [ & ]( vertex_id u ) { return reach[ u ] && g[ u ].rank && *g[ u ].rank <= r; } );
        for ( vertex_id u = 0; u < g.size(); ++u )
        {
            const auto c = sccs.component[ u ];
            if ( c != scc_result::npos && sccs.cyclic[ c ] && *g[ u ].rank == r )
                return true;
        }
    }
    return false;
}

} // namespace

structure_graph apply_choice( const structure_graph& g, const choice_function& gamma )
{
    const auto dom = choice_domain( g, gamma.bullet );
    if ( dom.size() != gamma.pick.size()
         || !std::equal( dom.begin(), dom.end(), gamma.pick.begin(),
                         []( vertex_id u, const auto& entry ) { return u == entry.first; } ) )
        throw precondition_error( "choice function has the wrong domain" );

    auto vertices = g.vertices();
    for ( const auto& [ u, target ] : gamma.pick )
    {
        if ( !g.has_edge( u, target ) )
            throw precondition_error( "choice function picks a non-successor of vertex " + std::to_string( u ) );
        vertices[ u ].successors = { target };
    }
    for ( auto& v : vertices )
        if ( v.dec == gamma.bullet )
            v.dec = decoration::none;
    return structure_graph{ std::move( vertices ), g.root() };
}

std::vector<choice_function> enumerate_choices( const structure_graph& g, decoration bullet )
{
    const auto dom = choice_domain( g, bullet );
    std::vector<choice_function> result;
    std::vector<std::size_t> digit( dom.size() );
    for ( ;; )
    {
        choice_function gamma{ bullet, {} };
        for ( std::size_t i = 0; i < dom.size(); ++i )
            gamma.pick.emplace( dom[ i ], g[ dom[ i ] ].successors[ digit[ i ] ] );
        result.push_back( std::move( gamma ) );

        std::size_t i = dom.size();
        while ( i > 0 )
        {
            --i;
            if ( ++digit[ i ] < g[ dom[ i ] ].successors.size() )
                break;
            digit[ i ] = 0;
            if ( i == 0 )
                return result;
        }
        if ( dom.empty() )
            return result;
    }
}

bool solve_lasso( const structure_graph& g )
{
    bool has_conj = false;
    bool has_disj = false;
    for ( const auto& v : g.vertices() )
    {
        has_conj = has_conj || v.dec == decoration::conj;
        has_disj = has_disj || v.dec == decoration::disj;
        if ( v.free_var )
            throw precondition_error( "lasso solving needs a graph without free variables" );
        if ( v.has_successors() && !v.rank )
            throw precondition_error( "lasso solving needs a normalised graph" );
    }
    if ( has_conj && has_disj )
        throw precondition_error( "mixed graph" );
    if ( !is_bessy( g ) )
        throw precondition_error( "structure graph is not BESsy" );

    std::vector<bool> reach( g.size() );
    std::vector<vertex_id> stack{ g.root() };
    reach[ g.root() ] = true;
    while ( !stack.empty() )
    {
        const auto u = stack.back();
        stack.pop_back();
        for ( auto s : g[ u ].successors )
            if ( !reach[ s ] )
            {
                reach[ s ] = true;
                stack.push_back( s );
            }
    }
    auto reaches = [ & ]( decoration d ) {
        for ( vertex_id u = 0; u < g.size(); ++u )
            if ( reach[ u ] && g[ u ].dec == d )
                return true;
        return false;
    };

    if ( !has_conj )
        return reaches( decoration::top ) || dominated_cycle( g, reach, 0 );
    return !( reaches( decoration::bottom ) || dominated_cycle( g, reach, 1 ) );
}

} // namespace besg
