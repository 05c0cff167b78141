#include "besg/bisimulation.hpp"

#include <map>
#include <tuple>

namespace besg
{

namespace
{

partition classes_of( const std::vector<const vertex*>& vertices,
                      const std::vector<std::vector<labelled_edge>>& successors )
{
    using label = std::tuple<decoration, std::optional<unsigned>, std::optional<std::string>>;
    std::map<label, std::size_t> labels;
    std::vector<std::size_t> keys;
    keys.reserve( vertices.size() );
    for ( const auto* v : vertices )
        keys.push_back( labels.emplace( label{ v->dec, v->rank, v->free_var }, labels.size() ).first->second );
    return refine( keys, successors );
}

std::vector<std::vector<labelled_edge>> unlabelled( const structure_graph& g, std::size_t offset )
{
    std::vector<std::vector<labelled_edge>> out( g.size() );
    for ( vertex_id u = 0; u < g.size(); ++u )
        for ( auto s : g[ u ].successors )
            out[ u ].emplace_back( 0, s + offset );
    return out;
}

} // namespace

partition bisimulation_classes( const structure_graph& g )
{
    std::vector<const vertex*> vs;
    for ( const auto& v : g.vertices() )
        vs.push_back( &v );
    return classes_of( vs, unlabelled( g, 0 ) );
}

quotient bisim_minimise( const structure_graph& g )
{
    auto classes = bisimulation_classes( g );

    std::vector<vertex> vertices( classes.block_count );
    std::vector<bool> filled( classes.block_count );
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        const auto b = classes.block[ u ];
        auto& q = vertices[ b ];
        if ( !filled[ b ] )
        {
            filled[ b ] = true;
            q = g[ u ];
            q.successors.clear();
        }
        for ( auto s : g[ u ].successors )
            q.successors.push_back( classes.block[ s ] );
    }
    const auto root = classes.block[ g.root() ];
    return { structure_graph{ std::move( vertices ), root }, std::move( classes ) };
}

bool bisim_equiv( const structure_graph& a, const structure_graph& b )
{
    std::vector<const vertex*> vs;
    for ( const auto& v : a.vertices() )
        vs.push_back( &v );
    for ( const auto& v : b.vertices() )
        vs.push_back( &v );
    auto succ = unlabelled( a, 0 );
    auto succ_b = unlabelled( b, a.size() );
    succ.insert( succ.end(), succ_b.begin(), succ_b.end() );
    const auto classes = classes_of( vs, succ );
    return classes.same_block( a.root(), a.size() + b.root() );
}

} // namespace besg
