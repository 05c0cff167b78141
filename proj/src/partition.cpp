#include "besg/partition.hpp"

#include <algorithm>
#include <map>

namespace besg
{

namespace
{

template<typename Key>
partition number_by_first_member( const std::vector<Key>& keys )
{
    partition p;
    p.block.resize( keys.size() );
    std::map<Key, std::size_t> ids;
    for ( std::size_t u = 0; u < keys.size(); ++u )
    {
        auto [ it, inserted ] = ids.emplace( keys[ u ], ids.size() );
        p.block[ u ] = it->second;
    }
    p.block_count = ids.size();
    return p;
}

} // namespace

partition refine( const std::vector<std::size_t>& initial_key,
                  const std::vector<std::vector<labelled_edge>>& successors )
{
    using signature = std::pair<std::size_t, std::vector<labelled_edge>>;

    auto current = number_by_first_member( initial_key );
    for ( ;; )
    {
        std::vector<signature> sigs( initial_key.size() );
        for ( std::size_t u = 0; u < initial_key.size(); ++u )
        {
            auto& [ own, out ] = sigs[ u ];
            own = current.block[ u ];
            for ( const auto& [ label, target ] : successors[ u ] )
                out.emplace_back( label, current.block[ target ] );
            std::sort( out.begin(), out.end() );
            out.erase( std::unique( out.begin(), out.end() ), out.end() );
        }
        auto next = number_by_first_member( sigs );
        if ( next.block_count == current.block_count )
            return next;
        current = std::move( next );
    }
}

} // namespace besg
