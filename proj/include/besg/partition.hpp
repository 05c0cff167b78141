#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace besg
{

// Equivalence classes over 0..n-1. Blocks are numbered in order of their
// least member.
struct partition
{
    std::vector<std::size_t> block;
    std::size_t block_count = 0;

    bool same_block( std::size_t a, std::size_t b ) const { return block[ a ] == block[ b ]; }
};

// A labelled transition (label, target) used by refinement.
using labelled_edge = std::pair<std::size_t, std::size_t>;

// Coarsest stable refinement of the partition induced by `initial_key`:
// two elements stay together iff they have the same key and, for every
// label, reach the same set of blocks.
partition refine( const std::vector<std::size_t>& initial_key,
                  const std::vector<std::vector<labelled_edge>>& successors );

} // namespace besg
