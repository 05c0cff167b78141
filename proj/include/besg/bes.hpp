#pragma once

#include "besg/formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace besg
{

enum class fixpoint_sign : std::uint8_t
{
    mu,
    nu,
};

const char* to_string( fixpoint_sign sign );

struct equation
{
    fixpoint_sign sign = fixpoint_sign::mu;
    std::string lhs;
    formula rhs;

    friend bool operator==( const equation& a, const equation& b )
    {
        return a.sign == b.sign && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

// An ordered, well-formed Boolean equation system: every variable is the
// left-hand side of at most one equation.
class bes
{
    std::vector<equation> _equations;
    std::unordered_map<std::string, std::size_t> _index;

public:
    bes() = default;
    // Throws well_formedness_error on a duplicate left-hand side.
    explicit bes( std::vector<equation> equations );

    const std::vector<equation>& equations() const noexcept { return _equations; }
    std::size_t equation_count() const noexcept { return _equations.size(); }
    bool empty() const noexcept { return _equations.empty(); }

    const equation& operator[]( std::size_t i ) const { return _equations[ i ]; }
    auto begin() const noexcept { return _equations.begin(); }
    auto end() const noexcept { return _equations.end(); }

    bool binds( const std::string& name ) const { return _index.contains( name ); }
    std::optional<std::size_t> position_of( const std::string& name ) const;
    // nullptr when `name` is not bound.
    const equation* find( const std::string& name ) const;

    friend bool operator==( const bes& a, const bes& b ) { return a._equations == b._equations; }
};

std::set<std::string> bnd( const bes& e );
std::set<std::string> occ( const bes& e );
bool is_closed( const bes& e );
bool is_simple_form( const bes& e );

// Block-based rank; throws precondition_error("variable not bound").
unsigned rank( const bes& e, const std::string& x );
// Rank of every equation, by position.
std::vector<unsigned> ranks( const bes& e );

// E[x := b]; x must not be bound.
bes substitute( const bes& e, const std::string& x, bool b );

// Sum over equations of 1 + size(rhs).
std::size_t size( const bes& e );

// Structural equality after renaming the i-th left-hand side of `a` to the
// i-th left-hand side of `b` (signs must agree position-wise). Unbound
// variables must match literally.
bool equal_up_to_renaming( const bes& a, const bes& b );

} // namespace besg
