#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace besg
{

enum class formula_kind : std::uint8_t
{
    true_value,
    false_value,
    variable,
    conjunction,
    disjunction,
};

// Immutable proposition formula: true | false | X | f && g | f || g.
//
// Nodes are shared, so copying is cheap and substituting into a formula
// reuses untouched subtrees. Equality is structural. Each node caches its
// tree size and a structural hash.
class formula
{
    struct node;
    std::shared_ptr<const node> _node;

    explicit formula( std::shared_ptr<const node> n ) : _node{ std::move( n ) } {}

public:
    // The default formula is `true`.
    formula();

    static formula make_true();
    static formula make_false();
    static formula make_constant( bool value );
    static formula make_variable( std::string name );
    static formula make_and( formula left, formula right );
    static formula make_or( formula left, formula right );

    formula_kind kind() const noexcept;
    bool is_constant() const noexcept;
    bool is_variable() const noexcept { return kind() == formula_kind::variable; }
    bool is_binary() const noexcept;

    // Only valid for variables.
    const std::string& name() const;
    // Only valid for conjunctions and disjunctions.
    const formula& left() const;
    const formula& right() const;

    // Number of parse-tree nodes (leaves plus binary operators).
    std::size_t tree_size() const noexcept;
    std::size_t hash() const noexcept;

    // Identity of the shared node; stable while the formula is alive.
    const void* identity() const noexcept { return _node.get(); }

    friend bool operator==( const formula& a, const formula& b );
    friend bool operator!=( const formula& a, const formula& b ) { return !( a == b ); }
};

struct formula_hash
{
    std::size_t operator()( const formula& f ) const noexcept { return f.hash(); }
};

// The total order used by big_and/big_or to sequence operands.
//
// Larger formulae come first; formulae of equal size are compared by their
// preorder token sequence, where true < false < identifiers (byte order)
// < && < ||.
bool formula_precedes( const formula& a, const formula& b );

struct formula_order
{
    bool operator()( const formula& a, const formula& b ) const { return formula_precedes( a, b ); }
};

// Syntactic variables of a formula.
std::set<std::string> occ( const formula& f );

// Replaces every occurrence of `name` by `value`; no simplification.
formula substitute( const formula& f, const std::string& name, const formula& value );

// Conjunction over a finite set with the duplicated last operand:
//   {} -> true, {f} -> f && f, {f} u F -> f && big_and(F)
// where f is the order-least element. Duplicates in `fs` are ignored.
formula big_and( std::vector<formula> fs );
// Dual of big_and: {} -> false, {f} -> f || f.
formula big_or( std::vector<formula> fs );

std::size_t size( const formula& f );

bool is_identifier( const std::string& s );

} // namespace besg
