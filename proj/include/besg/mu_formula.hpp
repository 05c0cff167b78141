#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace besg
{

// An explicit action set, or the complement of one with respect to the
// actions of a transition system.
struct action_set
{
    bool complement = false;
    std::set<std::string> actions;

    bool operator==( const action_set& ) const = default;
};

enum class mu_kind : std::uint8_t
{
    true_value,
    false_value,
    variable,
    conjunction,
    disjunction,
    box,
    diamond,
    nu,
    mu,
};

// Modal mu-calculus formula in positive form. Immutable, with shared
// subformulae.
class mu_formula
{
    struct node;
    std::shared_ptr<const node> _node;

    explicit mu_formula( std::shared_ptr<const node> n ) : _node{ std::move( n ) } {}

public:
    mu_formula();

    static mu_formula make_true();
    static mu_formula make_false();
    static mu_formula make_variable( std::string name );
    static mu_formula make_and( mu_formula left, mu_formula right );
    static mu_formula make_or( mu_formula left, mu_formula right );
    static mu_formula make_box( action_set actions, mu_formula body );
    static mu_formula make_diamond( action_set actions, mu_formula body );
    static mu_formula make_nu( std::string name, mu_formula body );
    static mu_formula make_mu( std::string name, mu_formula body );

    mu_kind kind() const noexcept;
    bool is_fixpoint() const noexcept { return kind() == mu_kind::nu || kind() == mu_kind::mu; }
    bool is_modality() const noexcept { return kind() == mu_kind::box || kind() == mu_kind::diamond; }

    // Variable name, or the binder of a fixpoint.
    const std::string& name() const;
    const mu_formula& left() const;
    const mu_formula& right() const;
    // Operand of a modality or fixpoint.
    const mu_formula& body() const;
    const action_set& actions() const;

    friend bool operator==( const mu_formula& a, const mu_formula& b );
};

// Variables bound by some fixpoint, in preorder.
std::vector<std::string> binders( const mu_formula& f );
// Variables with a free occurrence.
std::set<std::string> free_variables( const mu_formula& f );

// No variable is bound twice and no bound variable also occurs outside
// its binder.
bool is_well_formed( const mu_formula& f );
// Throws well_formedness_error with a reason if !is_well_formed(f).
void check_well_formed( const mu_formula& f );

} // namespace besg
