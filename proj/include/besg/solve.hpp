#pragma once

#include "besg/bes.hpp"

#include <map>
#include <string>

namespace besg
{

// Total map from proposition variables to Booleans. Variables without an
// explicit entry take the default value.
class environment
{
    std::map<std::string, bool> _values;
    bool _default = false;

public:
    environment() = default;
    explicit environment( bool default_value ) : _default{ default_value } {}
    environment( std::map<std::string, bool> values, bool default_value = false )
            : _values{ std::move( values ) }, _default{ default_value }
    {
    }

    bool operator()( const std::string& name ) const
    {
        auto it = _values.find( name );
        return it == _values.end() ? _default : it->second;
    }

    // eta[name := value]
    environment updated( const std::string& name, bool value ) const
    {
        environment result = *this;
        result._values[ name ] = value;
        return result;
    }

    void set( const std::string& name, bool value ) { _values[ name ] = value; }

    bool default_value() const noexcept { return _default; }
    const std::map<std::string, bool>& explicit_values() const noexcept { return _values; }
};

bool eval_formula( const formula& f, const environment& env );

// The recursive solution semantics, transcribed literally. Exponential in
// the number of equations; used as the reference oracle.
environment solve_recursive( const bes& e, const environment& env = {} );

// Gauss elimination: backward substitution with local fixpoint resolution,
// then forward evaluation. Agrees with solve_recursive on bnd(e).
environment solve_gauss( const bes& e, const environment& env = {} );

enum class solve_method
{
    recursive,
    gauss,
};

environment solve( const bes& e, const environment& env, solve_method method );

// eta <= eta' on the given variables: eta(X) implies eta'(X).
template<typename Range>
bool below_on( const environment& lo, const environment& hi, const Range& names )
{
    for ( const auto& x : names )
        if ( lo( x ) && !hi( x ) )
            return false;
    return true;
}

} // namespace besg
