#include "besg/io.hpp"

#include "besg/error.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace besg
{

namespace
{

bool is_ident_char( char c )
{
    return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '_' || c == '\'';
}

class scanner
{
    std::string_view _text;
    std::size_t _pos = 0;
    std::size_t _line = 1;
    std::size_t _column = 1;

    void advance( std::size_t n )
    {
        for ( std::size_t i = 0; i < n && _pos < _text.size(); ++i, ++_pos )
        {
            if ( _text[ _pos ] == '\n' )
            {
                ++_line;
                _column = 1;
            }
            else
                ++_column;
        }
    }

public:
    explicit scanner( std::string_view text ) : _text{ text } {}

    void skip_space()
    {
        while ( _pos < _text.size() )
        {
            const char c = _text[ _pos ];
            if ( c == '%' )
            {
                while ( _pos < _text.size() && _text[ _pos ] != '\n' )
                    advance( 1 );
            }
            else if ( c == ' ' || c == '\t' || c == '\r' || c == '\n' )
                advance( 1 );
            else
                break;
        }
    }

    bool at_end()
    {
        skip_space();
        return _pos == _text.size();
    }

    char peek()
    {
        skip_space();
        return _pos < _text.size() ? _text[ _pos ] : '\0';
    }

    bool accept( std::string_view token )
    {
        skip_space();
        if ( _text.substr( _pos, token.size() ) != token )
            return false;
        advance( token.size() );
        return true;
    }

    bool accept_keyword( std::string_view word )
    {
        skip_space();
        if ( _text.substr( _pos, word.size() ) != word )
            return false;
        const auto end = _pos + word.size();
        if ( end < _text.size() && is_ident_char( _text[ end ] ) )
            return false;
        advance( word.size() );
        return true;
    }

    void expect( std::string_view token )
    {
        if ( !accept( token ) )
            fail( "expected '" + std::string{ token } + "'" );
    }

    bool at_identifier() { return is_ident_char( peek() ); }

    std::string identifier()
    {
        skip_space();
        const auto start = _pos;
        auto end = _pos;
        while ( end < _text.size() && is_ident_char( _text[ end ] ) )
            ++end;
        if ( end == start )
            fail( "expected an identifier" );
        std::string name{ _text.substr( start, end - start ) };
        if ( name == "true" || name == "false" )
            fail( "'" + name + "' is not a variable name" );
        advance( end - start );
        return name;
    }

    std::size_t number()
    {
        skip_space();
        std::size_t value = 0;
        const auto* first = _text.data() + _pos;
        const auto* last = _text.data() + _text.size();
        auto [ ptr, ec ] = std::from_chars( first, last, value );
        if ( ec != std::errc{} || ptr == first )
            fail( "expected a number" );
        advance( static_cast<std::size_t>( ptr - first ) );
        return value;
    }

    // A double-quoted string, or a bare word up to the next ',' or ')'.
    std::string label()
    {
        skip_space();
        std::string out;
        if ( accept( "\"" ) )
        {
            while ( _pos < _text.size() && _text[ _pos ] != '"' )
            {
                out += _text[ _pos ];
                advance( 1 );
            }
            expect( "\"" );
            return out;
        }
        while ( _pos < _text.size() && _text[ _pos ] != ',' && _text[ _pos ] != ')' && _text[ _pos ] != '\n' )
        {
            out += _text[ _pos ];
            advance( 1 );
        }
        while ( !out.empty() && ( out.back() == ' ' || out.back() == '\t' || out.back() == '\r' ) )
            out.pop_back();
        if ( out.empty() )
            fail( "expected an action label" );
        return out;
    }

    [[noreturn]] void fail( const std::string& message )
    {
        skip_space();
        throw parse_error( message, _line, _column );
    }
};

formula parse_or( scanner& in );

formula parse_atom( scanner& in )
{
    if ( in.accept( "(" ) )
    {
        auto f = parse_or( in );
        in.expect( ")" );
        return f;
    }
    if ( in.accept_keyword( "true" ) )
        return formula::make_true();
    if ( in.accept_keyword( "false" ) )
        return formula::make_false();
    if ( in.at_identifier() )
        return formula::make_variable( in.identifier() );
    in.fail( "expected a formula" );
}

formula parse_and( scanner& in )
{
    auto f = parse_atom( in );
    while ( in.accept( "&&" ) )
        f = formula::make_and( std::move( f ), parse_atom( in ) );
    return f;
}

formula parse_or( scanner& in )
{
    auto f = parse_and( in );
    while ( in.accept( "||" ) )
        f = formula::make_or( std::move( f ), parse_and( in ) );
    return f;
}

void print_formula_to( const formula& f, std::string& out );

void print_operand( const formula& f, std::string& out )
{
    if ( f.is_binary() )
    {
        out += '(';
        print_formula_to( f, out );
        out += ')';
    }
    else
        print_formula_to( f, out );
}

void print_formula_to( const formula& f, std::string& out )
{
    switch ( f.kind() )
    {
    case formula_kind::true_value:
        out += "true";
        break;
    case formula_kind::false_value:
        out += "false";
        break;
    case formula_kind::variable:
        out += f.name();
        break;
    case formula_kind::conjunction:
    case formula_kind::disjunction:
        print_operand( f.left(), out );
        out += f.kind() == formula_kind::conjunction ? " && " : " || ";
        print_operand( f.right(), out );
        break;
    }
}

} // namespace

formula parse_formula( std::string_view text )
{
    scanner in{ text };
    auto f = parse_or( in );
    if ( !in.at_end() )
        in.fail( "unexpected input after formula" );
    return f;
}

bes parse_bes( std::string_view text )
{
    scanner in{ text };
    std::vector<equation> eqs;
    while ( !in.at_end() )
    {
        fixpoint_sign sign;
        if ( in.accept_keyword( "mu" ) )
            sign = fixpoint_sign::mu;
        else if ( in.accept_keyword( "nu" ) )
            sign = fixpoint_sign::nu;
        else
            in.fail( "expected 'mu' or 'nu'" );
        auto lhs = in.identifier();
        in.expect( "=" );
        auto rhs = parse_or( in );
        in.expect( ";" );
        eqs.push_back( { sign, std::move( lhs ), std::move( rhs ) } );
    }
    return bes{ std::move( eqs ) };
}

std::string print_formula( const formula& f )
{
    std::string out;
    print_formula_to( f, out );
    return out;
}

std::string print_bes( const bes& e )
{
    std::string out;
    for ( const auto& eq : e )
    {
        out += to_string( eq.sign );
        out += ' ';
        out += eq.lhs;
        out += " = ";
        print_formula_to( eq.rhs, out );
        out += ";\n";
    }
    return out;
}

namespace
{

std::vector<std::string> words_of( std::string_view line )
{
    std::vector<std::string> words;
    std::istringstream in{ std::string{ line.substr( 0, line.find( '%' ) ) } };
    for ( std::string w; in >> w; )
        words.push_back( w );
    return words;
}

std::size_t to_number( const std::string& s, std::size_t line )
{
    std::size_t value = 0;
    auto [ ptr, ec ] = std::from_chars( s.data(), s.data() + s.size(), value );
    if ( ec != std::errc{} || ptr != s.data() + s.size() )
        throw parse_error( "expected a number, got '" + s + "'", line, 1 );
    return value;
}

decoration decoration_from( const std::string& s, std::size_t line )
{
    if ( s == "and" )
        return decoration::conj;
    if ( s == "or" )
        return decoration::disj;
    if ( s == "top" )
        return decoration::top;
    if ( s == "bot" )
        return decoration::bottom;
    throw parse_error( "unknown decoration '" + s + "'", line, 1 );
}

} // namespace

structure_graph parse_sg( std::string_view text )
{
    std::vector<vertex> vertices;
    std::vector<bool> described;
    std::optional<vertex_id> root;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while ( start <= text.size() )
    {
        const auto end = std::min( text.find( '\n', start ), text.size() );
        const auto line = text.substr( start, end - start );
        start = end + 1;
        ++line_no;

        const auto words = words_of( line );
        if ( words.empty() )
            continue;
        if ( !root )
        {
            if ( words[ 0 ] != "sg" || words.size() != 3 )
                throw parse_error( "expected 'sg <vertices> <root>'", line_no, 1 );
            const auto n = to_number( words[ 1 ], line_no );
            root = to_number( words[ 2 ], line_no );
            if ( n == 0 || *root >= n )
                throw parse_error( "root must be one of the vertices", line_no, 1 );
            vertices.resize( n );
            described.resize( n );
            continue;
        }

        auto vertex_at = [ & ]( const std::string& w ) -> std::size_t {
            const auto u = to_number( w, line_no );
            if ( u >= vertices.size() )
                throw parse_error( "vertex " + w + " out of range", line_no, 1 );
            return u;
        };

        if ( words[ 0 ] == "v" )
        {
            if ( words.size() < 2 )
                throw parse_error( "expected 'v <id> ...'", line_no, 1 );
            const auto u = vertex_at( words[ 1 ] );
            if ( described[ u ] )
                throw parse_error( "vertex " + words[ 1 ] + " described twice", line_no, 1 );
            described[ u ] = true;
            auto& v = vertices[ u ];
            for ( std::size_t i = 2; i < words.size(); ++i )
            {
                const auto eq = words[ i ].find( '=' );
                if ( eq == std::string::npos )
                    throw parse_error( "expected key=value, got '" + words[ i ] + "'", line_no, 1 );
                const auto key = words[ i ].substr( 0, eq );
                const auto value = words[ i ].substr( eq + 1 );
                if ( key == "rank" )
                    v.rank = static_cast<unsigned>( to_number( value, line_no ) );
                else if ( key == "dec" )
                    v.dec = decoration_from( value, line_no );
                else if ( key == "fv" )
                {
                    if ( !is_identifier( value ) )
                        throw parse_error( "invalid variable name '" + value + "'", line_no, 1 );
                    v.free_var = value;
                }
                else
                    throw parse_error( "unknown attribute '" + key + "'", line_no, 1 );
            }
        }
        else if ( words[ 0 ] == "e" )
        {
            if ( words.size() != 3 )
                throw parse_error( "expected 'e <from> <to>'", line_no, 1 );
            const auto from = vertex_at( words[ 1 ] );
            vertices[ from ].successors.push_back( vertex_at( words[ 2 ] ) );
        }
        else
            throw parse_error( "unknown line kind '" + words[ 0 ] + "'", line_no, 1 );
    }
    if ( !root )
        throw parse_error( "missing 'sg' header" );
    return structure_graph{ std::move( vertices ), *root };
}

std::string print_sg( const structure_graph& g )
{
    std::ostringstream out;
    out << "sg " << g.size() << ' ' << g.root() << '\n';
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        const auto& v = g[ u ];
        out << "v " << u;
        if ( v.rank )
            out << " rank=" << *v.rank;
        if ( v.dec != decoration::none )
            out << " dec=" << to_string( v.dec );
        if ( v.free_var )
            out << " fv=" << *v.free_var;
        out << '\n';
    }
    for ( vertex_id u = 0; u < g.size(); ++u )
        for ( auto s : g[ u ].successors )
            out << "e " << u << ' ' << s << '\n';
    return out.str();
}

std::string vertex_label( const structure_graph& g, vertex_id u, bool unicode )
{
    const auto& v = g[ u ];
    std::string label = std::to_string( u );
    switch ( v.dec )
    {
    case decoration::conj:
        label += unicode ? " ▲" : " /\\";
        break;
    case decoration::disj:
        label += unicode ? " ▼" : " \\/";
        break;
    case decoration::top:
        label += unicode ? " ⊤" : " top";
        break;
    case decoration::bottom:
        label += unicode ? " ⊥" : " bot";
        break;
    case decoration::none:
        break;
    }
    if ( v.rank )
        label += " " + std::to_string( *v.rank );
    if ( v.free_var )
        label += ( unicode ? " ↗" : " fv " ) + *v.free_var;
    return label;
}

std::string print_dot( const structure_graph& g )
{
    std::ostringstream out;
    out << "digraph structure_graph {\n";
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        out << "  n" << u << " [label=\"" << vertex_label( g, u, true ) << '"';
        if ( u == g.root() )
            out << ", peripheries=2";
        out << "];\n";
    }
    for ( vertex_id u = 0; u < g.size(); ++u )
        for ( auto s : g[ u ].successors )
            out << "  n" << u << " -> n" << s << ";\n";
    out << "}\n";
    return out.str();
}

std::string describe_sg( const structure_graph& g )
{
    std::ostringstream out;
    out << "root " << g.root() << '\n';
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        auto label = vertex_label( g, u, false );
        label.insert( std::to_string( u ).size(), ":" );
        out << label;
        if ( g[ u ].has_successors() )
        {
            out << " ->";
            for ( auto s : g[ u ].successors )
                out << ' ' << s;
        }
        out << '\n';
    }
    return out.str();
}

lts parse_aut( std::string_view text )
{
    scanner in{ text };
    if ( !in.accept_keyword( "des" ) )
        in.fail( "expected 'des' header" );
    in.expect( "(" );
    const auto initial = in.number();
    in.expect( "," );
    const auto transition_count = in.number();
    in.expect( "," );
    const auto state_count = in.number();
    in.expect( ")" );
    if ( state_count == 0 || initial >= state_count )
        in.fail( "initial state out of range" );

    std::vector<std::string> states;
    for ( std::size_t s = 0; s < state_count; ++s )
        states.push_back( "s" + std::to_string( s ) );

    std::vector<std::string> actions;
    std::map<std::string, action_id> action_ids;
    std::vector<transition> ts;
    while ( !in.at_end() )
    {
        in.expect( "(" );
        const auto from = in.number();
        in.expect( "," );
        const auto label = in.label();
        in.expect( "," );
        const auto to = in.number();
        in.expect( ")" );
        if ( from >= state_count || to >= state_count )
            in.fail( "state out of range" );
        auto [ it, inserted ] = action_ids.emplace( label, actions.size() );
        if ( inserted )
            actions.push_back( label );
        ts.push_back( { from, it->second, to } );
    }
    if ( ts.size() != transition_count )
        throw parse_error( "header announces " + std::to_string( transition_count ) + " transitions, found "
                           + std::to_string( ts.size() ) );
    return lts{ std::move( states ), std::move( actions ), std::move( ts ), initial };
}

std::string print_aut( const lts& l )
{
    std::ostringstream out;
    out << "des (" << l.initial() << ", " << l.transitions().size() << ", " << l.state_count() << ")\n";
    for ( const auto& t : l.transitions() )
        out << '(' << t.from << ", \"" << l.action_name( t.action ) << "\", " << t.to << ")\n";
    return out.str();
}

namespace
{

mu_formula parse_fix( scanner& in );

action_set parse_actions( scanner& in, char close )
{
    action_set a;
    a.complement = in.accept( "!" );
    const bool braced = in.accept( "{" );
    if ( in.peek() != close && in.peek() != '}' )
    {
        do
            a.actions.insert( in.identifier() );
        while ( in.accept( "," ) );
    }
    if ( braced )
        in.expect( "}" );
    return a;
}

mu_formula parse_unary( scanner& in );

mu_formula parse_mu_atom( scanner& in )
{
    if ( in.accept( "(" ) )
    {
        auto f = parse_fix( in );
        in.expect( ")" );
        return f;
    }
    if ( in.accept_keyword( "true" ) )
        return mu_formula::make_true();
    if ( in.accept_keyword( "false" ) )
        return mu_formula::make_false();
    if ( in.at_identifier() )
        return mu_formula::make_variable( in.identifier() );
    in.fail( "expected a formula" );
}

mu_formula parse_unary( scanner& in )
{
    if ( in.accept( "[" ) )
    {
        auto a = parse_actions( in, ']' );
        in.expect( "]" );
        return mu_formula::make_box( std::move( a ), parse_unary( in ) );
    }
    if ( in.accept( "<" ) )
    {
        auto a = parse_actions( in, '>' );
        in.expect( ">" );
        return mu_formula::make_diamond( std::move( a ), parse_unary( in ) );
    }
    if ( in.peek() == 'm' || in.peek() == 'n' )
    {
        scanner probe = in;
        if ( probe.accept_keyword( "mu" ) || probe.accept_keyword( "nu" ) )
            return parse_fix( in );
    }
    return parse_mu_atom( in );
}

mu_formula parse_mu_and( scanner& in )
{
    auto f = parse_unary( in );
    while ( in.accept( "&&" ) )
        f = mu_formula::make_and( std::move( f ), parse_unary( in ) );
    return f;
}

mu_formula parse_mu_or( scanner& in )
{
    auto f = parse_mu_and( in );
    while ( in.accept( "||" ) )
        f = mu_formula::make_or( std::move( f ), parse_mu_and( in ) );
    return f;
}

mu_formula parse_fix( scanner& in )
{
    const bool nu = in.accept_keyword( "nu" );
    if ( nu || in.accept_keyword( "mu" ) )
    {
        auto name = in.identifier();
        in.expect( "." );
        auto body = parse_fix( in );
        return nu ? mu_formula::make_nu( std::move( name ), std::move( body ) )
                  : mu_formula::make_mu( std::move( name ), std::move( body ) );
    }
    return parse_mu_or( in );
}

void print_mcf_to( const mu_formula& f, std::string& out );

void print_mcf_operand( const mu_formula& f, std::string& out )
{
    if ( f.is_fixpoint() || f.kind() == mu_kind::conjunction || f.kind() == mu_kind::disjunction )
    {
        out += '(';
        print_mcf_to( f, out );
        out += ')';
    }
    else
        print_mcf_to( f, out );
}

void print_actions( const action_set& a, std::string& out )
{
    if ( a.complement )
        out += '!';
    bool first = true;
    for ( const auto& x : a.actions )
    {
        if ( !first )
            out += ',';
        out += x;
        first = false;
    }
}

void print_mcf_to( const mu_formula& f, std::string& out )
{
    switch ( f.kind() )
    {
    case mu_kind::true_value:
        out += "true";
        break;
    case mu_kind::false_value:
        out += "false";
        break;
    case mu_kind::variable:
        out += f.name();
        break;
    case mu_kind::conjunction:
    case mu_kind::disjunction:
        print_mcf_operand( f.left(), out );
        out += f.kind() == mu_kind::conjunction ? " && " : " || ";
        print_mcf_operand( f.right(), out );
        break;
    case mu_kind::box:
        out += '[';
        print_actions( f.actions(), out );
        out += ']';
        print_mcf_operand( f.body(), out );
        break;
    case mu_kind::diamond:
        out += '<';
        print_actions( f.actions(), out );
        out += '>';
        print_mcf_operand( f.body(), out );
        break;
    case mu_kind::nu:
    case mu_kind::mu:
        out += f.kind() == mu_kind::nu ? "nu " : "mu ";
        out += f.name();
        out += ". ";
        print_mcf_to( f.body(), out );
        break;
    }
}

} // namespace

mu_formula parse_mcf( std::string_view text )
{
    scanner in{ text };
    auto f = parse_fix( in );
    if ( !in.at_end() )
        in.fail( "unexpected input after formula" );
    return f;
}

std::string print_mcf( const mu_formula& f )
{
    std::string out;
    print_mcf_to( f, out );
    return out;
}

nlohmann::json to_json( const bes& e )
{
    auto eqs = nlohmann::json::array();
    for ( const auto& eq : e )
        eqs.push_back( { { "sign", to_string( eq.sign ) }, { "lhs", eq.lhs }, { "rhs", print_formula( eq.rhs ) } } );
    return { { "equations", std::move( eqs ) }, { "size", size( e ) } };
}

nlohmann::json to_json( const structure_graph& g )
{
    auto vs = nlohmann::json::array();
    for ( vertex_id u = 0; u < g.size(); ++u )
    {
        const auto& v = g[ u ];
        nlohmann::json j{ { "id", u }, { "successors", v.successors } };
        if ( v.dec != decoration::none )
            j[ "dec" ] = to_string( v.dec );
        if ( v.rank )
            j[ "rank" ] = *v.rank;
        if ( v.free_var )
            j[ "fv" ] = *v.free_var;
        if ( v.term )
            j[ "term" ] = print_formula( *v.term );
        vs.push_back( std::move( j ) );
    }
    return { { "root", g.root() }, { "vertices", std::move( vs ) } };
}

nlohmann::json to_json( const lts& l )
{
    auto ts = nlohmann::json::array();
    for ( const auto& t : l.transitions() )
        ts.push_back( { { "from", l.state_name( t.from ) },
                        { "action", l.action_name( t.action ) },
                        { "to", l.state_name( t.to ) } } );
    return { { "states", l.states() },
             { "actions", l.actions() },
             { "initial", l.state_name( l.initial() ) },
             { "transitions", std::move( ts ) } };
}

} // namespace besg
