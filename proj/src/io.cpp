#include "sparselp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "sparselp/error.hpp"

namespace sparselp {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Literal {
    std::string atom;
    bool negated = false;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Statement {
    Literal head;
    std::vector<Literal> body;
    bool disjunctive = false;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (is_space(c)) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end()
    {
        skip_blank();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(std::string_view token)
    {
        skip_blank();
        if (text_.substr(pos_, token.size()) != token)
            return false;
        for (std::size_t i = 0; i < token.size(); ++i)
            advance();
        return true;
    }

    void expect(std::string_view token, const char* what)
    {
        if (!consume(token))
            fail(std::string("expected ") + what);
    }

    std::string identifier()
    {
        skip_blank();
        if (!is_ident_start(peek()))
            fail("expected an atom name");
        std::string out;
        while (is_ident_char(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    Literal literal(bool allow_negation)
    {
        skip_blank();
        Literal lit;
        lit.line = line_;
        lit.column = column_;
        std::string name = identifier();
        if (name == "not" && is_space(peek())) {
            if (!allow_negation)
                fail("negation is not allowed here");
            lit.negated = true;
            skip_blank();
            lit.line = line_;
            lit.column = column_;
            name = identifier();
        }
        if (peek() == '(') {
            advance();
            name += '(';
            bool first = true;
            for (;;) {
                skip_blank();
                if (!first)
                    name += ',';
                std::string term;
                while (is_ident_char(peek())) {
                    term += peek();
                    advance();
                }
                if (term.empty())
                    fail("expected a constant inside the argument list");
                name += term;
                first = false;
                skip_blank();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                if (peek() == ')') {
                    advance();
                    break;
                }
                fail("expected ',' or ')' in the argument list");
            }
            name += ')';
        }
        lit.atom = std::move(name);
        return lit;
    }

    Statement statement()
    {
        Statement st;
        st.head = literal(false);
        if (consume(":-")) {
            st.body.push_back(literal(true));
            char separator = 0;
            for (;;) {
                skip_blank();
                const char c = peek();
                if (c == ',' || c == ';') {
                    if (separator && c != separator)
                        fail("cannot mix ',' and ';' in one body");
                    separator = c;
                    advance();
                    st.body.push_back(literal(true));
                    continue;
                }
                break;
            }
            st.disjunctive = separator == ';';
            if (st.disjunctive) {
                for (const auto& lit : st.body)
                    if (lit.negated)
                        throw ParseError("negation is not allowed in a disjunctive body", lit.line, lit.column);
            }
        }
        expect(".", "'.' at the end of the rule");
        return st;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

private:
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::vector<Statement> parse_statements(std::string_view text)
{
    Lexer lexer(text);
    std::vector<Statement> out;
    while (!lexer.at_end())
        out.push_back(lexer.statement());
    return out;
}

// Turns a statement body into sorted id sets. Returns false when the rule can
// never fire (an atom both positive and negated).
bool collect_body(const Statement& st, AtomTable& atoms, std::vector<AtomId>& pos, std::vector<AtomId>& neg,
                  std::vector<ParseWarning>* warnings)
{
    auto warn = [warnings](const Literal& lit, std::string message) {
        if (warnings)
            warnings->push_back({lit.line, lit.column, std::move(message)});
    };
    for (const auto& lit : st.body) {
        const AtomId id = atoms.intern(lit.atom);
        auto& target = lit.negated ? neg : pos;
        if (std::find(target.begin(), target.end(), id) != target.end())
            warn(lit, "duplicate literal '" + std::string(lit.negated ? "not " : "") + lit.atom + "' removed");
        else
            target.push_back(id);
    }
    for (AtomId a : pos) {
        if (std::find(neg.begin(), neg.end(), a) != neg.end()) {
            warn(st.head, "rule for '" + st.head.atom + "' has '" + atoms.name(a) +
                              "' both positive and negated; it can never fire and was dropped");
            return false;
        }
    }
    return true;
}

} // namespace

NormalProgram parse_program(std::string_view text, std::vector<ParseWarning>* warnings)
{
    AtomTable atoms;
    std::vector<Rule> rules;
    for (const auto& st : parse_statements(text)) {
        const AtomId head = atoms.intern(st.head.atom);
        std::vector<AtomId> pos, neg;
        if (!collect_body(st, atoms, pos, neg, warnings))
            continue;
        if (st.disjunctive) {
            for (AtomId a : pos)
                rules.push_back(and_rule(head, {a}));
        } else {
            rules.push_back(and_rule(head, std::move(pos), std::move(neg)));
        }
    }
    return NormalProgram(std::move(atoms), std::move(rules));
}

StandardizedProgram parse_standardized_program(std::string_view text, std::vector<ParseWarning>* warnings)
{
    AtomTable scratch;
    std::vector<Rule> rules;
    for (const auto& st : parse_statements(text)) {
        const AtomId head = scratch.intern(st.head.atom);
        std::vector<AtomId> pos, neg;
        if (!collect_body(st, scratch, pos, neg, warnings))
            continue;
        if (!neg.empty())
            throw ParseError("standardized programs cannot contain negation", st.head.line, st.head.column);
        rules.push_back(st.disjunctive ? or_rule(head, std::move(pos)) : and_rule(head, std::move(pos)));
    }

    // Rebuild the table in the same order with provenance tags.
    AtomTable atoms;
    for (const auto& name : scratch.names()) {
        AtomOrigin origin = AtomOrigin::original();
        if (name.starts_with("_aux_")) {
            origin = AtomOrigin::auxiliary();
        } else if (name.starts_with("_not_")) {
            auto target = atoms.find(std::string_view(name).substr(5));
            if (target && atoms.origin(*target).kind == AtomKind::original)
                origin = AtomOrigin::negation_of(*target);
        }
        atoms.intern(name, origin);
    }
    return StandardizedProgram(std::move(atoms), std::move(rules));
}

std::string rule_to_string(const Rule& rule, const AtomTable& atoms)
{
    std::string out = atoms.name(rule.head);
    if (!rule.is_fact()) {
        out += " :- ";
        const char* sep = rule.is_or() ? "; " : ", ";
        bool first = true;
        for (AtomId a : rule.pos_body) {
            if (!first)
                out += sep;
            out += atoms.name(a);
            first = false;
        }
        for (AtomId a : rule.neg_body) {
            if (!first)
                out += sep;
            out += "not ";
            out += atoms.name(a);
            first = false;
        }
    }
    out += '.';
    return out;
}

namespace {

std::string serialize_rules(const detail::RuleStore& p)
{
    std::string out;
    for (const auto& r : p.rules()) {
        out += rule_to_string(r, p.atoms());
        out += '\n';
    }
    return out;
}

using NamedRule = std::tuple<std::string, std::vector<std::string>, std::vector<std::string>, bool>;

std::vector<NamedRule> named_rules(const detail::RuleStore& p)
{
    std::vector<NamedRule> out;
    out.reserve(p.size());
    for (const auto& r : p.rules()) {
        std::vector<std::string> pos, neg;
        for (AtomId a : r.pos_body)
            pos.push_back(p.atoms().name(a));
        for (AtomId a : r.neg_body)
            neg.push_back(p.atoms().name(a));
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        out.emplace_back(p.atoms().name(r.head), std::move(pos), std::move(neg), r.is_or());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string serialize_program(const NormalProgram& p) { return serialize_rules(p); }
std::string serialize_program(const DefiniteProgram& p) { return serialize_rules(p); }
std::string serialize_program(const StandardizedProgram& p) { return serialize_rules(p); }

bool structurally_equal(const detail::RuleStore& a, const detail::RuleStore& b)
{
    return named_rules(a) == named_rules(b);
}

// ---------------------------------------------------------------------------
// Graphs

Graph load_edge_list(std::string_view text)
{
    Graph g;
    std::map<std::string, std::size_t, std::less<>> index;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto node = [&](const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, g.node_names.size());
        if (inserted)
            g.node_names.push_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        std::istringstream tokens{std::string(line)};
        std::string u, v;
        if (!(tokens >> u))
            continue;
        if (u.front() == '%' || u.front() == '#')
            continue;
        if (!(tokens >> v))
            throw ParseError("expected two node labels", line_no);
        for (const auto& label : {u, v}) {
            if (!std::all_of(label.begin(), label.end(), is_ident_char))
                throw ParseError("node label '" + label + "' must consist of letters, digits and '_'", line_no);
        }
        const auto a = node(u);
        const auto b = node(v);
        if (seen.emplace(a, b).second)
            g.edges.emplace_back(a, b);
    }
    return g;
}

std::string edge_atom(std::string_view from, std::string_view to)
{
    return "edge(" + std::string(from) + "," + std::string(to) + ")";
}

std::string path_atom(std::string_view from, std::string_view to)
{
    return "path(" + std::string(from) + "," + std::string(to) + ")";
}

DefiniteProgram ground_transitive_closure(const Graph& g)
{
    if (g.empty())
        throw ParameterError("empty graph");
    for (const auto& label : g.node_names) {
        if (label.empty() || !std::all_of(label.begin(), label.end(), is_ident_char))
            throw ParameterError("node label '" + label + "' must consist of letters, digits and '_'");
    }
    const auto& names = g.node_names;
    AtomTable atoms;
    std::vector<Rule> rules;
    rules.reserve(2 * g.edge_count() + g.edge_count() * g.node_count());

    for (const auto& [u, v] : g.edges)
        rules.push_back(fact(atoms.intern(edge_atom(names[u], names[v]))));
    for (const auto& [u, v] : g.edges) {
        const AtomId head = atoms.intern(path_atom(names[u], names[v]));
        rules.push_back(and_rule(head, {*atoms.find(edge_atom(names[u], names[v]))}));
    }
    for (const auto& [x, z] : g.edges) {
        const AtomId edge = *atoms.find(edge_atom(names[x], names[z]));
        for (std::size_t y = 0; y < g.node_count(); ++y) {
            const AtomId head = atoms.intern(path_atom(names[x], names[y]));
            const AtomId step = atoms.intern(path_atom(names[z], names[y]));
            rules.push_back(and_rule(head, {edge, step}));
        }
    }
    return DefiniteProgram(std::move(atoms), std::move(rules));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace sparselp
