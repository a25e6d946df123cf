#include "openlp/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "openlp/error.hpp"

namespace openlp {

namespace {

enum class Tok {
    name,
    variable,
    number,
    lparen,
    rparen,
    comma,
    period,
    arrow,  // ":-"
    slash,
    dir_open,
    dir_fresh,
    kw_not,
    kw_and,
    kw_or,
    end
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::end, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                return;
            }
        }
    }

    Token next() {
        std::size_t line = line_;
        std::size_t col = col_;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = identifier();
            if (word == "not") {
                return {Tok::kw_not, word, line, col};
            }
            if (word == "and") {
                return {Tok::kw_and, word, line, col};
            }
            if (word == "or") {
                return {Tok::kw_or, word, line, col};
            }
            if (std::isupper(static_cast<unsigned char>(c))) {
                return {Tok::variable, word, line, col};
            }
            if (has_reserved_prefix(word)) {
                throw ParseError("symbol '" + word + "' uses the reserved prefix '" + reserved_prefix + "'", line, col);
            }
            return {Tok::name, word, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                advance();
            }
            return {Tok::number, num, line, col};
        }
        switch (c) {
            case '(':
                advance();
                return {Tok::lparen, "(", line, col};
            case ')':
                advance();
                return {Tok::rparen, ")", line, col};
            case ',':
                advance();
                return {Tok::comma, ",", line, col};
            case '.':
                advance();
                return {Tok::period, ".", line, col};
            case '/':
                advance();
                return {Tok::slash, "/", line, col};
            case ':':
                advance();
                if (pos_ >= text_.size() || text_[pos_] != '-') {
                    throw ParseError("expected ':-'", line, col);
                }
                advance();
                return {Tok::arrow, ":-", line, col};
            case '#': {
                advance();
                std::string word = identifier();
                if (word == "open") {
                    return {Tok::dir_open, "#open", line, col};
                }
                if (word == "fresh") {
                    return {Tok::dir_fresh, "#fresh", line, col};
                }
                throw ParseError("unknown directive '#" + word + "'", line, col);
            }
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

    std::string identifier() {
        std::string word;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                word += c;
                advance();
            } else {
                break;
            }
        }
        if (word.empty()) {
            throw ParseError("expected identifier", line_, col_);
        }
        return word;
    }

    void advance() {
        ++pos_;
        ++col_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// Tracks name -> arity per symbol class to detect arity clashes.
class ArityTable {
public:
    explicit ArityTable(const char* kind) : kind_(kind) {}

    void use(const std::string& name, std::size_t arity, const Token& at) {
        auto [it, inserted] = seen_.emplace(name, arity);
        if (!inserted && it->second != arity) {
            throw ParseError(std::string(kind_) + " '" + name + "' used with arity " + std::to_string(arity) +
                                 " but previously with arity " + std::to_string(it->second),
                             at.line, at.column);
        }
    }

    const std::map<std::string, std::size_t>& seen() const { return seen_; }

private:
    const char* kind_;
    std::map<std::string, std::size_t> seen_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    Program program(bool allow_directives, OpenProgram* omega) {
        Program prog;
        while (!at(Tok::end)) {
            if (at(Tok::dir_open) || at(Tok::dir_fresh)) {
                if (!allow_directives) {
                    throw error("directives are not allowed in a plain program");
                }
                directive(*omega);
            } else {
                prog.rules.push_back(rule());
            }
            expect(Tok::period, "'.'");
        }
        return prog;
    }

    Query query() {
        Query q = query_or();
        if (!at(Tok::end)) {
            throw error("unexpected input after query");
        }
        return q;
    }

    // Directives may precede the rules that use a symbol, so symbol checks
    // against the program run after the whole text has been read.
    void check_open_program(const OpenProgram& omega) const {
        for (const SymbolSig& f : omega.fresh) {
            auto at = decl_sites_.at(f.name + "/f");
            auto it = functions_.seen().find(f.name);
            if (it == functions_.seen().end()) {
                continue;
            }
            if (it->second == f.arity) {
                throw ParseError("fresh symbol '" + f.name + "' occurs in the program", at.first, at.second);
            }
            throw ParseError("fresh symbol '" + f.name + "/" + std::to_string(f.arity) +
                                 "' clashes with program arity " + std::to_string(it->second),
                             at.first, at.second);
        }
        for (const SymbolSig& p : omega.open) {
            auto it = predicates_.seen().find(p.name);
            if (it != predicates_.seen().end() && it->second != p.arity) {
                auto at = decl_sites_.at(p.name + "/o");
                throw ParseError("open predicate '" + p.name + "/" + std::to_string(p.arity) +
                                     "' clashes with program arity " + std::to_string(it->second),
                                 at.first, at.second);
            }
        }
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    bool at(Tok k) const { return peek().kind == k; }

    Token take() { return tokens_[pos_++]; }

    ParseError error(const std::string& msg) const {
        return ParseError(msg, peek().line, peek().column);
    }

    Token expect(Tok k, const char* what) {
        if (!at(k)) {
            throw error(std::string("expected ") + what);
        }
        return take();
    }

    Rule rule() {
        Rule r;
        r.head = atom();
        if (at(Tok::arrow)) {
            take();
            for (;;) {
                if (at(Tok::kw_not)) {
                    take();
                    r.neg.push_back(atom());
                } else {
                    r.pos.push_back(atom());
                }
                if (!at(Tok::comma)) {
                    break;
                }
                take();
            }
        }
        return r;
    }

    Atom atom() {
        Token name = expect(Tok::name, "predicate name");
        Atom a;
        a.predicate = name.text;
        if (at(Tok::lparen)) {
            take();
            for (;;) {
                a.args.push_back(term());
                if (!at(Tok::comma)) {
                    break;
                }
                take();
            }
            expect(Tok::rparen, "')'");
        }
        predicates_.use(a.predicate, a.args.size(), name);
        return a;
    }

    Term term() {
        if (at(Tok::variable)) {
            return Term::variable(take().text);
        }
        Token name = expect(Tok::name, "term");
        std::vector<Term> args;
        if (at(Tok::lparen)) {
            take();
            for (;;) {
                args.push_back(term());
                if (!at(Tok::comma)) {
                    break;
                }
                take();
            }
            expect(Tok::rparen, "')'");
        }
        functions_.use(name.text, args.size(), name);
        return Term::compound(name.text, std::move(args));
    }

    void directive(OpenProgram& omega) {
        Token dir = take();
        Token name = expect(Tok::name, "symbol name");
        expect(Tok::slash, "'/'");
        Token nat = expect(Tok::number, "arity");
        std::size_t arity = std::stoul(nat.text);
        if (dir.kind == Tok::dir_open) {
            open_decls_.use(name.text, arity, name);
            decl_sites_.emplace(name.text + "/o", std::make_pair(name.line, name.column));
            omega.open.insert({name.text, arity});
        } else {
            fresh_decls_.use(name.text, arity, name);
            decl_sites_.emplace(name.text + "/f", std::make_pair(name.line, name.column));
            omega.fresh.insert({name.text, arity});
        }
    }

    Query query_or() {
        Query q = query_and();
        while (at(Tok::kw_or)) {
            take();
            q = Query::disjunction(std::move(q), query_and());
        }
        return q;
    }

    Query query_and() {
        Query q = query_unary();
        while (at(Tok::kw_and)) {
            take();
            q = Query::conjunction(std::move(q), query_unary());
        }
        return q;
    }

    Query query_unary() {
        if (at(Tok::kw_not)) {
            take();
            return Query::negation(query_unary());
        }
        if (at(Tok::lparen)) {
            take();
            Query q = query_or();
            expect(Tok::rparen, "')'");
            return q;
        }
        Token at_tok = peek();
        Atom a = atom();
        if (!a.is_ground()) {
            throw ParseError("non-ground atom '" + to_string(a) + "' in query", at_tok.line, at_tok.column);
        }
        return Query::leaf(a);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    ArityTable predicates_{"predicate"};
    ArityTable functions_{"functor"};
    ArityTable open_decls_{"open predicate"};
    ArityTable fresh_decls_{"fresh symbol"};
    std::map<std::string, std::pair<std::size_t, std::size_t>> decl_sites_;
};

} // namespace

Program parse_program(std::string_view text) {
    Parser p(text);
    return p.program(false, nullptr);
}

OpenProgram parse_open_program(std::string_view text) {
    Parser p(text);
    OpenProgram omega;
    omega.program = p.program(true, &omega);
    p.check_open_program(omega);
    return omega;
}

Query parse_query(std::string_view text) {
    Parser p(text);
    return p.query();
}

} // namespace openlp
