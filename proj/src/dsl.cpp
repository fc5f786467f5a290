#include "wildrep/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "wildrep/errors.hpp"

namespace wildrep {

namespace {

struct Token {
    enum class Kind { Ident, Number, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&]() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n') advance();
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                t.text += s[i];
                advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                t.text += s[i];
                advance();
            }
        } else if (std::string("{}<>[]():;,#*^+-/").find(c) != std::string::npos) {
            t.kind = Token::Kind::Sym;
            t.text = c;
            advance();
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(t);
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceSpec spec() {
        SourceSpec s;
        keyword("class");
        s.name = ident();
        if (peek_ident("unmodified")) {
            next();
            s.cls.flavor = Flavor::Unmodified;
        } else if (peek_ident("modified")) {
            next();
        }
        sym("{");
        do {
            s.cls.locals.push_back(block());
        } while (peek_ident("at"));
        sym("}");
        if (cur().kind != Token::Kind::End) fail("trailing input");
        s.cls.normalize();
        return s;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(cur().line, cur().col, what); }

    bool peek_sym(const char* s) const { return cur().kind == Token::Kind::Sym && cur().text == s; }
    bool peek_ident(const char* s) const { return cur().kind == Token::Kind::Ident && cur().text == s; }
    void sym(const char* s) {
        if (!peek_sym(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    void keyword(const char* s) {
        if (!peek_ident(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    std::string ident() {
        if (cur().kind != Token::Kind::Ident) fail("expected identifier");
        return next().text;
    }
    long integer() {
        if (cur().kind != Token::Kind::Number) fail("expected integer");
        const Token& t = next();
        if (t.text.size() > 9) throw ParseError(t.line, t.col, "integer too large");
        return std::stol(t.text);
    }
    Rat rational() {
        bool neg = false;
        if (peek_sym("-")) {
            next();
            neg = true;
        }
        if (cur().kind != Token::Kind::Number) fail("expected number");
        std::string text = next().text;
        if (peek_sym("/")) {
            next();
            if (cur().kind != Token::Kind::Number) fail("expected denominator");
            const Token& d = next();
            if (d.text.find_first_not_of('0') == std::string::npos) {
                throw ParseError(d.line, d.col, "zero denominator");
            }
            text += "/" + d.text;
        }
        Rat r = parse_rat(text);
        return neg ? Rat(-r) : r;
    }

    LocalClass block() {
        keyword("at");
        LocalClass l;
        if (peek_ident("inf")) {
            next();
            l.point = SpherePoint::infinity();
        } else {
            l.point = SpherePoint::finite(rational());
        }
        sym(":");
        l.entries.push_back(entry(l.point));
        while (peek_sym(",")) {
            next();
            l.entries.push_back(entry(l.point));
        }
        sym(";");
        return l;
    }

    LocalEntry entry(const SpherePoint& p) {
        sym("<");
        ExpFactor q = poly(p);
        sym(">");
        LocalEntry e{StokesCircle(q), 1, {}};
        if (peek_sym("#")) {
            next();
            e.mult = static_cast<int>(integer());
            if (e.mult <= 0) throw SemanticError("multiplicity must be positive");
        }
        if (peek_sym("{")) {
            next();
            std::vector<std::pair<EigVal, std::vector<int>>> spec;
            spec.push_back(eig());
            while (peek_sym(";")) {
                next();
                spec.push_back(eig());
            }
            sym("}");
            e.cls = ConjClass(std::move(spec));
        } else {
            e.cls = ConjClass::identity(e.mult);
        }
        return e;
    }

    ExpFactor poly(const SpherePoint& p) {
        if (cur().kind == Token::Kind::Number && cur().text == "0" && toks_[pos_ + 1].kind == Token::Kind::Sym &&
            toks_[pos_ + 1].text == ">") {
            next();
            return ExpFactor(p, {});
        }
        std::vector<Term> terms;
        bool neg = false;
        if (peek_sym("-")) {
            next();
            neg = true;
        }
        terms.push_back(term(neg));
        while (peek_sym("+") || peek_sym("-")) {
            neg = next().text == "-";
            terms.push_back(term(neg));
        }
        return ExpFactor(p, terms);
    }

    Term term(bool neg) {
        Rat c = 1;
        if (cur().kind == Token::Kind::Number) {
            c = rational();
            sym("*");
        }
        keyword("x");
        Rat e = 1;
        if (peek_sym("^")) {
            next();
            if (peek_sym("(")) {
                next();
                e = rational();
                sym(")");
            } else {
                e = Rat(integer());
            }
        }
        if (e <= 0) fail("exponents must be positive");
        if (c == 0) fail("zero coefficient");
        return {e, ExactScalar::from_rat(neg ? Rat(-c) : c)};
    }

    std::pair<EigVal, std::vector<int>> eig() {
        EigVal v;
        if (cur().kind == Token::Kind::Ident ||
            (peek_sym("-") && toks_[pos_ + 1].kind == Token::Kind::Ident)) {
            int sign = 1;
            if (peek_sym("-")) {
                next();
                sign = -1;
            }
            v = EigVal::symbol(ident(), sign);
        } else {
            Rat r = rational();
            if (r == 0) throw SemanticError("eigenvalue 0 is not invertible");
            v = EigVal::exact(ExactScalar::from_rat(r));
        }
        sym(":");
        sym("[");
        std::vector<int> blocks{static_cast<int>(integer())};
        while (peek_sym(",")) {
            next();
            blocks.push_back(static_cast<int>(integer()));
        }
        sym("]");
        return {v, blocks};
    }
};

/// A Galois conjugate with rational coefficients; the stored representative need not be one.
ExpFactor rational_spelling(const StokesCircle& c) {
    for (std::int64_t j = 0; j < ram(c); ++j) {
        ExpFactor q = conjugate(c, j);
        if (std::all_of(q.terms.begin(), q.terms.end(), [](const Term& t) { return t.coeff.to_rat().has_value(); })) {
            return q;
        }
    }
    throw NotRepresentable("circle <" + c.str() + "> has no rational representative");
}

}  // namespace

SourceSpec parse_dsl(const std::string& text) { return Parser(lex(text)).spec(); }

std::string print_dsl(const SourceSpec& s) {
    std::string out = "class " + s.name + (s.cls.flavor == Flavor::Unmodified ? " unmodified" : "") + " {\n";
    for (const auto& l : s.cls.locals) {
        if (!l.point.infinite && !l.point.value.to_rat()) {
            throw NotRepresentable("point " + l.point.str() + " has no rational spelling");
        }
        out += "  at " + l.point.str() + ":";
        for (std::size_t i = 0; i < l.entries.size(); ++i) {
            const auto& e = l.entries[i];
            out += (i ? ", <" : " <") + rational_spelling(e.circle).str() + "> #" + std::to_string(e.mult) + " " +
                   e.cls.str();
        }
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace wildrep
