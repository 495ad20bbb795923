#include "lie3/expr.hpp"

#include "lie3/format.hpp"

#include <cctype>

namespace lie3 {

namespace {

enum class Tok { Name, Int, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Name, std::string(s.substr(i, j - i)), i + 1});
            i = j;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), i + 1});
            i = j;
        } else if (std::string_view("+-*/^()[],|").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), i + 1});
            ++i;
        } else {
            throw ExprError(i + 1, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> toks) : t_(std::move(toks)) {}
    const Token& peek() const { return t_[k_]; }
    const Token& next() { return t_[k_ < t_.size() - 1 ? k_++ : k_]; }
    bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
    bool accept(char c) {
        if (!at_sym(c)) return false;
        ++k_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ExprError(t.col, msg + ", found " + found);
    }

private:
    std::vector<Token> t_;
    std::size_t k_ = 0;
};

long parse_small_int(const Token& t) {
    if (t.text.size() > 6) throw ExprError(t.col, "integer too large");
    return std::stol(t.text);
}

Rational parse_int_rational(const Token& t) { return Rational(mpz_class(t.text)); }

WordComb scale(WordComb c, const CycQ& s) {
    for (auto& [w, v] : c) v *= s;
    return c;
}

WordComb product(const WordComb& a, const WordComb& b) {
    std::map<FreeWord, CycQ> acc;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            FreeWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            CycQ& slot = acc[w];
            slot += ca * cb;
        }
    WordComb out;
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out.emplace_back(w, c);
    return out;
}

WordComb sum(const WordComb& a, const WordComb& b, const CycQ& sb) {
    std::map<FreeWord, CycQ> acc;
    for (const auto& [w, c] : a) acc[w] += c;
    for (const auto& [w, c] : b) acc[w] += sb * c;
    WordComb out;
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out.emplace_back(w, c);
    return out;
}

Rational factorial(long k) {
    mpz_class f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

// Resolves a g1 reference inside brackets: a suffix in the Prefix form, else a full name.
int g1_ref(const std::string& entry, std::size_t col, const AlgebraSpec& spec, const std::string& prefix) {
    if (auto j = spec.g1_index(prefix + entry)) return *j;
    if (prefix.empty() || entry.rfind(prefix, 0) == 0)
        if (auto j = spec.g1_index(entry)) return *j;
    throw ExprError(col, "unknown g1 generator '" + prefix + entry + "'");
}

std::string list_entry(Cursor& cur) {
    const Token& t = cur.peek();
    if (t.kind != Tok::Name && t.kind != Tok::Int) cur.fail("expected a generator index");
    std::string s = cur.next().text;
    // entries like "1a" lex as Int followed by Name
    while (cur.peek().kind == Tok::Name || cur.peek().kind == Tok::Int) {
        if (cur.peek().col != t.col + s.size()) break;
        s += cur.next().text;
    }
    return s;
}

class ExprParser {
public:
    ExprParser(std::string_view text, const AlgebraSpec& spec)
        : cur_(lex(text)), spec_(spec) {}

    WordComb parse() {
        if (cur_.peek().kind == Tok::End) cur_.fail("empty expression");
        WordComb e = expr();
        if (cur_.peek().kind != Tok::End) cur_.fail("unexpected token");
        return e;
    }

private:
    WordComb expr() {
        CycQ sign(1);
        if (cur_.accept('-')) sign = CycQ(-1);
        else cur_.accept('+');
        WordComb acc = scale(term(), sign);
        while (true) {
            if (cur_.accept('+')) acc = sum(acc, term(), CycQ(1));
            else if (cur_.accept('-')) acc = sum(acc, term(), CycQ(-1));
            else return acc;
        }
    }

    bool starts_factor() const {
        const Token& t = cur_.peek();
        return t.kind == Tok::Name || t.kind == Tok::Int || cur_.at_sym('(');
    }

    WordComb term() {
        if (!starts_factor()) cur_.fail("expected a factor");
        WordComb acc = factor();
        while (true) {
            if (cur_.accept('*')) {
                if (!starts_factor()) cur_.fail("expected a factor after '*'");
                acc = product(acc, factor());
            } else if (starts_factor()) {
                acc = product(acc, factor());
            } else {
                return acc;
            }
        }
    }

    WordComb factor() {
        const Token t = cur_.next();
        if (t.kind == Tok::Int) {
            Rational r = parse_int_rational(t);
            if (cur_.accept('/')) {
                const Token d = cur_.next();
                if (d.kind != Tok::Int) throw ExprError(d.col, "expected a denominator");
                Rational den = parse_int_rational(d);
                if (den == 0) throw ExprError(d.col, "zero denominator");
                r /= den;
            }
            return {{FreeWord{}, CycQ(r)}};
        }
        if (t.kind == Tok::Sym && t.text == "(") {
            WordComb e = expr();
            cur_.expect(')', "to close '('");
            return e;
        }
        if (t.kind != Tok::Name) throw ExprError(t.col, "expected a factor, found '" + t.text + "'");
        if (t.text == "q") return {{FreeWord{}, CycQ::q()}};
        if (cur_.at_sym('[')) return bracket_word(t);
        if (auto i = spec_.g0_index(t.text)) {
            long k = 1;
            if (cur_.accept('^')) {
                const Token e = cur_.next();
                if (e.kind != Tok::Int) throw ExprError(e.col, "expected an exponent");
                k = parse_small_int(e);
            }
            return {{FreeWord(static_cast<std::size_t>(k), Letter::x(*i)), CycQ(Rational(1) / factorial(k))}};
        }
        if (auto j = spec_.g1_index(t.text)) {
            if (cur_.at_sym('^'))
                throw ExprError(cur_.peek().col, "powers apply to g0 generators only");
            return {{FreeWord{Letter::y(*j)}, CycQ(1)}};
        }
        throw ExprError(t.col, "unknown generator '" + t.text + "'");
    }

    WordComb bracket_word(const Token& head) {
        cur_.expect('[', "");
        FreeWord w;
        do {
            std::size_t col = cur_.peek().col;
            std::string e = list_entry(cur_);
            w.push_back(Letter::y(g1_ref(e, col, spec_, head.text)));
        } while (cur_.accept(','));
        cur_.expect(']', "to close the index list");
        return {{w, CycQ(1)}};
    }

    Cursor cur_;
    const AlgebraSpec& spec_;
};

class DualParser {
public:
    DualParser(std::string_view text, const DualAlgebra& D) : cur_(lex(text)), D_(D), fmt_(D.spec()) {}

    DualElement parse() {
        if (cur_.peek().kind == Tok::End) cur_.fail("empty expression");
        DualElement acc;
        CycQ sign(1);
        if (cur_.accept('-')) sign = CycQ(-1);
        else cur_.accept('+');
        while (true) {
            DualElement t = term();
            t *= sign;
            acc += t;
            if (cur_.accept('+')) sign = CycQ(1);
            else if (cur_.accept('-')) sign = CycQ(-1);
            else break;
        }
        if (cur_.peek().kind != Tok::End) cur_.fail("unexpected token");
        return acc;
    }

private:
    CycQ scalar() {
        const Token t = cur_.next();
        if (t.kind == Tok::Int) {
            Rational r = parse_int_rational(t);
            if (cur_.accept('/')) {
                const Token d = cur_.next();
                if (d.kind != Tok::Int || parse_int_rational(d) == 0)
                    throw ExprError(d.col, "expected a nonzero denominator");
                r /= parse_int_rational(d);
            }
            return CycQ(r);
        }
        if (t.kind == Tok::Name && t.text == "q") return CycQ::q();
        if (t.kind == Tok::Sym && t.text == "(") {
            std::string inner;
            while (!cur_.at_sym(')')) {
                if (cur_.peek().kind == Tok::End) cur_.fail("expected ')'");
                inner += cur_.next().text;
            }
            cur_.next();
            try {
                return CycQ::parse(inner);
            } catch (const std::invalid_argument& e) {
                throw ExprError(t.col, std::string("bad coefficient: ") + e.what());
            }
        }
        throw ExprError(t.col, "expected a coefficient or label");
    }

    DualElement term() {
        CycQ c(1);
        while (!(cur_.peek().kind == Tok::Name && cur_.peek().text != "q")) {
            c *= scalar();
            if (!cur_.accept('*') && !(cur_.peek().kind == Tok::Name && cur_.peek().text != "q"))
                cur_.fail("expected '*' or a label");
        }
        DualElement f = DualElement::basis(label(), c);
        return f;
    }

    std::vector<int> x_monomial() {
        std::vector<int> x(static_cast<std::size_t>(D_.spec().p()), 0);
        do {
            const Token t = cur_.next();
            if (t.kind != Tok::Name) throw ExprError(t.col, "expected a g0 generator");
            auto i = D_.spec().g0_index(t.text);
            if (!i) throw ExprError(t.col, "unknown g0 generator '" + t.text + "'");
            long k = 1;
            if (cur_.accept('^')) {
                const Token e = cur_.next();
                if (e.kind != Tok::Int) throw ExprError(e.col, "expected an exponent");
                k = parse_small_int(e);
            }
            x[static_cast<std::size_t>(*i)] += static_cast<int>(k);
        } while (cur_.accept('*'));
        return x;
    }

    Sequence y_list() {
        Sequence y;
        do {
            std::size_t col = cur_.peek().col;
            std::string e = list_entry(cur_);
            y.push_back(g1_ref(e, col, D_.spec(), fmt_.prefix_form() ? fmt_.y_prefix() : ""));
        } while (cur_.accept(','));
        return y;
    }

    PBWMonomial label() {
        const Token t = cur_.next();
        std::vector<int> x;
        Sequence y;
        if (t.text == "eps") {
            // unit label
        } else if (t.text == "theta") {
            cur_.expect('[', "after theta");
            y = y_list();
            cur_.expect(']', "to close theta[...]");
        } else if (t.text == "alpha") {
            cur_.expect('[', "after alpha");
            x = x_monomial();
            cur_.expect(']', "to close alpha[...]");
        } else if (t.text == "Psi") {
            cur_.expect('[', "after Psi");
            x = x_monomial();
            cur_.expect('|', "between the g0 and g1 parts");
            y = y_list();
            cur_.expect(']', "to close Psi[...]");
        } else {
            throw ExprError(t.col, "unknown dual label '" + t.text + "'");
        }
        try {
            return D_.label(std::move(x), std::move(y));
        } catch (const std::invalid_argument& e) {
            throw ExprError(t.col, e.what());
        }
    }

    Cursor cur_;
    const DualAlgebra& D_;
    Formatter fmt_;
};

}  // namespace

Expr parse_expr(std::string_view text, const AlgebraSpec& spec) { return {ExprParser(text, spec).parse()}; }

Element parse_element(std::string_view text, Enveloping& U) {
    return U.normalize(parse_expr(text, U.spec()).terms);
}

DualElement parse_dual(std::string_view text, const DualAlgebra& D) { return DualParser(text, D).parse(); }

}  // namespace lie3
