#include "jlab/mapio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace jlab {

namespace {

constexpr long kMaxExponent = 2147483647L;  // 2^31 - 1

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    BiPoly parse_expression_all() {
        skip_ws();
        BiPoly p = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    BiPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        BiPoly acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    BiPoly parse_term() {
        BiPoly acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    BiPoly parse_factor() {
        BiPoly base = parse_atom();
        if (accept('^')) {
            long e = parse_exponent();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    long parse_exponent() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        mpz_class v = parse_integer();
        if (v > kMaxExponent) fail("exponent overflow");
        return v.get_si();
    }

    mpz_class parse_integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        return mpz_class(digits, 10);  // base 10 even with leading zeros
    }

    BiPoly parse_atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            if (accept('/')) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected denominator");
                mpz_class den = parse_integer();
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return BiPoly(GaussRat(q));
            }
            return BiPoly(GaussRat(Rational(num)));
        }
        if (c == '(') {
            advance();
            BiPoly inner = parse_expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            advance();
            if (c == 'x') return BiPoly::var_x();
            if (c == 'y') return BiPoly::var_y();
            if (c == 'i') return BiPoly(GaussRat::i());
            fail(std::string("unknown identifier '") + c + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool coeff_negative(const GaussRat& c) {
    if (c.re() != 0) return c.re() < 0;
    return c.im() < 0;
}

/// Coefficient as a standalone factor; parenthesized when mixed.
std::string coeff_factor(const GaussRat& c) {
    if (c.is_real()) return to_string(c.re());
    if (c.re() == 0) {
        if (c.im() == 1) return "i";
        if (c.im() == -1) return "-i";
        return to_string(c.im()) + "*i";
    }
    std::string s = "(" + to_string(c.re());
    if (c.im() > 0)
        s += c.im() == 1 ? "+i" : "+" + to_string(c.im()) + "*i";
    else
        s += c.im() == -1 ? "-i" : "-" + to_string(Rational(-c.im())) + "*i";
    return s + ")";
}

std::string power_factor(const std::string& var, int e) {
    return e == 1 ? var : var + "^" + std::to_string(e);
}

struct RenderedTerm {
    bool negative;
    std::string body;  // without sign
};

RenderedTerm render_term(const GaussRat& coeff, const std::vector<std::pair<std::string, int>>& vars) {
    RenderedTerm out;
    out.negative = coeff_negative(coeff);
    GaussRat c = out.negative ? -coeff : coeff;
    std::vector<std::string> factors;
    bool any_var = false;
    for (const auto& [name, e] : vars)
        if (e > 0) {
            factors.push_back(power_factor(name, e));
            any_var = true;
        }
    if (!any_var) {
        out.body = coeff_factor(c);
        return out;
    }
    if (!c.is_one()) factors.insert(factors.begin(), coeff_factor(c));
    std::string body = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) body += "*" + factors[k];
    out.body = body;
    return out;
}

std::string join_terms(std::vector<RenderedTerm> terms) {
    if (terms.empty()) return "0";
    std::string s = (terms.front().negative ? "-" : "") + terms.front().body;
    for (std::size_t k = 1; k < terms.size(); ++k)
        s += (terms[k].negative ? " - " : " + ") + terms[k].body;
    return s;
}

}  // namespace

BiPoly parse_poly(const std::string& text) {
    return Parser(text).parse_expression_all();
}

MapFile parse_map(const std::string& text) {
    MapFile out;
    std::optional<BiPoly> f, g;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::size_t eq = raw.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "expected '<key> = <expr>'");
        std::string key = raw.substr(start, eq - start);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string rhs = raw.substr(eq + 1);
        if (key == "name") {
            std::size_t b = rhs.find_first_not_of(" \t");
            out.name = b == std::string::npos ? "" : rhs.substr(b);
            out.name.erase(out.name.find_last_not_of(" \t") + 1);
            continue;
        }
        if (key != "f" && key != "g") throw ParseError(lineno, 1, "unknown key '" + key + "'");
        BiPoly p;
        try {
            p = parse_poly(rhs);
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.column + static_cast<int>(eq) + 1, e.message);
        }
        if (key == "f") {
            if (f) throw ParseError(lineno, 1, "duplicate 'f'");
            f = std::move(p);
        } else {
            if (g) throw ParseError(lineno, 1, "duplicate 'g'");
            g = std::move(p);
        }
    }
    if (!f) throw ParseError(lineno, 1, "missing 'f'");
    if (!g) throw ParseError(lineno, 1, "missing 'g'");
    out.map = {std::move(*f), std::move(*g)};
    return out;
}

MapFile load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_map(ss.str());
}

std::string render(const BiPoly& p) {
    std::vector<RenderedTerm> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(render_term(it->second, {{"x", it->first.x}, {"y", it->first.y}}));
    return join_terms(std::move(terms));
}

std::string render(const TagPoly& p) {
    std::vector<RenderedTerm> terms;
    for (const auto& t : p.terms()) {
        std::vector<std::pair<std::string, int>> vars = {{"x", t.mono.x}, {"y", t.mono.y}};
        for (std::size_t k = 0; k < t.mono.u.size(); ++k)
            vars.push_back({"U" + std::to_string(k), t.mono.u[k]});
        terms.push_back(render_term(t.coeff, vars));
    }
    return join_terms(std::move(terms));
}

std::string render(const UniPoly& p, const std::string& var) {
    std::vector<RenderedTerm> terms;
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k).is_zero()) continue;
        terms.push_back(render_term(p.coeff(k), {{var, k}}));
    }
    return join_terms(std::move(terms));
}

std::string render_coeff(const GaussRat& c) {
    return to_string(c);
}

}  // namespace jlab
