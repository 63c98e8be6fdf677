#include "cocyclelab/parse.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace cocyclelab {

namespace {

//--------------------------------------------------------------------------
// Tokens
//--------------------------------------------------------------------------

struct Token {
    enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, DDVar, Equals, End };
    Kind kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    Lexer(std::string_view text, int line, int col0) : text_(text), line_(line), col0_(col0) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            int col = col0_ + static_cast<int>(pos_);
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                out.push_back({Token::Int, std::string(text_.substr(start, pos_ - start)), line_, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                std::string id(text_.substr(start, pos_ - start));
                // `d/d<name>`: a vector-field direction.
                if (id == "d" && pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == 'd') {
                    pos_ += 2;
                    size_t dstart = pos_;
                    while (pos_ < text_.size() &&
                           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                        ++pos_;
                    if (dstart == pos_) throw ParseError("expected variable after d/d", line_, col);
                    out.push_back({Token::DDVar, std::string(text_.substr(dstart, pos_ - dstart)), line_, col});
                    continue;
                }
                out.push_back({Token::Name, std::move(id), line_, col});
                continue;
            }
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Plus; break;
                case '-': kind = Token::Minus; break;
                case '*': kind = Token::Star; break;
                case '/': kind = Token::Slash; break;
                case '^': kind = Token::Caret; break;
                case '(': kind = Token::LParen; break;
                case ')': kind = Token::RParen; break;
                case '=': kind = Token::Equals; break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
            }
            out.push_back({kind, std::string(1, c), line_, col});
            ++pos_;
        }
        out.push_back({Token::End, "", line_, col0_ + static_cast<int>(text_.size())});
        return out;
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    int col0_;
};

class TokenStream {
  public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (t.kind != Token::End) ++pos_;
        return t;
    }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (!accept(k)) throw ParseError("expected " + what, peek().line, peek().col);
    }
    bool at_end() const { return peek().kind == Token::End; }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

//--------------------------------------------------------------------------
// Expression parsing (precedence: ^  >  unary -  >  * /  >  + -)
//--------------------------------------------------------------------------

class ExprParser {
  public:
    ExprParser(TokenStream& ts, const Chart& chart) : ts_(ts), chart_(chart) {}

    Poly expression() {
        Poly acc = term();
        while (true) {
            if (ts_.accept(Token::Plus))
                acc += term();
            else if (ts_.peek().kind == Token::Minus) {
                ts_.next();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            if (ts_.accept(Token::Star)) {
                acc = acc * unary();
            } else if (ts_.peek().kind == Token::Slash) {
                const Token& slash = ts_.next();
                Poly d = unary();
                acc = divide_by_constant(acc, d, slash);
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (ts_.accept(Token::Minus)) return -unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (ts_.peek().kind == Token::Caret) {
            const Token& caret = ts_.next();
            if (ts_.peek().kind != Token::Int)
                throw ParseError("exponent must be an integer literal", caret.line, caret.col);
            const Token& e = ts_.next();
            return pow(base, static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly primary() {
        const Token& t = ts_.peek();
        switch (t.kind) {
            case Token::Int: {
                ts_.next();
                return Poly::constant(chart_, Rational(t.text));
            }
            case Token::Name: {
                ts_.next();
                auto idx = chart_.index_of(t.text);
                if (!idx)
                    throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
                return Poly::variable(chart_, *idx);
            }
            case Token::LParen: {
                ts_.next();
                Poly inner = expression();
                ts_.expect(Token::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected expression", t.line, t.col);
        }
    }

    Poly divide_by_constant(const Poly& num, const Poly& den, const Token& at) {
        if (!den.is_constant() || den.is_zero())
            throw ParseError("division is only defined by nonzero rational constants", at.line, at.col);
        return num * (Rational(1) / den.constant_value());
    }

  private:
    TokenStream& ts_;
    const Chart& chart_;
};

//--------------------------------------------------------------------------
// Vector-field and two-form literals
//--------------------------------------------------------------------------

bool blade_token_at(const TokenStream& ts, const Chart& chart, size_t ahead) {
    const Token& t = ts.peek(ahead);
    return t.kind == Token::Name && t.text.size() > 1 && t.text[0] == 'd' &&
           chart.index_of(t.text.substr(1)).has_value();
}

bool blade_token(const TokenStream& ts, const Chart& chart) { return blade_token_at(ts, chart, 0); }

VectorField parse_field(TokenStream& ts, const Chart& chart) {
    VectorField out(chart);
    ExprParser expr(ts, chart);
    bool first = true;
    while (!ts.at_end()) {
        Rational sign(1);
        if (ts.accept(Token::Minus))
            sign = -1;
        else if (!first)
            ts.expect(Token::Plus, "'+' or '-'");
        first = false;

        Poly coeff = Poly::constant(chart, sign);
        std::optional<size_t> direction;
        const Token* dtok = &ts.peek();
        while (true) {
            const Token& t = ts.peek();
            if (t.kind == Token::DDVar) {
                ts.next();
                if (direction) throw ParseError("multiple d/d factors in one term", t.line, t.col);
                auto idx = chart.index_of(t.text);
                if (!idx || *idx >= chart.dimension())
                    throw ParseError("unknown direction '" + t.text + "'", t.line, t.col);
                direction = idx;
                dtok = &t;
            } else {
                coeff = coeff * expr.power();
            }
            if (ts.accept(Token::Star)) continue;
            if (ts.peek().kind == Token::Slash) {
                const Token& slash = ts.next();
                coeff = expr.divide_by_constant(coeff, expr.power(), slash);
                continue;
            }
            break;
        }
        if (!direction) {
            if (!coeff.is_zero())
                throw ParseError("vector-field term without a d/d direction", dtok->line, dtok->col);
            continue;
        }
        out.set_component(*direction, out.component(*direction) + coeff);
    }
    return out;
}

KForm parse_form(TokenStream& ts, const Chart& chart, int expected_degree) {
    KForm out(chart, expected_degree);
    ExprParser expr(ts, chart);
    bool first = true;
    while (!ts.at_end()) {
        Rational sign(1);
        if (ts.accept(Token::Minus))
            sign = -1;
        else if (!first)
            ts.expect(Token::Plus, "'+' or '-'");
        first = false;

        Poly coeff = Poly::constant(chart, sign);
        std::vector<int> blade;
        const Token* where = &ts.peek();
        while (true) {
            if (blade_token(ts, chart)) {
                const Token& t = ts.next();
                where = &t;
                if (!blade.empty())
                    throw ParseError("multiple wedge blades in one term", t.line, t.col);
                blade.push_back(static_cast<int>(*chart.index_of(t.text.substr(1))));
                while (ts.peek().kind == Token::Caret && blade_token_at(ts, chart, 1)) {
                    ts.next(); // ^
                    const Token& d = ts.next();
                    blade.push_back(static_cast<int>(*chart.index_of(d.text.substr(1))));
                }
            } else {
                coeff = coeff * expr.power();
            }
            if (ts.accept(Token::Star)) continue;
            if (ts.peek().kind == Token::Slash && !blade_token_at(ts, chart, 1)) {
                const Token& slash = ts.next();
                coeff = expr.divide_by_constant(coeff, expr.power(), slash);
                continue;
            }
            break;
        }
        if (blade.empty()) {
            if (!coeff.is_zero())
                throw ParseError("two-form term without a wedge blade", where->line, where->col);
            continue;
        }
        if (static_cast<int>(blade.size()) != expected_degree)
            throw ParseError("expected a degree-" + std::to_string(expected_degree) + " term",
                             where->line, where->col);
        out.add_term(blade, coeff);
    }
    return out;
}

//--------------------------------------------------------------------------
// Problem files
//--------------------------------------------------------------------------

TokenStream lex_rest(const std::string& rest, int line, int col0) {
    return TokenStream(Lexer(rest, line, col0).run());
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

struct PendingBracket {
    size_t i, j;
    std::string rhs;
    int line;
    int col;
};

struct PendingGenerator {
    size_t index;
    std::string rhs;
    int line;
    int col;
};

size_t parse_basis_name(const std::string& word, size_t dim, int line, int col) {
    if (word.size() < 2 || word[0] != 'e')
        throw ParseError("expected basis element e1..e" + std::to_string(dim), line, col);
    for (size_t i = 1; i < word.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(word[i])))
            throw ParseError("expected basis element e1..e" + std::to_string(dim), line, col);
    size_t idx = std::stoul(word.substr(1));
    if (idx < 1 || idx > dim)
        throw ParseError("basis index out of range: " + word, line, col);
    return idx - 1;
}

AlgebraVector parse_algebra_combo(const std::string& text, size_t dim, int line, int col0) {
    TokenStream ts = lex_rest(text, line, col0);
    AlgebraVector out(dim, Rational(0));
    bool first = true;
    while (!ts.at_end()) {
        Rational sign(1);
        if (ts.accept(Token::Minus))
            sign = -1;
        else if (!first)
            ts.expect(Token::Plus, "'+' or '-'");
        first = false;

        Rational coeff = sign;
        std::optional<size_t> basis;
        while (true) {
            const Token& t = ts.peek();
            if (t.kind == Token::Int) {
                ts.next();
                coeff *= Rational(t.text);
            } else if (t.kind == Token::Name) {
                ts.next();
                if (basis) throw ParseError("multiple basis elements in one term", t.line, t.col);
                basis = parse_basis_name(t.text, dim, t.line, t.col);
            } else {
                throw ParseError("expected rational coefficient or basis element", t.line, t.col);
            }
            if (ts.accept(Token::Star)) continue;
            if (ts.accept(Token::Slash)) {
                const Token& d = ts.peek();
                if (d.kind != Token::Int || d.text == "0")
                    throw ParseError("expected nonzero integer denominator", d.line, d.col);
                ts.next();
                coeff /= Rational(d.text);
                continue;
            }
            break;
        }
        if (!basis) {
            if (coeff != 0) throw ParseError("constant term in a bracket value", line, col0);
            continue;
        }
        out[*basis] += coeff;
    }
    return out;
}

} // namespace

Poly parse_polynomial(std::string_view text, const Chart& chart) {
    TokenStream ts = lex_rest(std::string(text), 1, 1);
    ExprParser p(ts, chart);
    Poly out = p.expression();
    if (!ts.at_end())
        throw ParseError("unexpected trailing input", ts.peek().line, ts.peek().col);
    return out;
}

VectorField parse_vector_field(std::string_view text, const Chart& chart) {
    TokenStream ts = lex_rest(std::string(text), 1, 1);
    return parse_field(ts, chart);
}

KForm parse_two_form(std::string_view text, const Chart& chart) {
    TokenStream ts = lex_rest(std::string(text), 1, 1);
    return parse_form(ts, chart, 2);
}

ProblemSpec parse_problem(std::string_view text) {
    ProblemSpec spec;
    std::optional<size_t> algebra_dim;
    std::vector<PendingBracket> brackets;
    std::vector<PendingGenerator> generators;
    std::string l_inv_src, l_delta_src, omega_src, omega_inv_src;
    int l_inv_line = 0, l_delta_line = 0, omega_line = 0, omega_inv_line = 0;
    int l_inv_col = 0, l_delta_col = 0, omega_col = 0, omega_inv_col = 0;
    bool saw_lagrangian = false, saw_direct = false;
    bool saw_anything = false;
    std::vector<std::pair<std::vector<std::string>, int>> options;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t first_ns = line.find_first_not_of(" \t\r");
        if (first_ns == std::string::npos) continue;
        saw_anything = true;

        std::istringstream ls(line);
        std::string directive;
        ls >> directive;
        std::string rest;
        std::getline(ls, rest);
        int rest_col = static_cast<int>(line.find(directive) + directive.size()) + 2;

        if (directive == "vars") {
            spec.base_vars = split_words(rest);
            if (spec.base_vars.empty()) throw ParseError("vars needs at least one name", lineno, rest_col);
        } else if (directive == "params") {
            spec.params = split_words(rest);
        } else if (directive == "lagrangian.invariant") {
            saw_lagrangian = true;
            l_inv_src = rest;
            l_inv_line = lineno;
            l_inv_col = rest_col;
        } else if (directive == "lagrangian.delta") {
            saw_lagrangian = true;
            l_delta_src = rest;
            l_delta_line = lineno;
            l_delta_col = rest_col;
        } else if (directive == "twoform") {
            saw_direct = true;
            omega_src = rest;
            omega_line = lineno;
            omega_col = rest_col;
        } else if (directive == "twoform.invariant") {
            saw_direct = true;
            omega_inv_src = rest;
            omega_inv_line = lineno;
            omega_inv_col = rest_col;
        } else if (directive == "algebra") {
            auto words = split_words(rest);
            if (words.size() != 2 || words[0] != "dim")
                throw ParseError("expected 'algebra dim <n>'", lineno, rest_col);
            algebra_dim = std::stoul(words[1]);
        } else if (directive == "bracket") {
            std::istringstream bs(rest);
            std::string ei, ej, eq;
            bs >> ei >> ej >> eq;
            if (eq != "=") throw ParseError("expected 'bracket e<i> e<j> = <value>'", lineno, rest_col);
            if (!algebra_dim) throw ParseError("bracket before 'algebra dim'", lineno, rest_col);
            std::string rhs;
            std::getline(bs, rhs);
            size_t i = parse_basis_name(ei, *algebra_dim, lineno, rest_col);
            size_t j = parse_basis_name(ej, *algebra_dim, lineno, rest_col);
            brackets.push_back({i, j, rhs, lineno, rest_col});
        } else if (directive == "generator") {
            std::istringstream gs(rest);
            std::string ei, eq;
            gs >> ei >> eq;
            if (eq != "=") throw ParseError("expected 'generator e<i> = <field>'", lineno, rest_col);
            if (!algebra_dim) throw ParseError("generator before 'algebra dim'", lineno, rest_col);
            std::string rhs;
            std::getline(gs, rhs);
            size_t i = parse_basis_name(ei, *algebra_dim, lineno, rest_col);
            generators.push_back({i, rhs, lineno, rest_col});
        } else if (directive == "option") {
            auto words = split_words(rest);
            if (words.empty()) throw ParseError("empty option", lineno, rest_col);
            options.emplace_back(words, lineno);
        } else {
            throw ParseError("unknown directive '" + directive + "'", lineno,
                             static_cast<int>(first_ns) + 1);
        }
    }

    if (!saw_anything) throw ParseError("empty problem file", 1, 1);
    if (spec.base_vars.empty()) throw ParseError("missing 'vars' declaration", 1, 1);
    if (saw_lagrangian && saw_direct)
        throw ParseError("a problem is either Lagrangian or direct, not both", 1, 1);
    if (!saw_lagrangian && !saw_direct)
        throw ParseError("missing 'lagrangian.*' or 'twoform' input", 1, 1);
    if (!algebra_dim || *algebra_dim == 0) throw ParseError("missing 'algebra dim'", 1, 1);

    spec.lagrangian_mode = saw_lagrangian;

    std::vector<Variable> base_vars;
    for (const auto& n : spec.base_vars) base_vars.push_back({n, VarKind::Base});
    for (const auto& n : spec.params) base_vars.push_back({n, VarKind::Param});
    spec.base = Chart(std::move(base_vars));
    spec.phase = spec.lagrangian_mode ? tangent_chart(spec.base) : spec.base;

    if (spec.lagrangian_mode) {
        if (l_inv_src.empty()) throw ParseError("missing 'lagrangian.invariant'", 1, 1);
        {
            TokenStream ts = lex_rest(l_inv_src, l_inv_line, l_inv_col);
            spec.l_invariant = ExprParser(ts, spec.phase).expression();
            if (!ts.at_end()) throw ParseError("unexpected trailing input", ts.peek().line, ts.peek().col);
        }
        spec.l_delta = Poly(spec.phase);
        if (!l_delta_src.empty()) {
            TokenStream ts = lex_rest(l_delta_src, l_delta_line, l_delta_col);
            spec.l_delta = ExprParser(ts, spec.phase).expression();
            if (!ts.at_end()) throw ParseError("unexpected trailing input", ts.peek().line, ts.peek().col);
        }
    } else {
        if (omega_src.empty()) throw ParseError("missing 'twoform'", 1, 1);
        if (omega_inv_src.empty()) throw ParseError("missing 'twoform.invariant'", 1, 1);
        {
            TokenStream ts = lex_rest(omega_src, omega_line, omega_col);
            spec.omega = parse_form(ts, spec.phase, 2);
        }
        {
            TokenStream ts = lex_rest(omega_inv_src, omega_inv_line, omega_inv_col);
            spec.omega_inv = parse_form(ts, spec.phase, 2);
        }
    }

    LieAlgebraBuilder builder(*algebra_dim);
    for (const auto& b : brackets)
        builder.set_bracket(b.i, b.j, parse_algebra_combo(b.rhs, *algebra_dim, b.line, b.col));
    spec.algebra = builder.build(); // BadStructureConstants surfaces from here

    const Chart& gen_chart = spec.lagrangian_mode ? spec.base : spec.phase;
    spec.generators.assign(*algebra_dim, VectorField(gen_chart));
    std::vector<bool> seen(*algebra_dim, false);
    for (const auto& g : generators) {
        TokenStream ts = lex_rest(g.rhs, g.line, g.col);
        spec.generators[g.index] = parse_field(ts, gen_chart);
        seen[g.index] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError("missing generator for e" + std::to_string(i + 1), 1, 1);

    spec.base_point.assign(spec.phase.dimension(), Rational(0));
    for (const auto& [words, line] : options) {
        const std::string& key = words[0];
        auto need = [&](size_t n) {
            if (words.size() != n + 1)
                throw ParseError("option " + key + " expects " + std::to_string(n) + " value(s)", line, 1);
        };
        if (key == "sign_convention") {
            need(1);
            if (words[1] == "paper-A")
                spec.convention = SignConvention::PaperA;
            else if (words[1] == "paper-B")
                spec.convention = SignConvention::PaperB;
            else
                throw ParseError("sign_convention must be paper-A or paper-B", line, 1);
        } else if (key == "base_point") {
            if (words.size() != spec.phase.dimension() + 1)
                throw ParseError("base_point expects " + std::to_string(spec.phase.dimension()) +
                                     " coordinates",
                                 line, 1);
            for (size_t i = 0; i < spec.phase.dimension(); ++i) {
                Rational r(words[i + 1]);
                r.canonicalize();
                spec.base_point[i] = r;
            }
        } else if (key == "degree_bound") {
            need(1);
            spec.degree_bound = std::stoi(words[1]);
        } else if (key == "antihomomorphism") {
            need(1);
            spec.antihomomorphism = (words[1] == "true");
        } else if (key == "seed") {
            need(1);
            spec.plan.seed = std::stoull(words[1]);
        } else if (key == "trials") {
            need(1);
            spec.plan.trials = std::stoi(words[1]);
        } else if (key == "fd_step") {
            need(1);
            spec.plan.fd_step = std::stod(words[1]);
        } else if (key == "fd_tol") {
            need(1);
            spec.plan.fd_tolerance = std::stod(words[1]);
        } else {
            throw ParseError("unknown option '" + key + "'", line, 1);
        }
    }
    return spec;
}

ProblemSpec parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

System ProblemSpec::to_system() const {
    if (lagrangian_mode) {
        ActionMap action(algebra, base, generators, antihomomorphism);
        LagrangianSystem lagr = make_lagrangian_system(base, l_invariant, l_delta, action);
        return decompose(lagr, convention, base_point);
    }
    ActionMap action(algebra, phase, generators, antihomomorphism);
    return make_direct_system(omega, omega_inv, action, convention, base_point);
}

namespace {

std::string render_rational_list(std::span<const Rational> values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << " ";
        os << to_string(values[i]);
    }
    return os.str();
}

std::string render_combo(const AlgebraVector& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        if (first) {
            if (sign(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
            if (sign(c) < 0) c = -c;
        }
        if (c != 1) os << to_string(c) << "*";
        os << "e" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string render_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string ProblemSpec::render() const {
    std::ostringstream os;
    os << "vars";
    for (const auto& n : base_vars) os << " " << n;
    os << "\n";
    if (!params.empty()) {
        os << "params";
        for (const auto& n : params) os << " " << n;
        os << "\n";
    }
    if (lagrangian_mode) {
        os << "lagrangian.invariant " << l_invariant.str() << "\n";
        os << "lagrangian.delta " << l_delta.str() << "\n";
    } else {
        os << "twoform " << omega.str() << "\n";
        os << "twoform.invariant " << omega_inv.str() << "\n";
    }
    os << "algebra dim " << algebra.dimension() << "\n";
    for (size_t i = 0; i < algebra.dimension(); ++i) {
        for (size_t j = i + 1; j < algebra.dimension(); ++j) {
            AlgebraVector br = algebra.basis_bracket(i, j);
            bool nonzero = false;
            for (const Rational& c : br) nonzero = nonzero || c != 0;
            if (nonzero) os << "bracket e" << (i + 1) << " e" << (j + 1) << " = " << render_combo(br) << "\n";
        }
    }
    for (size_t i = 0; i < generators.size(); ++i)
        os << "generator e" << (i + 1) << " = " << generators[i].str() << "\n";
    if (antihomomorphism) os << "option antihomomorphism true\n";
    os << "option sign_convention " << to_string(convention) << "\n";
    os << "option base_point " << render_rational_list(base_point) << "\n";
    if (degree_bound >= 0) os << "option degree_bound " << degree_bound << "\n";
    os << "option seed " << plan.seed << "\n";
    os << "option trials " << plan.trials << "\n";
    os << "option fd_step " << render_double(plan.fd_step) << "\n";
    os << "option fd_tol " << render_double(plan.fd_tolerance) << "\n";
    return os.str();
}

bool ProblemSpec::operator==(const ProblemSpec& o) const {
    return base_vars == o.base_vars && params == o.params && lagrangian_mode == o.lagrangian_mode &&
           base == o.base && phase == o.phase && l_invariant == o.l_invariant &&
           l_delta == o.l_delta && omega == o.omega && omega_inv == o.omega_inv &&
           algebra == o.algebra && generators == o.generators &&
           antihomomorphism == o.antihomomorphism && convention == o.convention &&
           base_point == o.base_point && degree_bound == o.degree_bound && plan == o.plan;
}

} // namespace cocyclelab
