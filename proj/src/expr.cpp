#include "hx/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace hx {

namespace {

const char* const kFunctions[] = {"sin", "cos", "sinh", "cosh", "exp", "log", "sqrt", "conj"};

bool is_function(const std::string& name) {
    for (const char* f : kFunctions)
        if (name == f) return true;
    return false;
}

struct Token {
    enum class Kind { number, ident, op, lparen, rparen, comma, end };
    Kind kind;
    std::string text;
    double value = 0.0;
    int col = 0;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc{}) throw parse_error("malformed number", col);
            out.push_back({Token::Kind::number, text.substr(i, static_cast<std::size_t>(ptr - (text.data() + i))), v, col});
            i = static_cast<std::size_t>(ptr - text.data());
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Token::Kind::ident, text.substr(i, j - i), 0.0, col});
            i = j;
            continue;
        }
        switch (c) {
            case '+': case '-': case '*': case '/': case '^':
                out.push_back({Token::Kind::op, std::string(1, c), 0.0, col});
                break;
            case '(':
                out.push_back({Token::Kind::lparen, "(", 0.0, col});
                break;
            case ')':
                out.push_back({Token::Kind::rparen, ")", 0.0, col});
                break;
            case ',':
                out.push_back({Token::Kind::comma, ",", 0.0, col});
                break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", col);
        }
        ++i;
    }
    out.push_back({Token::Kind::end, "", 0.0, static_cast<int>(text.size()) + 1});
    return out;
}

ExprPtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Token::Kind::op && (peek().text == "+" || peek().text == "-")) {
            const char op = advance().text[0];
            lhs = binary(op, lhs, parse_term());
        }
        return lhs;
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw parse_error("expected " + what + (peek().kind == Token::Kind::end
                                                        ? " before end of input"
                                                        : ", found '" + peek().text + "'"),
                              peek().col);
        ++pos_;
    }

private:
    static ExprPtr binary(char op, ExprPtr l, ExprPtr r) {
        ExprNode n{ExprNode::Kind::binary};
        n.op = op;
        n.args = {std::move(l), std::move(r)};
        return make_node(std::move(n));
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == Token::Kind::op && (peek().text == "*" || peek().text == "/")) {
            const char op = advance().text[0];
            lhs = binary(op, lhs, parse_unary());
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::op && peek().text == "-") {
            const Token& t = advance();
            (void)t;
            ExprNode n{ExprNode::Kind::unary_neg};
            n.args = {parse_unary()};
            return make_node(std::move(n));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (peek().kind == Token::Kind::op && peek().text == "^") {
            advance();
            return binary('^', base, parse_unary());  // right-associative
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::number: {
                advance();
                ExprNode n{ExprNode::Kind::number};
                n.number = t.value;
                return make_node(std::move(n));
            }
            case Token::Kind::ident: {
                advance();
                if (t.text == "x") return make_node({ExprNode::Kind::var_x});
                if (t.text == "y") return make_node({ExprNode::Kind::var_y});
                if (t.text == "z") return make_node({ExprNode::Kind::var_z});
                if (t.text == "iota") return make_node({ExprNode::Kind::iota});
                if (t.text == "pi") {
                    ExprNode n{ExprNode::Kind::number};
                    n.number = M_PI;
                    return make_node(std::move(n));
                }
                if (is_function(t.text)) {
                    expect(Token::Kind::lparen, "'(' after function name");
                    ExprPtr arg = parse_expr();
                    expect(Token::Kind::rparen, "')'");
                    ExprNode n{ExprNode::Kind::call};
                    n.callee = t.text;
                    n.args = {std::move(arg)};
                    return make_node(std::move(n));
                }
                throw parse_error("unknown identifier '" + t.text + "'", t.col);
            }
            case Token::Kind::lparen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Token::Kind::rparen, "')'");
                return e;
            }
            default:
                throw parse_error(t.kind == Token::Kind::end
                                      ? "unexpected end of input"
                                      : "unexpected '" + t.text + "'",
                                  t.col);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::complex<double> eval_node(const ExprNode& n, double x, double y) {
    using C = std::complex<double>;
    switch (n.kind) {
        case ExprNode::Kind::number: return C(n.number, 0.0);
        case ExprNode::Kind::var_x: return C(x, 0.0);
        case ExprNode::Kind::var_y: return C(y, 0.0);
        case ExprNode::Kind::var_z: return C(x, y);
        case ExprNode::Kind::iota: return C(0.0, 1.0);
        case ExprNode::Kind::unary_neg: return -eval_node(*n.args[0], x, y);
        case ExprNode::Kind::binary: {
            const C a = eval_node(*n.args[0], x, y);
            const C b = eval_node(*n.args[1], x, y);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': {
                    // Integer exponents stay exact (and intrinsic).
                    if (b.imag() == 0.0 && b.real() == std::floor(b.real()) &&
                        std::abs(b.real()) < 64.0) {
                        C r(1.0, 0.0);
                        const int k = static_cast<int>(std::abs(b.real()));
                        for (int i = 0; i < k; ++i) r *= a;
                        return b.real() < 0.0 ? C(1.0, 0.0) / r : r;
                    }
                    return std::pow(a, b);
                }
            }
            return {};
        }
        case ExprNode::Kind::call: {
            const C a = eval_node(*n.args[0], x, y);
            if (n.callee == "sin") return std::sin(a);
            if (n.callee == "cos") return std::cos(a);
            if (n.callee == "sinh") return std::sinh(a);
            if (n.callee == "cosh") return std::cosh(a);
            if (n.callee == "exp") return std::exp(a);
            if (n.callee == "log") return std::log(a);
            if (n.callee == "sqrt") return std::sqrt(a);
            if (n.callee == "conj") return std::conj(a);
            return {};
        }
    }
    return {};
}

int precedence(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::binary:
            return n.op == '+' || n.op == '-' ? 1 : (n.op == '^' ? 4 : 2);
        case ExprNode::Kind::unary_neg: return 3;
        default: return 5;
    }
}

std::string print_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void print_node(const ExprNode& n, int min_prec, std::string& out) {
    const int prec = precedence(n);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case ExprNode::Kind::number: out += print_number(n.number); break;
        case ExprNode::Kind::var_x: out += 'x'; break;
        case ExprNode::Kind::var_y: out += 'y'; break;
        case ExprNode::Kind::var_z: out += 'z'; break;
        case ExprNode::Kind::iota: out += "iota"; break;
        case ExprNode::Kind::unary_neg:
            out += '-';
            print_node(*n.args[0], 3, out);
            break;
        case ExprNode::Kind::binary: {
            const bool right_assoc = n.op == '^';
            print_node(*n.args[0], right_assoc ? prec + 1 : prec, out);
            if (n.op == '^')
                out += '^';
            else {
                out += ' ';
                out += n.op;
                out += ' ';
            }
            print_node(*n.args[1], right_assoc ? prec : prec + 1, out);
            break;
        }
        case ExprNode::Kind::call:
            out += n.callee;
            out += '(';
            print_node(*n.args[0], 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

bool node_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.op != b.op || a.callee != b.callee ||
        a.number != b.number || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!node_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

} // namespace

std::complex<double> StemExpr::eval_component(int i, double x, double y) const {
    return eval_node(*components[static_cast<std::size_t>(i)], x, y);
}

std::string StemExpr::print() const {
    std::string out;
    if (arity() > 1) out += '(';
    for (int i = 0; i < arity(); ++i) {
        if (i) out += ", ";
        print_node(*components[static_cast<std::size_t>(i)], 0, out);
    }
    if (arity() > 1) out += ')';
    return out;
}

StemFunction StemExpr::to_stem(int algebra_dim) const {
    StemFunction F;
    F.algebra_dim = algebra_dim;
    F.real_valued = true;
    F.arity = arity();
    F.domain = SymmetricDomain::plane();
    const StemExpr self = *this;
    F.f1 = [self, algebra_dim](double x, double y) {
        StemValue v;
        for (int i = 0; i < self.arity(); ++i)
            v.push_back(HyperNum::real(self.eval_component(i, x, y).real(), algebra_dim));
        return v;
    };
    F.f2 = [self, algebra_dim](double x, double y) {
        StemValue v;
        for (int i = 0; i < self.arity(); ++i)
            v.push_back(HyperNum::real(self.eval_component(i, x, y).imag(), algebra_dim));
        return v;
    };
    return F;
}

StemExpr parse_stem_expr(const std::string& text) {
    std::vector<Token> toks = lex(text);

    // Tuple form: '(' expr (',' expr)+ ')'. A top-level comma commits
    // to it; otherwise reparse the whole input as a single expression.
    if (!toks.empty() && toks[0].kind == Token::Kind::lparen) {
        Parser p(toks);
        p.advance();  // '('
        try {
            StemExpr tuple;
            tuple.components.push_back(p.parse_expr());
            if (p.peek().kind == Token::Kind::comma) {
                while (p.peek().kind == Token::Kind::comma) {
                    p.advance();
                    tuple.components.push_back(p.parse_expr());
                }
                p.expect(Token::Kind::rparen, "')'");
                p.expect(Token::Kind::end, "end of input");
                return tuple;
            }
        } catch (const parse_error&) {
            // A malformed prefix still decides the form: commas seen so
            // far mean tuple, so surface the error.
            if (text.find(',') != std::string::npos) throw;
        }
    }

    Parser p(std::move(toks));
    StemExpr single;
    single.components.push_back(p.parse_expr());
    p.expect(Token::Kind::end, "end of input");
    return single;
}

bool structurally_equal(const StemExpr& a, const StemExpr& b) {
    if (a.arity() != b.arity()) return false;
    for (int i = 0; i < a.arity(); ++i)
        if (!node_equal(*a.components[static_cast<std::size_t>(i)],
                        *b.components[static_cast<std::size_t>(i)]))
            return false;
    return true;
}

} // namespace hx
