#include "coembed/expression.hpp"

#include "coembed/errors.hpp"

#include <cctype>
#include <sstream>

namespace coembed {

namespace {

enum class Tok { number, name, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t offset = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    std::unique_ptr<Expr> parse()
    {
        auto e = expr();
        if (tok_.kind != Tok::end) {
            fail("unexpected '" + tok_.text + "'", tok_.offset);
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t offset) const
    {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, offset, line, column);
    }

    void advance()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) {
            ++pos_;
        }
        tok_ = Token{Tok::end, "end of input", pos_};
        if (pos_ >= src_.size()) {
            return;
        }
        const char c = src_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
                ++pos_;
            }
            // A rational literal p/q when digits follow the slash directly.
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) != 0) {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
                    ++pos_;
                }
            }
            tok_ = Token{Tok::number, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
                ++pos_;
            }
            tok_ = Token{Tok::name, std::string(src_.substr(start, pos_ - start)), start};
            return;
        }
        ++pos_;
        switch (c) {
        case '+':
            tok_ = Token{Tok::plus, "+", start};
            return;
        case '-':
            tok_ = Token{Tok::minus, "-", start};
            return;
        case '*':
            tok_ = Token{Tok::star, "*", start};
            return;
        case '^':
            tok_ = Token{Tok::caret, "^", start};
            return;
        case '(':
            tok_ = Token{Tok::lparen, "(", start};
            return;
        case ')':
            tok_ = Token{Tok::rparen, ")", start};
            return;
        default:
            fail(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::unique_ptr<Expr> expr()
    {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::sum;
        node->offset = tok_.offset;
        node->children.push_back(term());
        node->negated.push_back(false);
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            const bool minus = tok_.kind == Tok::minus;
            advance();
            node->children.push_back(term());
            node->negated.push_back(minus);
        }
        if (node->children.size() == 1) {
            return std::move(node->children.front());
        }
        return node;
    }

    std::unique_ptr<Expr> term()
    {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::product;
        node->offset = tok_.offset;
        node->children.push_back(factor());
        while (tok_.kind == Tok::star) {
            advance();
            node->children.push_back(factor());
        }
        if (node->children.size() == 1) {
            return std::move(node->children.front());
        }
        return node;
    }

    std::unique_ptr<Expr> factor()
    {
        if (tok_.kind == Tok::minus) {
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::negation;
            node->offset = tok_.offset;
            advance();
            node->children.push_back(factor());
            return node;
        }
        auto base = atom();
        if (tok_.kind != Tok::caret) {
            return base;
        }
        const std::size_t at = tok_.offset;
        advance();
        if (tok_.kind != Tok::number || tok_.text.find('/') != std::string::npos) {
            fail("exponent must be a non-negative integer", tok_.offset);
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::power;
        node->offset = at;
        try {
            node->exponent = static_cast<unsigned>(std::stoul(tok_.text));
        } catch (const std::out_of_range&) {
            fail("exponent too large", tok_.offset);
        }
        advance();
        node->children.push_back(std::move(base));
        return node;
    }

    std::unique_ptr<Expr> atom()
    {
        auto node = std::make_unique<Expr>();
        node->offset = tok_.offset;
        switch (tok_.kind) {
        case Tok::number: {
            node->kind = Expr::Kind::number;
            node->value = Rational(tok_.text, 10);
            if (node->value.get_den() == 0) {
                fail("zero denominator", tok_.offset);
            }
            node->value.canonicalize();
            advance();
            return node;
        }
        case Tok::name:
            if (tok_.text == "i") {
                node->kind = Expr::Kind::imaginary;
            } else if (tok_.text == "h") {
                node->kind = Expr::Kind::hbar;
            } else {
                node->kind = Expr::Kind::name;
                node->name = tok_.text;
            }
            advance();
            return node;
        case Tok::lparen: {
            advance();
            node->kind = Expr::Kind::group;
            node->children.push_back(expr());
            if (tok_.kind != Tok::rparen) {
                fail("expected ')'", tok_.offset);
            }
            advance();
            return node;
        }
        default:
            fail(tok_.kind == Tok::end ? "unexpected end of input" : "unexpected '" + tok_.text + "'", tok_.offset);
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_;
};

// Evaluates into series (order 0 for plain polynomials).
class Evaluator {
public:
    Evaluator(AlgebraPtr algebra, std::size_t order, bool formal)
        : algebra_(std::move(algebra)), order_(order), formal_(formal)
    {
    }

    PolySeries eval(const Expr& e) const
    {
        switch (e.kind) {
        case Expr::Kind::number:
            return constant(Scalar(e.value));
        case Expr::Kind::imaginary:
            if (algebra_->field() != ScalarField::gaussian) {
                throw InvalidInput("'i' at offset " + std::to_string(e.offset) + " in algebra '" +
                                   algebra_->name() + "' over Q");
            }
            return constant(Scalar::i());
        case Expr::Kind::hbar: {
            if (!formal_) {
                throw InvalidInput("'h' at offset " + std::to_string(e.offset) + " outside a formal context");
            }
            PolySeries s(order_, Polynomial(algebra_));
            if (order_ >= 1) {
                s[1] = Polynomial::constant(algebra_, Scalar(1));
            }
            return s;
        }
        case Expr::Kind::name: {
            const auto index = algebra_->index_of(e.name);
            if (!index) {
                throw InvalidInput("unknown generator '" + e.name + "' at offset " + std::to_string(e.offset) +
                                   " in algebra '" + algebra_->name() + "'");
            }
            return PolySeries::constant(order_, Polynomial::generator(algebra_, *index), Polynomial(algebra_));
        }
        case Expr::Kind::sum: {
            PolySeries acc(order_, Polynomial(algebra_));
            for (std::size_t k = 0; k < e.children.size(); ++k) {
                const PolySeries term = eval(*e.children[k]);
                for (std::size_t j = 0; j <= order_; ++j) {
                    if (e.negated[k]) {
                        acc[j] -= term[j];
                    } else {
                        acc[j] += term[j];
                    }
                }
            }
            return acc;
        }
        case Expr::Kind::product: {
            PolySeries acc = constant(Scalar(1));
            for (const auto& child : e.children) {
                acc = series_combine(acc, eval(*child), SeriesOp::mul);
            }
            return acc;
        }
        case Expr::Kind::power: {
            const PolySeries base = eval(*e.children.front());
            PolySeries acc = constant(Scalar(1));
            for (unsigned k = 0; k < e.exponent; ++k) {
                acc = series_combine(acc, base, SeriesOp::mul);
            }
            return acc;
        }
        case Expr::Kind::negation: {
            PolySeries s = eval(*e.children.front());
            for (std::size_t j = 0; j <= order_; ++j) {
                s[j] = -s[j];
            }
            return s;
        }
        case Expr::Kind::group:
            return eval(*e.children.front());
        }
        throw InvalidInput("malformed expression");
    }

private:
    PolySeries constant(const Scalar& c) const
    {
        return PolySeries::constant(order_, Polynomial::constant(algebra_, c), Polynomial(algebra_));
    }

    AlgebraPtr algebra_;
    std::size_t order_;
    bool formal_;
};

bool is_negative(const Scalar& c)
{
    if (c.is_real()) {
        return sgn(c.real()) < 0;
    }
    return sgn(c.real()) == 0 && sgn(c.imag()) < 0;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& generators)
{
    std::ostringstream out;
    const auto& w = m.letters();
    bool first = true;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) {
            ++run;
        }
        if (!first) {
            out << '*';
        }
        first = false;
        out << (w[k] < generators.size() ? generators[w[k]] : "x" + std::to_string(w[k]));
        if (run > 1) {
            out << '^' << run;
        }
        k += run;
    }
    return out.str();
}

// Coefficient magnitude (sign already extracted) joined with a monomial.
std::string format_term(const Scalar& magnitude, const Monomial& m, const std::vector<std::string>& generators)
{
    const bool complex = !magnitude.is_real() && sgn(magnitude.real()) != 0;
    const std::string coeff = complex ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
    if (m.is_one()) {
        return coeff;
    }
    const std::string mono = format_monomial(m, generators);
    if (magnitude.is_one()) {
        return mono;
    }
    return coeff + "*" + mono;
}

} // namespace

std::unique_ptr<Expr> parse_ast(std::string_view src) { return Parser(src).parse(); }

Polynomial evaluate(const Expr& e, const AlgebraPtr& algebra) { return Evaluator(algebra, 0, false).eval(e)[0]; }

PolySeries evaluate_series(const Expr& e, const AlgebraPtr& algebra, std::size_t order)
{
    return Evaluator(algebra, order, true).eval(e);
}

Polynomial parse_polynomial(std::string_view src, const AlgebraPtr& algebra)
{
    return evaluate(*parse_ast(src), algebra);
}

PolySeries parse_series(std::string_view src, const AlgebraPtr& algebra, std::size_t order)
{
    return evaluate_series(*parse_ast(src), algebra, order);
}

std::string format_terms(const Terms& terms, const std::vector<std::string>& generators)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = is_negative(c);
        const Scalar magnitude = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += format_term(magnitude, m, generators);
        first = false;
    }
    return out;
}

std::string format_polynomial(const Polynomial& p) { return format_terms(p.terms(), p.algebra()->generators()); }

std::string format_series(const PolySeries& s)
{
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) {
            continue;
        }
        std::string part = format_polynomial(s[k]);
        if (k > 0) {
            const std::string h = k == 1 ? "h" : "h^" + std::to_string(k);
            part = s[k].terms().size() == 1 && s[k].terms().begin()->first.is_one() && part.front() != '-' &&
                           part.front() != '('
                       ? part + "*" + h
                       : h + "*(" + part + ")";
        }
        out += out.empty() ? part : " + " + part;
    }
    return out.empty() ? "0" : out;
}

} // namespace coembed
