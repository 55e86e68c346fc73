#include "m06/expr.hpp"

#include <cctype>
#include <optional>

namespace m06 {

ExpressionError::ExpressionError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

// Either a scalar or a divisor class.
struct Value {
    std::optional<Rational> scalar;
    std::optional<SymmetricDivisor> divisor;
};

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    SymmetricDivisor parse()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ExpressionError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        if (v.scalar) {
            if (*v.scalar == 0)
                return SymmetricDivisor(n_);
            throw ExpressionError("expression is a scalar, not a divisor", 0);
        }
        return *v.divisor;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_primary_start()
    {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Value expr()
    {
        Value acc = term();
        while (peek('+') || peek('-')) {
            const std::size_t at = pos_;
            const bool minus = text_[pos_] == '-';
            ++pos_;
            Value rhs = term();
            acc = add(std::move(acc), std::move(rhs), minus, at);
        }
        return acc;
    }

    Value add(Value a, Value b, bool minus, std::size_t at)
    {
        if (a.scalar && b.scalar)
            return Value{minus ? Rational(*a.scalar - *b.scalar) : Rational(*a.scalar + *b.scalar), {}};
        if (a.divisor && b.divisor)
            return Value{{}, minus ? *a.divisor - *b.divisor : *a.divisor + *b.divisor};
        throw ExpressionError("cannot add a scalar and a divisor", at);
    }

    Value term()
    {
        Value acc = unary();
        while (true) {
            std::size_t at = pos_;
            if (peek('*')) {
                at = pos_;
                ++pos_;
            } else if (!at_primary_start()) {
                break;
            }
            Value rhs = unary();
            acc = multiply(std::move(acc), std::move(rhs), at);
        }
        return acc;
    }

    Value multiply(Value a, Value b, std::size_t at)
    {
        if (a.scalar && b.scalar)
            return Value{Rational(*a.scalar * *b.scalar), {}};
        if (a.scalar)
            return Value{{}, *a.scalar * *b.divisor};
        if (b.scalar)
            return Value{{}, *b.scalar * *a.divisor};
        throw ExpressionError("product of two divisor classes is not a divisor class", at);
    }

    Value unary()
    {
        bool negate = false;
        while (peek('-') || peek('+')) {
            negate ^= text_[pos_] == '-';
            ++pos_;
        }
        Value v = primary();
        if (negate) {
            if (v.scalar)
                *v.scalar = -*v.scalar;
            else
                *v.divisor = -*v.divisor;
        }
        return v;
    }

    Value primary()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ExpressionError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!peek(')'))
                throw ExpressionError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Value{number(), {}};
        if (std::isalpha(static_cast<unsigned char>(c)))
            return Value{{}, symbol()};
        throw ExpressionError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational number()
    {
        const std::size_t start = pos_;
        std::string num = digits();
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            den = digits();
            if (den.empty())
                throw ExpressionError("expected denominator", pos_);
        }
        if (Integer(den) == 0)
            throw ExpressionError("zero denominator", start);
        Rational r{Integer(num), Integer(den)};
        r.canonicalize();
        return r;
    }

    SymmetricDivisor symbol()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "K")
            return canonical_divisor(n_);
        if (name == "psi")
            return psi_divisor(n_);
        if (name == "DA") {
            if (n_ != 6)
                throw ExpressionError("DA is only defined for n = 6", start);
            return canonical_polarization_DA();
        }
        if (name.size() > 1 && name[0] == 'B') {
            const std::string_view idx = name.substr(1);
            bool ok = !idx.empty() && idx.size() < 4;
            for (char ch : idx)
                ok = ok && std::isdigit(static_cast<unsigned char>(ch));
            if (ok) {
                const int i = std::stoi(std::string(idx));
                if (i < 2 || i > n_ - 2)
                    throw ExpressionError("boundary index out of range 2.." + std::to_string(n_ - 2), start);
                return SymmetricDivisor::boundary(n_, i);
            }
        }
        throw ExpressionError("unknown symbol '" + std::string(name) + "'", start);
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

} // namespace

SymmetricDivisor parse_divisor_expression(std::string_view text, int n)
{
    if (n < 4)
        throw std::invalid_argument("n must be at least 4");
    return Parser(text, n).parse();
}

} // namespace m06
