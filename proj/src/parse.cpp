#include "dend/parse.hpp"

#include <cctype>

#include "dend/errors.hpp"

namespace dend {
namespace {

struct parser {
    std::string_view text;
    var_table_ptr table;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_space();
        return pos == text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw syntax_error(std::string("expected ") + what, pos);
    }

    mpz_class natural() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw syntax_error("expected a number", pos);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    std::uint32_t exponent() {
        skip_space();
        std::size_t at = pos;
        if (peek() == '-') throw negative_exponent_error(at);
        mpz_class n = natural();
        if (n > monomial::max_exponent) throw exponent_limit_error();
        return static_cast<std::uint32_t>(n.get_ui());
    }

    polynomial base() {
        skip_space();
        std::size_t at = pos;
        char c = peek();
        if (c == '(') {
            ++pos;
            polynomial inner = expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = natural();
            mpz_class den = 1;
            if (accept('/')) {
                std::size_t den_at = pos;
                den = natural();
                if (den == 0) throw syntax_error("zero denominator", den_at);
            }
            return polynomial::constant(table, rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size()) {
                char d = text[pos];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
                    ++pos;
                else
                    break;
            }
            std::string name(text.substr(start, pos - start));
            auto idx = table->find(name);
            if (!idx) throw unknown_variable_error(name);
            return polynomial::variable(table, *idx);
        }
        throw syntax_error("expected a number, variable or '('", at);
    }

    polynomial factor() {
        polynomial b = base();
        if (accept('^')) return b.pow(exponent());
        return b;
    }

    polynomial term() {
        polynomial t = factor();
        while (accept('*')) t *= factor();
        return t;
    }

    polynomial expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos;
            negate = (c == '-');
        }
        polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            char op = peek();
            if (op == '+' || op == '-') {
                ++pos;
                polynomial t = term();
                if (op == '-')
                    acc -= t;
                else
                    acc += t;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

polynomial parse_polynomial(std::string_view text, const var_table_ptr& table) {
    parser p{text, table};
    polynomial result = p.expr();
    if (!p.at_end()) throw syntax_error("unexpected trailing input", p.pos);
    return result;
}

}  // namespace dend
