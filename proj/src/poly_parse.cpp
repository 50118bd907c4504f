#include "hcw/poly_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace hcw {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("parse_poly: unexpected end of input");
        return s[pos++];
    }
    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("parse_poly: expected digits");
        return s.substr(start, pos - start);
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarList& vars) {
    Cursor c{text};
    MultiPoly out = MultiPoly::zero(vars);

    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            c.take();
            sign = (p == '-') ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff(sign);
        Expo expo(vars.size(), 0);
        bool expect_factor = true;
        bool saw_factor = false;
        while (expect_factor) {
            char f = c.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::string num = c.digits();
                std::string den = "1";
                if (c.peek() == '/') {
                    c.take();
                    den = c.digits();
                }
                coeff = coeff * Rational(mpz_class(num), mpz_class(den));
                saw_factor = true;
            } else if (f == 'u' || f == 'x') {
                c.take();
                VarFamily fam = (f == 'u') ? VarFamily::u : VarFamily::x;
                int index = std::stoi(c.digits());
                int exp = 1;
                if (c.peek() == '^') {
                    c.take();
                    exp = std::stoi(c.digits());
                }
                VarId v{fam, static_cast<uint8_t>(index)};
                int pos = -1;
                for (size_t i = 0; i < vars.size(); ++i)
                    if (vars[i] == v) pos = static_cast<int>(i);
                if (pos < 0)
                    throw std::invalid_argument("parse_poly: variable " + v.name() +
                                                " not in the target list");
                expo[pos] = static_cast<uint8_t>(expo[pos] + exp);
                saw_factor = true;
            } else {
                throw std::invalid_argument("parse_poly: unexpected character in term");
            }
            if (c.peek() == '*') {
                c.take();
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw std::invalid_argument("parse_poly: empty term");
        out.add_term(expo, coeff);
    }
    return out;
}

}  // namespace hcw
