#include "tanalg/expr_io.hpp"

#include <cctype>
#include <sstream>

#include "tanalg/errors.hpp"

namespace tanalg {

namespace {

class Scanner {
public:
    Scanner(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Poly parse_poly_all() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

    VField parse_field_all() {
        skip_ws();
        expect('[');
        std::vector<Poly> coords;
        coords.push_back(parse_expr());
        while (accept(',')) coords.push_back(parse_expr());
        expect(']');
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (static_cast<int>(coords.size()) != ring_->nvars())
            fail("expected " + std::to_string(ring_->nvars()) + " coordinates, got " +
                 std::to_string(coords.size()));
        return VField(ring_, std::move(coords));
    }

private:
    std::string_view text_;
    const RingPtr& ring_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, at, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly parse_expr() {
        bool neg = accept('-');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (accept('^')) {
            std::string digits = read_digits();
            long k = 0;
            try {
                k = std::stol(digits);
            } catch (...) {
                fail("exponent out of range");
            }
            return pow(base, static_cast<int>(k));
        }
        return base;
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (accept('/')) {
                std::string den = read_digits();
                if (Rational::from_string(den).is_zero()) fail("zero denominator");
                return Poly::constant(ring_, Rational::from_string(num + "/" + den));
            }
            return Poly::constant(ring_, Rational::from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) fail_at("unknown variable '" + name + "'", start);
            return Poly::variable(ring_, *idx);
        }
        fail("expected a number, a variable, or '('");
    }
};

std::string mono_str(const RingPtr& ring, const Expo& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    if (!ring) throw RingError("parse_poly needs a ring in scope");
    return Scanner(text, ring).parse_poly_all();
}

VField parse_field(std::string_view text, const RingPtr& ring) {
    if (!ring) throw RingError("parse_field needs a ring in scope");
    return Scanner(text, ring).parse_field_all();
}

std::string render(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        bool negative = t.coeff.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational a = abs(t.coeff);
        std::string mono = mono_str(f.ring(), t.mono);
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

std::string render(const VField& v) {
    std::string out = "[";
    for (int i = 0; i < v.rank(); ++i) {
        if (i) out += ", ";
        out += render(v[i]);
    }
    return out + "]";
}

std::vector<std::string> render_basis(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.basis()) out.push_back(render(g));
    return out;
}

std::vector<std::string> render_basis(const VfModule& M) {
    std::vector<std::string> out;
    for (const auto& g : M.basis()) out.push_back(render(g));
    return out;
}

static std::string join(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    return out;
}

std::string render_joined(const Ideal& I) { return join(render_basis(I)); }
std::string render_joined(const VfModule& M) { return join(render_basis(M)); }

} // namespace tanalg
