#include "cyclic/syntax.hpp"

#include "cyclic/error.hpp"

#include <cctype>
#include <climits>
#include <map>
#include <optional>

namespace cyclic {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'" + found());
        }
    }

    // Letters, then digits too when `alnum` is set.
    std::string word(bool alnum = false) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                       (alnum && pos_ > start && std::isdigit(static_cast<unsigned char>(text_[pos_]))))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect_word(std::string_view w) {
        skip_space();
        const std::size_t start = pos_;
        const std::string got = word();
        if (got != w) {
            pos_ = start;
            fail("expected '" + std::string(w) + "'" + found());
        }
    }

    // Signed decimal integer of arbitrary size.
    Integer big_integer() {
        skip_space();
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') {
                digits += '-';
            }
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        if (pos_ == start) {
            fail("expected an integer" + found());
        }
        return Integer(digits);
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        const Integer v = big_integer();
        if (!v.fits_sint_p()) {
            pos_ = start;
            fail("integer out of range");
        }
        return static_cast<int>(v.get_si());
    }

    Rational rational() {
        Integer num = big_integer();
        Integer den = 1;
        if (accept('/')) {
            skip_space();
            const std::size_t start = pos_;
            den = big_integer();
            if (den <= 0) {
                pos_ = start;
                fail("denominator must be positive");
            }
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    bool starts_rational() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
    }

    void finish() {
        if (!at_end()) {
            fail("unexpected trailing input" + found());
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(line_, static_cast<int>(pos_ - line_start_), message);
    }

private:
    std::string found() {
        skip_space();
        if (pos_ == text_.size()) {
            return ", found end of input";
        }
        return std::string(", found '") + text_[pos_] + "'";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::size_t line_start_ = 0;
};

std::vector<int> int_tuple(Cursor& c) {
    c.expect('(');
    std::vector<int> values{c.integer()};
    while (c.accept(',')) {
        values.push_back(c.integer());
    }
    c.expect(')');
    return values;
}

void keyword_eq(Cursor& c, std::string_view key) {
    c.expect_word(key);
    c.expect('=');
}

ProjPoint point(Cursor& c) {
    if (c.peek() == 'i') {
        c.expect_word("inf");
        return ProjPoint::infinity();
    }
    c.expect('(');
    const Rational a = c.rational();
    c.expect(':');
    const Rational b = c.rational();
    c.expect(')');
    try {
        return ProjPoint::from_coords(a, b);
    } catch (const Error& e) {
        c.fail(e.what());
    }
}

// Parsed literal before it is tied to an ambient degree.
struct Literal {
    std::optional<CoeffForm> coeffs;
    bool zero = false;
    Rational scale;
    Divisor zeros;
};

Literal literal(Cursor& c) {
    Literal out;
    if (c.accept('[')) {
        std::vector<Rational> values{c.rational()};
        while (c.accept(',')) {
            values.push_back(c.rational());
        }
        c.expect(']');
        out.coeffs = CoeffForm(std::move(values));
        return out;
    }
    out.scale = c.rational();
    if (!c.accept('*')) {
        out.zero = (out.scale == 0);
        return out;
    }
    while (c.peek() == '(' || c.peek() == 'i') {
        const ProjPoint p = point(c);
        int m = 1;
        if (c.accept('^')) {
            m = c.integer();
            if (m <= 0) {
                c.fail("multiplicity must be positive");
            }
        }
        out.zeros.add(p, m);
    }
    out.zero = (out.scale == 0);
    return out;
}

Section to_section(Literal lit, int degree) {
    if (lit.coeffs) {
        if (lit.coeffs->degree() != degree) {
            throw Error(ErrorKind::DegreeMismatch, "coefficient list has degree " +
                                                       std::to_string(lit.coeffs->degree()) + ", expected " +
                                                       std::to_string(degree));
        }
        if (lit.coeffs->is_zero()) {
            return Section::zero(degree);
        }
        return from_coeffs(*lit.coeffs);
    }
    if (lit.zero) {
        return Section::zero(degree);
    }
    if (lit.zeros.degree() != degree) {
        throw Error(ErrorKind::DegreeMismatch, "section has " + std::to_string(lit.zeros.degree()) +
                                                   " zeros, expected degree " + std::to_string(degree));
    }
    return Section(lit.scale, std::move(lit.zeros));
}

CoeffForm to_form(const Literal& lit, int degree) {
    if (lit.coeffs) {
        if (lit.coeffs->degree() != degree) {
            throw Error(ErrorKind::DegreeMismatch, "coefficient list has degree " +
                                                       std::to_string(lit.coeffs->degree()) + ", expected " +
                                                       std::to_string(degree));
        }
        return *lit.coeffs;
    }
    if (degree < 0) {
        throw Error(ErrorKind::DegreeMismatch, "no nonzero forms of negative degree " + std::to_string(degree));
    }
    return to_coeffs(to_section(lit, degree));
}

// phiN = literal; ... with N checked against 1..count.
std::map<int, Literal> named_literals(std::string_view text, int count) {
    Cursor c(text);
    std::map<int, Literal> out;
    do {
        if (c.at_end()) {
            break;
        }
        c.expect_word("phi");
        const int index = c.integer();
        if (index < 1 || index > count) {
            throw Error(ErrorKind::SemanticError, "phi" + std::to_string(index) + " is not a map of this quiver (1.." +
                                                      std::to_string(count) + ")");
        }
        c.expect('=');
        if (out.count(index)) {
            throw Error(ErrorKind::SemanticError, "phi" + std::to_string(index) + " given twice");
        }
        out.emplace(index, literal(c));
    } while (c.accept(';'));
    c.finish();
    for (int i = 1; i <= count; ++i) {
        if (!out.count(i)) {
            throw Error(ErrorKind::SemanticError, "phi" + std::to_string(i) + " is missing");
        }
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

}  // namespace

CyclicQuiver QuiverSpec::cyclic() const {
    if (kind != Kind::Cyclic) {
        throw Error(ErrorKind::SemanticError, "expected a cyclic spec");
    }
    return CyclicQuiver(twist, degrees);
}

K1Quiver QuiverSpec::k1() const {
    if (kind != Kind::K1) {
        throw Error(ErrorKind::SemanticError, "expected a k1 spec");
    }
    return K1Quiver(twist, degrees, tail);
}

QuiverSpec parse_spec(std::string_view text) {
    Cursor c(text);
    QuiverSpec spec;
    const std::string kind = c.word(true);
    if (kind == "cyclic") {
        spec.kind = QuiverSpec::Kind::Cyclic;
        keyword_eq(c, "t");
        spec.twist = c.integer();
        keyword_eq(c, "nodes");
        spec.degrees = int_tuple(c);
    } else if (kind == "k1") {
        spec.kind = QuiverSpec::Kind::K1;
        keyword_eq(c, "t");
        spec.twist = c.integer();
        keyword_eq(c, "split");
        spec.degrees = int_tuple(c);
        keyword_eq(c, "tail");
        spec.tail = c.integer();
    } else {
        Cursor start(text);
        start.skip_space();
        start.fail("expected 'cyclic' or 'k1'");
    }
    c.finish();
    try {
        if (spec.kind == QuiverSpec::Kind::Cyclic) {
            (void)spec.cyclic();
        } else {
            (void)spec.k1();
        }
    } catch (const Error& e) {
        throw Error(ErrorKind::SemanticError, e.what());
    }
    return spec;
}

std::string to_string(const QuiverSpec& spec) {
    if (spec.kind == QuiverSpec::Kind::Cyclic) {
        return "cyclic t=" + std::to_string(spec.twist) + " nodes=(" + join(spec.degrees) + ")";
    }
    return "k1 t=" + std::to_string(spec.twist) + " split=(" + join(spec.degrees) + ") tail=" +
           std::to_string(spec.tail);
}

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational r = c.rational();
    c.finish();
    return r;
}

std::vector<int> parse_int_list(std::string_view text) {
    Cursor c(text);
    std::vector<int> values{c.integer()};
    while (c.accept(',')) {
        values.push_back(c.integer());
    }
    c.finish();
    return values;
}

Section parse_section(std::string_view text, int degree) {
    Cursor c(text);
    Literal lit = literal(c);
    c.finish();
    return to_section(std::move(lit), degree);
}

CoeffForm parse_form(std::string_view text, int degree) {
    Cursor c(text);
    Literal lit = literal(c);
    c.finish();
    return to_form(lit, degree);
}

std::string format_section(const Section& s) {
    if (s.is_zero()) {
        return "0";
    }
    return to_string(s.scale()) + "*" + s.zeros().to_string();
}

std::string format_form(const CoeffForm& f) {
    if (f.is_zero()) {
        return "0";
    }
    try {
        return format_section(from_coeffs(f));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IrrationalRoots) {
            throw;
        }
    }
    std::string s = "[";
    for (int j = 0; j <= f.degree(); ++j) {
        s += (j ? "," : "") + to_string(f[j]);
    }
    return s + "]";
}

CyclicRep parse_cyclic_rep(const CyclicQuiver& q, std::string_view text) {
    auto literals = named_literals(text, q.size());
    std::vector<Section> maps;
    for (int i = 0; i < q.size(); ++i) {
        maps.push_back(to_section(std::move(literals.at(i + 1)), q.map_degree(i)));
    }
    return CyclicRep(q, std::move(maps));
}

K1Rep parse_k1_rep(const K1Quiver& q, std::string_view text) {
    auto literals = named_literals(text, 2 * q.rank());
    std::vector<CoeffForm> odd;
    std::vector<CoeffForm> even;
    for (int i = 0; i < q.rank(); ++i) {
        odd.push_back(to_form(literals.at(2 * i + 1), q.odd_degree(i)));
        even.push_back(to_form(literals.at(2 * i + 2), q.even_degree(i)));
    }
    return K1Rep(q, std::move(odd), std::move(even));
}

}  // namespace cyclic
