#include "koszul/presentation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "koszul/error.hpp"

namespace koszul {

namespace {

class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected an identifier");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::size_t parse_count(LineParser& lp, const char* what) {
    std::size_t col = lp.column();
    std::string t = lp.number();
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError(std::string("bad ") + what, 0, col);
    return v;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    bool have_field = false, have_degree = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        LineParser lp(line, line_no);
        if (lp.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        std::string kw = lp.identifier();
        if (kw == "field") {
            if (have_field) lp.fail("duplicate field line");
            if (!pres.relations.empty()) lp.fail("field must precede the relations");
            std::string name = lp.identifier();
            if (name == "Q") {
                pres.field = Field::rationals();
            } else if (name == "F") {
                std::size_t col = lp.column();
                std::string p = lp.number();
                try {
                    pres.field = Field::prime(static_cast<std::uint32_t>(std::stoul(p)));
                } catch (const std::exception& e) {
                    throw ParseError(e.what(), line_no, col);
                }
            } else {
                lp.fail("unknown field '" + name + "' (expected Q or F p)");
            }
            have_field = true;
        } else if (kw == "generators") {
            if (!pres.generators.empty()) lp.fail("duplicate generators line");
            while (!lp.at_end()) {
                std::size_t col = lp.column();
                std::string g = lp.identifier();
                for (const auto& h : pres.generators)
                    if (h == g) throw ParseError("duplicate generator '" + g + "'", line_no, col);
                pres.generators.push_back(g);
            }
            if (pres.generators.empty()) lp.fail("no generators listed");
        } else if (kw == "degree") {
            if (have_degree) lp.fail("duplicate degree line");
            std::size_t col = lp.column();
            try {
                pres.degree = parse_count(lp, "degree");
            } catch (const ParseError&) {
                throw ParseError("bad degree", line_no, col);
            }
            if (pres.degree < 2) throw ParseError("degree must be at least 2", line_no, col);
            have_degree = true;
        } else if (kw == "rel") {
            if (pres.generators.empty() || !have_degree) lp.fail("rel before generators and degree");
            const std::size_t g = pres.g();
            TensorElement rel(pres.field, g, pres.degree);
            bool first = true;
            while (!lp.at_end()) {
                bool negative = false;
                if (lp.accept('+')) {
                } else if (lp.accept('-')) {
                    negative = true;
                } else if (!first) {
                    lp.fail("expected '+' or '-'");
                }
                first = false;
                Scalar coeff = pres.field.one();
                if (std::isdigit(static_cast<unsigned char>(lp.peek()))) {
                    std::size_t col = lp.column();
                    std::string num = lp.number();
                    try {
                        coeff = pres.field.parse_scalar(num);
                    } catch (const Error& e) {
                        throw ParseError(e.what(), line_no, col);
                    }
                    lp.accept('*');
                }
                if (negative) coeff = -coeff;
                lp.expect('(');
                Word w;
                while (lp.peek() != ')') {
                    if (lp.at_end()) lp.fail("unterminated word");
                    std::size_t col = lp.column();
                    std::string name = lp.identifier();
                    Letter l = 0;
                    while (l < g && pres.generators[l] != name) ++l;
                    if (l == g) throw ParseError("unknown generator '" + name + "'", line_no, col);
                    w.push_back(l);
                }
                if (w.size() != pres.degree)
                    lp.fail("word has length " + std::to_string(w.size()) + ", expected " + std::to_string(pres.degree));
                lp.expect(')');
                rel.coefficients()[WordBasis{g, pres.degree}.index(w)] += coeff;
            }
            if (first) lp.fail("empty relation");
            pres.relations.push_back(std::move(rel));
        } else {
            throw ParseError("unknown keyword '" + kw + "'", line_no, 1);
        }
        if (end == text.size()) break;
    }
    if (pres.generators.empty()) throw ParseError("missing generators line", line_no, 1);
    if (!have_degree) throw ParseError("missing degree line", line_no, 1);
    std::vector<Vector> rows;
    for (const auto& r : pres.relations) rows.push_back(r.coefficients());
    std::size_t rk = rank(Matrix::from_rows(pres.field, word_count(pres.g(), pres.degree), rows));
    if (rk < pres.relations.size())
        pres.warnings.push_back(std::to_string(pres.relations.size() - rk) +
                                " dependent relation(s); the relation space is echelonized");
    validate(pres);
    return pres;
}

void validate(const Presentation& p) {
    if (p.generators.empty()) throw ConfigError("presentation has no generators");
    if (p.degree < 2) throw ConfigError("relation degree must be at least 2");
    std::uint32_t ch = p.field.characteristic();
    if (ch != 0 && p.degree % ch == 0)
        throw ConfigError("characteristic " + std::to_string(ch) + " divides N = " + std::to_string(p.degree));
    for (const auto& r : p.relations)
        if (r.generators() != p.g() || r.weight() != p.degree || !(r.field() == p.field))
            throw ConfigError("relation shape does not match the presentation");
}

std::string Presentation::to_text() const {
    std::ostringstream out;
    out << "field " << (field.is_rational() ? "Q" : "F " + std::to_string(field.characteristic())) << "\n";
    out << "generators";
    for (const auto& g : generators) out << ' ' << g;
    out << "\ndegree " << degree << "\n";
    WordBasis wb{g(), degree};
    for (const auto& r : relations) {
        std::ostringstream line;
        for (std::size_t i = 0; i < r.coefficients().size(); ++i) {
            const Scalar& c = r.coefficients()[i];
            if (c.is_zero()) continue;
            std::string coeff = c.to_string();
            const bool neg = coeff.front() == '-';
            if (neg) coeff.erase(0, 1);
            if (line.tellp() > 0) line << (neg ? " - " : " + ");
            else line << (neg ? " -" : " ");
            line << coeff << "*(";
            Word w = wb.word(i);
            for (std::size_t k = 0; k < w.size(); ++k) line << (k ? " " : "") << generators[w[k]];
            line << ")";
        }
        if (line.tellp() > 0) out << "rel" << line.str() << "\n";
    }
    return out.str();
}

Presentation truncated_polynomial(Field f, std::size_t n) {
    Presentation p;
    p.field = f;
    p.generators = {"x"};
    p.degree = n;
    p.relations.push_back(TensorElement::word(f, 1, Word(n, 0)));
    validate(p);
    return p;
}

Presentation tensor_algebra(Field f, std::size_t g, std::size_t n) {
    Presentation p;
    p.field = f;
    for (std::size_t i = 0; i < g; ++i) p.generators.push_back(g <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i));
    p.degree = n;
    validate(p);
    return p;
}

Presentation full_relations(Field f, std::size_t g, std::size_t n) {
    Presentation p = tensor_algebra(f, g, n);
    WordBasis wb{g, n};
    for (std::size_t i = 0; i < wb.dim(); ++i) p.relations.push_back(TensorElement::word(f, g, wb.word(i)));
    return p;
}

Presentation as_cubic(Field f, const Scalar& a, const Scalar& b, const Scalar& c) {
    Presentation p;
    p.field = f;
    p.generators = {"x", "y"};
    p.degree = 3;
    const Letter x = 0, y = 1;
    auto w = [&](Word word) { return TensorElement::word(f, 2, word); };
    auto scale = [](TensorElement t, const Scalar& s) { return t *= s; };
    TensorElement r1 = scale(w({y, y, x}), a) + scale(w({y, x, y}), b) + scale(w({x, y, y}), a) + scale(w({x, x, x}), c);
    TensorElement r2 = scale(w({x, x, y}), a) + scale(w({x, y, x}), b) + scale(w({y, x, x}), a) + scale(w({y, y, y}), c);
    p.relations = {r1, r2};
    validate(p);
    return p;
}

namespace {

std::vector<std::string> split_params(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.emplace_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::size_t to_count(const std::string& s, std::string_view name) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw ConfigError("bad integer parameter '" + s + "' in '" + std::string(name) + "'");
    return v;
}

}  // namespace

Presentation catalog(std::string_view name, Field f) {
    std::size_t colon = name.find(':');
    if (colon == std::string_view::npos) throw ConfigError("algebra '" + std::string(name) + "' lacks a ':' parameter list");
    std::string_view kind = name.substr(0, colon);
    std::string_view rest = name.substr(colon + 1);
    if (kind == "file") {
        std::ifstream in{std::string(rest)};
        if (!in) throw ConfigError("cannot open presentation file '" + std::string(rest) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_presentation(ss.str());
    }
    auto params = split_params(rest);
    try {
        if (kind == "truncated" && params.size() == 1) {
            std::size_t n = to_count(params[0], name);
            if (n < 2) throw ConfigError("truncated:N needs N >= 2");
            return truncated_polynomial(f, n);
        }
        if ((kind == "tensor" || kind == "full") && params.size() == 2) {
            std::size_t g = to_count(params[0], name), n = to_count(params[1], name);
            if (g < 1 || n < 2) throw ConfigError("need g >= 1 and N >= 2");
            return kind == "tensor" ? tensor_algebra(f, g, n) : full_relations(f, g, n);
        }
        if (kind == "as_cubic" && params.size() == 3)
            return as_cubic(f, f.parse_scalar(params[0]), f.parse_scalar(params[1]), f.parse_scalar(params[2]));
    } catch (const FieldError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown algebra '" + std::string(name) +
                      "' (expected truncated:N, tensor:g,N, full:g,N, as_cubic:a,b,c or file:PATH)");
}

}  // namespace koszul
