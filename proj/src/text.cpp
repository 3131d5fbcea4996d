/*
   Copyright 2026 The gadyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gadyn/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

#include "gadyn/skew.hpp"

namespace gadyn::text {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::Parse, what); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::uint64_t> parse_digit_list(std::string_view s) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(s)) out.push_back(parse_uint(item));
    return out;
}

Elem element_from_digits(Field f, const std::vector<std::uint64_t>& d, std::string_view src) {
    if (d.size() > f->degree())
        parse_fail("element literal " + std::string(src) + " has more than " + std::to_string(f->degree()) +
                   " digits");
    std::vector<std::uint64_t> digits(f->degree(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) digits[i] = d[i] % f->p();
    return f->from_digits(digits);
}

struct Token {
    enum Kind { Number, Literal, Ident, Op, End } kind = End;
    std::string text;
    std::uint64_t value = 0;
    Elem elem = 0;
};

std::vector<Token> tokenize(Field f, std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t{Token::Number, std::string(s.substr(i, j - i))};
            t.value = parse_uint(t.text);
            out.push_back(t);
            i = j;
        } else if (c == '[') {
            const std::size_t j = s.find(']', i);
            if (j == std::string_view::npos) parse_fail("unterminated element literal");
            Token t{Token::Literal, std::string(s.substr(i, j - i + 1))};
            t.elem = element_from_digits(f, parse_digit_list(t.text), t.text);
            out.push_back(t);
            i = j + 1;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Ident, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, c)});
            ++i;
        } else {
            parse_fail(std::string("unexpected character '") + c + "' in " + std::string(s));
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

template <class R>
R power(const R& x, std::uint64_t e, const R& one) {
    R r = one, b = x;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/// Recursive descent over a ring supplied by the Traits type.
template <class Traits>
class ExprParser {
   public:
    using R = typename Traits::Value;

    ExprParser(Field f, std::string_view src) : f_(f), src_(src), toks_(tokenize(f, src)) {}

    R parse() {
        if (toks_.front().kind == Token::End) parse_fail("empty expression");
        R v = expr();
        if (peek().kind != Token::End) parse_fail("trailing input '" + peek().text + "' in " + std::string(src_));
        return v;
    }

   private:
    const Token& peek() const { return toks_[i_]; }
    bool accept(const char* op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++i_;
            return true;
        }
        return false;
    }

    R expr() {
        R v = term();
        while (true) {
            if (accept("+")) v = v + term();
            else if (accept("-")) v = v - term();
            else return v;
        }
    }

    R term() {
        R v = unary();
        while (true) {
            if (accept("*")) {
                v = v * unary();
            } else if (peek().kind == Token::Op && peek().text == "/") {
                if (!Traits::has_division) parse_fail("division is not allowed in " + std::string(src_));
                ++i_;
                R d = unary();
                if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in " + std::string(src_));
                v = Traits::divide(v, d);
            } else {
                return v;
            }
        }
    }

    R unary() {
        if (accept("-")) return Traits::constant(f_, 0) - unary();
        return pow_expr();
    }

    R pow_expr() {
        R base = atom();
        if (accept("^")) {
            if (peek().kind != Token::Number) parse_fail("exponent must be a non-negative integer");
            const std::uint64_t e = toks_[i_++].value;
            base = power(base, e, Traits::constant(f_, 1));
        }
        return base;
    }

    R atom() {
        const Token t = toks_[i_++];
        switch (t.kind) {
            case Token::Number:
                return Traits::constant(f_, f_->from_int(static_cast<std::int64_t>(t.value % f_->p())));
            case Token::Literal:
                return Traits::constant(f_, t.elem);
            case Token::Ident:
                return Traits::ident(f_, t.text);
            case Token::Op:
                if (t.text == "(") {
                    R v = expr();
                    if (!accept(")")) parse_fail("missing ')' in " + std::string(src_));
                    return v;
                }
                break;
            case Token::End:
                break;
        }
        parse_fail("unexpected '" + t.text + "' in " + std::string(src_));
    }

    Field f_;
    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

struct OreTraits {
    using Value = OrePoly;
    static constexpr bool has_division = false;
    static OrePoly constant(Field f, Elem c) { return OrePoly::constant(f, c); }
    static OrePoly divide(const OrePoly& a, const OrePoly&) { return a; }
    static OrePoly ident(Field f, const std::string& name) {
        if (name == "F") return OrePoly::frobenius(f);
        parse_fail("unknown symbol '" + name + "' (expected F)");
    }
};

struct MRatTraits {
    using Value = MRatFun;
    static constexpr bool has_division = true;
    static MRatFun constant(Field f, Elem c) { return MRatFun::constant(f, c); }
    static MRatFun divide(const MRatFun& a, const MRatFun& b) { return a / b; }
    static MRatFun ident(Field f, const std::string& name) {
        if (name == "t") return MRatFun::var(f, 0);
        if (name.size() == 2 && name[0] == 't' && name[1] >= '1' && name[1] <= '0' + static_cast<int>(kMaxVars))
            return MRatFun::var(f, static_cast<std::size_t>(name[1] - '1'));
        parse_fail("unknown symbol '" + name + "' (expected t or t1..t6)");
    }
};

unsigned parse_unsigned(std::string_view s) {
    const std::uint64_t v = parse_uint(s);
    if (v > 0xffffffffu) parse_fail("value out of range: " + std::string(s));
    return static_cast<unsigned>(v);
}

/// Items separated by ';' at bracket depth zero.
std::vector<std::string> split_semicolons(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ';' && depth == 0)) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        } else if (s[i] == '[' || s[i] == '(') {
            ++depth;
        } else if (s[i] == ']' || s[i] == ')') {
            --depth;
        }
    }
    return out;
}

std::vector<Point> parse_points(Field f, std::string_view s) {
    std::vector<Point> out;
    for (const auto& item : split_list(s)) out.push_back(parse_point(f, item));
    return out;
}

std::string format_points(const std::vector<Point>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_point(xs[i]);
    return s + "]";
}

std::string format_uints(const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

/// Numbered keys `prefix1`, `prefix2`, ... must be consecutive.
std::optional<std::size_t> numbered_key(const std::string& key, const std::string& prefix) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    const std::string rest = key.substr(prefix.size());
    for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (rest[0] == '0') return std::nullopt;
    return static_cast<std::size_t>(parse_uint(rest));
}

void check_consecutive(const std::vector<std::size_t>& idx, const std::string& prefix) {
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != i + 1) parse_fail("keys " + prefix + "1, " + prefix + "2, ... must be consecutive and in order");
}

LambdaEqInstance parse_lambda(Field f, std::string_view s) {
    const auto parts = split_semicolons(s);
    if (parts.size() != 2) parse_fail("lambda instance must read '<lambda> ; [c0, c1, ...]'");
    LambdaEqInstance inst;
    inst.lambda = parse_mratfun(f, parts[0]);
    for (const auto& item : split_list(parts[1])) inst.c.push_back(parse_element(f, item));
    if (inst.c.empty()) parse_fail("lambda instance needs c0");
    for (std::size_t i = 1; i < inst.c.size(); ++i)
        if (inst.c[i] == 0) parse_fail("lambda instance coefficients c1, c2, ... must be nonzero");
    return inst;
}

std::string format_lambda(Field f, const LambdaEqInstance& inst) {
    return inst.lambda.to_string() + " ; " + format_elements(f, inst.c);
}

FSetDescriptor parse_fset(Field f, std::size_t N, std::string_view s) {
    const auto parts = split_semicolons(s);
    if (parts.size() != 4 && parts.size() != 5)
        parse_fail("fset must read '<gamma0> ; [<gamma1>, ...] ; [k1, ...] ; [<h1>, ...] [; <divisor>]'");
    FSetDescriptor d;
    d.gamma0 = parse_point(f, parts[0]);
    d.gammas = parse_points(f, parts[1]);
    for (const auto& k : split_list(parts[2])) d.ks.push_back(parse_uint(k));
    d.H.generators = parse_points(f, parts[3]);
    if (parts.size() == 5) d.divisor = parse_cpoly(f->prime_field(), parts[4]);
    if (d.ks.size() != d.gammas.size()) parse_fail("fset needs one k per gamma");
    for (auto k : d.ks)
        if (k == 0) parse_fail("fset k values must be positive");
    auto check = [&](const Point& x) {
        if (x.size() != N) parse_fail("fset point has " + std::to_string(x.size()) + " coordinates, expected " +
                                      std::to_string(N));
    };
    check(d.gamma0);
    for (const auto& g : d.gammas) check(g);
    for (const auto& h : d.H.generators) check(h);
    return d;
}

std::string format_fset(const FSetDescriptor& d) {
    std::string s = format_point(d.gamma0) + " ; " + format_points(d.gammas) + " ; " + format_uints(d.ks) + " ; " +
                    format_points(d.H.generators);
    if (d.divisor) s += " ; " + d.divisor->to_list();
    return s;
}

}  // namespace

std::uint64_t parse_uint(std::string_view s) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        parse_fail("expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split_list(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        parse_fail("expected a bracketed list, got '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    if (trim(s).empty()) return out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            const auto item = trim(s.substr(start, i - start));
            if (item.empty()) parse_fail("empty list item");
            out.emplace_back(item);
            start = i + 1;
        } else if (s[i] == '[' || s[i] == '(') {
            ++depth;
        } else if (s[i] == ']' || s[i] == ')') {
            if (--depth < 0) parse_fail("unbalanced brackets");
        }
    }
    if (depth != 0) parse_fail("unbalanced brackets");
    return out;
}

Elem parse_element(Field f, std::string_view s) {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s = trim(s.substr(1));
    }
    Elem e;
    if (!s.empty() && s.front() == '[') e = element_from_digits(f, parse_digit_list(s), s);
    else e = f->from_int(static_cast<std::int64_t>(parse_uint(s) % f->p()));
    return neg ? f->neg(e) : e;
}

OrePoly parse_ore(Field f, std::string_view s) { return ExprParser<OreTraits>(f, s).parse(); }

MRatFun parse_mratfun(Field f, std::string_view s) { return ExprParser<MRatTraits>(f, s).parse(); }

CPoly parse_cpoly(Field fp, std::string_view s) {
    std::vector<Elem> c;
    for (const auto& item : split_list(s)) c.push_back(parse_element(fp, item));
    return CPoly(fp, std::move(c));
}

Point parse_point(Field f, std::string_view s) {
    Point x;
    for (const auto& item : split_list(s)) x.push_back(parse_mratfun(f, item));
    return x;
}

std::string format_point(const Point& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
    return s + "]";
}

std::string format_elements(Field f, const std::vector<Elem>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f->to_string(v[i]);
    return s + "]";
}

OreMatrix parse_ore_rows(Field f, const std::vector<std::string>& rows, std::size_t cols) {
    OreMatrix A = ore_zero(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto items = split_list(rows[i]);
        if (items.size() != cols)
            parse_fail("row " + std::to_string(i + 1) + " has " + std::to_string(items.size()) + " entries, expected " +
                       std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) A(i, j) = parse_ore(f, items[j]);
    }
    return A;
}

std::vector<std::string> format_ore_rows(const OreMatrix& A) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::string s = "[";
        for (std::size_t j = 0; j < A.cols(); ++j) s += (j ? ", " : "") + A(i, j).to_string();
        out.push_back(s + "]");
    }
    return out;
}

const std::string* Section::find(std::string_view key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

const std::string& Section::at(std::string_view key) const {
    const std::string* v = find(key);
    if (!v) parse_fail("section [" + name + "] is missing key '" + std::string(key) + "'");
    return *v;
}

std::vector<Section> parse_sections(std::string_view text) {
    std::vector<Section> out;
    std::set<std::string> names;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') parse_fail(where + "malformed section header");
            Section s;
            s.name = std::string(trim(line.substr(1, line.size() - 2)));
            s.line = lineno;
            if (!names.insert(s.name).second) parse_fail(where + "duplicate section [" + s.name + "]");
            out.push_back(std::move(s));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) parse_fail(where + "expected 'key = value'");
        if (out.empty()) parse_fail(where + "entry outside of any section");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) parse_fail(where + "empty key");
        if (out.back().find(key)) parse_fail(where + "duplicate key '" + key + "'");
        out.back().entries.emplace_back(key, value);
    }
    return out;
}

Problem parse_problem(std::string_view text) {
    const auto sections = parse_sections(text);
    const Section *field = nullptr, *map = nullptr, *question = nullptr;
    for (const auto& s : sections) {
        if (s.name == "field") field = &s;
        else if (s.name == "map") map = &s;
        else if (s.name == "question") question = &s;
        else parse_fail("unknown section [" + s.name + "]");
    }
    if (!field || !map) parse_fail("a problem needs [field] and [map] sections");

    Problem P;
    for (const auto& [k, v] : field->entries)
        if (k != "p" && k != "ell" && k != "modulus") parse_fail("unknown key '" + k + "' in [field]");
    const std::uint64_t p = parse_uint(field->at("p"));
    const unsigned ell = parse_unsigned(field->at("ell"));
    if (ell == 0) parse_fail("ell must be at least 1");
    if (const std::string* mod = field->find("modulus")) {
        const auto m = parse_digit_list(*mod);
        if (m.size() != ell + 1) parse_fail("modulus must have degree ell");
        P.field = GF::get(p, m);
    } else {
        P.field = GF::standard(p, ell);
    }

    const std::size_t N = parse_uint(map->at("N"));
    if (N == 0) parse_fail("N must be at least 1");
    std::vector<std::string> rows;
    for (const auto& [k, v] : map->entries) {
        if (k == "N") continue;
        const auto idx = numbered_key(k, "row");
        if (!idx) parse_fail("unknown key '" + k + "' in [map]");
        if (*idx != rows.size() + 1) parse_fail("rows must be listed as row1, row2, ... in order");
        rows.push_back(v);
    }
    if (rows.size() != N) parse_fail("[map] has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(N));
    P.A = parse_ore_rows(P.field, rows, N);

    if (question) {
        std::vector<std::size_t> lam_idx, fset_idx;
        for (const auto& [k, v] : question->entries) {
            if (k == "d") {
                P.d = parse_unsigned(v);
                if (P.d == 0) parse_fail("d must be at least 1");
            } else if (k == "density_M") {
                P.density_M = parse_uint(v);
            } else if (k == "density_D") {
                P.density_D = parse_unsigned(v);
            } else if (auto li = numbered_key(k, "lambda")) {
                lam_idx.push_back(*li);
                P.lambdas.push_back(parse_lambda(P.field, v));
            } else if (auto fi = numbered_key(k, "fset")) {
                fset_idx.push_back(*fi);
                P.fsets.push_back(parse_fset(P.field, N, v));
            } else {
                parse_fail("unknown key '" + k + "' in [question]");
            }
        }
        check_consecutive(lam_idx, "lambda");
        check_consecutive(fset_idx, "fset");
    }

    const CenterPoly mp = min_poly_center(to_skew(P.A));
    if (mp[0].is_zero()) fail(ErrorCode::NotDominant, "the map is not dominant: its minimal polynomial has zero constant term");
    return P;
}

std::string serialize_problem(const Problem& P) {
    std::ostringstream os;
    os << "[field]\n";
    os << "p = " << P.field->p() << "\n";
    os << "ell = " << P.field->degree() << "\n";
    os << "modulus = " << format_uints(P.field->modulus()) << "\n";
    os << "\n[map]\n";
    os << "N = " << P.A.rows() << "\n";
    const auto rows = format_ore_rows(P.A);
    for (std::size_t i = 0; i < rows.size(); ++i) os << "row" << i + 1 << " = " << rows[i] << "\n";
    os << "\n[question]\n";
    os << "d = " << P.d << "\n";
    if (P.density_M) os << "density_M = " << *P.density_M << "\n";
    if (P.density_D) os << "density_D = " << *P.density_D << "\n";
    for (std::size_t i = 0; i < P.lambdas.size(); ++i)
        os << "lambda" << i + 1 << " = " << format_lambda(P.field, P.lambdas[i]) << "\n";
    for (std::size_t i = 0; i < P.fsets.size(); ++i) os << "fset" << i + 1 << " = " << format_fset(P.fsets[i]) << "\n";
    return os.str();
}

std::string digest(std::string_view canonical) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string problem_digest(const Problem& P) { return digest(serialize_problem(P)); }

}  // namespace gadyn::text
