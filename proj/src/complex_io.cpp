#include "strata/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace strata {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream is(raw);
        Line line{number, {}};
        std::string tok;
        while (is >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& tok, int line, int col) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line, col);
    }
}

Rat parse_fraction(const std::string& tok, int line, int col) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ParseError("expected fraction, got '" + tok + "'", line, col);
    }
}

}  // namespace

std::shared_ptr<StratifiedComplex> parse_complex(std::istream& in) {
    std::string name = "unnamed";
    int n = -1, vertices = -1;
    std::vector<Simplex> facets;
    std::vector<int> orientations;
    std::map<Simplex, int> depths;
    std::map<int, std::vector<Rat>> coords;

    for (const auto& line : tokenize(in)) {
        const auto& t = line.tokens;
        if (t[0] == "name") {
            if (t.size() != 2) throw ParseError("name takes one token", line.number, 1);
            name = t[1];
        } else if (t[0] == "dim") {
            if (t.size() != 2) throw ParseError("dim takes one integer", line.number, 1);
            n = parse_int(t[1], line.number, 2);
        } else if (t[0] == "vertices") {
            if (t.size() != 2) throw ParseError("vertices takes one integer", line.number, 1);
            vertices = parse_int(t[1], line.number, 2);
        } else if (t[0] == "coord") {
            if (t.size() < 3) throw ParseError("coord takes a vertex and values", line.number, 1);
            int v = parse_int(t[1], line.number, 2);
            std::vector<Rat> c;
            for (std::size_t i = 2; i < t.size(); ++i)
                c.push_back(parse_fraction(t[i], line.number, static_cast<int>(i) + 1));
            coords[v] = std::move(c);
        } else if (t[0] == "facet") {
            if (t.size() < 3) throw ParseError("facet takes a sign and vertices", line.number, 1);
            int sign;
            if (t[1] == "+" || t[1] == "+1")
                sign = 1;
            else if (t[1] == "-" || t[1] == "-1")
                sign = -1;
            else
                throw ParseError("facet sign must be +1 or -1, got '" + t[1] + "'", line.number, 2);
            Simplex s;
            for (std::size_t i = 2; i < t.size(); ++i)
                s.push_back(parse_int(t[i], line.number, static_cast<int>(i) + 1));
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
            orientations.push_back(sign);
        } else if (t[0] == "depth") {
            if (t.size() < 3) throw ParseError("depth takes a value and vertices", line.number, 1);
            int d = parse_int(t[1], line.number, 2);
            Simplex s;
            for (std::size_t i = 2; i < t.size(); ++i)
                s.push_back(parse_int(t[i], line.number, static_cast<int>(i) + 1));
            std::sort(s.begin(), s.end());
            depths[s] = d;
        } else {
            throw ParseError("unknown directive '" + t[0] + "'", line.number, 1);
        }
    }
    if (n < 0) throw ParseError("missing 'dim'", 0, 0);
    if (vertices < 0) throw ParseError("missing 'vertices'", 0, 0);

    std::vector<std::vector<Rat>> coord_list;
    if (!coords.empty()) {
        coord_list.resize(vertices);
        for (int v = 0; v < vertices; ++v) {
            auto it = coords.find(v);
            if (it == coords.end())
                throw ParseError("coordinates given for some vertices but not vertex " +
                                 std::to_string(v), 0, 0);
            coord_list[v] = it->second;
        }
    }
    try {
        return std::make_shared<StratifiedComplex>(name, n, vertices, facets, orientations,
                                                   depths, coord_list);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad complex: ") + e.what(), 0, 0);
    }
}

std::shared_ptr<StratifiedComplex> load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return parse_complex(in);
}

std::string format_complex(const StratifiedComplex& X) {
    std::ostringstream os;
    os << "name " << X.name() << "\n";
    os << "dim " << X.n() << "\n";
    os << "vertices " << X.vertex_count() << "\n";
    if (X.has_coords())
        for (int v = 0; v < X.vertex_count(); ++v) {
            os << "coord " << v;
            for (const auto& q : X.coords()[v]) os << ' ' << q;
            os << "\n";
        }
    for (const auto& f : X.facets()) {
        os << "facet " << (X.orientation(f) > 0 ? "+1" : "-1");
        for (int v : f) os << ' ' << v;
        os << "\n";
    }
    for (int d = 0; d <= X.n(); ++d)
        for (const auto& s : X.simplices(d))
            if (X.depth(s) != X.n()) {
                os << "depth " << X.depth(s);
                for (int v : s) os << ' ' << v;
                os << "\n";
            }
    return os.str();
}

void save_complex(const StratifiedComplex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << format_complex(X);
}

namespace {

struct ChainParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("chain literal: " + msg, 1, static_cast<int>(pos) + 1);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(text.substr(start, pos - start));
    }

    Simplex simplex() {
        if (peek() != '[') fail("expected '['");
        ++pos;
        Simplex s;
        while (true) {
            s.push_back(static_cast<int>(integer()));
            char c = peek();
            if (c == ',') {
                ++pos;
            } else if (c == ']') {
                ++pos;
                break;
            } else {
                fail("expected ',' or ']'");
            }
        }
        std::sort(s.begin(), s.end());
        return s;
    }

    // term := [int '*'] simplex ('x' simplex)*
    std::pair<std::vector<Simplex>, Int> term() {
        Int coef = 1;
        char c = peek();
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '+' || c == '-') {
                std::size_t save = pos;
                ++pos;
                if (peek() == '[') {
                    coef = (c == '-') ? -1 : 1;
                } else {
                    pos = save;
                    coef = integer();
                    if (peek() == '*') ++pos;
                    else fail("expected '*' after coefficient");
                }
            } else {
                coef = integer();
                if (peek() == '*') ++pos;
                else fail("expected '*' after coefficient");
            }
        }
        std::vector<Simplex> tuple;
        tuple.push_back(simplex());
        while (peek() == 'x') {
            ++pos;
            tuple.push_back(simplex());
        }
        return {tuple, coef};
    }
};

}  // namespace

Chain parse_chain(const StratifiedComplex& X, const std::string& text) {
    ChainParser p{text};
    std::vector<std::pair<std::vector<Simplex>, Int>> terms;
    while (!p.eof()) {
        char c = p.peek();
        Int sign = 1;
        if (c == '+') {
            ++p.pos;
        } else if (c == '-') {
            if (!terms.empty()) {
                ++p.pos;
                sign = -1;
            }
        }
        auto [tuple, coef] = p.term();
        if (tuple.size() != 1) p.fail("plain chain must have arity-1 terms");
        terms.push_back({tuple, sign * coef});
    }
    if (terms.empty()) throw ParseError("chain literal: empty", 1, 1);
    int degree = static_cast<int>(terms[0].first[0].size()) - 1;
    Chain out(&X, degree);
    for (const auto& [tuple, c] : terms) out.add(tuple[0], c);
    return out;
}

TensorChain parse_tensor_chain(const StratifiedComplex& X, int arity, const std::string& text) {
    ChainParser p{text};
    std::vector<std::pair<std::vector<Simplex>, Int>> terms;
    while (!p.eof()) {
        char c = p.peek();
        Int sign = 1;
        if (c == '+') {
            ++p.pos;
        } else if (c == '-') {
            if (!terms.empty()) {
                ++p.pos;
                sign = -1;
            }
        }
        auto [tuple, coef] = p.term();
        if (static_cast<int>(tuple.size()) != arity)
            p.fail("expected arity " + std::to_string(arity) + " tuple");
        terms.push_back({tuple, sign * coef});
    }
    if (terms.empty()) throw ParseError("tensor chain literal: empty", 1, 1);
    int degree = 0;
    for (const auto& s : terms[0].first) degree += static_cast<int>(s.size()) - 1 - X.n();
    TensorChain out = TensorChain::uniform_shift(&X, arity, -X.n(), degree);
    for (const auto& [tuple, c] : terms) out.add(tuple, c);
    return out;
}

std::string format_chain(const Chain& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, v] : c.terms()) {
        Int a = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1) os << a << "*";
        os << simplex_to_string(s);
    }
    return os.str();
}

std::map<std::string, TensorChain> load_chains(const StratifiedComplex& X, int arity,
                                               const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::map<std::string, TensorChain> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'name = chain'", number, 1);
        std::string name = raw.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) throw ParseError("empty chain name", number, 1);
        out.emplace(name, parse_tensor_chain(X, arity, raw.substr(eq + 1)));
    }
    return out;
}

}  // namespace strata
