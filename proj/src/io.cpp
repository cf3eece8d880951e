#include "ecode/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ecode {

ParseError::ParseError(int line_, int col_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + what),
      line(line_),
      col(col_) {}

namespace {

struct LineScanner {
    explicit LineScanner(const std::string& text) {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(std::move(cur));
                cur.clear();
            } else if (ch != '\r') {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) lines.push_back(std::move(cur));
    }

    bool eof() const { return idx >= lines.size(); }
    int lineno() const { return int(idx) + 1; }
    const std::string& peek() const { return lines[idx]; }
    std::string next() { return lines[idx++]; }

    void skip_blank_and_comments() {
        while (!eof()) {
            const std::string& s = peek();
            size_t p = s.find_first_not_of(" \t");
            if (p == std::string::npos || s[p] == '#')
                ++idx;
            else
                break;
        }
    }

    std::vector<std::string> lines;
    size_t idx = 0;
};

struct Header {
    int rows;
    int cols;
};

Header parse_header(LineScanner& sc, const std::string& magic) {
    if (sc.eof()) throw ParseError(sc.lineno(), 1, "expected '" + magic + " <rows> <cols>' header");
    int line = sc.lineno();
    std::istringstream in(sc.next());
    std::string tag;
    long rows = -1, cols = -1;
    in >> tag >> rows >> cols;
    bool shape_ok = !in.fail();
    std::string rest;
    in >> rest;
    if (tag != magic || !shape_ok || !rest.empty() || rows < 0 || cols < 0 || rows > 4096 ||
        cols > 4096)
        throw ParseError(line, 1, "malformed '" + magic + " <rows> <cols>' header");
    return {int(rows), int(cols)};
}

// One matrix row: exactly `cols` symbols from `alphabet`, whitespace allowed
// between them.
std::string parse_row(LineScanner& sc, int cols, const std::string& alphabet) {
    if (sc.eof()) throw ParseError(sc.lineno(), 1, "unexpected end of input inside matrix");
    int line = sc.lineno();
    std::string s = sc.next();
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == ' ' || ch == '\t') continue;
        if (alphabet.find(ch) == std::string::npos)
            throw ParseError(line, int(i) + 1, std::string("unexpected symbol '") + ch + "'");
        if (int(out.size()) == cols)
            throw ParseError(line, int(i) + 1, "row has more than " + std::to_string(cols) + " symbols");
        out.push_back(ch);
    }
    if (int(out.size()) != cols)
        throw ParseError(line, int(s.size()) + 1,
                         "row has " + std::to_string(out.size()) + " symbols, expected " + std::to_string(cols));
    return out;
}

BitMatrix parse_gf2_block(LineScanner& sc) {
    Header h = parse_header(sc, "GF2");
    BitMatrix m(h.rows, h.cols);
    for (int r = 0; r < h.rows; ++r) {
        std::string row = parse_row(sc, h.cols, "01");
        for (int c = 0; c < h.cols; ++c)
            if (row[c] == '1') m.set(r, c, true);
    }
    return m;
}

EMatrix parse_ematrix_block(LineScanner& sc) {
    Header h = parse_header(sc, "E");
    EMatrix m(h.rows, h.cols);
    for (int r = 0; r < h.rows; ++r) {
        std::string row = parse_row(sc, h.cols, "0ktz");
        for (int c = 0; c < h.cols; ++c) m.set(r, c, elem_of_symbol(row[c]));
    }
    return m;
}

void require_trailing_blank(LineScanner& sc) {
    sc.skip_blank_and_comments();
    if (!sc.eof()) throw ParseError(sc.lineno(), 1, "trailing content after matrix");
}

}  // namespace

BitMatrix parse_gf2(const std::string& text) {
    LineScanner sc(text);
    sc.skip_blank_and_comments();
    BitMatrix m = parse_gf2_block(sc);
    require_trailing_blank(sc);
    return m;
}

EMatrix parse_ematrix(const std::string& text) {
    LineScanner sc(text);
    sc.skip_blank_and_comments();
    EMatrix m = parse_ematrix_block(sc);
    require_trailing_blank(sc);
    return m;
}

std::string to_text(const BitMatrix& m) {
    std::string out = "GF2 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out.push_back(m.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string to_text(const EMatrix& m) {
    std::string out = "E " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out.push_back(symbol_of(m.get(r, c)));
        out.push_back('\n');
    }
    return out;
}

std::vector<FixtureEntry> parse_fixture(const std::string& text) {
    LineScanner sc(text);
    std::vector<FixtureEntry> out;
    while (true) {
        sc.skip_blank_and_comments();
        if (sc.eof()) break;
        FixtureEntry e;
        e.line = sc.lineno();
        e.generator = parse_ematrix_block(sc);
        sc.skip_blank_and_comments();
        if (sc.eof()) throw ParseError(sc.lineno(), 1, "matrix block without an expect line");
        int line = sc.lineno();
        std::istringstream in(sc.next());
        std::string tag;
        in >> tag;
        if (tag != "expect") throw ParseError(line, 1, "expected 'expect n=.. k=.. d=.. l=.. table=..'");
        bool have_n = false, have_k = false, have_d = false, have_l = false;
        std::string kv;
        while (in >> kv) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) throw ParseError(line, 1, "malformed token '" + kv + "' in expect line");
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            auto as_int = [&](int& dst, bool& flag) {
                try {
                    size_t used = 0;
                    dst = std::stoi(val, &used);
                    if (used != val.size()) throw std::invalid_argument(val);
                } catch (const std::exception&) {
                    throw ParseError(line, 1, "bad integer for " + key + " in expect line");
                }
                flag = true;
            };
            if (key == "n")
                as_int(e.n, have_n);
            else if (key == "k")
                as_int(e.k, have_k);
            else if (key == "d")
                as_int(e.d, have_d);
            else if (key == "l")
                as_int(e.l, have_l);
            else if (key == "table") {
                if (val.empty()) throw ParseError(line, 1, "empty table id in expect line");
                e.table = val;
            } else
                throw ParseError(line, 1, "unknown key '" + key + "' in expect line");
        }
        if (!have_n || !have_k || !have_d || !have_l || e.table.empty())
            throw ParseError(line, 1, "expect line must set n, k, d, l and table");
        out.push_back(std::move(e));
    }
    return out;
}

std::string to_json(const CodeSummary& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["d"] = s.d ? nlohmann::json(*s.d) : nlohmann::json(nullptr);
    j["hull_rank"] = s.hull_rank ? nlohmann::json(*s.hull_rank) : nlohmann::json(nullptr);
    j["free"] = s.free;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ecode
