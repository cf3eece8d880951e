#pragma once

// Text formats. Binary matrices: a "GF2 <rows> <cols>" header line, then one
// line per row of '0'/'1' with no separators. E-matrices: an "E <rows> <cols>"
// header, then one line per row over the symbols {0,k,t,z}, spaces and tabs
// between symbols allowed. Emitters write the compact form; parse(emit(x))
// is the identity up to whitespace. Fixture files hold repeated blocks of an
// E-matrix followed by a line
//   expect n=<n> k=<k> d=<d> l=<l> table=<id>
// with '#' comment lines and blank lines allowed between blocks.

#include <stdexcept>
#include <string>
#include <vector>

#include "ecode/code.hpp"
#include "ecode/gf2.hpp"
#include "ecode/ring.hpp"

namespace ecode {

// Parse failure with the 1-based position of the first offending character.
struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what);
    int line;
    int col;
};

BitMatrix parse_gf2(const std::string& text);
EMatrix parse_ematrix(const std::string& text);

std::string to_text(const BitMatrix& m);
std::string to_text(const EMatrix& m);

struct FixtureEntry {
    EMatrix generator;
    int n = 0;
    int k = 0;
    int d = 0;
    int l = 0;
    std::string table;
    int line = 0;  // line of the entry's header, for reporting
};

std::vector<FixtureEntry> parse_fixture(const std::string& text);

std::string to_json(const CodeSummary& s);

std::string read_file(const std::string& path);

}  // namespace ecode
