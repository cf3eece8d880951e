#pragma once

// Definition-level reference computations, deliberately naive: duals by
// scanning all 4^n vectors against every codeword, hulls by set
// intersection of the enumerated member lists, distance by the full
// pairwise scan. Everything here is O(4^n)-ish and capped at n <= 8; the
// closed-form routines in code.hpp are tested against these.

#include <cstdint>
#include <vector>

#include "ecode/code.hpp"

namespace ecode {

std::uint32_t vector_count(int n);  // 4^n, requires 0 <= n <= 8

// Enumeration of E^n in lexicographic symbol order (0 < k < t < z),
// coordinate 0 most significant. lex_index ranges over [0, 4^n).
EVector vector_at(int n, std::uint32_t lex_index);

enum class Side { left, right, two_sided };

// Every codeword of C (all 2^dim GF(2) combinations of the basis), in
// ascending doubled-bit order.
std::vector<EVector> all_codewords(const ECode& c);

// All z in E^n whose inner products against every codeword w of C vanish:
// <z, w> for left, <w, z> for right, both for two_sided. Scan order is the
// vector_at enumeration.
std::vector<EVector> dual_members_by_definition(const ECode& c, Side side);

// Submodule generated by an explicit word list. Used to rebuild oracle
// results as codes; a closed set must come back with the same cardinality.
ECode code_from_words(int n, const std::vector<EVector>& words);

// The member scan rebuilt into a code. The scan result is verified to be a
// submodule (rebuilding must not add words); failure is a logic error.
ECode dual_by_definition(const ECode& c, Side side);

// Set intersection of the enumerated codewords of C with the enumerated
// dual members, reconstructed into a code.
ECode hull_by_definition(const ECode& c, Side side);

// Minimum over all pairs of distinct codewords of the number of differing
// coordinates. Requires a nonzero code.
int min_distance_by_definition(const ECode& c);

}  // namespace ecode
