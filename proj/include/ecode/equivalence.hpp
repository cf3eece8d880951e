#pragma once

// Permutation equivalence of codes. Binary equivalence is decided exactly by
// invariant screening (dimension, weight enumerator, hull dimension, column
// signatures) followed by backtracking over column assignments pruned with
// pairwise column statistics; every returned witness is re-verified, and
// every refusal means the assignment tree was exhausted. Free E-codes
// are equivalent iff their residues are, so the E-level test reduces to the
// binary one and checks the witness on the E-code itself.

#include <optional>
#include <string>
#include <vector>

#include "ecode/code.hpp"
#include "ecode/gf2.hpp"

namespace ecode {

struct Permutation {
    // Image coordinate j reads source coordinate map[j].
    std::vector<int> map;

    static Permutation identity(int n);
    int size() const { return int(map.size()); }
    bool valid() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Cycle notation on 1-based coordinates, fixed points omitted; "id" for the
// identity.
std::string cycle_string(const Permutation& p);

BitVector apply_permutation(const BitVector& v, const Permutation& p);
BitMatrix apply_permutation(const BitMatrix& m, const Permutation& p);  // permutes columns
ECode apply_permutation(const ECode& c, const Permutation& p);

// Weight distribution of rowspace(g): counts[w] = number of codewords of
// Hamming weight w, summing to 2^rank.
std::vector<long long> weight_enumerator(const BitMatrix& g);

// A column permutation p with rowspace(apply_permutation(a, p)) equal to
// rowspace(b), if one exists. Exact: nullopt is returned only after the
// search space is exhausted. Requires equal column counts, at most 24.
std::optional<Permutation> binary_equivalent(const BitMatrix& a, const BitMatrix& b);

// Witness permutation taking c onto d, for free codes of equal length.
std::optional<Permutation> e_equivalent(const ECode& c, const ECode& d);

}  // namespace ecode
