#pragma once

// Linear codes over E of length n, represented as GF(2) subspaces of
// F_2^(2n): a codeword u a + v c maps to the doubled row (u | v), columns
// 0..n-1 carrying the a-plane and n..2n-1 the c-plane. Left multiplication
// acts plane-wise (a∘(u|v) = (u|0), b∘(u|v) = (u|u), c∘(u|v) = (0|u)), so a
// GF(2) subspace is an E-code iff it is closed under those three maps. The
// canonical stored form is the RREF basis of that subspace.

#include <optional>
#include <string>

#include "ecode/gf2.hpp"
#include "ecode/ring.hpp"

namespace ecode {

class ECode {
public:
    ECode() = default;

    // Smallest E-submodule containing the rows of g: the GF(2) span of
    // {x, a∘x, b∘x} over the generator rows x (one round of left actions
    // suffices since the actions compose into each other).
    static ECode from_generators(const EMatrix& g);

    // Adopts an explicit GF(2) basis (rows of length 2n). Throws if the span
    // is not closed under the left actions.
    static ECode from_doubled_basis(int n, const BitMatrix& rows);

    int length() const { return n_; }
    int dimension() const { return basis_.rows(); }  // GF(2) dimension, log2 |C|
    const BitMatrix& basis() const { return basis_; }

    bool contains(const EVector& w) const;
    EVector codeword(word message) const;  // GF(2) combination of basis rows

    friend bool operator==(const ECode&, const ECode&) = default;

private:
    static ECode adopt(int n, const BitMatrix& rows, bool check_closure);

    int n_ = 0;
    BitMatrix basis_;      // RREF over 2n columns
    std::vector<int> pivots_;
};

// Projection of the code onto the a-plane (image of pi coordinate-wise),
// as an RREF basis of length n.
BitMatrix residue(const ECode& c);

// {v : c v is a codeword} = the c-plane sections over zero, as an RREF basis.
// Always contains the residue.
BitMatrix torsion(const ECode& c);

// Free iff residue and torsion coincide; then C = {u a + v c : u, v in R}.
bool is_free(const ECode& c);

// Annihilators under the one-sided inner product. Left dual: <z, w> = 0 for
// all w in C; right dual: <w, z> = 0; the two-sided dual is their
// intersection.
ECode left_dual(const ECode& c);
ECode right_dual(const ECode& c);
ECode dual(const ECode& c);

ECode left_hull(const ECode& c);   // C ∩ left_dual(C)
ECode right_hull(const ECode& c);  // C ∩ right_dual(C)
ECode hull(const ECode& c);        // C ∩ dual(C)

// For a free code the two-sided hull is the free code over
// R ∩ R^perp (R the residue); this returns its a-lift generator, with
// hull_rank(c) rows. Requires is_free.
EMatrix hull_generator_free(const ECode& c);

// rank(C) - rank(residue * residue^T); equals the dimension of the binary
// hull of the residue. Requires is_free.
int hull_rank(const ECode& c);

// Minimum Hamming weight (nonzero coordinates in E^n) over nonzero
// codewords. Free codes reduce to the residue's minimum weight; otherwise
// all 2^dim codewords are enumerated. Requires a nonzero code.
int min_distance(const ECode& c);

struct CodeSummary {
    int n = 0;
    int k = 0;                     // E-rank if free, else GF(2) dimension
    std::optional<int> d;          // empty for the zero code
    std::optional<int> hull_rank;  // empty for non-free codes
    bool free = false;
};

CodeSummary summarize(const ECode& c);

}  // namespace ecode
