#pragma once

// Build-up constructions: from a free [n, k] code with hull rank l and an
// auxiliary binary vector u, each produces a free [n+2, k+1] code with a
// controlled hull rank. Writing G for the residue basis r_1..r_k,
// H = nullspace(G) with rows s_1..s_j, v_i = <u, r_i> and w_j = <u, s_j>,
// the outputs (two new coordinates first, then the original n) are:
//
//   I   needs <u,u> = 1.  G' row0 (k 0 | k u), rows (k v_i, k v_i | k r_i);
//       H' row0 (k 0 | k u), rows (k w_j, k w_j | k s_j).   Hull l+1.
//   II  needs <u,u> = 0 and every v_i = 0.  G' row0 (k k | k u), rows
//       (0 0 | k r_i); H' row0 (k k | k u), rows (0, k w_j | k s_j). Hull l+1.
//   III needs <u,u> = 0 and some v_i != 0.  G' row0 (k k | k u), rows
//       (k v_i, 0 | k r_i); H' as in II.   Hull lands in {l, l+1, l+2}.
//   IV  needs <u,u> = 0.  G' as in I; H' row0 (0 k | k u), rows as in I.
//       Hull stays l.
//
// The returned hull rank is always recomputed from the output code, and a
// disagreement with the applicable prediction is a hard (logic) error.
//
// The third construction is printed in its source with the coefficient v_1 on
// every appended row; the worked example varies it per row, which is what the
// default builds. `third_literal` switches to the printed form; no hull-rank
// prediction is enforced there.

#include <vector>

#include "ecode/code.hpp"

namespace ecode {

enum class Method { I, II, III, IV };

Method method_of_name(const std::string& name);  // "I".."IV"
std::string name_of_method(Method m);

struct BuildOutput {
    ECode code;
    EMatrix generator;                      // (k+1) x (n+2)
    EMatrix parity_check;                   // (n-k+1) x (n+2)
    int hull_rank = 0;                      // recomputed
    std::vector<int> predicted_hull_ranks;  // from the input hull rank
};

BuildOutput construct(Method m, const ECode& c, const BitVector& u, bool third_literal = false);

// True iff the parity-check rows generate exactly the two-sided dual of the
// produced code.
bool validate_parity_check(const BuildOutput& out);

}  // namespace ecode
