#pragma once

#include "eo/comodule.hpp"
#include "eo/fp.hpp"

namespace eo {

// Mod-p homology with P^1 action (in the internal cohomological grading)
// together with the cell-structure flags the splitting rules need.
struct SpectrumSpec {
    GradedComodule comodule;
    bool connective = false;
    bool torsion_free = false;
};

enum class SplitRule { TwoPSparse, TwoNSparse, SmallRange, FreeSplitOff, Undetermined };

const char* to_string(SplitRule r);

// Output of the splitting engine. Under rules TwoPSparse, TwoNSparse and
// SmallRange the summands describe the full wedge \/ Sigma^s X_l and the
// remainder is empty. FreeSplitOff only detaches the length-p summands; the
// remainder is reported without any homotopy-type claim. Undetermined keeps
// everything in the remainder.
struct SplittingResult {
    SplitRule rule;
    SummandList summands;
    SummandList remainder;
};

// The comodule W_l: l generators in degrees 0, 2n, ..., 2n(l-1) with
// theta(x_k) = x_{k+1}.
GradedComodule homology_of_Xl(int l, int p);

// Normalized representative of the C_p generator acting on E_*(X_l)/m:
// upper triangular, 1 on the diagonal, -1 on the first superdiagonal.
// The contract is the conjugacy class: zeta^p = 1 and (zeta-1) has Jordan
// type {l}.
FpMatrix zeta_matrix(int l, int p);

SplittingResult split_spectrum(const SpectrumSpec& spec);

// Bilinear extension of the graded tensor decomposition: for summands of
// lengths r <= s the product contributes (r-c) shifted copies of length p
// plus one copy of length s-r+2i-1 shifted by 2n(r-i) for i = 1..c.
SummandList smash_splitting(const SummandList& a, const SummandList& b, int p);

// Symmetric power of a wedge, via the binomial expansion over summands;
// agrees with decompose(sym_comodule(model, k)).
SummandList sym_splitting(const SummandList& m, int k, int p);

}  // namespace eo
