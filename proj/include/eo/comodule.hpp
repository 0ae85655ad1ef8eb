#pragma once

#include <string>
#include <vector>

#include "eo/error.hpp"
#include "eo/fp.hpp"

namespace eo {

// Graded P(1)*-comodule in its computational form: a finitely supported
// graded F_p vector space with a nilpotent operator theta (the P^1 action)
// raising degree by exactly 2(p-1). Grading is cohomological throughout;
// homological inputs are converted at the CLI boundary.
struct ComoduleGenerator {
    std::string id;
    int degree;
};

struct GradedComodule {
    int prime;
    std::vector<ComoduleGenerator> generators;
    // theta[i] lists (target index, coefficient) with coefficient in 1..p-1.
    std::vector<std::vector<std::pair<int, int>>> theta;

    int dim() const { return static_cast<int>(generators.size()); }
};

// Checks homogeneity of theta and theta^p = 0; throws InvariantViolation.
void validate(const GradedComodule& m);

// One wedge summand Sigma^shift W_length.
struct Summand {
    int shift;
    int length;

    bool operator==(const Summand&) const = default;
    auto operator<=>(const Summand&) const = default;
};

// Multiset of summands, canonically sorted by (shift, length).
using SummandList = std::vector<Summand>;

SummandList canonical(SummandList list);
long long total_dim(const SummandList& list);

// Decomposition into shifted cyclic comodules: the number of summands with
// bottom degree s and length >= l is
//   rank(theta^{l-1} on the degree-s component)
//     - rank(theta^l on the degree-(s-2n) component).
SummandList decompose(const GradedComodule& m);

// Tensor product with theta primitive: theta(a(x)b) = theta(a)(x)b + a(x)theta(b).
// Both inputs must be concentrated in even degrees.
GradedComodule tensor_comodule(const GradedComodule& a, const GradedComodule& b);

// k-th symmetric power for k < p, with theta acting by the Leibniz rule on
// the degree-k multiset basis.
GradedComodule sym_comodule(const GradedComodule& m, int k);

// Cohomology of the Wilson space Y_2p truncated above max_degree:
// polynomial monomials in c_p, c_{p+n}, ... (with c_i in degree 2i) and
// theta extended from theta(c_i) = (i+n) c_{i+n} by the Leibniz rule.
GradedComodule y2p_comodule(int p, int max_degree);

// The linear part of the same module (the span of the c_i alone).
GradedComodule y2p_linear_comodule(int p, int max_degree);

// Whether a summand of a truncated module is unaffected by the truncation.
// Length-p summands cannot extend; shorter ones are trusted only when one
// more theta step would still land inside the truncation.
bool summand_complete(const Summand& s, int p, int max_degree);

// Direct sum of cyclic models for a summand list, with unit coefficients.
GradedComodule model_comodule(int p, const SummandList& list);

// Reconstruction predicate: the cyclic model of `list` has the same
// per-degree dimensions and the same rank of theta^k in every degree for
// all k < p as `m` does.
bool reconstruction_matches(const GradedComodule& m, const SummandList& list);

// Newton's identities mod p: psi_m = c_1 psi_{m-1} - c_2 psi_{m-2} + ...
// with the power sums expressed in the elementary symmetric (Chern) classes.
std::vector<int> power_sums_from_chern(const std::vector<int>& cherns, int p);

enum class OrientVerdict { Orientable, NotOrientable, Undetermined };

const char* to_string(OrientVerdict v);

// Chern-determined orientability for (2p-2)-sparse modules: when all
// generator degrees lie in one class mod 2p-2 the verdict is decided by
// psi_{p-1} mod p; otherwise the hypothesis is unmet and no claim is made.
OrientVerdict orientable_chern_determined(const GradedComodule& z, int psi_val);

std::string to_string(const SummandList& list);

}  // namespace eo
