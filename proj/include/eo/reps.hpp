#pragma once

#include <string>
#include <vector>

#include "eo/error.hpp"
#include "eo/mu_ring.hpp"

namespace eo {

// Which representation ring the multiplicity vector lives in. The two rings
// are isomorphic via V_l <-> W_l; the tag only affects display.
enum class RepSide { CyclicGroup, SteenrodQuotient };

// Virtual element of the representation ring of F_p[C_p]: the multiplicity
// vector of the indecomposables V_1..V_p. Entries may be negative.
struct RepElement {
    int prime;
    std::vector<long long> mults;  // mults[l-1] is the multiplicity of V_l
    RepSide side = RepSide::CyclicGroup;

    long long dim() const;
    bool is_actual() const;  // all multiplicities nonnegative

    bool operator==(const RepElement& other) const {
        return prime == other.prime && mults == other.mults;
    }
};

RepElement rep_zero(int p);
RepElement rep_single(int l, int p);  // V_l
RepElement rep_add(const RepElement& a, const RepElement& b);

// Closed-form decomposition of V_r (x) V_s. With c = r when r+s <= p and
// c = p-s otherwise, the result is (r-c) copies of V_p plus one copy of
// V_{s-r+2i-1} for i = 1..c.
RepElement tensor_rep(int r, int s, int p);

// Independent oracle: builds the unipotent generators explicitly, forms the
// Kronecker product and reads the Jordan type of (zeta_r (x) zeta_s) - 1.
RepElement tensor_rep_brute(int r, int s, int p);

// Linear extension of V_n -> sum_{j=0}^{n-1} mu^{n-1-2j} into Z[mu]/f.
MuRingElement rep_to_mu(const MuRing& ring, const RepElement& x);

// Inverts rep_to_mu on its image by solving the integer lattice system;
// throws NotInImage when y is not an integral combination of the V_l images.
RepElement mu_to_rep(const MuRing& ring, const MuRingElement& y);

// Sym^k V_l. For k < p this is the t^k coefficient of the generating
// function prod_{j=0}^{l-1} (1 - mu^{l-1-2j} t)^{-1}; for k >= p the
// periodicity Sym^{k} = Sym^{k-p} + V_p^{d} applies, with d fixed by the
// dimension count dim Sym^m V_l = C(m+l-1, l-1).
RepElement sym_power(int l, long long k, int p);

// Independent oracle: induced action of zeta on the degree-k monomial basis
// of Sym(V_l). Guarded by dim <= 5000 (throws TooLarge).
RepElement sym_power_brute(int l, int k, int p);

// The representation-ring isomorphism V_l -> W_l. Identity on multiplicity
// vectors; retags the element as living over P(1)*.
RepElement phi_iso(const RepElement& x);

// Checks that the tensor square of the rank-2 free module over the deformed
// Hopf algebra A_q (coproduct t -> t(x)1 + 1(x)t + q.t(x)t) decomposes as
// U_1 + U_3, i.e. that (the matrix of t)'s Jordan type is {1,3}.
bool aq_tensor_square_check(int p, long long q);

// Binomial coefficient with overflow detection (throws TooLarge).
long long binomial_checked(long long n, long long k);

std::string to_string(const RepElement& x);

}  // namespace eo
