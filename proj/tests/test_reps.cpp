#include "doctest.h"
#include "eo/fp.hpp"
#include "eo/reps.hpp"

using namespace eo;

namespace {

RepElement rep_of(int p, std::vector<long long> mults) {
    RepElement out = rep_zero(p);
    out.mults = std::move(mults);
    return out;
}

}  // namespace

TEST_CASE("tensor unit: V_1 (x) V_l = V_l") {
    for (int p : {3, 5, 7})
        for (int l = 1; l <= p; ++l) CHECK(tensor_rep(1, l, p) == rep_single(l, p));
}

TEST_CASE("V_2 (x) V_2 at p=5 is V_1 + V_3") {
    CHECK(tensor_rep(2, 2, 5) == rep_of(5, {1, 0, 1, 0, 0}));
}

TEST_CASE("V_2 (x) V_4 at p=5 is V_3 + V_5") {
    CHECK(tensor_rep(2, 4, 5) == rep_of(5, {0, 0, 1, 0, 1}));
    CHECK(tensor_rep_brute(2, 4, 5) == rep_of(5, {0, 0, 1, 0, 1}));
}

TEST_CASE("brute oracle: V_1 (x) V_1 and V_2 (x) V_2 at p=3") {
    CHECK(tensor_rep_brute(1, 1, 3) == rep_single(1, 3));
    CHECK(tensor_rep_brute(2, 2, 3) == rep_of(3, {1, 0, 1}));
}

TEST_CASE("tensor formula equals the brute oracle for all pairs") {
    for (int p : {3, 5, 7})
        for (int r = 1; r <= p; ++r)
            for (int s = r; s <= p; ++s) {
                CAPTURE(p);
                CAPTURE(r);
                CAPTURE(s);
                RepElement formula = tensor_rep(r, s, p);
                CHECK(formula == tensor_rep_brute(r, s, p));
                CHECK(formula.dim() == static_cast<long long>(r) * s);
            }
}

TEST_CASE("tensor arguments outside 1..p are rejected") {
    CHECK_THROWS_AS(tensor_rep(0, 2, 5), Error);
    CHECK_THROWS_AS(tensor_rep(2, 6, 5), Error);
    try {
        tensor_rep(2, 6, 5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
}

TEST_CASE("rep_to_mu sends V_1 to 1 and V_2 to mu + mu^{-1}") {
    MuRing ring(5);
    CHECK(rep_to_mu(ring, rep_single(1, 5)) == ring.one());
    MuRingElement expected = ring.add(ring.mu_power(1), ring.mu_power(-1));
    CHECK(rep_to_mu(ring, rep_single(2, 5)) == expected);
}

TEST_CASE("rep_to_mu(V_2)^2 equals rep_to_mu(V_1 + V_3)") {
    for (int p : {3, 5, 7}) {
        MuRing ring(p);
        MuRingElement v2 = rep_to_mu(ring, rep_single(2, p));
        CHECK(ring.mul(v2, v2) == rep_to_mu(ring, rep_add(rep_single(1, p), rep_single(3, p))));
    }
}

TEST_CASE("rep_to_mu is multiplicative on tensor products of generators") {
    for (int p : {3, 5, 7}) {
        MuRing ring(p);
        for (int r = 1; r <= p; ++r)
            for (int s = r; s <= p; ++s) {
                MuRingElement lhs = rep_to_mu(ring, tensor_rep(r, s, p));
                MuRingElement rhs =
                    ring.mul(rep_to_mu(ring, rep_single(r, p)), rep_to_mu(ring, rep_single(s, p)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("mu_to_rep inverts rep_to_mu on actual modules") {
    for (int p : {3, 5}) {
        MuRing ring(p);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                RepElement x = rep_zero(p);
                x.mults[0] = a;
                x.mults[p - 2] = b;
                x.mults[p - 1] = 1;
                CHECK(mu_to_rep(ring, rep_to_mu(ring, x)) == x);
            }
    }
}

TEST_CASE("mu^2 + 2 + mu^{-2} is V_1 + V_3 at p=5") {
    MuRing ring(5);
    MuRingElement y = ring.add(ring.mu_power(2), ring.add(ring.scale(2, ring.one()), ring.mu_power(-2)));
    CHECK(mu_to_rep(ring, y) == rep_of(5, {1, 0, 1, 0, 0}));
}

TEST_CASE("a bare mu^3 is not in the lattice at p=5") {
    MuRing ring(5);
    CHECK_THROWS_AS(mu_to_rep(ring, ring.mu_power(3)), Error);
    try {
        mu_to_rep(ring, ring.mu_power(3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInImage);
    }
}

TEST_CASE("mu is a unit: mu * mu^{-1} = 1") {
    for (int p : {3, 5, 7}) {
        MuRing ring(p);
        CHECK(ring.mul(ring.mu_power(1), ring.mu_power(-1)) == ring.one());
        CHECK(ring.mul(ring.mu_power(7), ring.mu_power(-7)) == ring.one());
    }
}

TEST_CASE("Sym^1 V_l = V_l") {
    for (int p : {3, 5})
        for (int l = 1; l <= p; ++l) CHECK(sym_power(l, 1, p) == rep_single(l, p));
}

TEST_CASE("Sym^0 of anything is V_1, brute force included") {
    CHECK(sym_power_brute(3, 0, 5) == rep_single(1, 5));
    CHECK(sym_power(4, 0, 5) == rep_single(1, 5));
}

TEST_CASE("Sym^2 V_2 at p=3 is V_3") {
    CHECK(sym_power(2, 2, 3) == rep_of(3, {0, 0, 1}));
    CHECK(sym_power_brute(2, 2, 3) == rep_of(3, {0, 0, 1}));
}

TEST_CASE("Sym^2 V_3 and Sym^3 V_3 at p=3 follow the free-module formula") {
    CHECK(sym_power_brute(3, 2, 3) == rep_of(3, {0, 0, 2}));
    CHECK(sym_power_brute(3, 3, 3) == rep_of(3, {1, 0, 3}));
}

TEST_CASE("sym formula equals the brute oracle within the guard") {
    for (int p : {3, 5})
        for (int l = 1; l <= p; ++l)
            for (int k = 0; k <= 2 * p; ++k) {
                CAPTURE(p);
                CAPTURE(l);
                CAPTURE(k);
                RepElement formula = sym_power(l, k, p);
                CHECK(formula == sym_power_brute(l, k, p));
                CHECK(formula.dim() == binomial_checked(k + l - 1, l - 1));
            }
}

TEST_CASE("Sym^k V_p matches the piecewise free formula") {
    for (int p : {3, 5, 7})
        for (int k = 0; k <= 3 * p; ++k) {
            RepElement got = sym_power(p, k, p);
            long long dim = binomial_checked(k + p - 1, p - 1);
            RepElement expected = rep_zero(p);
            if (k % p == 0) {
                expected.mults[0] = 1;
                expected.mults[p - 1] = (dim - 1) / p;
            } else {
                expected.mults[p - 1] = dim / p;
            }
            CAPTURE(p);
            CAPTURE(k);
            CHECK(got == expected);
        }
}

TEST_CASE("periodicity: Sym^{k+p} - Sym^k is a nonnegative multiple of V_p") {
    for (int p : {3, 5})
        for (int l = 1; l <= p; ++l)
            for (int k = 0; k <= p; ++k) {
                RepElement big = sym_power(l, k + p, p);
                RepElement small = sym_power(l, k, p);
                for (int i = 0; i < p - 1; ++i) CHECK(big.mults[i] == small.mults[i]);
                CHECK(big.mults[p - 1] >= small.mults[p - 1]);
            }
}

TEST_CASE("generating function coefficients match the brute oracle for V_p") {
    for (int p : {3, 5, 7}) {
        MuRing ring(p);
        for (int k = 1; k < p; ++k) {
            CAPTURE(p);
            CAPTURE(k);
            CHECK(sym_power(p, k, p) == sym_power_brute(p, k, p));
        }
    }
}

TEST_CASE("the brute-force guard rejects huge bases") {
    CHECK_THROWS_AS(sym_power_brute(7, 20, 7), Error);
    try {
        sym_power_brute(7, 20, 7);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("phi_iso retags without touching multiplicities") {
    RepElement x = tensor_rep(2, 2, 5);
    RepElement w = phi_iso(x);
    CHECK(w.mults == x.mults);
    CHECK(to_string(w) == "W_1 + W_3");
    CHECK(to_string(x) == "V_1 + V_3");
    RepElement zero = phi_iso(rep_zero(5));
    CHECK(to_string(zero) == "0");
}

TEST_CASE("A_q tensor square check holds for every residue") {
    CHECK(aq_tensor_square_check(5, 1));
    CHECK(aq_tensor_square_check(5, 0));
    CHECK(aq_tensor_square_check(7, 3));
    for (int p : {3, 5, 7})
        for (int q = 0; q < p; ++q) CHECK(aq_tensor_square_check(p, q));
}
