#pragma once

#include <string>
#include <vector>

#include "eo/error.hpp"

namespace eo {

// Residue in Z[mu]/f(mu) with f(x) = (x-1)(x^{2p}-1)/(x+1).
// Coefficients are integers and the degree is kept below 2p.
struct MuRingElement {
    int prime;
    std::vector<long long> coeffs;  // coeffs[i] is the coefficient of mu^i, size 2p

    bool operator==(const MuRingElement& other) const = default;
};

// Arithmetic context for Z[mu]/f(mu) at a fixed odd prime. f has constant
// term 1, so mu is a unit; its inverse is computed once in the constructor.
class MuRing {
public:
    explicit MuRing(int prime);

    int prime() const { return prime_; }
    int degree() const { return 2 * prime_; }
    const std::vector<long long>& modulus() const { return f_; }

    MuRingElement zero() const;
    MuRingElement one() const;
    MuRingElement mu_power(long long k) const;  // k may be negative

    MuRingElement add(const MuRingElement& a, const MuRingElement& b) const;
    MuRingElement sub(const MuRingElement& a, const MuRingElement& b) const;
    MuRingElement mul(const MuRingElement& a, const MuRingElement& b) const;
    MuRingElement scale(long long c, const MuRingElement& a) const;

private:
    MuRingElement reduce(std::vector<long long> poly) const;
    void check(const MuRingElement& a) const;

    int prime_;
    std::vector<long long> f_;       // monic of degree 2p
    MuRingElement mu_inverse_;
};

std::string to_string(const MuRingElement& a);

}  // namespace eo
