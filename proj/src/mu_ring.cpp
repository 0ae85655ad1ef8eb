#include "eo/mu_ring.hpp"

#include <algorithm>

#include "eo/fp.hpp"

namespace eo {

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

MuRing::MuRing(int prime) : prime_(prime), mu_inverse_{prime, {}} {
    require_odd_prime(prime);
    // f(x) = (x-1) * q(x) with q(x) = (x^{2p}-1)/(x+1) = x^{2p-1} - x^{2p-2} + ... + x - 1.
    std::vector<long long> q(2 * prime, 0);
    for (int k = 0; k < 2 * prime; ++k) q[k] = (k % 2 == 0) ? -1 : 1;
    f_ = poly_mul({-1, 1}, q);

    // f(x) = x*g(x) + 1, so mu * g(mu) = -1 and mu^{-1} = -g(mu).
    std::vector<long long> inv(degree(), 0);
    for (int i = 0; i < degree(); ++i) inv[i] = -f_[i + 1];
    mu_inverse_ = MuRingElement{prime_, inv};
}

void MuRing::check(const MuRingElement& a) const {
    if (a.prime != prime_ || static_cast<int>(a.coeffs.size()) != degree())
        fail(ErrorKind::InvalidArgument, "mu-ring element does not belong to this ring");
}

MuRingElement MuRing::reduce(std::vector<long long> poly) const {
    const int d = degree();
    for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
        long long c = poly[i];
        if (c == 0) continue;
        // f is monic: subtract c * x^{i-d} * f.
        for (int j = 0; j <= d; ++j) poly[i - d + j] -= c * f_[j];
    }
    poly.resize(d, 0);
    return MuRingElement{prime_, std::move(poly)};
}

MuRingElement MuRing::zero() const { return MuRingElement{prime_, std::vector<long long>(degree(), 0)}; }

MuRingElement MuRing::one() const {
    auto out = zero();
    out.coeffs[0] = 1;
    return out;
}

MuRingElement MuRing::mu_power(long long k) const {
    if (k >= 0) {
        if (k < degree()) {
            auto out = zero();
            out.coeffs[static_cast<size_t>(k)] = 1;
            return out;
        }
        std::vector<long long> poly(static_cast<size_t>(k) + 1, 0);
        poly.back() = 1;
        return reduce(std::move(poly));
    }
    MuRingElement out = one();
    for (long long i = 0; i < -k; ++i) out = mul(out, mu_inverse_);
    return out;
}

MuRingElement MuRing::add(const MuRingElement& a, const MuRingElement& b) const {
    check(a);
    check(b);
    MuRingElement out = a;
    for (int i = 0; i < degree(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

MuRingElement MuRing::sub(const MuRingElement& a, const MuRingElement& b) const {
    check(a);
    check(b);
    MuRingElement out = a;
    for (int i = 0; i < degree(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

MuRingElement MuRing::mul(const MuRingElement& a, const MuRingElement& b) const {
    check(a);
    check(b);
    return reduce(poly_mul(a.coeffs, b.coeffs));
}

MuRingElement MuRing::scale(long long c, const MuRingElement& a) const {
    check(a);
    MuRingElement out = a;
    for (auto& v : out.coeffs) v *= c;
    return out;
}

std::string to_string(const MuRingElement& a) {
    std::string out;
    for (int i = static_cast<int>(a.coeffs.size()) - 1; i >= 0; --i) {
        long long c = a.coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        long long mag = c > 0 ? c : -c;
        if (mag != 1 || i == 0) out += std::to_string(mag);
        if (i > 0) {
            if (mag != 1) out += "*";
            out += "mu";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace eo
