#include "eo/reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eo/fp.hpp"

namespace eo {

namespace {

void check_length(int l, int p) {
    if (l < 1 || l > p)
        fail(ErrorKind::OutOfRange,
             "module length " + std::to_string(l) + " outside 1.." + std::to_string(p));
}

// Unipotent generator zeta_l = I + N_l acting on V_l.
FpMatrix unipotent(int l, int p) {
    FpMatrix m = FpMatrix::identity(p, l);
    for (int i = 0; i + 1 < l; ++i) m.set(i, i + 1, 1);
    return m;
}

RepElement rep_from_blocks(const std::vector<int>& blocks, int p, RepSide side) {
    RepElement out = rep_zero(p);
    out.side = side;
    for (int b : blocks) {
        if (b < 1 || b > p) fail(ErrorKind::InvariantViolation, "block length outside 1..p");
        out.mults[b - 1] += 1;
    }
    return out;
}

// Minimal exact rational type for the lattice solve in mu_to_rep.
struct Rat {
    long long num = 0;
    long long den = 1;

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
};

Rat rat(long long n) { return Rat{n, 1}; }

Rat rat_mul(Rat a, Rat b) {
    Rat out{a.num * b.num, a.den * b.den};
    out.normalize();
    return out;
}

Rat rat_sub(Rat a, Rat b) {
    Rat out{a.num * b.den - b.num * a.den, a.den * b.den};
    out.normalize();
    return out;
}

Rat rat_div(Rat a, Rat b) {
    if (b.num == 0) fail(ErrorKind::InvalidArgument, "rational division by zero");
    Rat out{a.num * b.den, a.den * b.num};
    out.normalize();
    return out;
}

}  // namespace

long long RepElement::dim() const {
    long long d = 0;
    for (size_t l = 0; l < mults.size(); ++l) d += mults[l] * static_cast<long long>(l + 1);
    return d;
}

bool RepElement::is_actual() const {
    return std::all_of(mults.begin(), mults.end(), [](long long m) { return m >= 0; });
}

RepElement rep_zero(int p) {
    require_odd_prime(p);
    return RepElement{p, std::vector<long long>(p, 0)};
}

RepElement rep_single(int l, int p) {
    auto out = rep_zero(p);
    check_length(l, p);
    out.mults[l - 1] = 1;
    return out;
}

RepElement rep_add(const RepElement& a, const RepElement& b) {
    if (a.prime != b.prime) fail(ErrorKind::InvalidArgument, "prime mismatch");
    RepElement out = a;
    for (size_t i = 0; i < out.mults.size(); ++i) out.mults[i] += b.mults[i];
    return out;
}

RepElement tensor_rep(int r, int s, int p) {
    require_odd_prime(p);
    check_length(r, p);
    check_length(s, p);
    if (r > s) std::swap(r, s);
    const int c = (r + s <= p) ? r : p - s;
    RepElement out = rep_zero(p);
    out.mults[p - 1] += r - c;
    for (int i = 1; i <= c; ++i) out.mults[s - r + 2 * i - 2] += 1;
    return out;
}

RepElement tensor_rep_brute(int r, int s, int p) {
    require_odd_prime(p);
    check_length(r, p);
    check_length(s, p);
    FpMatrix zz = unipotent(r, p).kronecker(unipotent(s, p));
    FpMatrix n = zz.sub(FpMatrix::identity(p, r * s));
    return rep_from_blocks(nilpotent_block_sizes(n), p, RepSide::CyclicGroup);
}

MuRingElement rep_to_mu(const MuRing& ring, const RepElement& x) {
    if (x.prime != ring.prime()) fail(ErrorKind::InvalidArgument, "prime mismatch");
    MuRingElement out = ring.zero();
    for (int l = 1; l <= x.prime; ++l) {
        long long m = x.mults[l - 1];
        if (m == 0) continue;
        MuRingElement v = ring.zero();
        for (int j = 0; j < l; ++j) v = ring.add(v, ring.mu_power(l - 1 - 2 * j));
        out = ring.add(out, ring.scale(m, v));
    }
    return out;
}

RepElement mu_to_rep(const MuRing& ring, const MuRingElement& y) {
    const int p = ring.prime();
    const int d = ring.degree();

    // Columns: images of V_1..V_p. Augmented with y; solved exactly over Q.
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(p + 1));
    for (int l = 1; l <= p; ++l) {
        MuRingElement img = rep_to_mu(ring, rep_single(l, p));
        for (int i = 0; i < d; ++i) a[i][l - 1] = rat(img.coeffs[i]);
    }
    for (int i = 0; i < d; ++i) a[i][p] = rat(y.coeffs[i]);

    std::vector<int> pivot_row(p, -1);
    int r = 0;
    for (int col = 0; col < p && r < d; ++col) {
        int piv = -1;
        for (int i = r; i < d; ++i)
            if (a[i][col].num != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        Rat lead = a[r][col];
        for (int k = col; k <= p; ++k) a[r][k] = rat_div(a[r][k], lead);
        for (int i = 0; i < d; ++i) {
            if (i == r || a[i][col].num == 0) continue;
            Rat f = a[i][col];
            for (int k = col; k <= p; ++k) a[i][k] = rat_sub(a[i][k], rat_mul(f, a[r][k]));
        }
        pivot_row[col] = r;
        ++r;
    }

    // Inconsistent rows mean y is outside the span of the V_l images.
    for (int i = r; i < d; ++i)
        if (a[i][p].num != 0)
            fail(ErrorKind::NotInImage, "element is not in the lattice spanned by V_1..V_p");

    RepElement out = rep_zero(p);
    for (int l = 0; l < p; ++l) {
        if (pivot_row[l] < 0)
            fail(ErrorKind::InvariantViolation, "V_l images are not linearly independent");
        Rat v = a[pivot_row[l]][p];
        if (v.den != 1)
            fail(ErrorKind::NotInImage, "solution is not integral");
        out.mults[l] = v.num;
    }
    return out;
}

RepElement sym_power(int l, long long k, int p) {
    require_odd_prime(p);
    check_length(l, p);
    if (k < 0) fail(ErrorKind::OutOfRange, "negative symmetric power");

    if (k >= p) {
        const long long k0 = k % p;
        long long d = (binomial_checked(k + l - 1, l - 1) - binomial_checked(k0 + l - 1, l - 1));
        if (d % p != 0) fail(ErrorKind::InvariantViolation, "dimension defect not divisible by p");
        RepElement out = sym_power(l, k0, p);
        out.mults[p - 1] += d / p;
        return out;
    }

    if (k == 0) return rep_single(1, p);

    // Coefficient of t^k in prod_{j=0}^{l-1} (1 - mu^{l-1-2j} t)^{-1}.
    // Multiplying a series by (1 - x t)^{-1} is the prefix recurrence
    // D[i] = C[i] + x * D[i-1].
    MuRing ring(p);
    std::vector<MuRingElement> coef(static_cast<size_t>(k) + 1, ring.zero());
    coef[0] = ring.one();
    for (int j = 0; j < l; ++j) {
        MuRingElement x = ring.mu_power(l - 1 - 2 * j);
        for (long long i = 1; i <= k; ++i)
            coef[i] = ring.add(coef[i], ring.mul(x, coef[i - 1]));
    }
    return mu_to_rep(ring, coef[k]);
}

RepElement sym_power_brute(int l, int k, int p) {
    require_odd_prime(p);
    check_length(l, p);
    if (k < 0) fail(ErrorKind::OutOfRange, "negative symmetric power");

    long long dim_ll = binomial_checked(k + l - 1, l - 1);
    if (dim_ll > 5000)
        fail(ErrorKind::TooLarge,
             "Sym basis has dimension " + std::to_string(dim_ll) + " > 5000");
    const int dim = static_cast<int>(dim_ll);

    // Degree-k monomials in y_0..y_{l-1}, enumerated lexicographically.
    std::vector<std::vector<int>> basis;
    std::vector<int> expo(l, 0);
    auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == l - 1) {
            expo[pos] = remaining;
            basis.push_back(expo);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            expo[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        expo[pos] = 0;
    };
    enumerate(enumerate, 0, k);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < dim; ++i) index[basis[i]] = i;

    // zeta(y_i) = y_i + y_{i+1} (and y_{l-1} fixed); extend multiplicatively.
    FpMatrix action(p, dim, dim);
    for (int col = 0; col < dim; ++col) {
        std::map<std::vector<int>, long long> poly{{std::vector<int>(l, 0), 1}};
        for (int v = 0; v < l; ++v) {
            int e = basis[col][v];
            if (e == 0) continue;
            // Multiply by (y_v + y_{v+1})^e, expanded binomially.
            std::map<std::vector<int>, long long> next;
            for (const auto& [mono, c] : poly) {
                long long binom = 1;
                for (int j = 0; j <= e; ++j) {
                    std::vector<int> m = mono;
                    m[v] += e - j;
                    if (v + 1 < l) m[v + 1] += j;
                    else if (j > 0) continue;  // y_{l-1} has no successor
                    next[m] = (next[m] + c % p * (binom % p)) % p;
                    binom = binom * (e - j) / (j + 1);
                }
            }
            poly = std::move(next);
        }
        for (const auto& [mono, c] : poly) {
            if (c % p == 0) continue;
            action.set(index.at(mono), col, c);
        }
    }

    FpMatrix n = action.sub(FpMatrix::identity(p, dim));
    return rep_from_blocks(nilpotent_block_sizes(n), p, RepSide::CyclicGroup);
}

RepElement phi_iso(const RepElement& x) {
    RepElement out = x;
    out.side = RepSide::SteenrodQuotient;
    return out;
}

bool aq_tensor_square_check(int p, long long q) {
    require_odd_prime(p);
    const int qr = mod_reduce(q, p);
    // U_2 = {x_1, x_2} with t(x_1) = x_2. On the basis
    // {x1(x)x1, x1(x)x2, x2(x)x1, x2(x)x2} the deformed coproduct gives
    //   t(x1(x)x1) = x2(x)x1 + x1(x)x2 + q x2(x)x2
    //   t(x1(x)x2) = t(x2(x)x1) = x2(x)x2,  t(x2(x)x2) = 0.
    FpMatrix t(p, 4, 4);
    t.set(1, 0, 1);
    t.set(2, 0, 1);
    t.set(3, 0, qr);
    t.set(3, 1, 1);
    t.set(3, 2, 1);
    return nilpotent_block_sizes(t) == std::vector<int>{1, 3};
}

long long binomial_checked(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 62;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > limit) fail(ErrorKind::TooLarge, "binomial coefficient overflow");
    }
    return static_cast<long long>(acc);
}

std::string to_string(const RepElement& x) {
    const char* letter = (x.side == RepSide::CyclicGroup) ? "V" : "W";
    std::string out;
    for (int l = 1; l <= x.prime; ++l) {
        long long m = x.mults[l - 1];
        if (m == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::string(letter) + "_" + std::to_string(l);
        if (m != 1) out += "^" + std::to_string(m);
    }
    return out.empty() ? "0" : out;
}

}  // namespace eo
