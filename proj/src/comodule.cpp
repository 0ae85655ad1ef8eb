#include "eo/comodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eo/reps.hpp"

namespace eo {

namespace {

// Indices of generators grouped by degree, in generator order.
std::map<int, std::vector<int>> components(const GradedComodule& m) {
    std::map<int, std::vector<int>> comp;
    for (int i = 0; i < m.dim(); ++i) comp[m.generators[i].degree].push_back(i);
    return comp;
}

// Matrix of theta from the degree-d component to the degree-(d+2n) component.
FpMatrix step_matrix(const GradedComodule& m, const std::map<int, std::vector<int>>& comp, int d) {
    const int n = m.prime - 1;
    auto src = comp.find(d);
    auto dst = comp.find(d + 2 * n);
    const int nsrc = src == comp.end() ? 0 : static_cast<int>(src->second.size());
    const int ndst = dst == comp.end() ? 0 : static_cast<int>(dst->second.size());
    FpMatrix out(m.prime, ndst, nsrc);
    if (nsrc == 0 || ndst == 0) return out;
    std::map<int, int> dst_pos;
    for (int k = 0; k < ndst; ++k) dst_pos[dst->second[k]] = k;
    for (int j = 0; j < nsrc; ++j)
        for (const auto& [tgt, coeff] : m.theta[src->second[j]])
            out.set(dst_pos.at(tgt), j, coeff);
    return out;
}

// rank of theta^k restricted to the degree-d component.
int power_rank(const GradedComodule& m, const std::map<int, std::vector<int>>& comp, int d, int k) {
    const int n = m.prime - 1;
    auto it = comp.find(d);
    if (it == comp.end()) return 0;
    if (k == 0) return static_cast<int>(it->second.size());
    FpMatrix acc = step_matrix(m, comp, d);
    for (int j = 1; j < k; ++j) acc = step_matrix(m, comp, d + 2 * n * j).mul(acc);
    return acc.rank();
}

std::string summand_id(const Summand& s, int copy, int cell) {
    return "s" + std::to_string(s.shift) + "l" + std::to_string(s.length) + "n" +
           std::to_string(copy) + "x" + std::to_string(cell);
}

void check_even(const GradedComodule& m, const char* what) {
    for (const auto& g : m.generators)
        if (g.degree % 2 != 0)
            fail(ErrorKind::OddDegree,
                 std::string(what) + ": generator '" + g.id + "' has odd degree " +
                     std::to_string(g.degree));
}

}  // namespace

void validate(const GradedComodule& m) {
    require_odd_prime(m.prime);
    const int n = m.prime - 1;
    if (m.theta.size() != m.generators.size())
        fail(ErrorKind::InvariantViolation, "theta table size differs from generator count");
    std::set<std::string> ids;
    for (const auto& g : m.generators)
        if (!ids.insert(g.id).second)
            fail(ErrorKind::InvariantViolation, "duplicate generator id '" + g.id + "'");
    for (int i = 0; i < m.dim(); ++i) {
        for (const auto& [tgt, coeff] : m.theta[i]) {
            if (tgt < 0 || tgt >= m.dim())
                fail(ErrorKind::InvariantViolation, "theta target index out of range");
            if (coeff <= 0 || coeff >= m.prime)
                fail(ErrorKind::InvariantViolation, "theta coefficient not reduced or zero");
            if (m.generators[tgt].degree != m.generators[i].degree + 2 * n)
                fail(ErrorKind::InvariantViolation,
                     "theta entry from '" + m.generators[i].id + "' to '" + m.generators[tgt].id +
                         "' does not raise degree by " + std::to_string(2 * n));
        }
    }
    auto comp = components(m);
    for (const auto& [d, idx] : comp)
        if (power_rank(m, comp, d, m.prime) != 0)
            fail(ErrorKind::InvariantViolation,
                 "theta^p does not vanish on the degree-" + std::to_string(d) + " component");
}

SummandList canonical(SummandList list) {
    std::sort(list.begin(), list.end());
    return list;
}

long long total_dim(const SummandList& list) {
    long long d = 0;
    for (const auto& s : list) d += s.length;
    return d;
}

SummandList decompose(const GradedComodule& m) {
    validate(m);
    const int p = m.prime;
    const int n = p - 1;
    auto comp = components(m);

    SummandList out;
    long long covered = 0;
    for (const auto& [s, idx] : comp) {
        std::vector<int> ge(p + 2, 0);
        for (int l = 1; l <= p; ++l)
            ge[l] = power_rank(m, comp, s, l - 1) - power_rank(m, comp, s - 2 * n, l);
        for (int l = 1; l <= p; ++l) {
            int exact = ge[l] - ge[l + 1];
            if (exact < 0)
                fail(ErrorKind::InvariantViolation, "negative summand count in decomposition");
            for (int i = 0; i < exact; ++i) out.push_back({s, l});
            covered += static_cast<long long>(exact) * l;
        }
    }
    out = canonical(std::move(out));
    if (covered != m.dim())
        fail(ErrorKind::InvariantViolation, "decomposition does not cover the module");
    if (!reconstruction_matches(m, out))
        fail(ErrorKind::InvariantViolation, "decomposition failed the reconstruction check");
    return out;
}

GradedComodule tensor_comodule(const GradedComodule& a, const GradedComodule& b) {
    if (a.prime != b.prime) fail(ErrorKind::InvalidArgument, "prime mismatch in tensor");
    validate(a);
    validate(b);
    check_even(a, "tensor_comodule");
    check_even(b, "tensor_comodule");

    GradedComodule out{a.prime, {}, {}};
    auto pair_index = [&](int i, int j) { return i * b.dim() + j; };
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out.generators.push_back({a.generators[i].id + "*" + b.generators[j].id,
                                      a.generators[i].degree + b.generators[j].degree});
    out.theta.resize(out.generators.size());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            auto& row = out.theta[pair_index(i, j)];
            for (const auto& [tgt, c] : a.theta[i]) row.emplace_back(pair_index(tgt, j), c);
            for (const auto& [tgt, c] : b.theta[j]) row.emplace_back(pair_index(i, tgt), c);
        }
    return out;
}

namespace {

// Exponent-vector basis of the degree-k multiset monomials plus the theta
// action by the Leibniz rule. Shared by sym_comodule and the Y_2p builder
// (the latter uses a degree cap instead of a fixed k).
struct MonomialBasis {
    std::vector<std::vector<int>> monomials;
    std::map<std::vector<int>, int> index;
};

std::string monomial_id(const std::vector<int>& expo, const std::vector<std::string>& names) {
    std::string id;
    for (size_t v = 0; v < expo.size(); ++v) {
        if (expo[v] == 0) continue;
        if (!id.empty()) id += "*";
        id += names[v];
        if (expo[v] > 1) id += "^" + std::to_string(expo[v]);
    }
    return id.empty() ? "1" : id;
}

}  // namespace

GradedComodule sym_comodule(const GradedComodule& m, int k) {
    validate(m);
    const int p = m.prime;
    if (k < 0 || k >= p)
        fail(ErrorKind::OutOfRange, "symmetric power exponent " + std::to_string(k) +
                                        " outside 0.." + std::to_string(p - 1));
    check_even(m, "sym_comodule");

    const int d = m.dim();
    MonomialBasis basis;
    std::vector<int> expo(std::max(d, 1), 0);
    auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
        if (d == 0) return;
        if (pos == d - 1) {
            expo[pos] = remaining;
            basis.monomials.push_back(expo);
            expo[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            expo[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        expo[pos] = 0;
    };
    if (d > 0) enumerate(enumerate, 0, k);
    else if (k == 0) basis.monomials.push_back({});
    for (size_t i = 0; i < basis.monomials.size(); ++i) basis.index[basis.monomials[i]] = static_cast<int>(i);

    std::vector<std::string> names(d);
    for (int i = 0; i < d; ++i) names[i] = m.generators[i].id;

    GradedComodule out{p, {}, {}};
    for (const auto& mono : basis.monomials) {
        int degree = 0;
        for (int v = 0; v < d; ++v) degree += mono[v] * m.generators[v].degree;
        out.generators.push_back({monomial_id(mono, names), degree});
    }
    out.theta.resize(out.generators.size());
    for (size_t i = 0; i < basis.monomials.size(); ++i) {
        const auto& mono = basis.monomials[i];
        std::map<int, long long> image;
        for (int v = 0; v < d; ++v) {
            if (mono[v] == 0) continue;
            for (const auto& [tgt, c] : m.theta[v]) {
                std::vector<int> next = mono;
                next[v] -= 1;
                next[tgt] += 1;
                image[basis.index.at(next)] += static_cast<long long>(mono[v]) * c;
            }
        }
        for (const auto& [j, c] : image) {
            int cr = mod_reduce(c, p);
            if (cr != 0) out.theta[i].emplace_back(j, cr);
        }
    }
    return out;
}

namespace {

GradedComodule build_y2p(int p, int max_degree, bool linear_only) {
    require_odd_prime(p);
    const int n = p - 1;
    if (max_degree < 2 * p)
        fail(ErrorKind::DegreeTooSmall, "max_degree " + std::to_string(max_degree) +
                                            " is below the bottom class degree " +
                                            std::to_string(2 * p));

    // Variables c_{p+nk} with degree 2(p+nk) <= max_degree.
    std::vector<int> var_index;  // the subscript i of c_i
    for (int i = p; 2 * i <= max_degree; i += n) var_index.push_back(i);
    const int nv = static_cast<int>(var_index.size());
    std::vector<std::string> names(nv);
    for (int v = 0; v < nv; ++v) names[v] = "c" + std::to_string(var_index[v]);

    // Monomials of total degree <= max_degree (degree >= 1 in the variables;
    // the empty monomial is the unit of the polynomial algebra, which is the
    // split-off zero cell and carries no theta, so it is omitted).
    std::vector<std::vector<int>> monomials;
    std::vector<int> expo(nv, 0);
    auto enumerate = [&](auto&& self, int pos, int budget) -> void {
        if (pos == nv) {
            if (!std::all_of(expo.begin(), expo.end(), [](int e) { return e == 0; }))
                monomials.push_back(expo);
            return;
        }
        if (linear_only) {
            const bool used = !std::all_of(expo.begin(), expo.begin() + pos,
                                           [](int e) { return e == 0; });
            for (int e = 0; e <= (used ? 0 : 1); ++e) {
                if (e * 2 * var_index[pos] > budget) break;
                expo[pos] = e;
                self(self, pos + 1, budget - e * 2 * var_index[pos]);
            }
        } else {
            for (int e = 0; e * 2 * var_index[pos] <= budget; ++e) {
                expo[pos] = e;
                self(self, pos + 1, budget - e * 2 * var_index[pos]);
            }
        }
        expo[pos] = 0;
    };
    enumerate(enumerate, 0, max_degree);
    std::sort(monomials.begin(), monomials.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = static_cast<int>(i);

    GradedComodule out{p, {}, {}};
    for (const auto& mono : monomials) {
        int degree = 0;
        for (int v = 0; v < nv; ++v) degree += mono[v] * 2 * var_index[v];
        out.generators.push_back({monomial_id(mono, names), degree});
    }
    out.theta.resize(out.generators.size());
    for (size_t i = 0; i < monomials.size(); ++i) {
        const auto& mono = monomials[i];
        std::map<int, long long> image;
        for (int v = 0; v < nv; ++v) {
            if (mono[v] == 0) continue;
            int coeff = mod_reduce(var_index[v] + n, p);
            if (coeff == 0) continue;
            if (v + 1 >= nv) continue;  // image lands above the truncation
            std::vector<int> next = mono;
            next[v] -= 1;
            next[v + 1] += 1;
            auto it = index.find(next);
            if (it == index.end()) continue;  // image lands above the truncation
            image[it->second] += static_cast<long long>(mono[v]) * coeff;
        }
        for (const auto& [j, c] : image) {
            int cr = mod_reduce(c, p);
            if (cr != 0) out.theta[i].emplace_back(j, cr);
        }
    }
    validate(out);
    return out;
}

}  // namespace

GradedComodule y2p_comodule(int p, int max_degree) { return build_y2p(p, max_degree, false); }

GradedComodule y2p_linear_comodule(int p, int max_degree) { return build_y2p(p, max_degree, true); }

bool summand_complete(const Summand& s, int p, int max_degree) {
    if (s.length == p) return true;
    return s.shift + 2 * (p - 1) * s.length <= max_degree;
}

GradedComodule model_comodule(int p, const SummandList& list) {
    require_odd_prime(p);
    const int n = p - 1;
    GradedComodule out{p, {}, {}};
    std::map<Summand, int> copies;
    for (const auto& s : list) {
        if (s.length < 1 || s.length > p)
            fail(ErrorKind::OutOfRange, "summand length outside 1..p");
        int copy = copies[s]++;
        int base = out.dim();
        for (int k = 0; k < s.length; ++k) {
            out.generators.push_back({summand_id(s, copy, k), s.shift + 2 * n * k});
            out.theta.emplace_back();
            if (k > 0) out.theta[base + k - 1].emplace_back(base + k, 1);
        }
    }
    return out;
}

bool reconstruction_matches(const GradedComodule& m, const SummandList& list) {
    GradedComodule model = model_comodule(m.prime, list);
    auto comp_m = components(m);
    auto comp_r = components(model);

    std::set<int> degrees;
    for (const auto& [d, idx] : comp_m) degrees.insert(d);
    for (const auto& [d, idx] : comp_r) degrees.insert(d);
    for (int d : degrees) {
        size_t dm = comp_m.count(d) ? comp_m.at(d).size() : 0;
        size_t dr = comp_r.count(d) ? comp_r.at(d).size() : 0;
        if (dm != dr) return false;
        for (int k = 1; k < m.prime; ++k)
            if (power_rank(m, comp_m, d, k) != power_rank(model, comp_r, d, k)) return false;
    }
    return true;
}

std::vector<int> power_sums_from_chern(const std::vector<int>& cherns, int p) {
    require_odd_prime(p);
    const int k = static_cast<int>(cherns.size());
    std::vector<int> c(k + 1, 0), psi(k + 1, 0);
    for (int i = 1; i <= k; ++i) c[i] = mod_reduce(cherns[i - 1], p);
    for (int m = 1; m <= k; ++m) {
        long long acc = 0;
        for (int i = 1; i < m; ++i) {
            long long term = static_cast<long long>(c[i]) * psi[m - i] % p;
            acc += (i % 2 == 1) ? term : p - term;
        }
        long long last = static_cast<long long>(m % p) * c[m] % p;
        acc += (m % 2 == 1) ? last : p - last;
        psi[m] = mod_reduce(acc, p);
    }
    return std::vector<int>(psi.begin() + 1, psi.end());
}

const char* to_string(OrientVerdict v) {
    switch (v) {
        case OrientVerdict::Orientable: return "Orientable";
        case OrientVerdict::NotOrientable: return "NotOrientable";
        case OrientVerdict::Undetermined: return "Undetermined";
    }
    return "Unknown";
}

OrientVerdict orientable_chern_determined(const GradedComodule& z, int psi_val) {
    require_odd_prime(z.prime);
    const int span = 2 * z.prime - 2;
    bool sparse = true;
    for (int i = 1; i < z.dim(); ++i) {
        int diff = z.generators[i].degree - z.generators[0].degree;
        if (((diff % span) + span) % span != 0) {
            sparse = false;
            break;
        }
    }
    if (!sparse) return OrientVerdict::Undetermined;
    return mod_reduce(psi_val, z.prime) == 0 ? OrientVerdict::Orientable
                                             : OrientVerdict::NotOrientable;
}

std::string to_string(const SummandList& list) {
    std::string out;
    for (const auto& s : list) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(s.shift) + "," + std::to_string(s.length) + ")";
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace eo
