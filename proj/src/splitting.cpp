#include "eo/splitting.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace eo {

namespace {

void check_length(int l, int p) {
    if (l < 1 || l > p)
        fail(ErrorKind::OutOfRange,
             "length " + std::to_string(l) + " outside 1.." + std::to_string(p));
}

// All generator degrees in a single congruence class mod k.
bool is_sparse(const GradedComodule& m, int k) {
    for (int i = 1; i < m.dim(); ++i) {
        int diff = m.generators[i].degree - m.generators[0].degree;
        if (((diff % k) + k) % k != 0) return false;
    }
    return true;
}

}  // namespace

const char* to_string(SplitRule r) {
    switch (r) {
        case SplitRule::TwoPSparse: return "TwoPSparse";
        case SplitRule::TwoNSparse: return "TwoNSparse";
        case SplitRule::SmallRange: return "SmallRange";
        case SplitRule::FreeSplitOff: return "FreeSplitOff";
        case SplitRule::Undetermined: return "Undetermined";
    }
    return "Unknown";
}

GradedComodule homology_of_Xl(int l, int p) {
    require_odd_prime(p);
    check_length(l, p);
    const int n = p - 1;
    GradedComodule out{p, {}, {}};
    for (int k = 0; k < l; ++k) {
        out.generators.push_back({"x" + std::to_string(k), 2 * n * k});
        out.theta.emplace_back();
        if (k > 0) out.theta[k - 1].emplace_back(k, 1);
    }
    return out;
}

FpMatrix zeta_matrix(int l, int p) {
    require_odd_prime(p);
    check_length(l, p);
    FpMatrix m = FpMatrix::identity(p, l);
    for (int i = 0; i + 1 < l; ++i) m.set(i, i + 1, -1);
    return m;
}

SplittingResult split_spectrum(const SpectrumSpec& spec) {
    const GradedComodule& m = spec.comodule;
    validate(m);
    const int p = m.prime;
    const int n = p - 1;

    if (spec.connective)
        for (const auto& g : m.generators)
            if (g.degree < 0)
                fail(ErrorKind::InvariantViolation,
                     "connective spectrum has generator in negative degree " +
                         std::to_string(g.degree));

    // Rule 1: all cells in one class mod 2p. Theta is forced to vanish
    // (2n is not 0 mod 2p), so every generator is a length-1 summand.
    if (is_sparse(m, 2 * p)) {
        SummandList summands;
        for (const auto& g : m.generators) summands.push_back({g.degree, 1});
        return {SplitRule::TwoPSparse, canonical(std::move(summands)), {}};
    }

    // Rules 2 and 3 assert the full splitting computed by decompose.
    if (spec.connective && is_sparse(m, 2 * n))
        return {SplitRule::TwoNSparse, decompose(m), {}};

    if (spec.torsion_free && m.dim() > 0) {
        int lo = m.generators[0].degree, hi = lo;
        for (const auto& g : m.generators) {
            lo = std::min(lo, g.degree);
            hi = std::max(hi, g.degree);
        }
        if (hi - lo <= 2 * p * n - 2) return {SplitRule::SmallRange, decompose(m), {}};
    }

    // Rule 4: detach the free (length-p) summands; the rest is reported
    // without a homotopy-type claim.
    SummandList all = decompose(m);
    SummandList frees, rest;
    for (const auto& s : all) (s.length == p ? frees : rest).push_back(s);
    if (frees.empty()) return {SplitRule::Undetermined, {}, canonical(std::move(rest))};
    return {SplitRule::FreeSplitOff, canonical(std::move(frees)), canonical(std::move(rest))};
}

SummandList smash_splitting(const SummandList& a, const SummandList& b, int p) {
    require_odd_prime(p);
    const int n = p - 1;
    SummandList out;
    for (const auto& sa : a)
        for (const auto& sb : b) {
            int r = sa.length, s = sb.length;
            check_length(r, p);
            check_length(s, p);
            if (r > s) std::swap(r, s);
            const int shift = sa.shift + sb.shift;
            const int c = (r + s <= p) ? r : p - s;
            for (int i = c + 1; i <= r; ++i) out.push_back({shift + 2 * n * (r - i), p});
            for (int i = 1; i <= c; ++i) out.push_back({shift + 2 * n * (r - i), s - r + 2 * i - 1});
        }
    return canonical(std::move(out));
}

namespace {

// Graded symmetric power of a single summand, computed from the comodule
// model and cached per (length, k).
const SummandList& sym_single(int l, int k, int p,
                              std::map<std::pair<int, int>, SummandList>& cache) {
    auto key = std::make_pair(l, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SummandList value = decompose(sym_comodule(homology_of_Xl(l, p), k));
    return cache.emplace(key, std::move(value)).first->second;
}

SummandList shifted(SummandList list, int by) {
    for (auto& s : list) s.shift += by;
    return list;
}

SummandList sym_rec(const SummandList& items, size_t idx, int k, int p,
                    std::map<std::pair<int, int>, SummandList>& cache) {
    if (idx == items.size()) return k == 0 ? SummandList{{0, 1}} : SummandList{};
    SummandList out;
    for (int j = 0; j <= k; ++j) {
        SummandList head = shifted(sym_single(items[idx].length, j, p, cache),
                                   j * items[idx].shift);
        if (head.empty()) continue;
        SummandList tail = sym_rec(items, idx + 1, k - j, p, cache);
        SummandList prod = smash_splitting(head, tail, p);
        out.insert(out.end(), prod.begin(), prod.end());
    }
    return canonical(std::move(out));
}

}  // namespace

SummandList sym_splitting(const SummandList& m, int k, int p) {
    require_odd_prime(p);
    if (k < 1 || k >= p)
        fail(ErrorKind::OutOfRange,
             "symmetric power exponent " + std::to_string(k) + " outside 1.." + std::to_string(p - 1));
    std::map<std::pair<int, int>, SummandList> cache;
    return sym_rec(m, 0, k, p, cache);
}

}  // namespace eo
