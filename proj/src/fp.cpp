#include "eo/fp.hpp"

#include <algorithm>
#include <string>

namespace eo {

int mod_reduce(long long x, int p) {
    long long r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int mod_pow(int base, long long exp, int p) {
    long long result = 1;
    long long b = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<int>(result);
}

int mod_inverse(int x, int p) {
    x = mod_reduce(x, p);
    if (x == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse mod " + std::to_string(p));
    return mod_pow(x, p - 2, p);
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(int p) {
    if (!is_odd_prime(p))
        fail(ErrorKind::InvalidArgument, "prime must be an odd prime, got " + std::to_string(p));
    if (p > 251)
        fail(ErrorKind::TooLarge, "prime " + std::to_string(p) + " exceeds the supported bound 251");
}

FpMatrix::FpMatrix(int prime, int rows, int cols)
    : prime_(prime), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
    require_odd_prime(prime);
    if (rows < 0 || cols < 0) fail(ErrorKind::InvalidArgument, "negative matrix dimensions");
}

FpMatrix FpMatrix::identity(int prime, int n) {
    FpMatrix m(prime, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(int i, int j, long long value) {
    data_[static_cast<size_t>(i) * cols_ + j] = static_cast<uint8_t>(mod_reduce(value, prime_));
}

FpMatrix FpMatrix::add(const FpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || prime_ != other.prime_)
        fail(ErrorKind::InvalidArgument, "shape or prime mismatch in add");
    FpMatrix out(prime_, rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = static_cast<uint8_t>((data_[k] + other.data_[k]) % prime_);
    return out;
}

FpMatrix FpMatrix::sub(const FpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || prime_ != other.prime_)
        fail(ErrorKind::InvalidArgument, "shape or prime mismatch in sub");
    FpMatrix out(prime_, rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = static_cast<uint8_t>((data_[k] + prime_ - other.data_[k]) % prime_);
    return out;
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
    if (cols_ != other.rows_ || prime_ != other.prime_)
        fail(ErrorKind::InvalidArgument, "shape or prime mismatch in mul");
    FpMatrix out(prime_, rows_, other.cols_);
    std::vector<long long> acc(other.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            const uint8_t* row = &other.data_[static_cast<size_t>(k) * other.cols_];
            for (int j = 0; j < other.cols_; ++j) acc[j] += static_cast<long long>(a) * row[j];
        }
        for (int j = 0; j < other.cols_; ++j) out.set(i, j, acc[j] % prime_);
    }
    return out;
}

FpMatrix FpMatrix::pow(long long exp) const {
    if (!square()) fail(ErrorKind::NotSquare, "pow requires a square matrix");
    if (exp < 0) fail(ErrorKind::InvalidArgument, "negative matrix power");
    FpMatrix result = identity(prime_, rows_);
    FpMatrix base = *this;
    while (exp > 0) {
        if (exp & 1) result = result.mul(base);
        base = base.mul(base);
        exp >>= 1;
    }
    return result;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& other) const {
    if (prime_ != other.prime_) fail(ErrorKind::InvalidArgument, "prime mismatch in kronecker");
    FpMatrix out(prime_, rows_ * other.rows_, cols_ * other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            int a = at(i, j);
            if (a == 0) continue;
            for (int k = 0; k < other.rows_; ++k)
                for (int l = 0; l < other.cols_; ++l)
                    out.set(i * other.rows_ + k, j * other.cols_ + l,
                            static_cast<long long>(a) * other.at(k, l));
        }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(prime_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint8_t v) { return v == 0; });
}

void FpMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k)
        std::swap(data_[static_cast<size_t>(i) * cols_ + k], data_[static_cast<size_t>(j) * cols_ + k]);
}

namespace {

// Row-eliminates in place. When full_rref is set, pivots are normalized to 1
// and cleared above as well. Returns pivot columns.
std::vector<int> eliminate(FpMatrix& a, bool full_rref) {
    const int p = a.prime();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(piv, r);
        if (full_rref) {
            int inv = mod_inverse(a.at(r, col), p);
            for (int k = col; k < a.cols(); ++k) a.set(r, k, static_cast<long long>(a.at(r, k)) * inv);
        }
        int lead = a.at(r, col);
        int lead_inv = full_rref ? 1 : mod_inverse(lead, p);
        int start = full_rref ? 0 : r + 1;
        for (int i = start; i < a.rows(); ++i) {
            if (i == r) continue;
            int f = a.at(i, col);
            if (f == 0) continue;
            long long factor = static_cast<long long>(f) * lead_inv % p;
            for (int k = col; k < a.cols(); ++k)
                a.set(i, k, a.at(i, k) + (p - factor) * a.at(r, k));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    FpMatrix a = *this;
    return static_cast<int>(eliminate(a, false).size());
}

FpMatrix FpMatrix::inverse() const {
    if (!square()) fail(ErrorKind::NotSquare, "inverse requires a square matrix");
    FpMatrix aug(prime_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    auto pivots = eliminate(aug, true);
    if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
        fail(ErrorKind::InvalidArgument, "matrix is not invertible");
    FpMatrix out(prime_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, aug.at(i, cols_ + j));
    return out;
}

std::pair<FpMatrix, std::vector<int>> rref(const FpMatrix& m) {
    FpMatrix a = m;
    auto pivots = eliminate(a, true);
    return {a, pivots};
}

std::vector<int> nilpotent_block_sizes(const FpMatrix& n) {
    if (!n.square()) fail(ErrorKind::NotSquare, "nilpotent_block_sizes requires a square matrix");
    const int dim = n.rows();
    if (dim == 0) return {};

    std::vector<int> ranks{dim};
    FpMatrix power = n;
    while (true) {
        int r = power.rank();
        if (r == ranks.back())
            fail(ErrorKind::NotNilpotent, "rank stabilized at " + std::to_string(r));
        ranks.push_back(r);
        if (r == 0) break;
        if (static_cast<int>(ranks.size()) > dim)
            fail(ErrorKind::NotNilpotent, "matrix power did not vanish");
        power = n.mul(power);
    }

    const int kmax = static_cast<int>(ranks.size()) - 1;
    std::vector<int> out;
    for (int len = 1; len <= kmax; ++len) {
        int ge_len = ranks[len - 1] - ranks[len];
        int ge_next = (len < kmax) ? ranks[len] - ranks[len + 1] : 0;
        for (int i = 0; i < ge_len - ge_next; ++i) out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eo
