#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eo/error.hpp"

namespace eo {

// Residue arithmetic over F_p with a runtime odd prime.
int mod_reduce(long long x, int p);
int mod_inverse(int x, int p);
int mod_pow(int base, long long exp, int p);
bool is_odd_prime(int p);
void require_odd_prime(int p);

// Dense matrix over F_p. Entries stored reduced in {0..p-1}.
class FpMatrix {
public:
    FpMatrix(int prime, int rows, int cols);

    static FpMatrix identity(int prime, int n);

    int prime() const { return prime_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    int at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, long long value);

    FpMatrix add(const FpMatrix& other) const;
    FpMatrix sub(const FpMatrix& other) const;
    FpMatrix mul(const FpMatrix& other) const;
    FpMatrix pow(long long exp) const;
    FpMatrix kronecker(const FpMatrix& other) const;
    FpMatrix transpose() const;

    bool is_zero() const;
    bool operator==(const FpMatrix& other) const = default;

    void swap_rows(int i, int j);

    // Forward elimination only; does not modify *this.
    int rank() const;

    // Inverse of a square invertible matrix; throws InvalidArgument otherwise.
    FpMatrix inverse() const;

private:
    int prime_;
    int rows_;
    int cols_;
    std::vector<uint8_t> data_;
};

// Reduced row-echelon form. Row space is preserved and the pivot column
// list is strictly increasing.
std::pair<FpMatrix, std::vector<int>> rref(const FpMatrix& m);

// Jordan type of a nilpotent matrix, as a sorted (ascending) partition.
// For every k >= 1 the number of blocks of length >= k equals
// rank(n^{k-1}) - rank(n^k).
std::vector<int> nilpotent_block_sizes(const FpMatrix& n);

}  // namespace eo
