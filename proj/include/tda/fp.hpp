#pragma once

#include <vector>

#include "tda/common.hpp"

namespace tda {

// Coefficient field Z/p. Constructors validate primality.
struct field_spec {
    int p = 2;

    field_spec() = default;
    explicit field_spec(int prime);
};

bool is_prime(int n);

int fp_normalize(long long x, int p);
int fp_add(int a, int b, int p);
int fp_sub(int a, int b, int p);
int fp_mul(int a, int b, int p);
int fp_inv(int a, int p);

// Dense matrix over Z/p. Row-major; entries stored reduced to [0, p).
class fp_matrix {
public:
    fp_matrix() = default;
    fp_matrix(int rows, int cols, int p);

    static fp_matrix identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, long long v) {
        data_[static_cast<size_t>(r) * cols_ + c] = fp_normalize(v, p_);
    }

    fp_matrix multiply(const fp_matrix& rhs) const;
    std::vector<int> apply(const std::vector<int>& v) const;

    // Columns of `extra` are appended; useful for building block matrices.
    fp_matrix hconcat(const fp_matrix& extra) const;
    fp_matrix vconcat(const fp_matrix& below) const;
    fp_matrix submatrix_rows(int first_row, int num_rows) const;

    int rank() const;

    // Basis of {x : Ax = 0}, one column per basis vector.
    fp_matrix nullspace() const;

    // Basis of the column space (a subset of the original columns, reduced).
    fp_matrix column_space() const;

    // Solves Ax = b; false if inconsistent. x is resized to cols().
    bool solve(const std::vector<int>& b, std::vector<int>& x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 2;
    std::vector<int> data_;
};

} // namespace tda
