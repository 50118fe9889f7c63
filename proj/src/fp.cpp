#include "tda/fp.hpp"

namespace tda {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

field_spec::field_spec(int prime) : p(prime) {
    if (!is_prime(prime)) throw tda_error("field", "coefficient modulus must be prime, got " + std::to_string(prime));
}

int fp_normalize(long long x, int p) {
    long long r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int fp_add(int a, int b, int p) { return fp_normalize(static_cast<long long>(a) + b, p); }
int fp_sub(int a, int b, int p) { return fp_normalize(static_cast<long long>(a) - b, p); }
int fp_mul(int a, int b, int p) { return fp_normalize(static_cast<long long>(a) * b, p); }

int fp_inv(int a, int p) {
    a = fp_normalize(a, p);
    if (a == 0) throw tda_error("field", "division by zero mod " + std::to_string(p));
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return fp_normalize(t, p);
}

fp_matrix::fp_matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<size_t>(rows) * cols, 0) {}

fp_matrix fp_matrix::identity(int n, int p) {
    fp_matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

fp_matrix fp_matrix::multiply(const fp_matrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw tda_error("shape", "matrix product shape mismatch");
    fp_matrix out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.set(i, j, out.at(i, j) + static_cast<long long>(a) * rhs.at(k, j));
        }
    return out;
}

std::vector<int> fp_matrix::apply(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw tda_error("shape", "matrix-vector shape mismatch");
    std::vector<int> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols_; ++j) acc += static_cast<long long>(at(i, j)) * v[j];
        out[i] = fp_normalize(acc, p_);
    }
    return out;
}

fp_matrix fp_matrix::hconcat(const fp_matrix& extra) const {
    if (rows_ != extra.rows_ || p_ != extra.p_)
        throw tda_error("shape", "hconcat shape mismatch");
    fp_matrix out(rows_, cols_ + extra.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        for (int j = 0; j < extra.cols_; ++j) out.set(i, cols_ + j, extra.at(i, j));
    }
    return out;
}

fp_matrix fp_matrix::vconcat(const fp_matrix& below) const {
    if (cols_ != below.cols_ || p_ != below.p_)
        throw tda_error("shape", "vconcat shape mismatch");
    fp_matrix out(rows_ + below.rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
    return out;
}

fp_matrix fp_matrix::submatrix_rows(int first_row, int num_rows) const {
    fp_matrix out(num_rows, cols_, p_);
    for (int i = 0; i < num_rows; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(first_row + i, j));
    return out;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<int>& a, int rows, int cols, int p) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) { pivot_row = i; break; }
        if (pivot_row < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(a[static_cast<size_t>(r) * cols + j], a[static_cast<size_t>(pivot_row) * cols + j]);
        int inv = fp_inv(a[static_cast<size_t>(r) * cols + c], p);
        for (int j = 0; j < cols; ++j)
            a[static_cast<size_t>(r) * cols + j] = fp_mul(a[static_cast<size_t>(r) * cols + j], inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int f = a[static_cast<size_t>(i) * cols + c];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<size_t>(i) * cols + j] = fp_sub(
                    a[static_cast<size_t>(i) * cols + j],
                    fp_mul(f, a[static_cast<size_t>(r) * cols + j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int fp_matrix::rank() const {
    std::vector<int> a = data_;
    return static_cast<int>(row_reduce(a, rows_, cols_, p_).size());
}

fp_matrix fp_matrix::nullspace() const {
    std::vector<int> a = data_;
    std::vector<int> pivots = row_reduce(a, rows_, cols_, p_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    fp_matrix basis(cols_, static_cast<int>(free_cols.size()), p_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.set(fc, static_cast<int>(k), 1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            int v = a[r * cols_ + fc];
            if (v != 0) basis.set(pivots[r], static_cast<int>(k), p_ - v);
        }
    }
    return basis;
}

fp_matrix fp_matrix::column_space() const {
    // pivots of A^T's row space == independent columns of A
    std::vector<int> a = data_;
    std::vector<int> pivots = row_reduce(a, rows_, cols_, p_);
    fp_matrix out(rows_, static_cast<int>(pivots.size()), p_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(k), at(i, pivots[k]));
    return out;
}

bool fp_matrix::solve(const std::vector<int>& b, std::vector<int>& x) const {
    if (static_cast<int>(b.size()) != rows_)
        throw tda_error("shape", "solve rhs size mismatch");
    int cols = cols_ + 1;
    std::vector<int> a(static_cast<size_t>(rows_) * cols);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) a[static_cast<size_t>(i) * cols + j] = at(i, j);
        a[static_cast<size_t>(i) * cols + cols_] = fp_normalize(b[i], p_);
    }
    std::vector<int> pivots = row_reduce(a, rows_, cols, p_);
    if (!pivots.empty() && pivots.back() == cols_) return false; // inconsistent
    x.assign(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = a[r * cols + cols_];
    return true;
}

} // namespace tda
