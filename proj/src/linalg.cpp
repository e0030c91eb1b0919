#include "stacky/linalg.hpp"

namespace stacky {
namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return add(a, P - b); }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % P);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }

bool RowSpace::insert(Row row) {
    for (size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t c = row[pivots_[k]];
        if (c == 0) continue;
        for (int j = 0; j < ncols_; ++j) row[j] = sub(row[j], mul(c, rows_[k][j]));
    }
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    std::uint64_t iv = inv(row[pivot]);
    for (int j = 0; j < ncols_; ++j) row[j] = mul(row[j], iv);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

std::vector<Row> left_kernel(const std::vector<Row>& rows, int ncols) {
    const int n = static_cast<int>(rows.size());
    // Augment [A | I] and eliminate on the A-part only.
    std::vector<Row> work(n);
    for (int i = 0; i < n; ++i) {
        work[i].assign(ncols + n, 0);
        for (int j = 0; j < ncols; ++j) work[i][j] = rows[i][j];
        work[i][ncols + i] = 1;
    }
    int rank = 0;
    for (int col = 0; col < ncols && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (work[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[rank], work[pivot]);
        std::uint64_t iv = inv(work[rank][col]);
        for (int j = 0; j < ncols + n; ++j) work[rank][j] = mul(work[rank][j], iv);
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            std::uint64_t c = work[i][col];
            if (c == 0) continue;
            for (int j = 0; j < ncols + n; ++j) work[i][j] = sub(work[i][j], mul(c, work[rank][j]));
        }
        ++rank;
    }
    std::vector<Row> kernel;
    for (int i = rank; i < n; ++i) {
        bool zero = true;
        for (int j = 0; j < ncols && zero; ++j) zero = work[i][j] == 0;
        if (!zero) continue;
        kernel.emplace_back(work[i].begin() + ncols, work[i].end());
    }
    return kernel;
}

}  // namespace modp
}  // namespace stacky
