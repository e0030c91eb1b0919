#pragma once

#include <cstdint>
#include <vector>

namespace stacky {

// Dense linear algebra over F_p, p = 2^61 - 1.  Row vectors only; enough
// for the per-degree kernel and span computations in the genus-zero
// simplification pipeline.
namespace modp {

constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);

using Row = std::vector<std::uint64_t>;

// Incremental row-space with reduced pivots; insert returns true when the
// row enlarged the space.
class RowSpace {
public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}
    bool insert(Row row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int ncols_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
};

// Left kernel of the matrix (rows x cols): vectors v with sum_i v_i row_i = 0.
// Returned as a basis in reduced echelon form with respect to the column
// order of the identity tracking block (i.e. original row indices).
std::vector<Row> left_kernel(const std::vector<Row>& rows, int ncols);

}  // namespace modp

}  // namespace stacky
