#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace sparselp {

using Index = std::uint32_t;

inline constexpr double default_threshold_eps = 1e-8;

// Coordinate format. Structural checks (lengths, index ranges) run on
// construction; ordering is checked by is_canonical().
class CooMatrix {
public:
    CooMatrix() = default;
    CooMatrix(std::size_t rows, std::size_t cols, std::vector<Index> row_idx, std::vector<Index> col_idx,
              std::vector<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }
    std::span<const Index> row_idx() const noexcept { return row_idx_; }
    std::span<const Index> col_idx() const noexcept { return col_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    // Row-major sorted with no repeated (row, col) pair.
    bool is_canonical() const noexcept;

    friend bool operator==(const CooMatrix&, const CooMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Index> row_idx_;
    std::vector<Index> col_idx_;
    std::vector<double> values_;
};

// Compressed sparse row. Row i occupies [row_ptr[i], row_ptr[i+1]) of
// col_idx/values, with strictly increasing columns.
class CsrMatrix {
public:
    CsrMatrix() : row_ptr_{0} {}
    CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr, std::vector<Index> col_idx,
              std::vector<double> values);

    static CsrMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }
    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const Index> col_idx() const noexcept { return col_idx_; }
    std::span<const double> values() const noexcept { return values_; }

    // Value at (row, col); zero when not stored.
    double at(std::size_t row, std::size_t col) const;

    // Throws ValidationError naming the first broken invariant.
    void validate() const;

    friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<Index> col_idx_;
    std::vector<double> values_;
};

// Row-major dense storage. Interpretation vectors are rows x 1 matrices and
// guess matrices rows x h.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static DenseMatrix column(std::vector<double> values);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    std::vector<double> column_values(std::size_t c) const;
    std::size_t nonzeros() const noexcept;
    bool is_binary() const noexcept;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

CsrMatrix coo_to_csr(const CooMatrix& a);
CooMatrix csr_to_coo(const CsrMatrix& a);
DenseMatrix densify(const CsrMatrix& a);

// Sparse products. Each output entry sums the stored row entries left to
// right in column order.
DenseMatrix spmv(const CsrMatrix& m, const DenseMatrix& v);
DenseMatrix spmm(const CsrMatrix& m, const DenseMatrix& b);

// Dense counterparts with the same per-entry summation order (zeros included).
DenseMatrix dense_mv(const DenseMatrix& a, const DenseMatrix& v);
DenseMatrix dense_mm(const DenseMatrix& a, const DenseMatrix& b);

// In-place kernels used by the fixpoint loops. `columns` selects the columns
// of `b` to multiply; the other columns of `out` are left untouched.
void spmv_into(const CsrMatrix& m, std::span<const double> x, std::span<double> y);
void dense_mv_into(const DenseMatrix& a, std::span<const double> x, std::span<double> y);
void spmm_columns(const CsrMatrix& m, const DenseMatrix& b, std::span<const std::size_t> columns, DenseMatrix& out);
void dense_mm_columns(const DenseMatrix& a, const DenseMatrix& b, std::span<const std::size_t> columns,
                      DenseMatrix& out);

// 1 where x >= 1 - eps, else 0.
inline double theta(double x, double eps = default_threshold_eps) { return x >= 1.0 - eps ? 1.0 : 0.0; }
DenseMatrix theta(const DenseMatrix& x, double eps = default_threshold_eps);
void theta_in_place(std::span<double> x, double eps = default_threshold_eps);

// True when CSR storage is smaller than COO: nnz < (rows (cols - 1) - 1) / 2.
bool csr_memory_advantage(std::size_t rows, std::size_t cols, std::size_t nnz);

// Matrix Market "coordinate real general" text, 1-based indices.
void write_matrix_market(const CsrMatrix& m, std::ostream& out);

} // namespace sparselp
