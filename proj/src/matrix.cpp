#include "sparselp/matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "sparselp/error.hpp"

namespace sparselp {

namespace {

void require_eps(double eps)
{
    if (!(eps >= 0.0))
        throw ParameterError("threshold tolerance must be non-negative");
}

void require_columns(std::span<const std::size_t> columns, std::size_t limit)
{
    for (auto c : columns)
        if (c >= limit)
            throw DimensionError("column " + std::to_string(c) + " out of range");
}

} // namespace

// ---------------------------------------------------------------------------
// COO

CooMatrix::CooMatrix(std::size_t rows, std::size_t cols, std::vector<Index> row_idx, std::vector<Index> col_idx,
                     std::vector<double> values)
    : rows_(rows), cols_(cols), row_idx_(std::move(row_idx)), col_idx_(std::move(col_idx)), values_(std::move(values))
{
    if (row_idx_.size() != values_.size() || col_idx_.size() != values_.size())
        throw ValidationError("COO arrays must have equal length");
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (row_idx_[k] >= rows_ || col_idx_[k] >= cols_)
            throw ValidationError("COO entry " + std::to_string(k) + " is out of range");
}

bool CooMatrix::is_canonical() const noexcept
{
    for (std::size_t k = 1; k < values_.size(); ++k) {
        const bool ordered = row_idx_[k - 1] < row_idx_[k] ||
                             (row_idx_[k - 1] == row_idx_[k] && col_idx_[k - 1] < col_idx_[k]);
        if (!ordered)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// CSR

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr, std::vector<Index> col_idx,
                     std::vector<double> values)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)), values_(std::move(values))
{
    validate();
}

CsrMatrix CsrMatrix::identity(std::size_t n)
{
    std::vector<std::size_t> ptr(n + 1);
    std::vector<Index> col(n);
    for (std::size_t i = 0; i < n; ++i) {
        ptr[i + 1] = i + 1;
        col[i] = static_cast<Index>(i);
    }
    return CsrMatrix(n, n, std::move(ptr), std::move(col), std::vector<double>(n, 1.0));
}

double CsrMatrix::at(std::size_t row, std::size_t col) const
{
    const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_.at(row));
    const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_.at(row + 1));
    const auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col)
        return 0.0;
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

void CsrMatrix::validate() const
{
    if (row_ptr_.size() != rows_ + 1)
        throw ValidationError("CSR row_ptr must have rows + 1 entries");
    if (row_ptr_.front() != 0)
        throw ValidationError("CSR row_ptr[0] must be 0");
    if (col_idx_.size() != values_.size())
        throw ValidationError("CSR col_idx and values must have equal length");
    if (row_ptr_.back() != values_.size())
        throw ValidationError("CSR row_ptr[rows] must equal nnz");
    for (std::size_t i = 0; i < rows_; ++i) {
        if (row_ptr_[i] > row_ptr_[i + 1])
            throw ValidationError("CSR row_ptr must be non-decreasing (row " + std::to_string(i) + ")");
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
            if (col_idx_[k] >= cols_)
                throw ValidationError("CSR column index out of range in row " + std::to_string(i));
            if (k > row_ptr_[i] && col_idx_[k - 1] >= col_idx_[k])
                throw ValidationError("CSR columns must strictly increase within row " + std::to_string(i));
        }
    }
}

// ---------------------------------------------------------------------------
// Dense

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
{
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows_ * cols_)
        throw DimensionError("dense data length does not match rows * cols");
}

DenseMatrix DenseMatrix::column(std::vector<double> values)
{
    const auto n = values.size();
    return DenseMatrix(n, 1, std::move(values));
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = 1.0;
    return out;
}

std::vector<double> DenseMatrix::column_values(std::size_t c) const
{
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

std::size_t DenseMatrix::nonzeros() const noexcept
{
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](double x) { return x != 0.0; }));
}

bool DenseMatrix::is_binary() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

// ---------------------------------------------------------------------------
// Conversions

CsrMatrix coo_to_csr(const CooMatrix& a)
{
    if (!a.is_canonical())
        throw ValidationError("COO input must be row-major sorted without duplicate entries");
    std::vector<std::size_t> row_ptr(a.rows() + 1, 0);
    for (Index r : a.row_idx())
        ++row_ptr[r + 1];
    for (std::size_t i = 0; i < a.rows(); ++i)
        row_ptr[i + 1] += row_ptr[i];
    return CsrMatrix(a.rows(), a.cols(), std::move(row_ptr),
                     std::vector<Index>(a.col_idx().begin(), a.col_idx().end()),
                     std::vector<double>(a.values().begin(), a.values().end()));
}

CooMatrix csr_to_coo(const CsrMatrix& a)
{
    std::vector<Index> rows;
    rows.reserve(a.nnz());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k)
            rows.push_back(static_cast<Index>(i));
    return CooMatrix(a.rows(), a.cols(), std::move(rows), std::vector<Index>(a.col_idx().begin(), a.col_idx().end()),
                     std::vector<double>(a.values().begin(), a.values().end()));
}

DenseMatrix densify(const CsrMatrix& a)
{
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = a.row_ptr()[i]; k < a.row_ptr()[i + 1]; ++k)
            out(i, a.col_idx()[k]) = a.values()[k];
    return out;
}

// ---------------------------------------------------------------------------
// Products

void spmv_into(const CsrMatrix& m, std::span<const double> x, std::span<double> y)
{
    if (x.size() != m.cols() || y.size() != m.rows())
        throw DimensionError("spmv: operand sizes do not match the matrix");
    const auto ptr = m.row_ptr();
    const auto col = m.col_idx();
    const auto val = m.values();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t k = ptr[i]; k < ptr[i + 1]; ++k)
            sum += val[k] * x[col[k]];
        y[i] = sum;
    }
}

void dense_mv_into(const DenseMatrix& a, std::span<const double> x, std::span<double> y)
{
    if (x.size() != a.cols() || y.size() != a.rows())
        throw DimensionError("dense_mv: operand sizes do not match the matrix");
    const auto data = a.data();
    const std::size_t n = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = data.data() + i * n;
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            sum += row[j] * x[j];
        y[i] = sum;
    }
}

void spmm_columns(const CsrMatrix& m, const DenseMatrix& b, std::span<const std::size_t> columns, DenseMatrix& out)
{
    if (b.rows() != m.cols() || out.rows() != m.rows() || out.cols() != b.cols())
        throw DimensionError("spmm: operand sizes do not match the matrix");
    require_columns(columns, b.cols());
    const auto ptr = m.row_ptr();
    const auto col = m.col_idx();
    const auto val = m.values();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (auto c : columns)
            out(i, c) = 0.0;
        for (std::size_t k = ptr[i]; k < ptr[i + 1]; ++k) {
            const double a = val[k];
            const std::size_t j = col[k];
            for (auto c : columns)
                out(i, c) += a * b(j, c);
        }
    }
}

void dense_mm_columns(const DenseMatrix& a, const DenseMatrix& b, std::span<const std::size_t> columns,
                      DenseMatrix& out)
{
    if (b.rows() != a.cols() || out.rows() != a.rows() || out.cols() != b.cols())
        throw DimensionError("dense_mm: operand sizes do not match the matrix");
    require_columns(columns, b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (auto c : columns)
            out(i, c) = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double x = a(i, j);
            for (auto c : columns)
                out(i, c) += x * b(j, c);
        }
    }
}

namespace {

std::vector<std::size_t> all_columns(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t c = 0; c < n; ++c)
        out[c] = c;
    return out;
}

} // namespace

DenseMatrix spmv(const CsrMatrix& m, const DenseMatrix& v)
{
    if (v.cols() != 1 || v.rows() != m.cols())
        throw DimensionError("spmv: expected a " + std::to_string(m.cols()) + " x 1 vector");
    DenseMatrix out(m.rows(), 1);
    spmv_into(m, v.data(), out.data());
    return out;
}

DenseMatrix spmm(const CsrMatrix& m, const DenseMatrix& b)
{
    if (b.rows() != m.cols())
        throw DimensionError("spmm: expected " + std::to_string(m.cols()) + " rows in the right operand");
    DenseMatrix out(m.rows(), b.cols());
    spmm_columns(m, b, all_columns(b.cols()), out);
    return out;
}

DenseMatrix dense_mv(const DenseMatrix& a, const DenseMatrix& v)
{
    if (v.cols() != 1 || v.rows() != a.cols())
        throw DimensionError("dense_mv: expected a " + std::to_string(a.cols()) + " x 1 vector");
    DenseMatrix out(a.rows(), 1);
    dense_mv_into(a, v.data(), out.data());
    return out;
}

DenseMatrix dense_mm(const DenseMatrix& a, const DenseMatrix& b)
{
    if (b.rows() != a.cols())
        throw DimensionError("dense_mm: expected " + std::to_string(a.cols()) + " rows in the right operand");
    DenseMatrix out(a.rows(), b.cols());
    dense_mm_columns(a, b, all_columns(b.cols()), out);
    return out;
}

// ---------------------------------------------------------------------------
// Thresholding and statistics

DenseMatrix theta(const DenseMatrix& x, double eps)
{
    require_eps(eps);
    DenseMatrix out = x;
    theta_in_place(out.data(), eps);
    return out;
}

void theta_in_place(std::span<double> x, double eps)
{
    require_eps(eps);
    for (double& v : x)
        v = theta(v, eps);
}

bool csr_memory_advantage(std::size_t rows, std::size_t cols, std::size_t nnz)
{
    const double bound = (static_cast<double>(rows) * (static_cast<double>(cols) - 1.0) - 1.0) / 2.0;
    return static_cast<double>(nnz) < bound;
}

void write_matrix_market(const CsrMatrix& m, std::ostream& out)
{
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = m.row_ptr()[i]; k < m.row_ptr()[i + 1]; ++k)
            out << (i + 1) << ' ' << (m.col_idx()[k] + 1) << ' ' << m.values()[k] << '\n';
    out.precision(old_precision);
}

} // namespace sparselp
