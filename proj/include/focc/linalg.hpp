#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "focc/scalar.hpp"

namespace focc {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool vec_is_zero(const Vec<K>& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

template <class K>
void vec_axpy(Vec<K>& y, const K& a, const Vec<K>& x)
{
    for (size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero())
            y[k] += a * x[k];
}

// Dense matrix over an exact field, row-major.
template <ScalarField K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, K(0)) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int k = 0; k < n; ++k)
            m.at(k, k) = K(1);
        return m;
    }
    static Matrix from_rows(int cols, const std::vector<Vec<K>>& rows)
    {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(rows[r].size()) != cols)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (int c = 0; c < cols; ++c)
                m.at(static_cast<int>(r), c) = rows[r][c];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const K& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    Vec<K> row(int r) const
    {
        Vec<K> v(cols_);
        for (int c = 0; c < cols_; ++c)
            v[c] = at(r, c);
        return v;
    }
    Vec<K> col(int c) const
    {
        Vec<K> v(rows_);
        for (int r = 0; r < rows_; ++r)
            v[r] = at(r, c);
        return v;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const K& v = a.at(r, k);
                if (v.is_zero())
                    continue;
                for (int c = 0; c < b.cols_; ++c)
                    if (!b.at(k, c).is_zero())
                        m.at(r, c) += v * b.at(k, c);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix add: shape mismatch");
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k)
            m.data_[k] += b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix sub: shape mismatch");
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k)
            m.data_[k] -= b.data_[k];
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Vec<K> apply(const Vec<K>& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Matrix apply: shape mismatch");
        Vec<K> out(rows_, K(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !v[c].is_zero())
                    out[r] += at(r, c) * v[c];
        return out;
    }

    // In-place reduced row echelon form. Pivot rule: first nonzero column,
    // earliest row, so results are reproducible. Returns pivot columns.
    std::vector<int> rref_in_place()
    {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0)
                continue;
            if (p != row)
                for (int c = 0; c < cols_; ++c)
                    std::swap(at(p, c), at(row, c));
            K inv = K(1) / at(row, col);
            if (!inv.is_one())
                for (int c = col; c < cols_; ++c)
                    if (!at(row, c).is_zero())
                        at(row, c) = at(row, c) * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero())
                    continue;
                K f = at(r, col);
                for (int c = col; c < cols_; ++c)
                    if (!at(row, c).is_zero())
                        at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const
    {
        Matrix m = *this;
        return static_cast<int>(m.rref_in_place().size());
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<K> data_;
};

template <ScalarField K>
Matrix<K> rref(Matrix<K> m)
{
    m.rref_in_place();
    return m;
}

// Exact subspace of K^ambient with an RREF row basis; membership and
// coordinates are deterministic.
template <ScalarField K>
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    Subspace(int ambient, const std::vector<Vec<K>>& spanning) : ambient_(ambient)
    {
        Matrix<K> m = Matrix<K>::from_rows(ambient, spanning);
        pivots_ = m.rref_in_place();
        basis_ = Matrix<K>(static_cast<int>(pivots_.size()), ambient);
        for (int r = 0; r < basis_.rows(); ++r)
            for (int c = 0; c < ambient; ++c)
                basis_.at(r, c) = m.at(r, c);
    }

    static Subspace full(int ambient)
    {
        Subspace s(ambient);
        s.basis_ = Matrix<K>::identity(ambient);
        for (int k = 0; k < ambient; ++k)
            s.pivots_.push_back(k);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Vec<K> basis_vector(int r) const { return basis_.row(r); }

    // Residual of v after eliminating against the basis; zero iff member.
    Vec<K> reduce(Vec<K> v) const
    {
        check_ambient(v);
        for (int r = 0; r < basis_.rows(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero())
                continue;
            K f = c;
            for (int k = 0; k < ambient_; ++k)
                if (!basis_.at(r, k).is_zero())
                    v[k] -= f * basis_.at(r, k);
        }
        return v;
    }
    bool member(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

    // Coordinates of v in the RREF basis, if v lies in the subspace.
    std::optional<Vec<K>> coords(const Vec<K>& v) const
    {
        check_ambient(v);
        Vec<K> w = v;
        Vec<K> out(basis_.rows(), K(0));
        for (int r = 0; r < basis_.rows(); ++r) {
            const K c = w[pivots_[r]];
            if (c.is_zero())
                continue;
            out[r] = c;
            for (int k = 0; k < ambient_; ++k)
                if (!basis_.at(r, k).is_zero())
                    w[k] -= c * basis_.at(r, k);
        }
        if (!vec_is_zero(w))
            return std::nullopt;
        return out;
    }

    bool contains(const Subspace& other) const
    {
        if (other.ambient_ != ambient_)
            return false;
        for (int r = 0; r < other.dim(); ++r)
            if (!member(other.basis_vector(r)))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; // RREF is canonical
    }

  private:
    void check_ambient(const Vec<K>& v) const
    {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("Subspace: ambient dimension mismatch");
    }

    int ambient_ = 0;
    Matrix<K> basis_; // rows, RREF
    std::vector<int> pivots_;
};

// Null space of m as a subspace of K^cols.
template <ScalarField K>
Subspace<K> kernel(const Matrix<K>& m)
{
    Matrix<K> r = m;
    std::vector<int> pivots = r.rref_in_place();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (size_t rr = 0; rr < pivots.size(); ++rr)
            v[pivots[rr]] = -r.at(static_cast<int>(rr), f);
        basis.push_back(std::move(v));
    }
    return Subspace<K>(m.cols(), basis);
}

// Column space of m as a subspace of K^rows.
template <ScalarField K>
Subspace<K> image(const Matrix<K>& m)
{
    std::vector<Vec<K>> cols;
    for (int c = 0; c < m.cols(); ++c)
        cols.push_back(m.col(c));
    return Subspace<K>(m.rows(), cols);
}

// A particular solution of m x = rhs, or absence when inconsistent.
template <ScalarField K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& rhs)
{
    if (static_cast<int>(rhs.size()) != m.rows())
        throw std::invalid_argument("solve: rhs dimension mismatch");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    std::vector<int> pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt; // inconsistent
    Vec<K> x(m.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

template <ScalarField K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<Vec<K>> rows;
    for (int r = 0; r < a.dim(); ++r)
        rows.push_back(a.basis_vector(r));
    for (int r = 0; r < b.dim(); ++r)
        rows.push_back(b.basis_vector(r));
    return Subspace<K>(a.ambient(), rows);
}

// Zassenhaus: row reduce [A|A; B|0]; rows with vanishing left block carry a
// basis of the intersection in the right block.
template <ScalarField K>
Subspace<K> subspace_intersect(const Subspace<K>& a, const Subspace<K>& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    const int n = a.ambient();
    Matrix<K> m(a.dim() + b.dim(), 2 * n);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            m.at(r, c) = a.basis().at(r, c);
            m.at(r, n + c) = a.basis().at(r, c);
        }
    for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < n; ++c)
            m.at(a.dim() + r, c) = b.basis().at(r, c);
    m.rref_in_place();
    std::vector<Vec<K>> rows;
    for (int r = 0; r < m.rows(); ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            left_zero = m.at(r, c).is_zero();
        if (!left_zero)
            continue;
        Vec<K> v(n);
        for (int c = 0; c < n; ++c)
            v[c] = m.at(r, n + c);
        if (!vec_is_zero(v))
            rows.push_back(std::move(v));
    }
    return Subspace<K>(n, rows);
}

// K^ambient / S with deterministic coset representatives: the standard basis
// vectors at the non-pivot columns of S's RREF basis.
template <ScalarField K>
class QuotientSpace {
  public:
    QuotientSpace() = default;
    QuotientSpace(int ambient, Subspace<K> sub) : ambient_(ambient), sub_(std::move(sub))
    {
        if (sub_.ambient() != ambient_)
            throw std::invalid_argument("QuotientSpace: ambient mismatch");
        std::vector<bool> is_pivot(ambient_, false);
        for (int p : sub_.pivots())
            is_pivot[p] = true;
        for (int c = 0; c < ambient_; ++c)
            if (!is_pivot[c])
                rep_cols_.push_back(c);
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rep_cols_.size()); }
    const Subspace<K>& modded() const { return sub_; }
    const std::vector<int>& representative_columns() const { return rep_cols_; }

    // Quotient coordinates of an ambient vector.
    Vec<K> project(const Vec<K>& v) const
    {
        Vec<K> red = sub_.reduce(v);
        Vec<K> out(dim());
        for (int j = 0; j < dim(); ++j)
            out[j] = red[rep_cols_[j]];
        return out;
    }

    // Canonical representative of quotient coordinates.
    Vec<K> section(const Vec<K>& q) const
    {
        if (static_cast<int>(q.size()) != dim())
            throw std::invalid_argument("QuotientSpace::section: dimension mismatch");
        Vec<K> v(ambient_, K(0));
        for (int j = 0; j < dim(); ++j)
            v[rep_cols_[j]] = q[j];
        return v;
    }
    Vec<K> section_basis_vector(int j) const
    {
        Vec<K> v(ambient_, K(0));
        v.at(rep_cols_.at(j)) = K(1);
        return v;
    }

    Matrix<K> projection_matrix() const
    {
        Matrix<K> m(dim(), ambient_);
        for (int c = 0; c < ambient_; ++c) {
            Vec<K> e(ambient_, K(0));
            e[c] = K(1);
            Vec<K> p = project(e);
            for (int r = 0; r < dim(); ++r)
                m.at(r, c) = p[r];
        }
        return m;
    }
    Matrix<K> section_matrix() const
    {
        Matrix<K> m(ambient_, dim());
        for (int j = 0; j < dim(); ++j)
            m.at(rep_cols_[j], j) = K(1);
        return m;
    }

  private:
    int ambient_ = 0;
    Subspace<K> sub_;
    std::vector<int> rep_cols_;
};

template <ScalarField K>
QuotientSpace<K> quotient(int ambient_dim, Subspace<K> s)
{
    return QuotientSpace<K>(ambient_dim, std::move(s));
}

} // namespace focc
