#pragma once

#include <nleib/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nleib {

/// Coordinate vector in Q^m with respect to the working basis.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t dim) : coords_(dim) {}
    explicit QVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static QVector unit(std::size_t dim, std::size_t index) {
        if (index >= dim) throw std::invalid_argument("QVector::unit: index out of range");
        QVector v(dim);
        v.coords_[index] = 1;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
    }

    QVector& operator+=(const QVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    QVector& operator-=(const QVector& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    QVector& operator*=(const Rational& c) {
        for (auto& x : coords_) x *= c;
        return *this;
    }

    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(const Rational& c, QVector v) { return v *= c; }
    friend QVector operator-(QVector v) {
        for (auto& x : v.coords_) x = -x;
        return v;
    }
    friend bool operator==(const QVector& a, const QVector& b) { return a.coords_ == b.coords_; }

private:
    void check_dim(const QVector& o) const {
        if (o.coords_.size() != coords_.size())
            throw std::invalid_argument("QVector: dimension mismatch");
    }

    std::vector<Rational> coords_;
};

/// Rectangular matrix over Q, stored by rows. The column count is carried
/// explicitly so empty matrices keep their ambient dimension.
class QMatrix {
public:
    explicit QMatrix(std::size_t cols) : cols_(cols) {}
    QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, QVector(cols)) {}
    explicit QMatrix(std::vector<QVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.dim() != cols_) throw std::invalid_argument("QMatrix: ragged rows");
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const QVector& row(std::size_t i) const { return rows_[i]; }
    QVector& row(std::size_t i) { return rows_[i]; }
    const std::vector<QVector>& row_list() const { return rows_; }

    void add_row(QVector v) {
        if (v.dim() != cols_) throw std::invalid_argument("QMatrix::add_row: dimension mismatch");
        rows_.push_back(std::move(v));
    }

    /// Matrix-vector product M*v.
    QVector apply(const QVector& v) const {
        if (v.dim() != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
        QVector out(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i][j] != 0 && v[j] != 0) acc += rows_[i][j] * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_;
    std::vector<QVector> rows_;
};

/// Reduced row echelon form with zero rows dropped. Pivot selection scans
/// left to right for the first nonzero entry; the result is the unique RREF
/// basis of the row space, so equal row spaces give identical outputs.
inline QMatrix rref(const QMatrix& m) {
    std::vector<QVector> rows = m.row_list();
    const std::size_t cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        const Rational inv = Rational(1) / rows[lead][col];
        rows[lead] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[lead][j];
        }
        ++lead;
    }
    rows.resize(lead);
    return QMatrix(std::move(rows), cols);
}

/// Canonical subspace of Q^m: basis rows are in RREF, no zero rows, pivot
/// columns strictly increasing with unit pivots. Two subspaces are equal
/// iff their basis lists are identical.
class Subspace {
public:
    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

    static Subspace full(std::size_t ambient) {
        std::vector<QVector> basis;
        basis.reserve(ambient);
        for (std::size_t i = 0; i < ambient; ++i) basis.push_back(QVector::unit(ambient, i));
        return Subspace(ambient, std::move(basis));
    }

    static Subspace span(const std::vector<QVector>& vs, std::size_t ambient) {
        QMatrix m(ambient);
        for (const auto& v : vs) {
            if (v.dim() != ambient) throw std::invalid_argument("span: ambient dimension mismatch");
            m.add_row(v);
        }
        return Subspace(ambient, rref(m).row_list());
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVector>& basis() const { return basis_; }

    /// Pivot column of each basis row, strictly increasing.
    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> ps;
        ps.reserve(basis_.size());
        for (const auto& row : basis_) {
            std::size_t j = 0;
            while (j < ambient_ && row[j] == 0) ++j;
            ps.push_back(j);
        }
        return ps;
    }

    /// Residual of v after elimination against the RREF basis; zero iff v lies here.
    QVector reduce(const QVector& v) const {
        if (v.dim() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
        QVector r = v;
        const auto pivots = pivot_columns();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rational c = r[pivots[i]];
            if (c != 0) r -= c * basis_[i];
        }
        return r;
    }

    bool contains(const QVector& v) const { return reduce(v).is_zero(); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const QVector& v) { return contains(v); });
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, std::vector<QVector> basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    std::vector<QVector> basis_;
};

inline bool member(const Subspace& s, const QVector& v) { return s.contains(v); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<QVector> vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(vs, a.ambient_dim());
}

/// Right null space {v : M v = 0}, canonical.
inline Subspace kernel(const QMatrix& m) {
    const std::size_t cols = m.cols();
    const QMatrix r = rref(m);
    std::vector<std::size_t> pivots;
    pivots.reserve(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (j < cols && r.row(i)[j] == 0) ++j;
        pivots.push_back(j);
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.row(i)[f];
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, cols);
}

/// A ∩ B via the kernel of the stacked coordinate system: solutions of
/// sum(a_i u_i) = sum(b_j w_j) pulled back into the ambient space.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t ambient = a.ambient_dim();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace::zero(ambient);

    QMatrix m(ambient, da + db);
    for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t j = 0; j < da; ++j) m.row(i)[j] = a.basis()[j][i];
        for (std::size_t j = 0; j < db; ++j) m.row(i)[da + j] = -b.basis()[j][i];
    }
    const Subspace k = kernel(m);
    std::vector<QVector> vs;
    vs.reserve(k.dim());
    for (const auto& coeffs : k.basis()) {
        QVector w(ambient);
        for (std::size_t j = 0; j < da; ++j)
            if (coeffs[j] != 0) w += coeffs[j] * a.basis()[j];
        vs.push_back(std::move(w));
    }
    return Subspace::span(vs, ambient);
}

}  // namespace nleib
