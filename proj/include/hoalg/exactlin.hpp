#pragma once

// Exact graded linear algebra over the rationals.
//
// Spaces are finite, integer graded and may be tensor products of plain
// spaces; maps are degree homogeneous and stored sparsely by column, so a
// map out of a large tensor power only pays for its nonzero columns.
// Tensor products of maps follow the Koszul rule: moving a map of degree d
// past an element of degree e costs (-1)^(d*e).

#include "hoalg/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hoalg::exactlin {

using Index = std::uint64_t;
using SparseVector = std::vector<std::pair<Index, Scalar>>;  // sorted by index, no zeros

struct BasisElement {
    std::string name;
    int degree = 0;
    bool operator==(const BasisElement&) const = default;
};

class GradedSpace {
public:
    /// The zero space.
    GradedSpace();
    /// A plain space. Names must be unique.
    explicit GradedSpace(std::vector<BasisElement> basis);

    static GradedSpace tensor(std::span<const GradedSpace> factors);
    /// base^{⊗n}; n = 0 gives the ground field (one basis element of degree 0).
    static GradedSpace tensor_power(const GradedSpace& base, int n);

    Index dim() const;
    int degree(Index i) const;
    std::string name(Index i) const;

    /// Number of plain factors (1 for a plain space).
    std::size_t tensor_rank() const { return factors_.size(); }
    GradedSpace factor(std::size_t k) const;

    std::vector<std::size_t> decode(Index i) const;
    Index encode(std::span<const std::size_t> digits) const;

    /// Basis of a plain space; throws for tensor products.
    const std::vector<BasisElement>& basis() const;
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const GradedSpace& other) const;

private:
    struct Basis {
        std::vector<BasisElement> elements;
        std::unordered_map<std::string, std::size_t> index;
    };
    explicit GradedSpace(std::vector<std::shared_ptr<const Basis>> factors);

    std::vector<std::shared_ptr<const Basis>> factors_;
};

/// Accumulates (index, scalar) pairs and emits a canonical SparseVector.
class VectorBuilder {
public:
    void add(Index i, const Scalar& c);
    void add(const SparseVector& v, const Scalar& c);
    bool empty() const { return acc_.empty(); }
    SparseVector take();

private:
    std::map<Index, Scalar> acc_;
};

SparseVector scaled(const SparseVector& v, const Scalar& c);
SparseVector sum(const SparseVector& a, const SparseVector& b, const Scalar& cb = 1);

class GradedMap {
public:
    struct Entry {
        Index row = 0;
        Index col = 0;
        Scalar value;
    };

    GradedMap(GradedSpace source, GradedSpace target, int degree);

    static GradedMap identity(const GradedSpace& space);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int degree() const { return degree_; }

    /// Adds c to entry (row, col). Throws if the entry would break the
    /// degree constraint degree(row) = degree(col) + degree().
    void add_to_entry(Index row, Index col, const Scalar& c);
    void add_to_column(Index col, const SparseVector& v, const Scalar& c = 1);

    Scalar entry(Index row, Index col) const;
    const SparseVector& column(Index col) const;
    const std::map<Index, SparseVector>& columns() const { return columns_; }

    SparseVector apply(const SparseVector& v) const;

    bool is_zero() const { return columns_.empty(); }
    std::size_t nonzero_count() const;
    /// Column-major first nonzero entry.
    std::optional<Entry> first_nonzero() const;

    GradedMap& operator+=(const GradedMap& other);
    GradedMap& operator-=(const GradedMap& other);
    GradedMap& operator*=(const Scalar& c);

    friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
    friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
    friend GradedMap operator*(const Scalar& c, GradedMap a) { return a *= c; }

    bool operator==(const GradedMap& other) const;

private:
    void check_same_shape(const GradedMap& other, const char* what) const;

    GradedSpace source_;
    GradedSpace target_;
    int degree_ = 0;
    std::map<Index, SparseVector> columns_;
};

/// g ∘ f. Requires source(g) == target(f).
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// f_1 ⊗ … ⊗ f_k with the Koszul sign: on x_1 ⊗ … ⊗ x_k the factor f_m
/// passes x_1 … x_{m-1}, contributing (-1)^{|f_m| (|x_1|+…+|x_{m-1}|)}.
GradedMap tensor_product(std::span<const GradedMap> factors);

/// id^{⊗before} ⊗ f ⊗ id^{⊗after} over a plain space.
GradedMap insert_map(const GradedSpace& base, std::size_t before, const GradedMap& f, std::size_t after);

/// The map base^{⊗n} → base^{⊗n}, a_1 ⊗ … ⊗ a_n ↦ ± a_{σ(1)} ⊗ … ⊗ a_{σ(n)},
/// with the Koszul sign of the rearrangement. sigma holds σ(1..n), 1-based.
GradedMap permutation_map(const GradedSpace& base, std::span<const int> sigma);

/// Σ_s id^{⊗s} ⊗ d ⊗ id^{⊗(n-s-1)}: the induced differential on base^{⊗n}.
GradedMap tensor_power_differential(const GradedMap& d, int n);

/// Dense matrix for the small elimination problems (homology, quotients).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(std::size_t n);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;                          // reduced row echelon form
    std::vector<std::size_t> pivot_columns;  // one per nonzero row, increasing
};

/// Gauss-Jordan elimination pivoting on the first usable column.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the null space, one vector per free column (1 at that column).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);
/// Throws Error when singular.
Matrix inverse(const Matrix& m);

}  // namespace hoalg::exactlin
