#pragma once

#include <optional>
#include <vector>

#include "gman/polynomial.hpp"

namespace gman {

/// Dense rational matrix, row major. Small sizes only; everything exact.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
    static RatMatrix identity(int n);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const RatMatrix&) const = default;
};

RatMatrix operator*(const RatMatrix& m, const RatMatrix& n);

/// Inverse by exact Gauss-Jordan; nullopt when singular.
std::optional<RatMatrix> rat_inverse(const RatMatrix& m);

int rat_rank(RatMatrix m);

/// Basis of the left kernel {v : v M = 0}, returned in reduced row echelon
/// form (rows are the basis vectors).
RatMatrix left_kernel(const RatMatrix& m);

/// Dense matrix over the graded polynomial ring. Entries need not commute, so
/// products keep the left-to-right order (M*N)_{ik} = sum_j M_{ij} * N_{jk}.
struct PolyMatrix {
    ContextPtr ctx;
    int rows = 0, cols = 0;
    std::vector<Polynomial> a;

    PolyMatrix() = default;
    PolyMatrix(ContextPtr c, int r, int k);
    static PolyMatrix identity(ContextPtr c, int n);
    static PolyMatrix from_rational(ContextPtr c, const RatMatrix& m);

    Polynomial& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Polynomial& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const;
    /// The part constant in all coordinates.
    RatMatrix constant_part() const;
    bool operator==(const PolyMatrix&) const = default;
};

PolyMatrix operator*(const PolyMatrix& m, const PolyMatrix& n);
PolyMatrix operator*(const RatMatrix& m, const PolyMatrix& n);
PolyMatrix operator+(const PolyMatrix& m, const PolyMatrix& n);
PolyMatrix operator-(const PolyMatrix& m, const PolyMatrix& n);

struct NeumannInverse {
    enum class Status {
        Ok,              ///< certified two-sided inverse found
        SingularConstant,///< the constant part is not invertible over the rationals
        BoundExceeded,   ///< series did not terminate within the bound
    };
    Status status = Status::BoundExceeded;
    PolyMatrix inverse;  // valid when status == Ok
    int order = 0;       // number of Neumann terms used
    bool constant_only = false;  // true when the matrix itself was constant
};

/// Certified inverse of M = A0 + N over the polynomial ring: A0 is the
/// constant part (must be invertible over Q) and the series
/// sum_m (-A0^{-1} N)^m A0^{-1} must terminate within `bound`. The result is
/// verified two-sided before being reported Ok.
NeumannInverse neumann_inverse(const PolyMatrix& m, int bound);

}  // namespace gman
