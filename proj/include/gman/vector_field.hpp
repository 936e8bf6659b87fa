#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gman/polynomial.hpp"

namespace gman {

/// A homogeneous graded derivation X = sum X^i d/dz^i, stored by its
/// components. Construction checks that every nonzero component has degree
/// |z^i| + deg(X); the zero field carries any declared degree.
class GradedVectorField {
  public:
    static GradedVectorField make(ContextPtr ctx, int degree, std::vector<Polynomial> components);
    static GradedVectorField zero(ContextPtr ctx, int degree);
    /// Field with a single component `value` at `coord`.
    static GradedVectorField single(ContextPtr ctx, int degree, int coord, Polynomial value);

    const ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    const Polynomial& component(int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    bool is_zero() const;

    GradedVectorField operator-() const;
    friend GradedVectorField operator+(const GradedVectorField& a, const GradedVectorField& b);
    friend GradedVectorField operator-(const GradedVectorField& a, const GradedVectorField& b);
    friend GradedVectorField operator*(const Rational& c, GradedVectorField x);
    bool operator==(const GradedVectorField& rhs) const;

  private:
    GradedVectorField(ContextPtr ctx, int degree, std::vector<Polynomial> comps)
        : ctx_(std::move(ctx)), degree_(degree), comps_(std::move(comps)) {}
    ContextPtr ctx_;
    int degree_;
    std::vector<Polynomial> comps_;
};

/// X(f) = sum_i X^i * (d f / d z^i). A graded derivation of degree deg(X).
Polynomial apply(const GradedVectorField& x, const Polynomial& f);

/// [X,Y] = X o Y - (-1)^{kl} Y o X, computed through operator composition on
/// the coordinates; degree k+l.
GradedVectorField commutator(const GradedVectorField& x, const GradedVectorField& y);

/// E = sum |z^i| z^i d/dz^i; acts on homogeneous f by |f| * f.
GradedVectorField euler_field(ContextPtr ctx);

struct CohomologyCheck {
    bool ok = false;
    /// On failure: first chart coordinate where [X,X] has a nonzero component.
    std::optional<std::string> witness_coordinate;
    Polynomial witness;  // the nonzero component of [X,X], when any
    std::string reason;  // set when the degree precondition fails
};

/// True iff deg X = 1 and [X,X] = 0.
CohomologyCheck is_cohomological(const GradedVectorField& x);

struct OddFlow {
    std::vector<Polynomial> velocity;     // v^i = X^i
    std::vector<Polynomial> obstruction;  // sum_j (dX^i/dz^j) * X^j
    bool obstruction_vanishes() const;
};

/// First-order expansion of the odd-time flow of a degree +1 field.
OddFlow odd_flow_first_order(const GradedVectorField& x);

}  // namespace gman
