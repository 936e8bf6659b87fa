#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "gman/grading.hpp"
#include "gman/rational.hpp"

namespace gman {

/// Exponent vector in chart order. Invariants: exponents nonnegative, odd
/// coordinates carry exponent <= 1; any reordering sign has been absorbed
/// into the owning coefficient.
struct Monomial {
    std::vector<int> e;

    explicit Monomial(int n_coords = 0) : e(static_cast<size_t>(n_coords), 0) {}

    int exponent(int i) const { return e[static_cast<size_t>(i)]; }
    bool is_constant() const;
    /// Word length: total number of generator letters.
    int length() const;

    auto operator<=>(const Monomial&) const = default;
};

/// Result of degree_of. `Zero` for the zero polynomial, `Mixed` when monomials
/// disagree on total degree.
struct Degree {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind = Kind::Zero;
    int value = 0;

    bool is_zero() const { return kind == Kind::Zero; }
    bool homogeneous() const { return kind == Kind::Homogeneous; }
    bool mixed() const { return kind == Kind::Mixed; }
    /// Homogeneous degree, treating 0 as acceptable for the zero polynomial.
    bool homogeneous_of(int d) const {
        return kind == Kind::Zero || (kind == Kind::Homogeneous && value == d);
    }
};

/// Exact-rational linear combination of Koszul-normalized monomials.
/// Normal form is unique: two polynomials are equal iff their term maps are.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, const Rational& c);
    static Polynomial coordinate(ContextPtr ctx, int index);
    static Polynomial coordinate(ContextPtr ctx, const std::string& name);
    static Polynomial monomial(ContextPtr ctx, const Monomial& m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The coefficient of the constant monomial (0 if absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    Degree degree() const;
    int monomial_degree(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return c * std::move(p); }
    friend Polynomial operator/(Polynomial p, const Rational& c);
    bool operator==(const Polynomial& rhs) const;

    Polynomial pow(int n) const;

    void add_term(const Monomial& m, const Rational& c);

  private:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    ContextPtr ctx_;
    TermMap terms_;
};

/// Koszul product of canonical monomials: merging the generator words counts
/// one transposition per odd/odd pair that crosses, and an odd square kills
/// the product. Returns nullopt when the product vanishes.
std::optional<std::pair<int, Monomial>> multiply_monomials(const GradingContext& ctx,
                                                           const Monomial& a, const Monomial& b);

Polynomial multiply(const Polynomial& p, const Polynomial& q);

Degree degree_of(const Polynomial& p);

/// Left partial derivative: d/dz^i z^j = delta, with the signed Leibniz rule
/// d/dz^i (fg) = (d f) g + (-1)^{|z^i||f|} f (d g).
Polynomial partial_derivative(const Polynomial& f, int coord_index);
Polynomial partial_derivative(const Polynomial& f, const std::string& coord_name);

/// Simultaneous degree-preserving substitution within one chart. Coordinates
/// absent from `assignment` map to themselves.
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment);

/// Graded algebra morphism: every coordinate of p's chart gets an image in
/// `target` (same degree, or zero). Used for superfield expansion and chart
/// embeddings.
Polynomial substitute_all(const Polynomial& p, const std::vector<Polynomial>& images,
                          ContextPtr target);

/// Order-preserving chart embedding: index_map[i] is the index in `super` of
/// coordinate i. The map must be strictly increasing.
Polynomial inject(const Polynomial& p, ContextPtr super, const std::vector<int>& index_map);

/// Restriction onto a sub-chart: terms supported outside `kept` are dropped
/// (i.e. the complement is set to zero), the rest re-indexed. `kept` must be
/// strictly increasing; sub must list exactly those coordinates.
Polynomial restrict_to(const Polynomial& p, ContextPtr sub, const std::vector<int>& kept);

}  // namespace gman
