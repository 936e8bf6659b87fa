#pragma once

#include <memory>

#include "gman/vector_field.hpp"

namespace gman {

class DoubledContext;
using DoubledPtr = std::shared_ptr<const DoubledContext>;

/// Shifted-tangent chart doubling: for each base coordinate z a generator
/// D[z] of degree |z|+1, appended after the base block in base order.
/// Differential forms are plain polynomials over this chart.
class DoubledContext : public std::enable_shared_from_this<DoubledContext> {
  public:
    static DoubledPtr make(ContextPtr base);

    const ContextPtr& base() const { return base_; }
    const ContextPtr& total() const { return total_; }
    int n_base() const { return base_->size(); }

    int d_index(int base_index) const { return base_->size() + base_index; }
    bool is_d(int total_index) const { return total_index >= base_->size(); }
    int base_of(int total_index) const { return total_index - base_->size(); }

    static std::string d_name(const std::string& base_name) { return "D[" + base_name + "]"; }

    /// Embed a base polynomial into the doubled chart.
    Polynomial lift(const Polynomial& p) const;
    /// Inverse of lift for polynomials with no D-generators.
    Polynomial project_base(const Polynomial& p) const;

  private:
    DoubledContext() = default;
    ContextPtr base_;
    ContextPtr total_;
};

/// A differential form: a polynomial over the doubled chart. Per monomial the
/// form degree counts D-generators and deg = total - form is the degree of
/// the form.
class Form {
  public:
    Form() = default;
    Form(DoubledPtr dc, Polynomial poly);
    static Form zero(DoubledPtr dc);
    /// The generator D[z] for base coordinate `base_index`.
    static Form d_generator(DoubledPtr dc, int base_index);
    /// A 0-form from a base polynomial.
    static Form from_base(DoubledPtr dc, const Polynomial& p);

    const DoubledPtr& doubling() const { return dc_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    int form_degree_of(const Monomial& m) const;
    /// Constant number of D-generators across monomials, if any.
    Degree form_degree() const;
    Degree total_degree() const { return poly_.degree(); }
    /// total - form, when constant across monomials ("the degree of a form").
    Degree degree() const;

    Form operator-() const { return Form(dc_, -poly_); }
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const Rational& c, const Form& w) { return Form(w.dc_, c * w.poly_); }
    friend Form operator/(const Form& w, const Rational& c) { return Form(w.dc_, w.poly_ / c); }
    bool operator==(const Form& rhs) const;

  private:
    DoubledPtr dc_;
    Polynomial poly_;
};

/// de Rham differential: the doubled-chart field sum_i D[z^i] d/dz^i.
Form de_rham(const Form& w);
/// d of a base function, as a 1-form.
Form de_rham(const DoubledPtr& dc, const Polynomial& base_f);

/// Contraction i_X for X a field on the base chart: the derivation with
/// i_X D[z^j] = X^j and i_X z^j = 0; equivalently sum_i X^i d/dD[z^i].
/// Form degree drops by 1, total degree changes by deg(X) - 1.
Form contract(const GradedVectorField& x, const Form& w);

/// Cartan's magic formula L_X w = i_X dw + (-1)^{deg X} d i_X w.
Form lie_derivative(const GradedVectorField& x, const Form& w);

/// Degree of a homogeneous form (total minus form degree).
Degree degree_of_form(const Form& w);

}  // namespace gman
