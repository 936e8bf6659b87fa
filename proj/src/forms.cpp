#include "gman/forms.hpp"

namespace gman {

DoubledPtr DoubledContext::make(ContextPtr base) {
    std::vector<std::pair<std::string, int>> specs;
    specs.reserve(static_cast<size_t>(2 * base->size()));
    for (int i = 0; i < base->size(); ++i) specs.emplace_back(base->name(i), base->degree(i));
    for (int i = 0; i < base->size(); ++i)
        specs.emplace_back(d_name(base->name(i)), base->degree(i) + 1);
    auto dc = std::shared_ptr<DoubledContext>(new DoubledContext());
    dc->base_ = std::move(base);
    dc->total_ = GradingContext::declare(specs);
    return dc;
}

Polynomial DoubledContext::lift(const Polynomial& p) const {
    require_same_context(base_, p.context());
    std::vector<int> index_map;
    index_map.reserve(static_cast<size_t>(base_->size()));
    for (int i = 0; i < base_->size(); ++i) index_map.push_back(i);
    return inject(p, total_, index_map);
}

Polynomial DoubledContext::project_base(const Polynomial& p) const {
    require_same_context(total_, p.context());
    for (const auto& [m, c] : p.terms())
        for (int i = base_->size(); i < total_->size(); ++i)
            if (m.e[static_cast<size_t>(i)] != 0)
                throw Error("project_base: polynomial has D-generators");
    std::vector<int> kept;
    kept.reserve(static_cast<size_t>(base_->size()));
    for (int i = 0; i < base_->size(); ++i) kept.push_back(i);
    return restrict_to(p, base_, kept);
}

Form::Form(DoubledPtr dc, Polynomial poly) : dc_(std::move(dc)), poly_(std::move(poly)) {
    require_same_context(dc_->total(), poly_.context());
}

Form Form::zero(DoubledPtr dc) {
    Polynomial z = Polynomial::zero(dc->total());
    return Form(std::move(dc), std::move(z));
}

Form Form::d_generator(DoubledPtr dc, int base_index) {
    Polynomial g = Polynomial::coordinate(dc->total(), dc->d_index(base_index));
    return Form(std::move(dc), std::move(g));
}

Form Form::from_base(DoubledPtr dc, const Polynomial& p) {
    Polynomial lifted = dc->lift(p);
    return Form(std::move(dc), std::move(lifted));
}

int Form::form_degree_of(const Monomial& m) const {
    int fd = 0;
    for (int i = dc_->n_base(); i < dc_->total()->size(); ++i) fd += m.e[static_cast<size_t>(i)];
    return fd;
}

Degree Form::form_degree() const {
    if (poly_.is_zero()) return Degree{Degree::Kind::Zero, 0};
    bool first = true;
    int fd = 0;
    for (const auto& [m, c] : poly_.terms()) {
        int d = form_degree_of(m);
        if (first) {
            fd = d;
            first = false;
        } else if (d != fd) {
            return Degree{Degree::Kind::Mixed, 0};
        }
    }
    return Degree{Degree::Kind::Homogeneous, fd};
}

Degree Form::degree() const {
    if (poly_.is_zero()) return Degree{Degree::Kind::Zero, 0};
    bool first = true;
    int deg = 0;
    for (const auto& [m, c] : poly_.terms()) {
        int d = poly_.monomial_degree(m) - form_degree_of(m);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return Degree{Degree::Kind::Mixed, 0};
        }
    }
    return Degree{Degree::Kind::Homogeneous, deg};
}

Form operator+(const Form& a, const Form& b) { return Form(a.dc_, a.poly_ + b.poly_); }
Form operator-(const Form& a, const Form& b) { return Form(a.dc_, a.poly_ - b.poly_); }
Form operator*(const Form& a, const Form& b) { return Form(a.dc_, a.poly_ * b.poly_); }

bool Form::operator==(const Form& rhs) const { return poly_ == rhs.poly_; }

Form de_rham(const Form& w) {
    const DoubledPtr& dc = w.doubling();
    const ContextPtr& total = dc->total();
    Polynomial r = Polynomial::zero(total);
    for (int i = 0; i < dc->n_base(); ++i)
        r += Polynomial::coordinate(total, dc->d_index(i)) * partial_derivative(w.poly(), i);
    return Form(dc, std::move(r));
}

Form de_rham(const DoubledPtr& dc, const Polynomial& base_f) {
    return de_rham(Form::from_base(dc, base_f));
}

Form contract(const GradedVectorField& x, const Form& w) {
    const DoubledPtr& dc = w.doubling();
    require_same_context(x.context(), dc->base());
    const ContextPtr& total = dc->total();
    Polynomial r = Polynomial::zero(total);
    for (int i = 0; i < dc->n_base(); ++i) {
        if (x.component(i).is_zero()) continue;
        r += dc->lift(x.component(i)) * partial_derivative(w.poly(), dc->d_index(i));
    }
    return Form(dc, std::move(r));
}

Form lie_derivative(const GradedVectorField& x, const Form& w) {
    Form a = contract(x, de_rham(w));
    Form b = de_rham(contract(x, w));
    return (x.degree() % 2 != 0) ? a - b : a + b;
}

Degree degree_of_form(const Form& w) { return w.degree(); }

}  // namespace gman
