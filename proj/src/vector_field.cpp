#include "gman/vector_field.hpp"

#include <algorithm>

namespace gman {

GradedVectorField GradedVectorField::make(ContextPtr ctx, int degree,
                                          std::vector<Polynomial> components) {
    if (static_cast<int>(components.size()) != ctx->size())
        throw Error("vector field needs one component per coordinate");
    for (int i = 0; i < ctx->size(); ++i) {
        const Polynomial& c = components[static_cast<size_t>(i)];
        require_same_context(ctx, c.context());
        if (!c.degree().homogeneous_of(ctx->degree(i) + degree))
            throw DegreeError("component at " + ctx->name(i) + " is not homogeneous of degree " +
                              std::to_string(ctx->degree(i) + degree));
    }
    return GradedVectorField(std::move(ctx), degree, std::move(components));
}

GradedVectorField GradedVectorField::zero(ContextPtr ctx, int degree) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(ctx->size()));
    for (int i = 0; i < ctx->size(); ++i) comps.push_back(Polynomial::zero(ctx));
    return GradedVectorField(std::move(ctx), degree, std::move(comps));
}

GradedVectorField GradedVectorField::single(ContextPtr ctx, int degree, int coord,
                                            Polynomial value) {
    auto x = zero(ctx, degree);
    std::vector<Polynomial> comps = x.comps_;
    comps[static_cast<size_t>(coord)] = std::move(value);
    return make(std::move(ctx), degree, std::move(comps));
}

bool GradedVectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

GradedVectorField GradedVectorField::operator-() const {
    std::vector<Polynomial> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(-c);
    return GradedVectorField(ctx_, degree_, std::move(comps));
}

GradedVectorField operator+(const GradedVectorField& a, const GradedVectorField& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
        throw DegreeError("adding fields of different degree");
    std::vector<Polynomial> comps;
    comps.reserve(a.comps_.size());
    for (size_t i = 0; i < a.comps_.size(); ++i) comps.push_back(a.comps_[i] + b.comps_[i]);
    return GradedVectorField(a.ctx_, a.is_zero() ? b.degree_ : a.degree_, std::move(comps));
}

GradedVectorField operator-(const GradedVectorField& a, const GradedVectorField& b) {
    return a + (-b);
}

GradedVectorField operator*(const Rational& c, GradedVectorField x) {
    for (auto& comp : x.comps_) comp = c * comp;
    return x;
}

bool GradedVectorField::operator==(const GradedVectorField& rhs) const {
    if (!same_context(ctx_, rhs.ctx_)) return false;
    if (comps_ != rhs.comps_) return false;
    return degree_ == rhs.degree_ || is_zero();
}

Polynomial apply(const GradedVectorField& x, const Polynomial& f) {
    require_same_context(x.context(), f.context());
    Polynomial r = Polynomial::zero(f.context());
    for (int i = 0; i < x.context()->size(); ++i) {
        if (x.component(i).is_zero()) continue;
        r += x.component(i) * partial_derivative(f, i);
    }
    return r;
}

GradedVectorField commutator(const GradedVectorField& x, const GradedVectorField& y) {
    require_same_context(x.context(), y.context());
    const int k = x.degree(), l = y.degree();
    const bool flip = (k % 2 != 0) && (l % 2 != 0);
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(x.context()->size()));
    for (int i = 0; i < x.context()->size(); ++i) {
        Polynomial c = apply(x, y.component(i));
        Polynomial d = apply(y, x.component(i));
        comps.push_back(flip ? c + d : c - d);
    }
    return GradedVectorField::make(x.context(), k + l, std::move(comps));
}

GradedVectorField euler_field(ContextPtr ctx) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(ctx->size()));
    for (int i = 0; i < ctx->size(); ++i)
        comps.push_back(Rational(ctx->degree(i)) * Polynomial::coordinate(ctx, i));
    return GradedVectorField::make(std::move(ctx), 0, std::move(comps));
}

CohomologyCheck is_cohomological(const GradedVectorField& x) {
    CohomologyCheck result;
    if (x.degree() != 1 && !x.is_zero()) {
        result.ok = false;
        result.reason = "field has degree " + std::to_string(x.degree()) + ", not +1";
        return result;
    }
    GradedVectorField sq = commutator(x, x);
    for (int i = 0; i < x.context()->size(); ++i) {
        if (!sq.component(i).is_zero()) {
            result.ok = false;
            result.witness_coordinate = x.context()->name(i);
            result.witness = sq.component(i);
            return result;
        }
    }
    result.ok = true;
    return result;
}

bool OddFlow::obstruction_vanishes() const {
    return std::all_of(obstruction.begin(), obstruction.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

OddFlow odd_flow_first_order(const GradedVectorField& x) {
    if (x.degree() != 1) throw DegreeError("odd flow requires a degree +1 field");
    OddFlow flow;
    const ContextPtr& ctx = x.context();
    for (int i = 0; i < ctx->size(); ++i) {
        flow.velocity.push_back(x.component(i));
        Polynomial obs = Polynomial::zero(ctx);
        for (int j = 0; j < ctx->size(); ++j)
            obs += partial_derivative(x.component(i), j) * x.component(j);
        flow.obstruction.push_back(std::move(obs));
    }
    return flow;
}

}  // namespace gman
