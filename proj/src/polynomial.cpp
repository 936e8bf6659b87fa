#include "gman/polynomial.hpp"

#include <algorithm>

namespace gman {

bool Monomial::is_constant() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int Monomial::length() const {
    int n = 0;
    for (int x : e) n += x;
    return n;
}

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Monomial(p.ctx_->size()), c);
    return p;
}

Polynomial Polynomial::coordinate(ContextPtr ctx, int index) {
    Polynomial p(std::move(ctx));
    if (index < 0 || index >= p.ctx_->size())
        throw UnknownCoordinateError("#" + std::to_string(index));
    Monomial m(p.ctx_->size());
    m.e[static_cast<size_t>(index)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::coordinate(ContextPtr ctx, const std::string& name) {
    int i = ctx->index_of(name);
    return coordinate(std::move(ctx), i);
}

Polynomial Polynomial::monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (static_cast<int>(m.e.size()) != p.ctx_->size())
        throw Error("monomial width does not match chart");
    for (int i = 0; i < p.ctx_->size(); ++i) {
        if (m.e[static_cast<size_t>(i)] < 0) throw Error("negative exponent");
        if (p.ctx_->is_odd(i) && m.e[static_cast<size_t>(i)] > 1)
            return p;  // odd square vanishes
    }
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_term() const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.find(Monomial(ctx_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < ctx_->size(); ++i) d += m.e[static_cast<size_t>(i)] * ctx_->degree(i);
    return d;
}

Degree Polynomial::degree() const {
    if (terms_.empty()) return Degree{Degree::Kind::Zero, 0};
    bool first = true;
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int md = monomial_degree(m);
        if (first) {
            d = md;
            first = false;
        } else if (md != d) {
            return Degree{Degree::Kind::Mixed, 0};
        }
    }
    return Degree{Degree::Kind::Homogeneous, d};
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (!ctx_) {
        *this = rhs;
        return *this;
    }
    require_same_context(ctx_, rhs.ctx_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (!ctx_) {
        *this = -rhs;
        return *this;
    }
    require_same_context(ctx_, rhs.ctx_);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!same_context(ctx_, rhs.ctx_)) return false;
    return terms_ == rhs.terms_;
}

std::optional<std::pair<int, Monomial>> multiply_monomials(const GradingContext& ctx,
                                                           const Monomial& a, const Monomial& b) {
    const int n = ctx.size();
    Monomial out(n);
    // Transposing two generators costs (-1)^{|u||v|}: only odd/odd pairs flip
    // the sign. Walking the merged word, each odd letter of `a` at position i
    // hops over every odd letter of `b` strictly below i.
    long long inversions = 0;
    long long b_odd_below = 0;
    for (int i = 0; i < n; ++i) {
        const int ai = a.e[static_cast<size_t>(i)];
        const int bi = b.e[static_cast<size_t>(i)];
        if (ctx.is_odd(i)) {
            if (ai + bi > 1) return std::nullopt;  // odd square
            inversions += static_cast<long long>(ai) * b_odd_below;
            b_odd_below += bi;
        }
        out.e[static_cast<size_t>(i)] = ai + bi;
    }
    return std::make_pair((inversions % 2 == 0) ? 1 : -1, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = multiply_monomials(*a.ctx_, ma, mb);
            if (!prod) continue;
            r.add_term(prod->second, prod->first > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

Polynomial operator*(const Rational& c, Polynomial p) {
    if (c == 0) return Polynomial::zero(p.ctx_);
    for (auto& [m, coeff] : p.terms_) coeff *= c;
    return p;
}

Polynomial operator/(Polynomial p, const Rational& c) {
    if (c == 0) throw Error("division by zero");
    for (auto& [m, coeff] : p.terms_) coeff /= c;
    return p;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw Error("negative power");
    Polynomial r = Polynomial::constant(ctx_, Rational(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Degree degree_of(const Polynomial& p) { return p.degree(); }

Polynomial partial_derivative(const Polynomial& f, int coord_index) {
    const auto& ctx = *f.context();
    if (coord_index < 0 || coord_index >= ctx.size())
        throw UnknownCoordinateError("#" + std::to_string(coord_index));
    Polynomial r = Polynomial::zero(f.context());
    const bool odd_i = ctx.is_odd(coord_index);
    for (const auto& [m, c] : f.terms()) {
        const int e = m.e[static_cast<size_t>(coord_index)];
        if (e == 0) continue;
        // Left derivative: hop over the prefix of the canonical word; the
        // sign is (-1)^{|z^i| * |prefix|}.
        int prefix_degree = 0;
        for (int j = 0; j < coord_index; ++j)
            prefix_degree += m.e[static_cast<size_t>(j)] * ctx.degree(j);
        const bool flip = odd_i && (prefix_degree % 2 != 0);
        Monomial dm = m;
        dm.e[static_cast<size_t>(coord_index)] -= 1;
        Rational coeff = c * e;
        r.add_term(dm, flip ? -coeff : coeff);
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& f, const std::string& coord_name) {
    return partial_derivative(f, f.context()->index_of(coord_name));
}

namespace {

Polynomial apply_images(const Polynomial& p, const std::vector<Polynomial>& images,
                        const ContextPtr& target) {
    // Expand each canonical word left to right; the image multiplication
    // re-normalizes, so every Koszul sign is produced by the product itself.
    Polynomial r = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial acc = Polynomial::constant(target, c);
        for (int i = 0; i < p.context()->size() && !acc.is_zero(); ++i) {
            for (int k = 0; k < m.e[static_cast<size_t>(i)]; ++k)
                acc = acc * images[static_cast<size_t>(i)];
        }
        r += acc;
    }
    return r;
}

void check_image_degree(const GradingContext& src, int i, const Polynomial& image) {
    Degree d = image.degree();
    if (d.is_zero()) return;  // substituting zero is vacuously degree-preserving
    if (!d.homogeneous_of(src.degree(i)))
        throw DegreeError("substitution for " + src.name(i) + " is not homogeneous of degree " +
                          std::to_string(src.degree(i)));
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
    const ContextPtr& ctx = p.context();
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(ctx->size()));
    for (int i = 0; i < ctx->size(); ++i) images.push_back(Polynomial::coordinate(ctx, i));
    for (const auto& [name, value] : assignment) {
        int i = ctx->index_of(name);
        require_same_context(ctx, value.context());
        check_image_degree(*ctx, i, value);
        images[static_cast<size_t>(i)] = value;
    }
    return apply_images(p, images, ctx);
}

Polynomial substitute_all(const Polynomial& p, const std::vector<Polynomial>& images,
                          ContextPtr target) {
    if (static_cast<int>(images.size()) != p.context()->size())
        throw Error("substitute_all: one image per coordinate required");
    for (int i = 0; i < p.context()->size(); ++i) {
        require_same_context(target, images[static_cast<size_t>(i)].context());
        check_image_degree(*p.context(), i, images[static_cast<size_t>(i)]);
    }
    return apply_images(p, images, target);
}

Polynomial inject(const Polynomial& p, ContextPtr super, const std::vector<int>& index_map) {
    // Order preservation keeps canonical words canonical, so no signs arise.
    for (size_t i = 1; i < index_map.size(); ++i)
        if (index_map[i] <= index_map[i - 1]) throw Error("inject: index map must be increasing");
    Polynomial r = Polynomial::zero(super);
    for (const auto& [m, c] : p.terms()) {
        Monomial big(super->size());
        for (size_t i = 0; i < index_map.size(); ++i)
            big.e[static_cast<size_t>(index_map[i])] = m.e[i];
        r.add_term(big, c);
    }
    return r;
}

Polynomial restrict_to(const Polynomial& p, ContextPtr sub, const std::vector<int>& kept) {
    for (size_t i = 1; i < kept.size(); ++i)
        if (kept[i] <= kept[i - 1]) throw Error("restrict_to: kept indices must be increasing");
    std::vector<int> pos(static_cast<size_t>(p.context()->size()), -1);
    for (size_t i = 0; i < kept.size(); ++i) pos[static_cast<size_t>(kept[i])] = static_cast<int>(i);
    Polynomial r = Polynomial::zero(sub);
    for (const auto& [m, c] : p.terms()) {
        Monomial small(sub->size());
        bool alive = true;
        for (int i = 0; i < p.context()->size() && alive; ++i) {
            int e = m.e[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (pos[static_cast<size_t>(i)] < 0)
                alive = false;  // supported on a dropped coordinate: set to zero
            else
                small.e[static_cast<size_t>(pos[static_cast<size_t>(i)])] = e;
        }
        if (alive) r.add_term(small, c);
    }
    return r;
}

}  // namespace gman
