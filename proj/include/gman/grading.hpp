#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gman/errors.hpp"

namespace gman {

struct Coordinate {
    std::string name;
    int degree = 0;

    bool is_odd() const { return (degree % 2) != 0; }
    bool operator==(const Coordinate&) const = default;
};

class GradingContext;
using ContextPtr = std::shared_ptr<const GradingContext>;

/// An ordered chart of named coordinates with integer degrees. The declaration
/// order is the canonical monomial order; every sign in the kernel is stated
/// relative to it.
class GradingContext {
  public:
    static ContextPtr declare(const std::vector<std::pair<std::string, int>>& specs);

    int size() const { return static_cast<int>(coords_.size()); }
    const Coordinate& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    int degree(int i) const { return coords_[static_cast<size_t>(i)].degree; }
    const std::string& name(int i) const { return coords_[static_cast<size_t>(i)].name; }
    bool is_odd(int i) const { return coords_[static_cast<size_t>(i)].is_odd(); }

    std::optional<int> find(const std::string& name) const;
    /// Like find() but throws UnknownCoordinateError.
    int index_of(const std::string& name) const;

    bool operator==(const GradingContext& other) const { return coords_ == other.coords_; }

  private:
    explicit GradingContext(std::vector<Coordinate> coords);
    std::vector<Coordinate> coords_;
    std::map<std::string, int> by_name_;
};

/// Same chart, by identity or structural equality.
inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw ContextMismatchError();
}

/// `declare_chart`: the single entry point for creating charts.
inline ContextPtr declare_chart(const std::vector<std::pair<std::string, int>>& specs) {
    return GradingContext::declare(specs);
}

}  // namespace gman
