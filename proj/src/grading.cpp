#include "gman/grading.hpp"

namespace gman {

GradingContext::GradingContext(std::vector<Coordinate> coords) : coords_(std::move(coords)) {
    for (int i = 0; i < static_cast<int>(coords_.size()); ++i)
        by_name_.emplace(coords_[static_cast<size_t>(i)].name, i);
}

ContextPtr GradingContext::declare(const std::vector<std::pair<std::string, int>>& specs) {
    std::vector<Coordinate> coords;
    coords.reserve(specs.size());
    std::map<std::string, int> seen;
    for (const auto& [name, degree] : specs) {
        if (seen.count(name)) throw DuplicateNameError(name);
        seen.emplace(name, 1);
        coords.push_back(Coordinate{name, degree});
    }
    return ContextPtr(new GradingContext(std::move(coords)));
}

std::optional<int> GradingContext::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

int GradingContext::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw UnknownCoordinateError(name);
    return *i;
}

}  // namespace gman
