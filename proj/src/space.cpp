#include "credence/space.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <set>

namespace credence {

Event::Event(std::vector<std::string> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Event::contains(const std::string& label) const {
    return std::binary_search(members_.begin(), members_.end(), label);
}

SampleSpace::SampleSpace(std::vector<std::string> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw StructuralError("sample space must have at least one outcome");
    std::set<std::string> seen;
    for (const auto& label : outcomes_) {
        if (label.empty()) throw StructuralError("sample space outcome label is empty");
        if (!seen.insert(label).second)
            throw StructuralError("duplicate outcome label '" + label + "'");
    }
}

bool SampleSpace::contains(const std::string& label) const {
    return std::find(outcomes_.begin(), outcomes_.end(), label) != outcomes_.end();
}

std::optional<std::size_t> SampleSpace::index_of(const std::string& label) const {
    auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
    if (it == outcomes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - outcomes_.begin());
}

Event SampleSpace::event(std::vector<std::string> members) const {
    Event e{std::move(members)};
    require_event(e);
    return e;
}

void SampleSpace::require_event(const Event& e) const {
    for (const auto& label : e.members())
        if (!contains(label))
            throw StructuralError("event references outcome '" + label + "' not in the sample space");
}

Event SampleSpace::complement(const Event& e) const {
    require_event(e);
    std::vector<std::string> rest;
    for (const auto& label : outcomes_)
        if (!e.contains(label)) rest.push_back(label);
    return Event(rest);
}

} // namespace credence
