#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace credence {

/// A subset of a sample space's outcomes, stored sorted and deduplicated.
/// Membership in a concrete space is validated by the operations that pair
/// an Event with a SampleSpace.
class Event {
public:
    Event() = default;
    explicit Event(std::vector<std::string> members);

    const std::vector<std::string>& members() const { return members_; }
    bool contains(const std::string& label) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    friend bool operator==(const Event&, const Event&) = default;
    friend bool operator<(const Event& a, const Event& b) { return a.members_ < b.members_; }

private:
    std::vector<std::string> members_; // sorted, unique
};

/// Finite ordered universe of atomic outcome labels.
class SampleSpace {
public:
    explicit SampleSpace(std::vector<std::string> outcomes);

    const std::vector<std::string>& outcomes() const { return outcomes_; }
    std::size_t size() const { return outcomes_.size(); }
    bool contains(const std::string& label) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Builds an event and validates membership against this space.
    Event event(std::vector<std::string> members) const;
    /// Requires the event to lie inside this space; throws StructuralError otherwise.
    void require_event(const Event& e) const;
    Event complement(const Event& e) const;
    Event whole() const { return Event(outcomes_); }

    friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

private:
    std::vector<std::string> outcomes_;
};

} // namespace credence
