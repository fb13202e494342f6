#pragma once

#include "iurlab/events.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace iurlab {

struct GenerationRecord {
    std::int64_t generation = 0;
    std::int64_t evaluations = 0; ///< cumulative
    double best_error = 0.0;      ///< running minimum
    std::size_t first_event = 0;  ///< offset into RunTrace::events()
    std::size_t event_count = 0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

/// Per-generation history of one seeded run. Events of all generations are
/// stored contiguously; each record points at its slice.
class RunTrace {
public:
    RunTrace() = default;
    RunTrace(std::string algorithm_id, std::string problem, std::uint64_t seed, std::int64_t budget);

    /// Appends generation `size() + 1`. The stored best error is the running
    /// minimum. Throws BudgetError when `evaluations` exceeds the budget and
    /// DomainError when it decreases.
    void record_generation(double best_error, std::int64_t evaluations,
                           std::span<const DecisionEvent> events = {});

    const std::string& algorithm_id() const { return algorithm_id_; }
    const std::string& problem() const { return problem_; }
    std::uint64_t seed() const { return seed_; }
    std::int64_t budget() const { return budget_; }

    const std::vector<GenerationRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    std::span<const DecisionEvent> events() const { return events_; }
    std::span<const DecisionEvent> events(const GenerationRecord& record) const;

    std::int64_t evaluations() const { return records_.empty() ? 0 : records_.back().evaluations; }
    double final_error() const;

    /// CSV with header `generation,evals,best_error,events`; events are
    /// semicolon-joined `KIND(params)` tokens.
    void write_csv(std::ostream& out) const;
    friend bool operator==(const RunTrace&, const RunTrace&);

private:
    std::string algorithm_id_;
    std::string problem_;
    std::uint64_t seed_ = 0;
    std::int64_t budget_ = INT64_MAX;
    std::vector<GenerationRecord> records_;
    std::vector<DecisionEvent> events_;
};

/// Events of every generation, in generation order.
std::vector<DecisionEvent> events_of(const RunTrace& trace);

/// Reads a trace written by RunTrace::write_csv (metadata fields are not stored in the CSV).
RunTrace read_trace_csv(std::istream& in);

} // namespace iurlab
