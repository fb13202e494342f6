#include "iurlab/trace.hpp"

#include "iurlab/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace iurlab {

RunTrace::RunTrace(std::string algorithm_id, std::string problem, std::uint64_t seed,
                   std::int64_t budget)
    : algorithm_id_(std::move(algorithm_id)), problem_(std::move(problem)), seed_(seed),
      budget_(budget)
{
}

void RunTrace::record_generation(double best_error, std::int64_t evaluations,
                                 std::span<const DecisionEvent> events)
{
    if (evaluations > budget_)
        throw BudgetError("recorded evaluations " + std::to_string(evaluations) +
                          " exceed the budget " + std::to_string(budget_));
    if (evaluations < this->evaluations())
        throw DomainError("cumulative evaluations cannot decrease");

    GenerationRecord record;
    record.generation = static_cast<std::int64_t>(records_.size()) + 1;
    record.evaluations = evaluations;
    record.best_error = records_.empty() ? best_error : std::min(records_.back().best_error, best_error);
    record.first_event = events_.size();
    record.event_count = events.size();
    for (DecisionEvent event : events) {
        event.generation = record.generation;
        events_.push_back(event);
    }
    records_.push_back(record);
}

std::span<const DecisionEvent> RunTrace::events(const GenerationRecord& record) const
{
    return std::span<const DecisionEvent>(events_).subspan(record.first_event, record.event_count);
}

double RunTrace::final_error() const
{
    return records_.empty() ? std::numeric_limits<double>::infinity() : records_.back().best_error;
}

void RunTrace::write_csv(std::ostream& out) const
{
    out << "generation,evals,best_error,events\n";
    char buf[40];
    for (const auto& record : records_) {
        std::snprintf(buf, sizeof buf, "%.17g", record.best_error);
        out << record.generation << ',' << record.evaluations << ',' << buf << ',';
        bool first = true;
        for (const auto& event : events(record)) {
            if (!first)
                out << ';';
            out << event.token();
            first = false;
        }
        out << '\n';
    }
}

bool operator==(const RunTrace& a, const RunTrace& b)
{
    return a.algorithm_id_ == b.algorithm_id_ && a.problem_ == b.problem_ && a.seed_ == b.seed_ &&
           a.budget_ == b.budget_ && a.records_ == b.records_ && a.events_ == b.events_;
}

std::vector<DecisionEvent> events_of(const RunTrace& trace)
{
    const auto events = trace.events();
    return {events.begin(), events.end()};
}

RunTrace read_trace_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "generation,evals,best_error,events")
        throw ParseError("missing trace CSV header", 1);

    RunTrace trace;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int k = 0; k < 3; ++k) {
            const auto comma = line.find(',', start);
            if (comma == std::string::npos)
                throw ParseError("expected 4 fields", line_number);
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));

        std::vector<DecisionEvent> events;
        std::stringstream tokens(fields[3]);
        std::string token;
        while (std::getline(tokens, token, ';')) {
            try {
                events.push_back(DecisionEvent::parse(token));
            } catch (const Error& e) {
                throw ParseError(e.what(), line_number);
            }
        }
        try {
            trace.record_generation(std::stod(fields[2]), std::stoll(fields[1]), events);
        } catch (const std::logic_error&) {
            throw ParseError("bad numeric field", line_number);
        }
    }
    return trace;
}

} // namespace iurlab
