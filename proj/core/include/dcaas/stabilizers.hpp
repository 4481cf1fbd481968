// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcaas/history.hpp"
#include "dcaas/types.hpp"

namespace dcaas {

class StabilizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EmptyInputs : public StabilizationError {
  public:
    EmptyInputs() : StabilizationError("stabilization over empty inputs") {}
};

// Histories descend from different stable points; no merge is defined.
class BaseMismatch : public StabilizationError {
  public:
    BaseMismatch() : StabilizationError("transaction histories disagree on base value") {}
};

// User-supplied uncertainty filters, keyed by name. Populated once at
// startup, before any peer runs; lookups afterwards are read-only.
class FilterRegistry {
  public:
    using Filter = std::function<std::int64_t(std::span<const std::int64_t>)>;

    // Fails with std::invalid_argument on duplicate names.
    void register_filter(const std::string& name, Filter fn);

    bool contains(const std::string& name) const { return filters_.count(name) > 0; }
    const Filter& get(const std::string& name) const;

  private:
    std::map<std::string, Filter> filters_;
};

// Thomas write rule: the value with the most recent stamp wins.
VersionedValue stabilize_thomas(std::span<const VersionedValue> inputs);

// Basic uncertainty filters over plain values. Avg rounds half away from
// zero; the median of an even count is the lower-middle element.
std::int64_t stabilize_filter(StabilizationMethod::Kind kind,
                              std::span<const std::int64_t> inputs);

struct ExactResult {
    std::int64_t value = 0;
    TransactionHistory merged;
};

// Exact method: merge all histories into one sequence totally ordered by
// Lamport stamp and replay it from the shared base value.
ExactResult stabilize_exact(std::span<const TransactionHistory> histories);

// Dispatch by method; Thomas callers use stabilize_thomas directly since it
// needs stamped values rather than raw integers.
std::int64_t apply_method(const StabilizationMethod& method,
                          std::span<const std::int64_t> inputs,
                          const FilterRegistry& registry);

}  // namespace dcaas
