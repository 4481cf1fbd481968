// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "dcaas/stabilizers.hpp"

#include <algorithm>
#include <numeric>

namespace dcaas {

void FilterRegistry::register_filter(const std::string& name, Filter fn) {
    auto [it, inserted] = filters_.emplace(name, std::move(fn));
    if (!inserted) {
        throw std::invalid_argument("custom filter already registered: " + name);
    }
}

const FilterRegistry::Filter& FilterRegistry::get(const std::string& name) const {
    auto it = filters_.find(name);
    if (it == filters_.end()) {
        throw std::invalid_argument("custom filter not registered: " + name);
    }
    return it->second;
}

VersionedValue stabilize_thomas(std::span<const VersionedValue> inputs) {
    if (inputs.empty()) throw EmptyInputs{};
    const VersionedValue* best = &inputs.front();
    for (const auto& v : inputs.subspan(1)) {
        if (compare_stamps(best->stamp, v.stamp) < 0) best = &v;
    }
    return *best;
}

std::int64_t stabilize_filter(StabilizationMethod::Kind kind,
                              std::span<const std::int64_t> inputs) {
    using Kind = StabilizationMethod::Kind;
    if (inputs.empty()) throw EmptyInputs{};
    switch (kind) {
        case Kind::Min:
            return *std::min_element(inputs.begin(), inputs.end());
        case Kind::Max:
            return *std::max_element(inputs.begin(), inputs.end());
        case Kind::Sum:
            return std::accumulate(inputs.begin(), inputs.end(), std::int64_t{0});
        case Kind::Avg: {
            const std::int64_t sum =
                std::accumulate(inputs.begin(), inputs.end(), std::int64_t{0});
            const auto n = static_cast<std::int64_t>(inputs.size());
            // Round half away from zero.
            const std::int64_t q = sum / n;
            const std::int64_t r = sum % n;
            if (2 * std::abs(r) >= n) return q + (sum < 0 ? -1 : 1);
            return q;
        }
        case Kind::Median: {
            std::vector<std::int64_t> sorted(inputs.begin(), inputs.end());
            std::sort(sorted.begin(), sorted.end());
            return sorted[(sorted.size() - 1) / 2];
        }
        default:
            throw StabilizationError("not a basic filter method");
    }
}

ExactResult stabilize_exact(std::span<const TransactionHistory> histories) {
    if (histories.empty()) throw EmptyInputs{};
    const std::int64_t base = histories.front().base_value;
    for (const auto& h : histories.subspan(1)) {
        if (h.base_value != base) throw BaseMismatch{};
    }

    ExactResult result;
    result.merged.base_value = base;
    for (const auto& h : histories) {
        result.merged.records.insert(result.merged.records.end(), h.records.begin(),
                                     h.records.end());
    }
    std::sort(result.merged.records.begin(), result.merged.records.end(),
              [](const HistoryRecord& a, const HistoryRecord& b) { return a.stamp < b.stamp; });

    result.value = base;
    for (const auto& r : result.merged.records) {
        result.value = r.apply(result.value);
    }
    return result;
}

std::int64_t apply_method(const StabilizationMethod& method,
                          std::span<const std::int64_t> inputs,
                          const FilterRegistry& registry) {
    using Kind = StabilizationMethod::Kind;
    switch (method.kind) {
        case Kind::Custom:
            if (inputs.empty()) throw EmptyInputs{};
            return registry.get(method.custom_name)(inputs);
        case Kind::Exact:
        case Kind::Thomas:
            throw StabilizationError("method needs stamped values or histories");
        default:
            return stabilize_filter(method.kind, inputs);
    }
}

}  // namespace dcaas
