// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "dcaas/dcp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dcaas {

const char* to_string(ValidationError::Code code) {
    using Code = ValidationError::Code;
    switch (code) {
        case Code::UnknownCloudlet: return "UnknownCloudlet";
        case Code::DuplicatePattern: return "DuplicatePattern";
        case Code::MissingQuotaPlan: return "MissingQuotaPlan";
        case Code::UnresolvedCustomMethod: return "UnresolvedCustomMethod";
    }
    return "?";
}

std::vector<ValidationError> validate_dcp(const DataConsistencyPlan& plan,
                                          const std::set<CloudletId>& known_cloudlets,
                                          const FilterRegistry& registry) {
    std::vector<ValidationError> errors;
    for (const auto& [ref, pattern] : plan.patterns) {
        if (pattern.object != ref) {
            errors.push_back({ValidationError::Code::DuplicatePattern, ref,
                              "pattern keyed under a different object"});
        }
        if (pattern.level == ConsistencyLevel::Strong) {
            if (pattern.quota_plan.empty()) {
                errors.push_back({ValidationError::Code::MissingQuotaPlan, ref,
                                  "strong object without a quota plan"});
            }
        }
        for (const auto& [cloudlet, quota] : pattern.quota_plan) {
            if (!known_cloudlets.count(cloudlet)) {
                errors.push_back({ValidationError::Code::UnknownCloudlet, ref,
                                  "quota names unknown cloudlet " + cloudlet});
            }
            if (quota < 0) {
                errors.push_back({ValidationError::Code::MissingQuotaPlan, ref,
                                  "negative quota for cloudlet " + cloudlet});
            }
        }
        if (pattern.method.kind == StabilizationMethod::Kind::Custom &&
            !registry.contains(pattern.method.custom_name)) {
            errors.push_back({ValidationError::Code::UnresolvedCustomMethod, ref,
                              "custom filter " + pattern.method.custom_name});
        }
    }
    if (plan.default_method.kind == StabilizationMethod::Kind::Custom &&
        !registry.contains(plan.default_method.custom_name)) {
        errors.push_back({ValidationError::Code::UnresolvedCustomMethod, "",
                          "default custom filter " + plan.default_method.custom_name});
    }
    return errors;
}

ConsistencyLevel get_consistency_level(const DataConsistencyPlan& plan, const ObjectRef& object) {
    auto it = plan.patterns.find(object);
    return it != plan.patterns.end() ? it->second.level : plan.default_level;
}

StabilizationMethod get_stabilization_method(const DataConsistencyPlan& plan,
                                             const ObjectRef& object) {
    auto it = plan.patterns.find(object);
    return it != plan.patterns.end() ? it->second.method : plan.default_method;
}

std::vector<Quota> split_quota(Quota total, std::size_t count) {
    std::vector<Quota> shares(count, count ? total / static_cast<Quota>(count) : 0);
    if (count > 0) {
        shares[0] += total % static_cast<Quota>(count);
    }
    return shares;
}

std::vector<ScoqEntry> derive_scoq(const DataConsistencyPlan& plan, const CloudletId& cloudlet,
                                   const std::vector<InstanceId>& sorted_instances,
                                   const InstanceId& self) {
    std::vector<ScoqEntry> entries;
    const auto pos = std::find(sorted_instances.begin(), sorted_instances.end(), self);
    for (const auto& [ref, pattern] : plan.patterns) {
        if (pattern.level != ConsistencyLevel::Strong) continue;
        Quota cloudlet_quota = 0;
        if (auto it = pattern.quota_plan.find(cloudlet); it != pattern.quota_plan.end()) {
            cloudlet_quota = it->second;
        }
        Quota mine = 0;
        if (pos != sorted_instances.end()) {
            const auto shares = split_quota(cloudlet_quota, sorted_instances.size());
            mine = shares[static_cast<std::size_t>(pos - sorted_instances.begin())];
        }
        entries.push_back({ref, mine});
    }
    return entries;
}

const char* to_string(ChangeDirective d) {
    switch (d) {
        case ChangeDirective::FlushCacheToStore: return "FlushCacheToStore";
        case ChangeDirective::StabilizeThenDistributeQuota: return "StabilizeThenDistributeQuota";
        case ChangeDirective::StopQuotaChecks: return "StopQuotaChecks";
        case ChangeDirective::CacheOnly: return "CacheOnly";
    }
    return "?";
}

LevelChangeResult apply_level_change(const DataConsistencyPlan& plan,
                                     const DcpChangeRequest& request) {
    const ConsistencyLevel current = get_consistency_level(plan, request.object);
    if (current == request.target_level) throw NoOpChange{};

    LevelChangeResult result{plan, ChangeDirective::FlushCacheToStore};
    auto& pattern = result.plan.patterns[request.object];
    if (pattern.object.empty()) {
        pattern.object = request.object;
        pattern.method = plan.default_method;
    }
    pattern.level = request.target_level;
    if (request.method) pattern.method = *request.method;
    if (request.quota_plan) pattern.quota_plan = *request.quota_plan;
    if (request.target_level != ConsistencyLevel::Strong) pattern.quota_plan.clear();
    result.plan.version = plan.version + 1;

    if (request.target_level == ConsistencyLevel::Strong) {
        result.directive = ChangeDirective::StabilizeThenDistributeQuota;
    } else if (request.target_level == ConsistencyLevel::Session) {
        result.directive = ChangeDirective::CacheOnly;
    } else if (current == ConsistencyLevel::Strong) {
        result.directive = ChangeDirective::StopQuotaChecks;
    } else {
        result.directive = ChangeDirective::FlushCacheToStore;  // session -> eventual
    }
    return result;
}

const char* to_string(DcpSelectionStrategy s) {
    switch (s) {
        case DcpSelectionStrategy::MostRecent: return "most_recent";
        case DcpSelectionStrategy::MostRestrictive: return "most_restrictive";
        case DcpSelectionStrategy::LeastRestrictive: return "least_restrictive";
    }
    return "?";
}

DcpSelectionStrategy selection_strategy_from_string(const std::string& s) {
    if (s == "most_recent") return DcpSelectionStrategy::MostRecent;
    if (s == "most_restrictive") return DcpSelectionStrategy::MostRestrictive;
    if (s == "least_restrictive") return DcpSelectionStrategy::LeastRestrictive;
    throw std::invalid_argument("unknown DCP selection strategy: " + s);
}

namespace {

const DcpCandidate& most_recent_candidate(const std::vector<DcpCandidate>& candidates) {
    const DcpCandidate* best = &candidates.front();
    for (const auto& c : candidates) {
        if (c.plan.version > best->plan.version ||
            (c.plan.version == best->plan.version && c.contributor < best->contributor)) {
            best = &c;
        }
    }
    return *best;
}

}  // namespace

CommonDcp select_common_dcp(const std::vector<DcpCandidate>& candidates,
                            DcpSelectionStrategy strategy) {
    if (candidates.empty()) throw EmptyCandidates{};
    const DcpCandidate& recent = most_recent_candidate(candidates);
    if (strategy == DcpSelectionStrategy::MostRecent) {
        return {recent.plan, recent.peers};
    }

    // Composite strategies merge per object; peers come from the most
    // recent candidate (the strategies only rank consistency levels).
    const bool most = strategy == DcpSelectionStrategy::MostRestrictive;
    DataConsistencyPlan merged = recent.plan;
    merged.patterns.clear();

    std::set<ObjectRef> objects;
    for (const auto& c : candidates) {
        for (const auto& [ref, _] : c.plan.patterns) objects.insert(ref);
    }
    for (const auto& ref : objects) {
        const DcpCandidate* chosen = nullptr;
        int chosen_rank = 0;
        for (const auto& c : candidates) {
            const int rank = restrictiveness_rank(get_consistency_level(c.plan, ref));
            const bool better =
                !chosen || (most ? rank > chosen_rank : rank < chosen_rank) ||
                (rank == chosen_rank && c.plan.version > chosen->plan.version);
            if (better) {
                chosen = &c;
                chosen_rank = rank;
            }
        }
        if (auto it = chosen->plan.patterns.find(ref); it != chosen->plan.patterns.end()) {
            merged.patterns.emplace(ref, it->second);
        } else {
            // Winning level is the chosen plan's default; materialize it.
            ObjectAccessPattern p;
            p.object = ref;
            p.level = chosen->plan.default_level;
            p.method = chosen->plan.default_method;
            merged.patterns.emplace(ref, std::move(p));
        }
    }

    std::int64_t max_version = 0;
    for (const auto& c : candidates) max_version = std::max(max_version, c.plan.version);
    merged.version = max_version + 1;
    return {std::move(merged), recent.peers};
}

DataConsistencyPlan parse_dcp(const std::string& text) {
    return nlohmann::json::parse(text).get<DataConsistencyPlan>();
}

std::string format_dcp(const DataConsistencyPlan& plan) {
    nlohmann::json j = plan;
    return j.dump(2) + "\n";
}

DataConsistencyPlan load_dcp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open DCP file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_dcp(ss.str());
}

void save_dcp_file(const DataConsistencyPlan& plan, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write DCP file: " + path);
    out << format_dcp(plan);
}

}  // namespace dcaas
