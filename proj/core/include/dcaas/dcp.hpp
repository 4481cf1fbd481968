// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcaas/stabilizers.hpp"
#include "dcaas/types.hpp"

namespace dcaas {

struct ValidationError {
    enum class Code { UnknownCloudlet, DuplicatePattern, MissingQuotaPlan, UnresolvedCustomMethod };

    Code code;
    ObjectRef object;
    std::string detail;
};

const char* to_string(ValidationError::Code code);

// Checks every pattern invariant: strong objects carry a non-empty quota
// plan over known cloudlets, non-strong objects carry none, and custom
// stabilization methods resolve in the registry.
std::vector<ValidationError> validate_dcp(const DataConsistencyPlan& plan,
                                          const std::set<CloudletId>& known_cloudlets,
                                          const FilterRegistry& registry);

// Pattern lookup with defaults: unknown objects fall back to the plan's
// default level (eventual unless overridden).
ConsistencyLevel get_consistency_level(const DataConsistencyPlan& plan, const ObjectRef& object);
StabilizationMethod get_stabilization_method(const DataConsistencyPlan& plan,
                                             const ObjectRef& object);

// Splits one cloudlet quota across `count` instances: floor division, with
// the remainder assigned to the lexicographically first instance so the
// shares always sum to the whole quota.
std::vector<Quota> split_quota(Quota total, std::size_t count);

// Initial per-instance quotas for every strong object of `plan` within one
// cloudlet, given the sorted instance ids living there.
std::vector<ScoqEntry> derive_scoq(const DataConsistencyPlan& plan, const CloudletId& cloudlet,
                                   const std::vector<InstanceId>& sorted_instances,
                                   const InstanceId& self);

struct DcpChangeRequest {
    ObjectRef object;
    ConsistencyLevel target_level = ConsistencyLevel::Eventual;
    std::optional<std::map<CloudletId, Quota>> quota_plan;
    std::optional<StabilizationMethod> method;
};

// What the owning peer must do after a level change is applied.
enum class ChangeDirective {
    FlushCacheToStore,           // session -> eventual
    StabilizeThenDistributeQuota,  // session/eventual -> strong
    StopQuotaChecks,             // strong -> eventual
    CacheOnly,                   // strong/eventual -> session
};

const char* to_string(ChangeDirective d);

class DcpChangeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NoOpChange : public DcpChangeError {
  public:
    NoOpChange() : DcpChangeError("target level equals current level") {}
};

struct LevelChangeResult {
    DataConsistencyPlan plan;
    ChangeDirective directive;
};

// Applies a level change to a copy of the plan, bumping its version, and
// names the side effect the caller owes. Throws NoOpChange when the target
// equals the current effective level.
LevelChangeResult apply_level_change(const DataConsistencyPlan& plan,
                                     const DcpChangeRequest& request);

enum class DcpSelectionStrategy { MostRecent, MostRestrictive, LeastRestrictive };

const char* to_string(DcpSelectionStrategy s);
DcpSelectionStrategy selection_strategy_from_string(const std::string& s);

struct DcpCandidate {
    InstanceId contributor;
    DataConsistencyPlan plan;
    PeerList peers;
};

class EmptyCandidates : public std::runtime_error {
  public:
    EmptyCandidates() : std::runtime_error("no DCP candidates to select from") {}
};

struct CommonDcp {
    DataConsistencyPlan plan;
    PeerList peers;
};

// Post-election selection of the cluster-wide plan and peer list.
// MostRecent takes the highest plan version (contributor id breaks ties);
// the restrictive strategies rank levels strong > eventual > session per
// object and take the per-object max/min, with the result version set past
// every candidate.
CommonDcp select_common_dcp(const std::vector<DcpCandidate>& candidates,
                            DcpSelectionStrategy strategy);

// DCP file format: structured text with `defaults` and `patterns[]`.
DataConsistencyPlan load_dcp_file(const std::string& path);
void save_dcp_file(const DataConsistencyPlan& plan, const std::string& path);
DataConsistencyPlan parse_dcp(const std::string& text);
std::string format_dcp(const DataConsistencyPlan& plan);

}  // namespace dcaas
