// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

namespace dcaas {

// Simulated time in microseconds since run start.
using SimTime = std::int64_t;

constexpr SimTime kMicrosPerMilli = 1000;
constexpr SimTime kMicrosPerSecond = 1000 * kMicrosPerMilli;

constexpr SimTime from_millis(std::int64_t ms) { return ms * kMicrosPerMilli; }
constexpr SimTime from_seconds(std::int64_t s) { return s * kMicrosPerSecond; }
constexpr double to_millis(SimTime t) { return static_cast<double>(t) / kMicrosPerMilli; }

using InstanceId = std::string;  // one DCaaS service instance, e.g. "c1p0"
using CloudletId = std::string;  // one datacenter, e.g. "c1"
using ObjectRef = std::string;   // opaque data object key
using Quota = std::int64_t;      // discrete object units (seats, budget)

enum class ConsistencyLevel { Strong, Eventual, Session };

const char* to_string(ConsistencyLevel level);
ConsistencyLevel consistency_level_from_string(const std::string& s);

// Ranking used by the restrictive DCP selection strategies: Strong > Eventual > Session.
int restrictiveness_rank(ConsistencyLevel level);

struct StabilizationMethod {
    enum class Kind { Exact, Thomas, Min, Max, Avg, Median, Sum, Custom };

    Kind kind = Kind::Thomas;
    std::string custom_name;  // meaningful only for Kind::Custom

    static StabilizationMethod exact() { return {Kind::Exact, {}}; }
    static StabilizationMethod thomas() { return {Kind::Thomas, {}}; }
    static StabilizationMethod filter(Kind k) { return {k, {}}; }
    static StabilizationMethod custom(std::string name) { return {Kind::Custom, std::move(name)}; }

    bool operator==(const StabilizationMethod&) const = default;
};

const char* to_string(StabilizationMethod::Kind kind);
std::string to_string(const StabilizationMethod& method);
StabilizationMethod stabilization_method_from_string(const std::string& s);

// Logical clock stamp. Total order: counter first, instance id as tiebreak,
// so stamps from distinct instances never compare equal.
struct LamportStamp {
    std::int64_t counter = 0;
    InstanceId instance;

    auto operator<=>(const LamportStamp&) const = default;
};

std::strong_ordering compare_stamps(const LamportStamp& a, const LamportStamp& b);

struct VersionedValue {
    std::int64_t value = 0;
    LamportStamp stamp;

    bool operator==(const VersionedValue&) const = default;
};

// One DCP entry: <object, level, stabilization method, cloudlet quota plan>.
struct ObjectAccessPattern {
    ObjectRef object;
    ConsistencyLevel level = ConsistencyLevel::Eventual;
    StabilizationMethod method = StabilizationMethod::thomas();
    std::map<CloudletId, Quota> quota_plan;  // non-empty iff level == Strong

    bool operator==(const ObjectAccessPattern&) const = default;
};

struct DataConsistencyPlan {
    std::map<ObjectRef, ObjectAccessPattern> patterns;
    std::int64_t version = 1;
    ConsistencyLevel default_level = ConsistencyLevel::Eventual;
    StabilizationMethod default_method = StabilizationMethod::thomas();

    bool operator==(const DataConsistencyPlan&) const = default;
};

// Per-instance residual quota for one strong-consistency object.
struct ScoqEntry {
    ObjectRef object;
    Quota instance_quota = 0;

    bool operator==(const ScoqEntry&) const = default;
};

// Cluster membership: every DCaaS instance and the cloudlet hosting it.
// The version counter makes peer-list updates idempotent and orderable.
struct PeerList {
    std::map<InstanceId, CloudletId> members;
    std::int64_t version = 1;

    bool contains(const InstanceId& id) const { return members.count(id) > 0; }
    bool operator==(const PeerList&) const = default;
};

void to_json(nlohmann::json& j, const StabilizationMethod& m);
void from_json(const nlohmann::json& j, StabilizationMethod& m);
void to_json(nlohmann::json& j, const LamportStamp& s);
void from_json(const nlohmann::json& j, LamportStamp& s);
void to_json(nlohmann::json& j, const VersionedValue& v);
void from_json(const nlohmann::json& j, VersionedValue& v);
void to_json(nlohmann::json& j, const ObjectAccessPattern& p);
void from_json(const nlohmann::json& j, ObjectAccessPattern& p);
void to_json(nlohmann::json& j, const DataConsistencyPlan& p);
void from_json(const nlohmann::json& j, DataConsistencyPlan& p);
void to_json(nlohmann::json& j, const ScoqEntry& e);
void from_json(const nlohmann::json& j, ScoqEntry& e);
void to_json(nlohmann::json& j, const PeerList& l);
void from_json(const nlohmann::json& j, PeerList& l);

}  // namespace dcaas
