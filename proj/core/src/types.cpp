// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "dcaas/types.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dcaas {

const char* to_string(ConsistencyLevel level) {
    switch (level) {
        case ConsistencyLevel::Strong: return "strong";
        case ConsistencyLevel::Eventual: return "eventual";
        case ConsistencyLevel::Session: return "session";
    }
    return "?";
}

ConsistencyLevel consistency_level_from_string(const std::string& s) {
    if (s == "strong") return ConsistencyLevel::Strong;
    if (s == "eventual") return ConsistencyLevel::Eventual;
    if (s == "session") return ConsistencyLevel::Session;
    throw std::invalid_argument("unknown consistency level: " + s);
}

int restrictiveness_rank(ConsistencyLevel level) {
    switch (level) {
        case ConsistencyLevel::Strong: return 2;
        case ConsistencyLevel::Eventual: return 1;
        case ConsistencyLevel::Session: return 0;
    }
    return -1;
}

const char* to_string(StabilizationMethod::Kind kind) {
    using Kind = StabilizationMethod::Kind;
    switch (kind) {
        case Kind::Exact: return "exact";
        case Kind::Thomas: return "thomas";
        case Kind::Min: return "min";
        case Kind::Max: return "max";
        case Kind::Avg: return "avg";
        case Kind::Median: return "median";
        case Kind::Sum: return "sum";
        case Kind::Custom: return "custom";
    }
    return "?";
}

std::string to_string(const StabilizationMethod& method) {
    if (method.kind == StabilizationMethod::Kind::Custom) {
        return "custom:" + method.custom_name;
    }
    return to_string(method.kind);
}

StabilizationMethod stabilization_method_from_string(const std::string& s) {
    using Kind = StabilizationMethod::Kind;
    if (s == "exact") return {Kind::Exact, {}};
    if (s == "thomas") return {Kind::Thomas, {}};
    if (s == "min") return {Kind::Min, {}};
    if (s == "max") return {Kind::Max, {}};
    if (s == "avg") return {Kind::Avg, {}};
    if (s == "median") return {Kind::Median, {}};
    if (s == "sum") return {Kind::Sum, {}};
    if (s.rfind("custom:", 0) == 0) return StabilizationMethod::custom(s.substr(7));
    throw std::invalid_argument("unknown stabilization method: " + s);
}

std::strong_ordering compare_stamps(const LamportStamp& a, const LamportStamp& b) {
    return a <=> b;
}

void to_json(nlohmann::json& j, const StabilizationMethod& m) { j = to_string(m); }

void from_json(const nlohmann::json& j, StabilizationMethod& m) {
    m = stabilization_method_from_string(j.get<std::string>());
}

void to_json(nlohmann::json& j, const LamportStamp& s) {
    j = nlohmann::json{{"c", s.counter}, {"i", s.instance}};
}

void from_json(const nlohmann::json& j, LamportStamp& s) {
    j.at("c").get_to(s.counter);
    j.at("i").get_to(s.instance);
}

void to_json(nlohmann::json& j, const VersionedValue& v) {
    j = nlohmann::json{{"v", v.value}, {"stamp", v.stamp}};
}

void from_json(const nlohmann::json& j, VersionedValue& v) {
    j.at("v").get_to(v.value);
    j.at("stamp").get_to(v.stamp);
}

void to_json(nlohmann::json& j, const ObjectAccessPattern& p) {
    j = nlohmann::json{{"object", p.object},
                       {"level", to_string(p.level)},
                       {"method", p.method},
                       {"quota", p.quota_plan}};
}

void from_json(const nlohmann::json& j, ObjectAccessPattern& p) {
    j.at("object").get_to(p.object);
    p.level = consistency_level_from_string(j.at("level").get<std::string>());
    j.at("method").get_to(p.method);
    if (j.contains("quota")) {
        j.at("quota").get_to(p.quota_plan);
    } else {
        p.quota_plan.clear();
    }
}

void to_json(nlohmann::json& j, const DataConsistencyPlan& p) {
    j = nlohmann::json{{"version", p.version},
                       {"defaults",
                        {{"level", to_string(p.default_level)}, {"method", p.default_method}}},
                       {"patterns", nlohmann::json::array()}};
    for (const auto& [ref, pattern] : p.patterns) {
        j["patterns"].push_back(pattern);
    }
}

void from_json(const nlohmann::json& j, DataConsistencyPlan& p) {
    p = DataConsistencyPlan{};
    if (j.contains("version")) j.at("version").get_to(p.version);
    if (j.contains("defaults")) {
        const auto& d = j.at("defaults");
        if (d.contains("level")) {
            p.default_level = consistency_level_from_string(d.at("level").get<std::string>());
        }
        if (d.contains("method")) d.at("method").get_to(p.default_method);
    }
    if (j.contains("patterns")) {
        for (const auto& jp : j.at("patterns")) {
            auto pattern = jp.get<ObjectAccessPattern>();
            p.patterns.emplace(pattern.object, std::move(pattern));
        }
    }
}

void to_json(nlohmann::json& j, const ScoqEntry& e) {
    j = nlohmann::json{{"object", e.object}, {"quota", e.instance_quota}};
}

void from_json(const nlohmann::json& j, ScoqEntry& e) {
    j.at("object").get_to(e.object);
    j.at("quota").get_to(e.instance_quota);
}

void to_json(nlohmann::json& j, const PeerList& l) {
    j = nlohmann::json{{"members", l.members}, {"version", l.version}};
}

void from_json(const nlohmann::json& j, PeerList& l) {
    j.at("members").get_to(l.members);
    j.at("version").get_to(l.version);
}

}  // namespace dcaas
