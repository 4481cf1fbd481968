// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dcaas/history.hpp"
#include "dcaas/types.hpp"

namespace dcaas {

// Correlation id tying together the messages of one protocol round
// (one borrow, one stabilization, one join, one election, one user request).
using CorrId = std::string;

// Payload of a write: either assign a value or add a signed delta.
// Strong objects accept Add only (quota semantics are additive).
struct WriteValue {
    enum class Kind { Assign, Add };

    Kind kind = Kind::Assign;
    std::int64_t amount = 0;

    static WriteValue assign(std::int64_t v) { return {Kind::Assign, v}; }
    static WriteValue add(std::int64_t d) { return {Kind::Add, d}; }

    bool operator==(const WriteValue&) const = default;
};

namespace msg {

struct Read {
    ObjectRef object;
    CorrId corr;
    bool operator==(const Read&) const = default;
};

struct Write {
    ObjectRef object;
    WriteValue value;
    CorrId corr;
    bool operator==(const Write&) const = default;
};

struct LoadDcp {
    DataConsistencyPlan plan;
    bool operator==(const LoadDcp&) const = default;
};

// Carries the full change request: level plus the optional quota plan and
// stabilization method needed when upgrading to strong.
struct ModifyConsistencyLevel {
    ObjectRef object;
    ConsistencyLevel level = ConsistencyLevel::Eventual;
    std::optional<StabilizationMethod> method;
    std::optional<std::map<CloudletId, Quota>> quota_plan;
    CorrId corr;
    bool operator==(const ModifyConsistencyLevel&) const = default;
};

struct ModifyCloudletQuota {
    ObjectRef object;
    CloudletId cloudlet;
    Quota quota = 0;
    CorrId corr;
    bool operator==(const ModifyCloudletQuota&) const = default;
};

struct LoadPeerList {
    PeerList peers;
    bool operator==(const LoadPeerList&) const = default;
};

struct UpdatePeerList {
    enum class UpdateType { Add, Remove, Heartbeat };

    UpdateType type = UpdateType::Add;
    InstanceId subject;
    CloudletId subject_cloudlet;
    std::int64_t list_version = 0;
    CorrId corr;
    bool operator==(const UpdatePeerList&) const = default;
};

struct JoinRequest {
    InstanceId instance;
    CloudletId cloudlet;
    CorrId corr;
    bool operator==(const JoinRequest&) const = default;
};

struct UpdateAck {
    InstanceId instance;
    CorrId corr;
    bool operator==(const UpdateAck&) const = default;
};

struct JoinAck {
    DataConsistencyPlan plan;
    PeerList peers;
    CorrId corr;
    bool operator==(const JoinAck&) const = default;
};

struct StabReq {
    ObjectRef object;
    CorrId corr;
    bool operator==(const StabReq&) const = default;
};

// Follower reply: current value, plus the transaction history when the
// object stabilizes with the exact method. Tagged with the follower's
// cloudlet so the leader can de-duplicate per shared store.
struct StabRes {
    ObjectRef object;
    CorrId corr;
    CloudletId cloudlet;
    VersionedValue value;
    std::optional<TransactionHistory> history;
    bool operator==(const StabRes&) const = default;
};

// Leader broadcast: the agreed value, the updated access pattern, and the
// per-instance quota allocations derived for the receiver's cloudlet.
struct StabCom {
    ObjectRef object;
    CorrId corr;
    VersionedValue value;
    std::optional<ObjectAccessPattern> pattern;
    std::int64_t plan_version = 0;
    std::map<InstanceId, Quota> allocations;
    std::optional<TransactionHistory> merged_history;
    bool operator==(const StabCom&) const = default;
};

struct StabAck {
    ObjectRef object;
    CorrId corr;
    InstanceId instance;
    bool operator==(const StabAck&) const = default;
};

struct QBrwReq {
    ObjectRef object;
    Quota amount = 0;
    CorrId corr;
    bool operator==(const QBrwReq&) const = default;
};

struct QuotaTransfer {
    ObjectRef object;
    Quota amount = 0;
    CorrId corr;
    bool operator==(const QuotaTransfer&) const = default;
};

struct QuotaTrAck {
    ObjectRef object;
    Quota amount = 0;  // amount actually taken, 0..offer
    CorrId corr;
    bool operator==(const QuotaTrAck&) const = default;
};

struct LeaderReq {
    InstanceId instance;
    CorrId corr;
    bool operator==(const LeaderReq&) const = default;
};

// Outstanding cross-cloudlet quota movement reported during an election so
// the new leader can reconcile holds whose acknowledgments were lost.
struct QuotaNote {
    enum class Kind { Hold, Credit };

    Kind kind = Kind::Hold;
    CorrId corr;
    ObjectRef object;
    Quota amount = 0;
    InstanceId counterparty;
    bool operator==(const QuotaNote&) const = default;
};

struct LeaderAck {
    bool accept = false;
    InstanceId instance;
    DataConsistencyPlan plan;
    PeerList peers;
    std::vector<QuotaNote> quota_notes;
    CorrId corr;
    bool operator==(const LeaderAck&) const = default;
};

// Resolution of a frozen hold: how much of it the borrower actually took.
struct HoldResolution {
    CorrId corr;
    ObjectRef object;
    Quota taken = 0;
    bool operator==(const HoldResolution&) const = default;
};

struct Synch {
    DataConsistencyPlan plan;
    PeerList peers;
    std::vector<HoldResolution> resolutions;
    CorrId corr;
    bool operator==(const Synch&) const = default;
};

struct SynchAck {
    InstanceId instance;
    CorrId corr;
    bool operator==(const SynchAck&) const = default;
};

}  // namespace msg

using ApiMessage =
    std::variant<msg::Read, msg::Write, msg::LoadDcp, msg::ModifyConsistencyLevel,
                 msg::ModifyCloudletQuota, msg::LoadPeerList, msg::UpdatePeerList,
                 msg::JoinRequest, msg::UpdateAck, msg::JoinAck, msg::StabReq, msg::StabRes,
                 msg::StabCom, msg::StabAck, msg::QBrwReq, msg::QuotaTransfer, msg::QuotaTrAck,
                 msg::LeaderReq, msg::LeaderAck, msg::Synch, msg::SynchAck>;

// Name of the API operation a message invokes.
const char* op_name(const ApiMessage& m);

// One timestamped protocol message in flight between two instances.
struct Envelope {
    std::uint64_t msg_id = 0;
    InstanceId from;
    InstanceId to;
    SimTime sent_at = 0;
    ApiMessage payload;

    bool operator==(const Envelope&) const = default;
};

void to_json(nlohmann::json& j, const WriteValue& v);
void from_json(const nlohmann::json& j, WriteValue& v);
void to_json(nlohmann::json& j, const ApiMessage& m);
void from_json(const nlohmann::json& j, ApiMessage& m);
void to_json(nlohmann::json& j, const Envelope& e);
void from_json(const nlohmann::json& j, Envelope& e);

// Canonical single-line serialization used by trace logs and golden files.
std::string to_line(const Envelope& e);
Envelope envelope_from_line(const std::string& line);

}  // namespace dcaas
