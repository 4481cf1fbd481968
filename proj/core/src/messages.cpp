// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "dcaas/messages.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dcaas {

namespace {

using nlohmann::json;

template <class T>
void opt_to(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
void opt_from(const json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key)) {
        v = j.at(key).get<T>();
    } else {
        v.reset();
    }
}

}  // namespace

const char* op_name(const ApiMessage& m) {
    struct Namer {
        const char* operator()(const msg::Read&) { return "Read"; }
        const char* operator()(const msg::Write&) { return "Write"; }
        const char* operator()(const msg::LoadDcp&) { return "LoadDCP"; }
        const char* operator()(const msg::ModifyConsistencyLevel&) {
            return "ModifyConsistencyLevel";
        }
        const char* operator()(const msg::ModifyCloudletQuota&) { return "ModifyCloudletQuota"; }
        const char* operator()(const msg::LoadPeerList&) { return "LoadPeerList"; }
        const char* operator()(const msg::UpdatePeerList&) { return "UpdatePeerList"; }
        const char* operator()(const msg::JoinRequest&) { return "JoinRequest"; }
        const char* operator()(const msg::UpdateAck&) { return "UpdateAck"; }
        const char* operator()(const msg::JoinAck&) { return "JoinAck"; }
        const char* operator()(const msg::StabReq&) { return "StabReq"; }
        const char* operator()(const msg::StabRes&) { return "StabRes"; }
        const char* operator()(const msg::StabCom&) { return "StabCom"; }
        const char* operator()(const msg::StabAck&) { return "StabAck"; }
        const char* operator()(const msg::QBrwReq&) { return "QBrwReq"; }
        const char* operator()(const msg::QuotaTransfer&) { return "QuotaTransfer"; }
        const char* operator()(const msg::QuotaTrAck&) { return "QuotaTrAck"; }
        const char* operator()(const msg::LeaderReq&) { return "LeaderReq"; }
        const char* operator()(const msg::LeaderAck&) { return "LeaderAck"; }
        const char* operator()(const msg::Synch&) { return "Synch"; }
        const char* operator()(const msg::SynchAck&) { return "SynchAck"; }
    };
    return std::visit(Namer{}, m);
}

void to_json(json& j, const WriteValue& v) {
    j = json{{"kind", v.kind == WriteValue::Kind::Assign ? "assign" : "add"},
             {"amount", v.amount}};
}

void from_json(const json& j, WriteValue& v) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "assign") {
        v.kind = WriteValue::Kind::Assign;
    } else if (kind == "add") {
        v.kind = WriteValue::Kind::Add;
    } else {
        throw std::invalid_argument("unknown write kind: " + kind);
    }
    j.at("amount").get_to(v.amount);
}

void to_json(nlohmann::json& j, const HistoryRecord& r) {
    j = json{{"stamp", r.stamp},
             {"op", r.op == HistoryRecord::Op::Assign ? "assign" : "add"},
             {"amount", r.amount}};
}

void from_json(const nlohmann::json& j, HistoryRecord& r) {
    j.at("stamp").get_to(r.stamp);
    r.op = j.at("op").get<std::string>() == "assign" ? HistoryRecord::Op::Assign
                                                     : HistoryRecord::Op::Add;
    j.at("amount").get_to(r.amount);
}

void to_json(nlohmann::json& j, const TransactionHistory& h) {
    j = json{{"base", h.base_value}, {"records", h.records}};
}

void from_json(const nlohmann::json& j, TransactionHistory& h) {
    j.at("base").get_to(h.base_value);
    j.at("records").get_to(h.records);
}

namespace msg {

void to_json(json& j, const Read& m) { j = json{{"object", m.object}, {"corr", m.corr}}; }
void from_json(const json& j, Read& m) {
    j.at("object").get_to(m.object);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const Write& m) {
    j = json{{"object", m.object}, {"value", m.value}, {"corr", m.corr}};
}
void from_json(const json& j, Write& m) {
    j.at("object").get_to(m.object);
    j.at("value").get_to(m.value);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const LoadDcp& m) { j = json{{"plan", m.plan}}; }
void from_json(const json& j, LoadDcp& m) { j.at("plan").get_to(m.plan); }

void to_json(json& j, const ModifyConsistencyLevel& m) {
    j = json{{"object", m.object}, {"level", to_string(m.level)}, {"corr", m.corr}};
    opt_to(j, "method", m.method);
    opt_to(j, "quota", m.quota_plan);
}
void from_json(const json& j, ModifyConsistencyLevel& m) {
    j.at("object").get_to(m.object);
    m.level = consistency_level_from_string(j.at("level").get<std::string>());
    j.at("corr").get_to(m.corr);
    opt_from(j, "method", m.method);
    opt_from(j, "quota", m.quota_plan);
}

void to_json(json& j, const ModifyCloudletQuota& m) {
    j = json{{"object", m.object},
             {"cloudlet", m.cloudlet},
             {"quota", m.quota},
             {"corr", m.corr}};
}
void from_json(const json& j, ModifyCloudletQuota& m) {
    j.at("object").get_to(m.object);
    j.at("cloudlet").get_to(m.cloudlet);
    j.at("quota").get_to(m.quota);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const LoadPeerList& m) { j = json{{"peers", m.peers}}; }
void from_json(const json& j, LoadPeerList& m) { j.at("peers").get_to(m.peers); }

void to_json(json& j, const UpdatePeerList& m) {
    const char* type = m.type == UpdatePeerList::UpdateType::Add      ? "add"
                       : m.type == UpdatePeerList::UpdateType::Remove ? "remove"
                                                                      : "heartbeat";
    j = json{{"type", type},
             {"subject", m.subject},
             {"subject_cloudlet", m.subject_cloudlet},
             {"list_version", m.list_version},
             {"corr", m.corr}};
}
void from_json(const json& j, UpdatePeerList& m) {
    const auto type = j.at("type").get<std::string>();
    if (type == "add") {
        m.type = UpdatePeerList::UpdateType::Add;
    } else if (type == "remove") {
        m.type = UpdatePeerList::UpdateType::Remove;
    } else if (type == "heartbeat") {
        m.type = UpdatePeerList::UpdateType::Heartbeat;
    } else {
        throw std::invalid_argument("unknown peer list update type: " + type);
    }
    j.at("subject").get_to(m.subject);
    j.at("subject_cloudlet").get_to(m.subject_cloudlet);
    j.at("list_version").get_to(m.list_version);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const JoinRequest& m) {
    j = json{{"instance", m.instance}, {"cloudlet", m.cloudlet}, {"corr", m.corr}};
}
void from_json(const json& j, JoinRequest& m) {
    j.at("instance").get_to(m.instance);
    j.at("cloudlet").get_to(m.cloudlet);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const UpdateAck& m) {
    j = json{{"instance", m.instance}, {"corr", m.corr}};
}
void from_json(const json& j, UpdateAck& m) {
    j.at("instance").get_to(m.instance);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const JoinAck& m) {
    j = json{{"plan", m.plan}, {"peers", m.peers}, {"corr", m.corr}};
}
void from_json(const json& j, JoinAck& m) {
    j.at("plan").get_to(m.plan);
    j.at("peers").get_to(m.peers);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const StabReq& m) { j = json{{"object", m.object}, {"corr", m.corr}}; }
void from_json(const json& j, StabReq& m) {
    j.at("object").get_to(m.object);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const StabRes& m) {
    j = json{{"object", m.object},
             {"corr", m.corr},
             {"cloudlet", m.cloudlet},
             {"value", m.value}};
    opt_to(j, "history", m.history);
}
void from_json(const json& j, StabRes& m) {
    j.at("object").get_to(m.object);
    j.at("corr").get_to(m.corr);
    j.at("cloudlet").get_to(m.cloudlet);
    j.at("value").get_to(m.value);
    opt_from(j, "history", m.history);
}

void to_json(json& j, const StabCom& m) {
    j = json{{"object", m.object},
             {"corr", m.corr},
             {"value", m.value},
             {"plan_version", m.plan_version},
             {"allocations", m.allocations}};
    opt_to(j, "pattern", m.pattern);
    opt_to(j, "merged_history", m.merged_history);
}
void from_json(const json& j, StabCom& m) {
    j.at("object").get_to(m.object);
    j.at("corr").get_to(m.corr);
    j.at("value").get_to(m.value);
    j.at("plan_version").get_to(m.plan_version);
    j.at("allocations").get_to(m.allocations);
    opt_from(j, "pattern", m.pattern);
    opt_from(j, "merged_history", m.merged_history);
}

void to_json(json& j, const StabAck& m) {
    j = json{{"object", m.object}, {"corr", m.corr}, {"instance", m.instance}};
}
void from_json(const json& j, StabAck& m) {
    j.at("object").get_to(m.object);
    j.at("corr").get_to(m.corr);
    j.at("instance").get_to(m.instance);
}

void to_json(json& j, const QBrwReq& m) {
    j = json{{"object", m.object}, {"amount", m.amount}, {"corr", m.corr}};
}
void from_json(const json& j, QBrwReq& m) {
    j.at("object").get_to(m.object);
    j.at("amount").get_to(m.amount);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const QuotaTransfer& m) {
    j = json{{"object", m.object}, {"amount", m.amount}, {"corr", m.corr}};
}
void from_json(const json& j, QuotaTransfer& m) {
    j.at("object").get_to(m.object);
    j.at("amount").get_to(m.amount);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const QuotaTrAck& m) {
    j = json{{"object", m.object}, {"amount", m.amount}, {"corr", m.corr}};
}
void from_json(const json& j, QuotaTrAck& m) {
    j.at("object").get_to(m.object);
    j.at("amount").get_to(m.amount);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const LeaderReq& m) {
    j = json{{"instance", m.instance}, {"corr", m.corr}};
}
void from_json(const json& j, LeaderReq& m) {
    j.at("instance").get_to(m.instance);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const QuotaNote& m) {
    j = json{{"kind", m.kind == QuotaNote::Kind::Hold ? "hold" : "credit"},
             {"corr", m.corr},
             {"object", m.object},
             {"amount", m.amount},
             {"counterparty", m.counterparty}};
}
void from_json(const json& j, QuotaNote& m) {
    m.kind = j.at("kind").get<std::string>() == "hold" ? QuotaNote::Kind::Hold
                                                       : QuotaNote::Kind::Credit;
    j.at("corr").get_to(m.corr);
    j.at("object").get_to(m.object);
    j.at("amount").get_to(m.amount);
    j.at("counterparty").get_to(m.counterparty);
}

void to_json(json& j, const LeaderAck& m) {
    j = json{{"accept", m.accept},
             {"instance", m.instance},
             {"plan", m.plan},
             {"peers", m.peers},
             {"quota_notes", m.quota_notes},
             {"corr", m.corr}};
}
void from_json(const json& j, LeaderAck& m) {
    j.at("accept").get_to(m.accept);
    j.at("instance").get_to(m.instance);
    j.at("plan").get_to(m.plan);
    j.at("peers").get_to(m.peers);
    j.at("quota_notes").get_to(m.quota_notes);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const HoldResolution& m) {
    j = json{{"corr", m.corr}, {"object", m.object}, {"taken", m.taken}};
}
void from_json(const json& j, HoldResolution& m) {
    j.at("corr").get_to(m.corr);
    j.at("object").get_to(m.object);
    j.at("taken").get_to(m.taken);
}

void to_json(json& j, const Synch& m) {
    j = json{{"plan", m.plan},
             {"peers", m.peers},
             {"resolutions", m.resolutions},
             {"corr", m.corr}};
}
void from_json(const json& j, Synch& m) {
    j.at("plan").get_to(m.plan);
    j.at("peers").get_to(m.peers);
    j.at("resolutions").get_to(m.resolutions);
    j.at("corr").get_to(m.corr);
}

void to_json(json& j, const SynchAck& m) {
    j = json{{"instance", m.instance}, {"corr", m.corr}};
}
void from_json(const json& j, SynchAck& m) {
    j.at("instance").get_to(m.instance);
    j.at("corr").get_to(m.corr);
}

}  // namespace msg

void to_json(json& j, const ApiMessage& m) {
    json args;
    std::visit([&args](const auto& v) { args = v; }, m);
    j = json{{"op", op_name(m)}, {"args", std::move(args)}};
}

void from_json(const json& j, ApiMessage& m) {
    const auto op = j.at("op").get<std::string>();
    const auto& args = j.at("args");
    if (op == "Read") {
        m = args.get<msg::Read>();
    } else if (op == "Write") {
        m = args.get<msg::Write>();
    } else if (op == "LoadDCP") {
        m = args.get<msg::LoadDcp>();
    } else if (op == "ModifyConsistencyLevel") {
        m = args.get<msg::ModifyConsistencyLevel>();
    } else if (op == "ModifyCloudletQuota") {
        m = args.get<msg::ModifyCloudletQuota>();
    } else if (op == "LoadPeerList") {
        m = args.get<msg::LoadPeerList>();
    } else if (op == "UpdatePeerList") {
        m = args.get<msg::UpdatePeerList>();
    } else if (op == "JoinRequest") {
        m = args.get<msg::JoinRequest>();
    } else if (op == "UpdateAck") {
        m = args.get<msg::UpdateAck>();
    } else if (op == "JoinAck") {
        m = args.get<msg::JoinAck>();
    } else if (op == "StabReq") {
        m = args.get<msg::StabReq>();
    } else if (op == "StabRes") {
        m = args.get<msg::StabRes>();
    } else if (op == "StabCom") {
        m = args.get<msg::StabCom>();
    } else if (op == "StabAck") {
        m = args.get<msg::StabAck>();
    } else if (op == "QBrwReq") {
        m = args.get<msg::QBrwReq>();
    } else if (op == "QuotaTransfer") {
        m = args.get<msg::QuotaTransfer>();
    } else if (op == "QuotaTrAck") {
        m = args.get<msg::QuotaTrAck>();
    } else if (op == "LeaderReq") {
        m = args.get<msg::LeaderReq>();
    } else if (op == "LeaderAck") {
        m = args.get<msg::LeaderAck>();
    } else if (op == "Synch") {
        m = args.get<msg::Synch>();
    } else if (op == "SynchAck") {
        m = args.get<msg::SynchAck>();
    } else {
        throw std::invalid_argument("unknown api operation: " + op);
    }
}

void to_json(json& j, const Envelope& e) {
    json payload = e.payload;
    j = json{{"msg_id", e.msg_id},
             {"from", e.from},
             {"to", e.to},
             {"sent_at", e.sent_at},
             {"op", payload.at("op")},
             {"args", payload.at("args")}};
}

void from_json(const json& j, Envelope& e) {
    j.at("msg_id").get_to(e.msg_id);
    j.at("from").get_to(e.from);
    j.at("to").get_to(e.to);
    j.at("sent_at").get_to(e.sent_at);
    from_json(json{{"op", j.at("op")}, {"args", j.at("args")}}, e.payload);
}

std::string to_line(const Envelope& e) {
    json j = e;
    return j.dump();
}

Envelope envelope_from_line(const std::string& line) {
    return json::parse(line).get<Envelope>();
}

}  // namespace dcaas
