// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dcaas/types.hpp"

namespace dcaas {

// One committed operation in a transaction history.
struct HistoryRecord {
    enum class Op { Assign, Add };

    LamportStamp stamp;
    Op op = Op::Assign;
    std::int64_t amount = 0;  // assigned value or added delta

    std::int64_t apply(std::int64_t current) const {
        return op == Op::Assign ? amount : current + amount;
    }

    bool operator==(const HistoryRecord&) const = default;
};

// Ordered record of operations applied to one object since its last stable
// point. Stamps within one history strictly increase.
struct TransactionHistory {
    std::int64_t base_value = 0;
    std::vector<HistoryRecord> records;

    bool operator==(const TransactionHistory&) const = default;
};

void to_json(nlohmann::json& j, const HistoryRecord& r);
void from_json(const nlohmann::json& j, HistoryRecord& r);
void to_json(nlohmann::json& j, const TransactionHistory& h);
void from_json(const nlohmann::json& j, TransactionHistory& h);

}  // namespace dcaas
