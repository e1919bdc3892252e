#pragma once

#include "fairauction/settlement.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace fairauction {

/// {"exact": "1450/59", "rounded": "24.58"}
nlohmann::ordered_json money_json(Money const &m);

/// Machine-readable settlement. Every monetary value carries both the exact
/// rational and its 2-decimal rendering, so conservation can be rechecked by
/// consumers.
nlohmann::ordered_json report_to_json(AuctionInstance const &instance,
                                      SettlementReport const &report);

/// Human-readable walkthrough: fair valuations, bids, winning allocation,
/// payments with case labels, redistributions, tie divisions and receipt.
std::string render_text(AuctionInstance const &instance, SettlementReport const &report);

}  // namespace fairauction
