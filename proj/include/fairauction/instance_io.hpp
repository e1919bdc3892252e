#pragma once

#include "fairauction/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace fairauction {

/// Parses the JSON instance format:
///
///   {
///     "resources": ["r0", "r1"],
///     "auctioneer_fairness": {"r0": 8, "r1": 10},
///     "bidders": [
///       {"id": "b0", "fairness": {"r0": 5, "r1": 8},
///        "bids": [{"items": ["r0", "r1"], "amount": 20}]}
///     ]
///   }
///
/// Amounts must be JSON integers. Syntax errors carry a line and column;
/// structural errors carry the JSON pointer of the offending value.
RawInstance parse_instance(std::string_view text);

/// Reads, parses and validates an instance file.
AuctionInstance load_instance(std::filesystem::path const &path);

/// Pretty-printed JSON with two-space indent and a trailing newline. Keys
/// follow the order above. Throws InternalInvariant on a non-integral amount.
std::string serialize_instance(RawInstance const &raw);
std::string serialize_instance(AuctionInstance const &instance);

std::string read_text_file(std::filesystem::path const &path);
void        write_text_file(std::filesystem::path const &path, std::string_view text);

}  // namespace fairauction
