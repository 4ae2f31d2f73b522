#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spechtlab/jm.hpp"
#include "spechtlab/labels.hpp"
#include "spechtlab/padic.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/tableaux.hpp"

namespace spechtlab {

/// Embedded in every object the CLI prints.
inline constexpr std::string_view kSchemaVersion = "spechtlab/1";

using json = nlohmann::ordered_json;

json to_json(const Partition& lambda);
json to_json(const PartitionPair& pair);
json to_json(const SignedLabel& label);
json to_json(const PadicExpansion& e);
json to_json(const VertexDescriptor& v);
json to_json(const CorrespondentDescriptor& d);
json to_json(const AdjacencyStep& step);
json to_json(const ResolutionDescriptor& r);
json to_json(const SignedTableau& t);
json to_json(const SpechtReport& r);

/// "[6,5,5]", "6,5,5", "(6,5,5)" or "" / "[]" for ∅. Errc::InvalidPartition for
/// anything that is not a weakly decreasing list of positive integers,
/// Errc::ParseError for malformed syntax.
Partition parse_partition(std::string_view text);
Partition partition_from_json(const json& j);

/// "(3,3,1|2,2)", "((3,3,1)|(2,2))", "[3,3,1]|[2,2]" or {"left":[...],"right":[...]}.
PartitionPair parse_pair(std::string_view text);

/// {"lambda":[...],"mu":[...],"p":P}; "p" may be omitted when fallback is given.
SignedLabel parse_label(std::string_view text, std::optional<int> fallback_p = std::nullopt);

}  // namespace spechtlab
