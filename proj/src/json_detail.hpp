#pragma once

#include "nlpc/timeline.hpp"

#include <json.hpp>

namespace nlpc::detail {

nlohmann::ordered_json spec_json(const TransitionSpec& spec);

} // namespace nlpc::detail
