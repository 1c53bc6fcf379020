#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fdwpcn/mls.hpp"
#include "fdwpcn/netgen.hpp"
#include "fdwpcn/stm.hpp"

namespace fdwpcn {

using Json = nlohmann::ordered_json;

// Field names match the struct members. Missing optional fields take their
// defaults; unknown fields raise ParseError so that typos do not pass
// silently. User indices in JSON are one-based.
Json to_json(const SystemParams& params);
Json to_json(const UserProfile& user);
Json to_json(const NetworkInstance& instance);
Json to_json(const GenConfig& config);
Json to_json(const Schedule& schedule);
Json to_json(const FeasibilityReport& report);

SystemParams system_params_from_json(const Json& j);
UserProfile user_from_json(const Json& j);
NetworkInstance instance_from_json(const Json& j);
GenConfig gen_config_from_json(const Json& j);

// Instance document with the generating config and seed attached.
Json instance_document(const NetworkInstance& instance, const GenConfig& config);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fdwpcn
