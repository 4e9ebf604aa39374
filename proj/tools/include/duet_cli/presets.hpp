#pragma once

#include <string>
#include <vector>

#include "duet_cli/config.hpp"

namespace duet::cli {

/// Parameter sets of the published figures; "fig3left" and "fig4" alias the
/// case (a) variants. Throws InvalidParameter for unknown names.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace duet::cli
