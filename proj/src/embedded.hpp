#pragma once

#include <map>
#include <string>
#include <string_view>

namespace multistat::detail {

/// Bundled data/ files keyed by relative path, e.g. "models/model26.model".
const std::map<std::string, std::string_view>& embedded_files();

}  // namespace multistat::detail
