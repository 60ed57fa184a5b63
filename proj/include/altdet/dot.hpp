#pragma once

#include <optional>
#include <string>

#include "altdet/document.hpp"

namespace altdet::io {

/// Graphviz digraph for any document kind. AFA forks become unlabeled diamond nodes
/// between the source state and the fork's members. `start` draws an entry arrow.
std::string to_dot(const AutomatonDocument& doc, const std::optional<std::string>& start = std::nullopt);

}  // namespace altdet::io
