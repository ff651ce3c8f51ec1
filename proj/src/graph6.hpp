#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace ng {

/// Decodes one graph6 record. An optional ">>graph6<<" header and a single
/// trailing line break are accepted. Padding bits in the final byte are
/// ignored. Throws ErrorCode::parse on malformed input.
Graph parse_graph6(std::string_view text);

/// Encodes without header or trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace ng
