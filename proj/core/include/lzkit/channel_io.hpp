#pragma once

#include <string>
#include <string_view>

#include "lzkit/channel.hpp"

namespace lzkit {

/// Builds a channel from its JSON description:
///   {
///     "states": S, "initial_state": z1,
///     "input_alphabet": I, "output_alphabet": O,
///     "emission":   [x][z] -> row of O probabilities P(y|x,z),
///     "next_state": [x][y] -> row of S following states q(x,y,z)
///   }
/// Rows must sum to 1 within 1e-9 and are renormalized exactly.
/// Throws InputError on malformed JSON or an invalid table.
FsChannel parse_channel_json(std::string_view text);

/// parse_channel_json over the contents of `path`.
FsChannel load_channel(const std::string& path);

}  // namespace lzkit
