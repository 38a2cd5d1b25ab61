#include "lzkit/channel_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lzkit/errors.hpp"

namespace lzkit {

namespace {

std::uint32_t require_uint(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw InputError(std::string("channel: '") + key +
                     "' must be a nonnegative integer");
  return j[key].get<std::uint32_t>();
}

const nlohmann::json& require_array(const nlohmann::json& j, const char* key,
                                    std::size_t size) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != size)
    throw InputError(std::string("channel: '") + key + "' must be an array of " +
                     std::to_string(size) + " entries");
  return j[key];
}

}  // namespace

FsChannel parse_channel_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("channel: invalid JSON: ") + e.what());
  }

  const std::uint32_t states = require_uint(j, "states");
  const std::uint32_t initial = require_uint(j, "initial_state");
  const std::uint32_t in_size = require_uint(j, "input_alphabet");
  const std::uint32_t out_size = require_uint(j, "output_alphabet");
  if (states == 0) throw InputError("channel: 'states' must be positive");
  if (in_size == 0 || out_size == 0)
    throw InputError("channel: alphabets must be nonempty");

  std::vector<double> emission;
  emission.reserve(static_cast<std::size_t>(in_size) * states * out_size);
  const nlohmann::json& em = require_array(j, "emission", in_size);
  for (std::uint32_t x = 0; x < in_size; ++x) {
    if (!em[x].is_array() || em[x].size() != states)
      throw InputError("channel: emission[" + std::to_string(x) +
                       "] must list one row per state");
    for (std::uint32_t z = 0; z < states; ++z) {
      const nlohmann::json& row = em[x][z];
      if (!row.is_array() || row.size() != out_size)
        throw InputError("channel: emission row must have one probability per "
                         "output symbol");
      for (const nlohmann::json& p : row) {
        if (!p.is_number())
          throw InputError("channel: emission probabilities must be numbers");
        emission.push_back(p.get<double>());
      }
    }
  }

  std::vector<std::uint32_t> next_state;
  next_state.reserve(static_cast<std::size_t>(in_size) * out_size * states);
  const nlohmann::json& ns = require_array(j, "next_state", in_size);
  for (std::uint32_t x = 0; x < in_size; ++x) {
    if (!ns[x].is_array() || ns[x].size() != out_size)
      throw InputError("channel: next_state[" + std::to_string(x) +
                       "] must list one row per output symbol");
    for (std::uint32_t y = 0; y < out_size; ++y) {
      const nlohmann::json& row = ns[x][y];
      if (!row.is_array() || row.size() != states)
        throw InputError("channel: next-state row must have one entry per "
                         "state");
      for (const nlohmann::json& z : row) {
        if (!z.is_number_unsigned())
          throw InputError("channel: next-state entries must be nonnegative "
                           "integers");
        next_state.push_back(z.get<std::uint32_t>());
      }
    }
  }

  return FsChannel(states, initial, in_size, out_size, std::move(emission),
                   std::move(next_state));
}

FsChannel load_channel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open channel file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_channel_json(buffer.str());
}

}  // namespace lzkit
