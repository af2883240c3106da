// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_STATEFILE_HPP
#define LUQ_STATEFILE_HPP

#include <map>
#include <string>
#include <variant>

#include "luq/state.hpp"

namespace luq {

using StateVariant = std::variant<PureState, MixedState>;

/// Text (JSON) state format: kind, dims, data as explicit [re, im]
/// pairs — amplitudes for pure states, dense matrix rows for mixed
/// ones — plus a free-form string metadata map. Numbers serialize with
/// shortest-round-trip precision, so write→read is lossless and
/// serialization is byte-deterministic.
std::string serialize_state(const StateVariant& state,
                            const std::map<std::string, std::string>& metadata = {});
StateVariant parse_state(const std::string& text);

void save_state(const std::string& path, const StateVariant& state,
                const std::map<std::string, std::string>& metadata = {});
StateVariant load_state(const std::string& path);

}  // namespace luq

#endif  // LUQ_STATEFILE_HPP
