// SPDX-License-Identifier: Apache-2.0

#include "luq/statefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace luq {

namespace {

using nlohmann::json;

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx parse_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "expected a [re, im] pair");
  }
  return cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string serialize_state(const StateVariant& state,
                            const std::map<std::string, std::string>& metadata) {
  json j;
  j["metadata"] = metadata.empty() ? json::object() : json(metadata);
  if (const PureState* p = std::get_if<PureState>(&state)) {
    j["kind"] = "pure";
    j["dims"] = p->dims();
    json data = json::array();
    for (const cplx& z : p->amplitudes()) data.push_back(complex_pair(z));
    j["data"] = std::move(data);
  } else {
    const MixedState& m = std::get<MixedState>(state);
    j["kind"] = "mixed";
    j["dims"] = m.dims();
    json data = json::array();
    for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < m.matrix().cols(); ++c)
        row.push_back(complex_pair(m.matrix()(i, c)));
      data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
  }
  return j.dump(2) + "\n";
}

StateVariant parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("kind") || !j.contains("dims") ||
        !j.contains("data")) {
      throw Error(ErrorCode::ParseError,
                  "state file needs kind, dims and data fields");
    }
    const std::string kind = j["kind"].get<std::string>();
    std::vector<std::size_t> dims =
        j["dims"].get<std::vector<std::size_t>>();
    if (kind == "pure") {
      std::vector<cplx> amps;
      for (const json& e : j["data"]) amps.push_back(parse_pair(e));
      try {
        return PureState(std::move(dims), std::move(amps));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError,
                    std::string("invalid pure state: ") + e.what());
      }
    }
    if (kind == "mixed") {
      const json& data = j["data"];
      if (!data.is_array() || data.empty()) {
        throw Error(ErrorCode::ParseError, "mixed data must be matrix rows");
      }
      const std::size_t n = data.size();
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!data[i].is_array() || data[i].size() != n) {
          throw Error(ErrorCode::ParseError, "mixed data must be square");
        }
        for (std::size_t c = 0; c < n; ++c) m(i, c) = parse_pair(data[i][c]);
      }
      try {
        return MixedState(std::move(dims), std::move(m));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError,
                    std::string("invalid mixed state: ") + e.what());
      }
    }
    throw Error(ErrorCode::ParseError, "kind must be \"pure\" or \"mixed\"");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError,
                std::string("malformed state file: ") + e.what());
  }
}

void save_state(const std::string& path, const StateVariant& state,
                const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot open for writing: " + path);
  }
  out << serialize_state(state, metadata);
}

StateVariant load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

}  // namespace luq
