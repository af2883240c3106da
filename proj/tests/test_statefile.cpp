// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "luq/statefile.hpp"

using namespace luq;
using namespace luq::testing;

TEST_CASE("pure state round trip is lossless and byte-deterministic") {
  const PureState psi = random_pure({2, 3, 3}, 7);
  const std::string text = serialize_state(psi, {{"note", "x"}});
  const StateVariant back = parse_state(text);
  const PureState& q = std::get<PureState>(back);
  CHECK(q.dims() == psi.dims());
  for (std::size_t i = 0; i < psi.amplitudes().size(); ++i)
    CHECK(q.amplitudes()[i] == psi.amplitudes()[i]);  // exact
  CHECK(serialize_state(back, {{"note", "x"}}) == text);
}

TEST_CASE("mixed state round trip is lossless") {
  const MixedState rho = random_mixed({2, 2}, 13);
  const StateVariant back = parse_state(serialize_state(rho));
  const MixedState& s = std::get<MixedState>(back);
  CHECK(s.dims() == rho.dims());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(s.matrix()(i, j) == rho.matrix()(i, j));
}

TEST_CASE("irrational values survive the round trip exactly") {
  const double r = 1.0 / std::sqrt(2.0);
  const PureState bell = PureState({2, 2}, {r, 0.0, 0.0, r});
  const StateVariant back = parse_state(serialize_state(bell));
  CHECK(std::get<PureState>(back).amplitudes()[0].real() == r);
}

TEST_CASE("parse errors carry the ParseError code") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_state(text);
      FAIL("expected a parse error for: ", text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  };
  expect_parse_error("not json");
  expect_parse_error("{}");
  expect_parse_error(R"({"kind":"pure","dims":[2,2]})");
  expect_parse_error(R"({"kind":"blob","dims":[2,2],"data":[]})");
  expect_parse_error(R"({"kind":"pure","dims":[2,2],"data":[[1,0]]})");
  expect_parse_error(
      R"({"kind":"pure","dims":[2,2],"data":[[1,0],[1,0],[0,0],[0,0]]})");
  expect_parse_error(
      R"({"kind":"mixed","dims":[2,1],"data":[[[1,0]],[[0,0]]]})");
  expect_parse_error(R"({"kind":"pure","dims":[2,2],"data":["x",0,0,0]})");
}

TEST_CASE("save and load through the filesystem") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "luq_statefile_test.json";
  const MixedState rho = random_mixed({2, 3}, 29);
  save_state(path.string(), rho);
  const StateVariant back = load_state(path.string());
  CHECK(std::get<MixedState>(back).dims() == rho.dims());
  fs::remove(path);

  CHECK_THROWS_AS(load_state("/nonexistent/nope.json"), Error);
}
