// Copyright 2026 The gateport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "json.hpp"

#include "gateport/gateport.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gp_string_free(s);
  return out;
}

gp_gate* gate(const char* spec) {
  gp_gate* g = nullptr;
  REQUIRE(gp_gate_parse(spec, &g) == GP_OK);
  return g;
}

gp_basis* basis(const char* spec) {
  gp_basis* b = nullptr;
  REQUIRE(gp_basis_parse(spec, &b) == GP_OK);
  return b;
}

json analyze(const char* g_spec, const char* b_spec) {
  gp_gate* g = gate(g_spec);
  gp_basis* b = basis(b_spec);
  char* text = nullptr;
  REQUIRE(gp_analyze(g, b, 0, 0, 0, 0, &text) == GP_OK);
  gp_gate_free(g);
  gp_basis_free(b);
  return json::parse(take(text));
}

}  // namespace

TEST_CASE("gate specs") {
  for (const char* spec : {"cnot", "cz", "swap", "q", "r", "c_pi8", "h_c_pi8", "cnot_sqrt", "swap_sqrt", "exp_yy",
                           "identity", "t:pi/8,pi/8", "t:0.449, 0.242", "kak:pi/4,0,0", "haar:12"}) {
    gp_gate* g = nullptr;
    CHECK_MESSAGE(gp_gate_parse(spec, &g) == GP_OK, spec);
    gp_gate_free(g);
  }
  gp_gate* g = nullptr;
  CHECK(gp_gate_parse("nope", &g) == GP_ERR_USAGE);
  CHECK(std::string(gp_last_error()).find("nope") != std::string::npos);
  CHECK(gp_gate_parse("t:1", &g) == GP_ERR_USAGE);
  CHECK(gp_gate_parse("t:1,abc", &g) == GP_ERR_USAGE);
  CHECK(gp_gate_parse("[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,2]]", &g) == GP_ERR_NUMERIC);
  CHECK(gp_gate_parse("[[1,0],[0,1]]", &g) == GP_ERR_USAGE);
  CHECK(gp_gate_parse("{\"matrix\": 3", &g) == GP_ERR_USAGE);
  CHECK(gp_gate_parse(nullptr, &g) == GP_ERR_USAGE);
  CHECK(g == nullptr);
}

TEST_CASE("angle syntax") {
  double m[32], ref[32];
  gp_gate* a = gate("t:pi/8,-3pi/4");
  gp_gate* b = gate("t:0.39269908169872414,-2.3561944901923448");
  gp_gate_matrix(a, m);
  gp_gate_matrix(b, ref);
  for (int i = 0; i < 32; ++i) CHECK(std::abs(m[i] - ref[i]) < 1e-15);
  gp_gate_free(a);
  gp_gate_free(b);
  gp_gate* c = gate("kak:2*pi/8, pi/16, 1e-1");
  gp_gate_free(c);
}

TEST_CASE("basis specs") {
  for (const char* spec : {"bell", "m1", "m2", "beta_ab:0.5", "beta_ab:0.5,0.5", "beta_ab:0", "beta_nl:0,pi/4,0.37",
                           "beta_nl:0.3,0.1,0", "pauli_conj:h", "pauli_conj:haar:4", "pauli_conj:[[0,1],[1,0]]",
                           "shifted:pi/4@h_c_pi8", "haar:3"}) {
    gp_basis* b = nullptr;
    CHECK_MESSAGE(gp_basis_parse(spec, &b) == GP_OK, spec);
    gp_basis_free(b);
  }
  gp_basis* b = nullptr;
  CHECK(gp_basis_parse("beta_ab:0.5,0.2", &b) == GP_ERR_NUMERIC);
  CHECK(gp_basis_parse("beta_ab:0.9", &b) == GP_ERR_NUMERIC);
  CHECK(gp_basis_parse("pauli_conj:[[1,0],[0,2]]", &b) == GP_ERR_NUMERIC);
  CHECK(gp_basis_parse("{\"vectors\": [[1,0,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]}", &b) == GP_ERR_NUMERIC);
  CHECK(gp_basis_parse("shifted:pi/4", &b) == GP_ERR_USAGE);
  CHECK(gp_basis_parse("what", &b) == GP_ERR_USAGE);
}

TEST_CASE("matrix and vector round trips") {
  gp_gate* g = gate("haar:5");
  double m[32];
  REQUIRE(gp_gate_matrix(g, m) == GP_OK);
  gp_gate* g2 = nullptr;
  REQUIRE(gp_gate_from_matrix(m, &g2) == GP_OK);
  double m2[32];
  gp_gate_matrix(g2, m2);
  for (int i = 0; i < 32; ++i) CHECK(m[i] == m2[i]);

  char* doc = nullptr;
  REQUIRE(gp_gate_to_json(g, &doc) == GP_OK);
  const std::string text = take(doc);
  gp_gate* g3 = gate(text.c_str());
  double m3[32];
  gp_gate_matrix(g3, m3);
  for (int i = 0; i < 32; ++i) CHECK(m[i] == m3[i]);  // lossless
  REQUIRE(gp_gate_to_json(g3, &doc) == GP_OK);
  CHECK(take(doc) == text);
  gp_gate_free(g);
  gp_gate_free(g2);
  gp_gate_free(g3);

  gp_basis* b = basis("pauli_conj:haar:9");
  double v[32];
  REQUIRE(gp_basis_vectors(b, v) == GP_OK);
  gp_basis* b2 = nullptr;
  REQUIRE(gp_basis_from_vectors(v, &b2) == GP_OK);
  REQUIRE(gp_basis_to_json(b, &doc) == GP_OK);
  const std::string btext = take(doc);
  gp_basis* b3 = basis(btext.c_str());
  REQUIRE(gp_basis_to_json(b3, &doc) == GP_OK);
  CHECK(take(doc) == btext);
  gp_basis_free(b);
  gp_basis_free(b2);
  gp_basis_free(b3);

  double bad[32] = {};
  CHECK(gp_gate_from_matrix(bad, &g) == GP_ERR_NUMERIC);
  CHECK(gp_basis_from_vectors(bad, &b) == GP_ERR_NUMERIC);
}

TEST_CASE("analyze reports") {
  CHECK(analyze("cnot", "bell")["success_probability"] == 1.0);
  CHECK(analyze("cnot", "m1")["success_probability"] == 0.0);
  CHECK(analyze("cnot", "m2")["success_probability"] == 0.5);
  const json r = analyze("swap", "m2");
  CHECK(r["theorem1"]["condition2_met"] == true);
  CHECK(r["outcomes"].size() == 16);
  CHECK(r["tolerance"] == 1e-7);

  gp_gate* g = gate("swap_sqrt");
  gp_basis* b = basis("m2");
  char* text = nullptr;
  REQUIRE(gp_analyze(g, b, 0, 1, 5, 3, &text) == GP_OK);
  const json v = json::parse(take(text));
  CHECK(v["success_probability"] == 0.25);
  CHECK(v["verification"]["agreement"] == true);
  CHECK(gp_analyze(g, b, 0, 1, 0, 3, &text) == GP_ERR_USAGE);
  CHECK(gp_analyze(g, nullptr, 0, 0, 0, 0, &text) == GP_ERR_USAGE);
  gp_gate_free(g);
  gp_basis_free(b);
}

TEST_CASE("tolerance resolution") {
  gp_gate* g = gate("cnot");
  gp_basis* b = basis("m2");
  char* text = nullptr;
  setenv("GATEPORT_TOL", "1e-4", 1);
  REQUIRE(gp_analyze(g, b, 0, 0, 0, 0, &text) == GP_OK);
  CHECK(json::parse(take(text))["tolerance"] == 1e-4);
  REQUIRE(gp_analyze(g, b, 1e-6, 0, 0, 0, &text) == GP_OK);
  CHECK(json::parse(take(text))["tolerance"] == 1e-6);
  setenv("GATEPORT_TOL", "-3", 1);
  REQUIRE(gp_analyze(g, b, 0, 0, 0, 0, &text) == GP_OK);
  CHECK(json::parse(take(text))["tolerance"] == 1e-7);
  unsetenv("GATEPORT_TOL");
  REQUIRE(gp_validate_basis(b, 0, &text) == GP_OK);
  CHECK(json::parse(take(text))["tolerance"] == 1e-9);
  gp_gate_free(g);
  gp_basis_free(b);
}

TEST_CASE("tables self-check") {
  char* text = nullptr;
  REQUIRE(gp_tables(&text) == GP_OK);
  const json t = json::parse(take(text));
  CHECK(t["all_match"] == true);
  CHECK(t["table1"][4]["values"][1] == 1.0);
  CHECK(t["table2"][0]["entries"][3]["second"] == "P Y X");
}

TEST_CASE("scan") {
  gp_gate* g = gate("cnot");
  char* text = nullptr;
  REQUIRE(gp_scan(g, "beta_ab", 101, 0, 4, 0, &text) == GP_OK);
  const std::string csv = take(text);
  int rows = 0, ones = 0;
  for (std::size_t pos = csv.find('\n') + 1; pos < csv.size(); pos = csv.find('\n', pos) + 1) {
    const std::string line = csv.substr(pos, csv.find('\n', pos) - pos);
    ++rows;
    ones += line.substr(line.rfind(',') + 1) == "1";
  }
  CHECK(rows == 101);
  CHECK(ones == 3);  // a = -1/sqrt2, 0, 1/sqrt2

  REQUIRE(gp_scan(g, "beta_ab", 101, 0, 1, 0, &text) == GP_OK);
  CHECK(take(text) == csv);
  CHECK(gp_scan(g, "beta_ab", 1, 0, 1, 0, &text) == GP_ERR_USAGE);
  CHECK(gp_scan(g, "other", 5, 0, 1, 0, &text) == GP_ERR_USAGE);
  gp_gate_free(g);

  g = gate("exp_yy");
  REQUIRE(gp_scan(g, "beta_ab", 50, 0, 2, 0, &text) == GP_OK);
  const std::string yy = take(text);
  CHECK(yy.find(",0\n") == std::string::npos);
  gp_gate_free(g);
}

TEST_CASE("state teleport, simulate, fourway, validate") {
  gp_gate* u = gate("h_c_pi8");
  gp_basis* b = basis("shifted:pi/4@h_c_pi8");
  char* text = nullptr;
  REQUIRE(gp_state_teleport("bell", u, b, 5, 1, 0, &text) == GP_OK);
  json r = json::parse(take(text));
  CHECK(r["deterministic"] == true);
  CHECK(r["outcomes"][0]["correction_inverse_name"] == "[pi/8]");
  REQUIRE(gp_state_teleport("product", nullptr, b, 5, 1, 0, &text) == GP_OK);
  CHECK(json::parse(take(text))["deterministic"] == false);
  CHECK(gp_state_teleport("[[1,0],[1,0],0,0]", nullptr, b, 5, 1, 0, &text) == GP_ERR_NUMERIC);
  gp_gate_free(u);
  gp_basis_free(b);

  gp_gate* t2 = gate("t:0.449,0.242");
  gp_basis* m2 = basis("m2");
  REQUIRE(gp_simulate(t2, m2, 100, 7, 0, &text) == GP_OK);
  r = json::parse(take(text));
  CHECK(r["observed_success_rate"] == 1.0);
  REQUIRE(gp_simulate(t2, m2, 100, 7, 0, &text) == GP_OK);
  CHECK(json::parse(take(text)) == r);
  gp_gate_free(t2);
  gp_basis_free(m2);

  gp_gate* c = gate("c_pi8");
  gp_basis* bell = basis("bell");
  REQUIRE(gp_fourway(c, bell, "haar:2", 0, &text) == GP_OK);
  r = json::parse(take(text));
  CHECK(r["max_corrected_fidelity"].get<double>() < 1 - 1e-3);
  CHECK(r["chi_marginal_error"].get<double>() < 1e-12);
  gp_gate_free(c);
  gp_basis* nl = basis("beta_nl:0.3,0.1,0");
  REQUIRE(gp_validate_basis(nl, 0, &text) == GP_OK);
  r = json::parse(take(text));
  CHECK(r["capable"] == false);
  CHECK(r["orthonormal"] == true);
  gp_basis_free(nl);
  gp_basis_free(bell);
}

TEST_CASE("last error is per thread") {
  gp_gate* g = nullptr;
  CHECK(gp_gate_parse("nope", &g) == GP_ERR_USAGE);
  std::string other;
  std::thread([&] { other = gp_last_error(); }).join();
  CHECK(other.empty());
  CHECK(std::string(gp_last_error()).size() > 0);
}
