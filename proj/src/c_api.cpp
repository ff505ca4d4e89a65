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

#include "gateport/gateport.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "gateport/bases.hpp"
#include "gateport/fourway.hpp"
#include "gateport/gates.hpp"
#include "gateport/kak.hpp"
#include "gateport/simulator.hpp"
#include "gateport/teleport.hpp"

using nlohmann::json;
using namespace gateport;

struct gp_gate {
  Mat4 matrix;
  std::string name;
};

struct gp_basis {
  MeasurementBasis basis;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
gp_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<gp_status>(e.kind());
  } catch (const json::exception& e) {
    g_last_error = std::string("malformed document: ") + e.what();
    return GP_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GP_ERR_INTERNAL;
  }
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gp_status emit(const json& doc, char** out) {
  *out = to_c_string(doc.dump(2));
  return GP_OK;
}

void require_out(const void* p, const char* what) {
  if (!p) throw_usage(std::string(what) + " must not be null");
}

// ---------------------------------------------------------------- tolerances

double resolve_tol(double flag, double builtin) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GATEPORT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
  }
  return builtin;
}

// ------------------------------------------------------------------- parsing

// b >= 0 with a^2 + b^2 = 1/2; snapped to 0 at the circle's ends where
// rounding would leave ~1e-8.
double beta_ab_partner(double a) {
  const double rest = 0.5 - a * a;
  return rest < 1e-14 ? 0.0 : std::sqrt(rest);
}

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

// Accepts plain numbers and multiples of pi: 0.3, -pi/4, 3pi/4, 2*pi, pi.
double parse_angle(const std::string& text) {
  static const std::regex re(R"(^([+-]?)(\d*\.?\d*(?:[eE][+-]?\d+)?)(\*?pi)?(?:/(\d*\.?\d+))?$)");
  std::smatch m;
  const std::string s = trim(text);
  if (s.empty() || !std::regex_match(s, m, re)) throw_usage("cannot parse number '" + text + "'");
  const bool has_pi = m[3].matched;
  double value = 1.0;
  if (m[2].length() > 0) {
    value = std::stod(m[2].str());
  } else if (!has_pi) {
    throw_usage("cannot parse number '" + text + "'");
  }
  if (has_pi) value *= kPi;
  if (m[4].matched) {
    const double den = std::stod(m[4].str());
    if (den == 0) throw_usage("division by zero in '" + text + "'");
    value /= den;
  }
  if (m[1].str() == "-") value = -value;
  return value;
}

std::vector<double> parse_angles(const std::string& s, std::size_t count, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != count)
    throw_usage(what + " expects " + std::to_string(count) + " comma-separated values");
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(parse_angle(p));
  return out;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(trim(s), &used);
    if (used != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw_usage("cannot parse seed '" + s + "'");
  }
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw_usage("complex values must be numbers or [re, im] pairs");
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

template <typename M>
json matrix_to_json(const M& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <typename V>
json vector_to_json(const V& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

MatX matrix_from_json(const json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw_usage(what + " must have " + std::to_string(dim) + " rows");
  MatX m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
      throw_usage(what + " rows must have " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Vec4 vec4_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4) throw_usage(what + " must have 4 amplitudes");
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = complex_from_json(j[i]);
  return v;
}

// A spec that is inline JSON or names an existing file yields a document.
std::optional<json> document_from_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (!s.empty() && (s.front() == '{' || s.front() == '[')) return json::parse(s);
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s);
    if (!in) throw_usage("cannot read file '" + s + "'");
    return json::parse(in);
  }
  return std::nullopt;
}

Mat2 named_single_qubit(const std::string& name) {
  if (name == "i") return Mat2::Identity();
  if (name == "x") return pauli(Pauli::X);
  if (name == "y") return pauli(Pauli::Y);
  if (name == "z") return pauli(Pauli::Z);
  if (name == "h") return hadamard();
  if (name == "s") return phase_s();
  if (name == "t") return phase_t();
  if (name.rfind("haar:", 0) == 0) return haar_random_unitary(2, parse_seed(name.substr(5)));
  if (auto doc = document_from_spec(name)) {
    const json& m = doc->is_object() ? doc->at("matrix") : *doc;
    return matrix_from_json(m, 2, "single-qubit matrix");
  }
  throw_usage("unknown single-qubit matrix '" + name + "'");
}

Mat4 parse_gate_matrix(const std::string& raw, std::string& name) {
  const std::string spec = trim(raw);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  name = spec;
  if (colon == std::string::npos) {
    if (spec == "cnot") return gates::cnot();
    if (spec == "cz") return gates::cz();
    if (spec == "swap") return gates::swap();
    if (spec == "q") return gates::q_gate();
    if (spec == "r") return gates::r_gate();
    if (spec == "c_pi8") return gates::c_pi8();
    if (spec == "h_c_pi8") return tensor(hadamard(), Mat2::Identity()) * gates::c_pi8();
    if (spec == "cnot_sqrt") return gates::cnot_sqrt();
    if (spec == "swap_sqrt") return gates::swap_sqrt();
    if (spec == "exp_yy") return gates::exp_yy();
    if (spec == "identity") return Mat4::Identity();
  } else if (head == "t") {
    const auto a = parse_angles(args, 2, "t");
    return gates::t_gate(a[0], a[1]);
  } else if (head == "kak") {
    const auto a = parse_angles(args, 3, "kak");
    return nonlocal_core({a[0], a[1], a[2]});
  } else if (head == "haar") {
    return haar_random_unitary(4, parse_seed(args));
  }
  if (auto doc = document_from_spec(spec)) {
    const json& m = doc->is_object() ? doc->at("matrix") : *doc;
    if (doc->is_object() && doc->contains("name")) name = doc->at("name").get<std::string>();
    return matrix_from_json(m, 4, "gate matrix");
  }
  throw_usage("unknown gate spec '" + spec + "'");
}

MeasurementBasis parse_basis(const std::string& raw) {
  const std::string spec = trim(raw);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  MeasurementBasis b;
  bool done = true;
  if (spec == "bell") {
    b = bell_basis();
  } else if (spec == "m1") {
    b = m1_basis();
  } else if (spec == "m2") {
    b = m2_basis();
  } else if (head == "beta_ab" && colon != std::string::npos) {
    const auto parts = split(args, ',');
    if (parts.size() == 1) {
      const double a = parse_angle(parts[0]);
      if (a * a > 0.5 + 1e-12) throw_numerical("beta_ab: |a| must not exceed 1/sqrt(2)");
      b = beta_ab_basis(a, beta_ab_partner(a));
    } else if (parts.size() == 2) {
      b = beta_ab_basis(parse_angle(parts[0]), parse_angle(parts[1]));
    } else {
      throw_usage("beta_ab expects a or a,b");
    }
  } else if (head == "beta_nl" && colon != std::string::npos) {
    const auto a = parse_angles(args, 3, "beta_nl");
    b = beta_nl_basis(a[0], a[1], a[2]);
  } else if (head == "pauli_conj" && colon != std::string::npos) {
    b = conjugated_pauli_basis(named_single_qubit(args));
  } else if (head == "shifted" && colon != std::string::npos) {
    const auto at = args.find('@');
    if (at == std::string::npos) throw_usage("shifted expects phase@gate");
    std::string gate_name;
    b = u_shifted_basis(parse_gate_matrix(args.substr(at + 1), gate_name), parse_angle(args.substr(0, at)));
  } else if (head == "haar" && colon != std::string::npos) {
    const MatX u = haar_random_unitary(4, parse_seed(args));
    for (int j = 0; j < 4; ++j) b.vectors[j] = u.col(j);
  } else {
    done = false;
  }
  if (!done) {
    auto doc = document_from_spec(spec);
    if (!doc) throw_usage("unknown basis spec '" + spec + "'");
    const json& vs = doc->is_object() ? doc->at("vectors") : *doc;
    if (!vs.is_array() || vs.size() != 4) throw_usage("a basis document needs 4 vectors");
    for (int j = 0; j < 4; ++j) b.vectors[j] = vec4_from_json(vs[j], "basis vector");
    b.name = doc->is_object() && doc->contains("name") ? doc->at("name").get<std::string>() : "custom";
    if (!is_orthonormal(b, kUnitarityTol)) throw_numerical("basis vectors are not orthonormal");
    return b;
  }
  b.name = spec;
  if (!is_orthonormal(b, kUnitarityTol)) throw_numerical("basis vectors are not orthonormal");
  return b;
}

Vec4 parse_two_qubit_state(const std::string& raw, const std::string& what) {
  const std::string spec = trim(raw);
  if (spec.rfind("haar:", 0) == 0) return haar_random_state(4, parse_seed(spec.substr(5)));
  if (auto doc = document_from_spec(spec)) {
    const Vec4 v = vec4_from_json(doc->is_object() ? doc->at("amplitudes") : *doc, what);
    if (std::abs(v.norm() - 1.0) > 1e-9) throw_numerical(what + " is not normalized");
    return v;
  }
  throw_usage("unknown " + what + " spec '" + spec + "'");
}

// ------------------------------------------------------------ report pieces

// Short word over {X, Y, Z, S, T, H} equal to m up to phase, if any.
std::string name_up_to_phase(const Mat2& m) {
  static const std::vector<std::pair<std::string, Mat2>> words = [] {
    const std::vector<std::pair<std::string, Mat2>> letters = {
        {"X", pauli(Pauli::X)}, {"Y", pauli(Pauli::Y)}, {"Z", pauli(Pauli::Z)},
        {"S", phase_s()},       {"[pi/8]", phase_t()}, {"H", hadamard()}};
    std::vector<std::pair<std::string, Mat2>> out = {{"I", Mat2::Identity()}};
    std::vector<std::pair<std::string, Mat2>> frontier = {{"", Mat2::Identity()}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<std::pair<std::string, Mat2>> next;
      for (const auto& [w, wm] : frontier)
        for (const auto& [l, lm] : letters) {
          next.emplace_back(w.empty() ? l : w + " " + l, wm * lm);
          out.push_back(next.back());
        }
      frontier = std::move(next);
    }
    return out;
  }();
  for (const auto& [w, wm] : words)
    if (equal_up_to_global_phase(m, wm, 1e-9)) return w;
  return "";
}

json euler_json(const Mat2& m) {
  const auto e = euler_zyz(m);
  return {{"lambda1", e.lambda1}, {"lambda2", e.lambda2}, {"lambda3", e.lambda3}, {"phase", e.phase}};
}

json nonlocal_json(const NonlocalClass& c) {
  return {{"delta", c.delta},
          {"odd_quarter_pi", c.odd_quarter_pi},
          {"k", c.k},
          {"is_swap_point", c.is_swap_point},
          {"generic_angle", c.generic_angle}};
}

json kak_json(const KakDecomposition& d, const Mat4& u) {
  const Mat4 r = kak_reconstruct(d);
  json locals;
  const std::array<std::pair<const char*, const Mat2*>, 4> named = {
      {{"a_local", &d.a_local}, {"b_local", &d.b_local}, {"c_local", &d.c_local}, {"d_local", &d.d_local}}};
  for (const auto& [n, m] : named) locals[n] = {{"matrix", matrix_to_json(*m)}, {"euler", euler_json(*m)}};
  return {{"theta", d.theta},
          {"theta_over_pi", {d.theta[0] / kPi, d.theta[1] / kPi, d.theta[2] / kPi}},
          {"global_phase", d.global_phase},
          {"locals", locals},
          {"reconstruction_error", (r - u).norm()}};
}

const char* conclusion_text(Theorem1Conclusion c) {
  return c == Theorem1Conclusion::Deterministic ? "deterministic" : "not_covered";
}

json theorem1_json(const Theorem1Verdict& v) {
  json outcomes = json::array();
  for (int i = 0; i < 16; ++i) {
    const auto& o = v.outcomes[i];
    auto lattice = [](const std::array<std::optional<int>, 3>& w) {
      json a = json::array();
      for (const auto& x : w) a.push_back(x ? json(*x) : json(nullptr));
      return a;
    };
    outcomes.push_back({{"j", i / 4 + 1}, {"k", i % 4 + 1}, {"pattern_met", o.pattern_met},
                        {"n", lattice(o.n)}, {"m", lattice(o.m)}});
  }
  return {{"nonlocal", nonlocal_json(v.nonlocal)},
          {"theta", v.kak.theta},
          {"basis_capable", v.basis_capable},
          {"condition1_met", v.condition1_met},
          {"condition1_case", v.condition1_case},
          {"condition2_met", v.condition2_met},
          {"conclusion", conclusion_text(v.conclusion)},
          {"outcomes", outcomes}};
}

json gate_report_json(const GateTeleportReport& r) {
  json outcomes = json::array();
  for (int i = 0; i < 16; ++i) {
    const auto& o = r.outcomes[i];
    json e = {{"j", i / 4 + 1},
              {"k", i % 4 + 1},
              {"separable", o.separable},
              {"schmidt_values", o.schmidt_values},
              {"w_matrix", matrix_to_json(o.w_matrix)}};
    if (o.corrections) {
      e["phase"] = o.phase;
      e["corrections"] = {{"first", matrix_to_json(o.corrections->first)},
                          {"second", matrix_to_json(o.corrections->second)},
                          {"first_name", name_up_to_phase(o.corrections->first)},
                          {"second_name", name_up_to_phase(o.corrections->second)}};
    } else {
      e["corrections"] = nullptr;
    }
    outcomes.push_back(e);
  }
  return {{"basis_capable", r.basis_capable},
          {"n_separable", r.n_separable},
          {"success_probability", r.success_probability},
          {"deterministic", r.deterministic},
          {"outcomes", outcomes}};
}

std::array<double, 4> table1_expected_row(int r) {
  static const std::array<std::array<double, 3>, 5> e = {
      {{1, 0, .5}, {.5, 0, .5}, {.5, 0, .25}, {.25, .25, .25}, {1, 1, .25}}};
  return {e[r][0], e[r][1], e[r][2], 0};
}

}  // namespace

// ====================================================================== API

extern "C" {

const char* gp_version(void) { return "0.1.0"; }

const char* gp_last_error(void) { return g_last_error.c_str(); }

void gp_string_free(char* s) { std::free(s); }

gp_status gp_gate_parse(const char* spec, gp_gate** out) {
  return guarded([&] {
    require_out(spec, "spec");
    require_out(out, "out");
    auto g = std::make_unique<gp_gate>();
    g->matrix = parse_gate_matrix(spec, g->name);
    if (!g->matrix.allFinite()) throw_numerical("gate has non-finite entries");
    if (!is_unitary(g->matrix, kUnitarityTol)) throw_numerical("gate '" + g->name + "' is not unitary");
    *out = g.release();
    return GP_OK;
  });
}

gp_status gp_gate_from_matrix(const double* re_im, gp_gate** out) {
  return guarded([&] {
    require_out(re_im, "re_im");
    require_out(out, "out");
    auto g = std::make_unique<gp_gate>();
    for (int i = 0; i < 16; ++i) g->matrix(i / 4, i % 4) = Complex(re_im[2 * i], re_im[2 * i + 1]);
    if (!g->matrix.allFinite()) throw_numerical("gate has non-finite entries");
    if (!is_unitary(g->matrix, kUnitarityTol)) throw_numerical("gate is not unitary");
    g->name = "matrix";
    *out = g.release();
    return GP_OK;
  });
}

gp_status gp_gate_matrix(const gp_gate* gate, double* re_im) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(re_im, "re_im");
    for (int i = 0; i < 16; ++i) {
      re_im[2 * i] = gate->matrix(i / 4, i % 4).real();
      re_im[2 * i + 1] = gate->matrix(i / 4, i % 4).imag();
    }
    return GP_OK;
  });
}

const char* gp_gate_name(const gp_gate* gate) { return gate ? gate->name.c_str() : ""; }

void gp_gate_free(gp_gate* gate) { delete gate; }

gp_status gp_basis_parse(const char* spec, gp_basis** out) {
  return guarded([&] {
    require_out(spec, "spec");
    require_out(out, "out");
    auto b = std::make_unique<gp_basis>();
    b->basis = parse_basis(spec);
    *out = b.release();
    return GP_OK;
  });
}

gp_status gp_basis_from_vectors(const double* re_im, gp_basis** out) {
  return guarded([&] {
    require_out(re_im, "re_im");
    require_out(out, "out");
    auto b = std::make_unique<gp_basis>();
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        b->basis.vectors[j](i) = Complex(re_im[8 * j + 2 * i], re_im[8 * j + 2 * i + 1]);
    if (!is_orthonormal(b->basis, kUnitarityTol)) throw_numerical("basis vectors are not orthonormal");
    b->basis.name = "custom";
    *out = b.release();
    return GP_OK;
  });
}

gp_status gp_basis_vectors(const gp_basis* basis, double* re_im) {
  return guarded([&] {
    require_out(basis, "basis");
    require_out(re_im, "re_im");
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) {
        re_im[8 * j + 2 * i] = basis->basis.vectors[j](i).real();
        re_im[8 * j + 2 * i + 1] = basis->basis.vectors[j](i).imag();
      }
    return GP_OK;
  });
}

const char* gp_basis_name(const gp_basis* basis) { return basis ? basis->basis.name.c_str() : ""; }

void gp_basis_free(gp_basis* basis) { delete basis; }

gp_status gp_gate_to_json(const gp_gate* gate, char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(out, "out");
    return emit({{"name", gate->name}, {"matrix", matrix_to_json(gate->matrix)}}, out);
  });
}

gp_status gp_basis_to_json(const gp_basis* basis, char** out) {
  return guarded([&] {
    require_out(basis, "basis");
    require_out(out, "out");
    json vs = json::array();
    for (const Vec4& v : basis->basis.vectors) vs.push_back(vector_to_json(v));
    return emit({{"name", basis->basis.name}, {"vectors", vs}}, out);
  });
}

gp_status gp_kak(const gp_gate* gate, char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(out, "out");
    const KakDecomposition d = kak_decompose(gate->matrix);
    json doc = kak_json(d, gate->matrix);
    doc["gate"] = gate->name;
    doc["nonlocal"] = nonlocal_json(classify_nonlocal(d.theta));
    doc["is_clifford"] = is_clifford(gate->matrix);
    return emit(doc, out);
  });
}

gp_status gp_analyze(const gp_gate* gate, const gp_basis* basis, double tol, int verify, int inputs,
                     uint64_t seed, char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(basis, "basis");
    require_out(out, "out");
    const double used = resolve_tol(tol, kSeparabilityTol);
    const auto report = analyze_gate_teleport(gate->matrix, basis->basis, Mat4::Identity(), used);
    json doc = gate_report_json(report);
    doc["gate"] = gate->name;
    doc["basis"] = basis->basis.name;
    doc["tolerance"] = used;
    doc["is_clifford"] = is_clifford(gate->matrix);
    doc["theorem1"] = theorem1_json(theorem1_check(gate->matrix, basis->basis));
    if (verify) {
      if (inputs < 1) throw_usage("verify needs at least one input state");
      std::mt19937_64 rng(seed);
      std::array<double, 16> min_fid;
      min_fid.fill(1.0);
      const auto corr = report.applied_corrections();
      for (int n = 0; n < inputs; ++n) {
        const auto run = run_gate_teleport(haar_random_state(4, rng()), gate->matrix, basis->basis, corr);
        for (int i = 0; i < 16; ++i) min_fid[i] = std::min(min_fid[i], run.fidelities[i]);
      }
      bool agree = true;
      json per = json::array();
      for (int i = 0; i < 16; ++i) {
        const bool perfect = min_fid[i] >= 1 - 1e-9;
        agree = agree && perfect == report.outcomes[i].separable;
        per.push_back({{"j", i / 4 + 1}, {"k", i % 4 + 1}, {"min_fidelity", min_fid[i]}, {"perfect", perfect}});
      }
      doc["verification"] = {{"inputs", inputs}, {"seed", seed}, {"agreement", agree}, {"outcomes", per}};
    }
    return emit(doc, out);
  });
}

gp_status gp_tables(char** out) {
  return guarded([&] {
    require_out(out, "out");
    bool ok = true;
    const auto t1 = reproduce_table1();
    const std::array<const char*, 5> rows = {"CNOT", "C_pi8", "CNOT^(1/2)", "SWAP^(1/2)", "exp(i pi/4 YY)"};
    json table1 = json::array();
    for (int r = 0; r < 5; ++r) {
      const auto expect = table1_expected_row(r);
      bool match = true;
      for (int c = 0; c < 3; ++c) match = match && std::abs(t1[r][c] - expect[c]) < 1e-12;
      ok = ok && match;
      table1.push_back({{"gate", rows[r]},
                        {"values", t1[r]},
                        {"expected", {expect[0], expect[1], expect[2]}},
                        {"match", match}});
    }

    json table2 = json::array();
    const auto labels = table2_labels();
    for (const auto& [phi, xi, tag] : {std::tuple{kPi / 8, kPi / 8, "T(pi/8, pi/8)"},
                                       std::tuple{kPi / 7, kPi / 13, "T(pi/7, pi/13)"}}) {
      const auto report = analyze_gate_teleport(gates::t_gate(phi, xi), m2_basis());
      const auto table = table2_factors(phi, xi);
      json entries = json::array();
      bool all = report.deterministic;
      for (int i = 0; i < 16; ++i) {
        const Mat4 symbolic = tensor(table[i].first, table[i].second);
        const Mat4& w = report.outcomes[i].w_matrix;
        const bool match = equal_up_to_global_phase(w, symbolic, 1e-8) && report.outcomes[i].separable;
        all = all && match;
        entries.push_back({{"j", i / 4 + 1},
                           {"k", i % 4 + 1},
                           {"first", labels[i].first},
                           {"second", labels[i].second},
                           {"phase_over_pi", std::arg(aligning_phase(w, symbolic)) / kPi},
                           {"match", match}});
      }
      ok = ok && all;
      table2.push_back({{"gate", tag}, {"phi", phi}, {"xi", xi}, {"deterministic", report.deterministic},
                        {"match", all}, {"entries", entries}});
    }
    const json doc = {{"table1", table1}, {"table2", table2}, {"all_match", ok}};
    emit(doc, out);
    if (!ok) g_last_error = "table reproduction mismatch";
    return ok ? GP_OK : GP_ERR_SELFCHECK;
  });
}

gp_status gp_scan(const gp_gate* gate, const char* family, int points, double theta3, int threads,
                  double tol, char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(family, "family");
    require_out(out, "out");
    if (points < 2) throw_usage("scan needs at least 2 points per axis");
    const std::string fam = family;
    if (fam != "beta_ab" && fam != "beta_nl") throw_usage("scan family must be beta_ab or beta_nl");
    const double used = resolve_tol(tol, kSeparabilityTol);
    const bool ab = fam == "beta_ab";
    const std::size_t total = ab ? points : static_cast<std::size_t>(points) * points;
    std::vector<std::string> rows(total);
    const double amax = 1 / std::sqrt(2.0);

    auto work = [&](std::size_t i) {
      std::ostringstream line;
      line.precision(17);
      MeasurementBasis basis;
      if (ab) {
        const double a = -amax + 2 * amax * static_cast<double>(i) / (points - 1);
        const double b = beta_ab_partner(a);
        basis = beta_ab_basis(a, b);
        line << a << ',' << b;
      } else {
        const double t1 = -kPi + 2 * kPi * static_cast<double>(i / points) / (points - 1);
        const double t2 = -kPi + 2 * kPi * static_cast<double>(i % points) / (points - 1);
        basis = beta_nl_basis(t1, t2, theta3);
        line << t1 << ',' << t2 << ',' << theta3;
      }
      const auto r = analyze_gate_teleport(gate->matrix, basis, Mat4::Identity(), used);
      line << ',' << (r.basis_capable ? 1 : 0) << ',' << r.n_separable << ',' << r.success_probability;
      rows[i] = line.str();
    };

    const int n_threads = std::max(1, std::min<int>(threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency()), 64));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < n_threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < total;) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::string csv = ab ? "a,b,capable,n_separable,success_probability\n"
                         : "theta1,theta2,theta3,capable,n_separable,success_probability\n";
    for (const auto& r : rows) csv += r + '\n';
    *out = to_c_string(csv);
    return GP_OK;
  });
}

gp_status gp_state_teleport(const char* resource, const gp_gate* u_front, const gp_basis* basis, int inputs,
                            uint64_t seed, double tol, char** out) {
  return guarded([&] {
    require_out(resource, "resource");
    require_out(basis, "basis");
    require_out(out, "out");
    if (inputs < 1) throw_usage("state teleport needs at least one input state");
    const std::string spec = trim(resource);
    Vec4 res;
    if (spec == "bell") {
      res = ResourceState::bell().vector();
    } else if (spec == "product") {
      res = Vec4::Unit(0);
    } else if (spec.rfind("cos:", 0) == 0) {
      const double t = parse_angle(spec.substr(4));
      res = Vec4(std::cos(t), 0, 0, std::sin(t));
    } else {
      res = parse_two_qubit_state(spec, "resource");
    }
    const ResourceState rs = ResourceState::from_vector(res);
    const Mat4 u = u_front ? u_front->matrix : Mat4(Mat4::Identity());
    const double used = resolve_tol(tol, kTeleportableTol);
    const auto report = analyze_state_teleport(rs, u, basis->basis, used);

    std::array<std::optional<Mat2>, 4> corr;
    for (int j = 0; j < 4; ++j)
      if (report.outcomes[j].correction) corr[j] = report.outcomes[j].correction->adjoint();
    std::array<double, 4> min_fid;
    min_fid.fill(1.0);
    std::mt19937_64 rng(seed);
    for (int n = 0; n < inputs; ++n) {
      const auto run = run_state_teleport(haar_random_state(2, rng()), rs, u, basis->basis, corr);
      for (int j = 0; j < 4; ++j)
        if (run.probabilities[j] > 1e-14) min_fid[j] = std::min(min_fid[j], run.fidelities[j]);
    }

    json outcomes = json::array();
    for (int j = 0; j < 4; ++j) {
      const auto& o = report.outcomes[j];
      json e = {{"j", j + 1},
                {"probability", o.probability},
                {"teleportable", o.teleportable},
                {"m_matrix", matrix_to_json(o.m_matrix)},
                {"min_fidelity", min_fid[j]}};
      if (o.correction) {
        e["correction"] = matrix_to_json(*o.correction);
        e["correction_inverse"] = matrix_to_json(o.correction->adjoint());
        e["correction_inverse_name"] = name_up_to_phase(o.correction->adjoint());
      } else {
        e["correction"] = nullptr;
      }
      outcomes.push_back(e);
    }
    json doc = {{"resource", spec},
                {"u_front", u_front ? u_front->name : "identity"},
                {"basis", basis->basis.name},
                {"tolerance", used},
                {"entanglement", report.entanglement},
                {"deterministic", report.deterministic},
                {"inputs", inputs},
                {"seed", seed},
                {"outcomes", outcomes}};
    return emit(doc, out);
  });
}

gp_status gp_simulate(const gp_gate* gate, const gp_basis* basis, int trials, uint64_t seed, double tol,
                      char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(basis, "basis");
    require_out(out, "out");
    if (trials < 1) throw_usage("simulate needs at least one trial");
    const double used = resolve_tol(tol, kSeparabilityTol);
    const auto report = analyze_gate_teleport(gate->matrix, basis->basis, Mat4::Identity(), used);
    const auto corr = report.applied_corrections();
    std::mt19937_64 rng(seed);
    std::array<int, 16> count{};
    std::array<double, 16> min_fid, sum_fid{};
    min_fid.fill(1.0);
    int successes = 0;
    for (int n = 0; n < trials; ++n) {
      const Vec4 input = haar_random_state(4, rng());
      const auto shot = sample_gate_teleport(input, gate->matrix, basis->basis, corr, rng);
      const int i = shot.outcome_index;
      ++count[i];
      sum_fid[i] += shot.fidelity;
      min_fid[i] = std::min(min_fid[i], shot.fidelity);
      successes += shot.fidelity >= 1 - 1e-9;
    }
    json per = json::array();
    for (int i = 0; i < 16; ++i) {
      json e = {{"j", i / 4 + 1}, {"k", i % 4 + 1}, {"separable", report.outcomes[i].separable}, {"count", count[i]}};
      e["min_fidelity"] = count[i] ? json(min_fid[i]) : json(nullptr);
      e["mean_fidelity"] = count[i] ? json(sum_fid[i] / count[i]) : json(nullptr);
      per.push_back(e);
    }
    json doc = {{"gate", gate->name},
                {"basis", basis->basis.name},
                {"tolerance", used},
                {"trials", trials},
                {"seed", seed},
                {"predicted_success_probability", report.success_probability},
                {"observed_success_rate", static_cast<double>(successes) / trials},
                {"outcomes", per}};
    return emit(doc, out);
  });
}

gp_status gp_fourway(const gp_gate* gate, const gp_basis* basis, const char* psi, double tol, char** out) {
  return guarded([&] {
    require_out(gate, "gate");
    require_out(basis, "basis");
    require_out(out, "out");
    const std::string spec = psi ? trim(psi) : "haar:0";
    Vec4 state;
    if (spec == "clifford") {
      state = (gate->matrix * u1_gate()).adjoint() * Vec4::Unit(0);
    } else {
      state = parse_two_qubit_state(spec, "psi");
    }
    const double used = resolve_tol(tol, kSeparabilityTol);
    const auto r = analyze_fourway(gate->matrix, basis->basis, state, used);
    const StateVec chi = chi_state();
    double marginal_error = 0;
    for (int q = 0; q < 4; ++q)
      marginal_error = std::max(marginal_error, (single_qubit_marginal(chi, 4, q) - 0.5 * Mat2::Identity()).norm());

    auto term = [](const std::optional<PauliTerm>& t) {
      return t ? json{{"pauli", t->pauli.label()}, {"phase", complex_to_json(t->phase)}} : json(nullptr);
    };
    json per = json::array();
    for (int i = 0; i < 16; ++i) {
      const auto& o = r.outcomes[i];
      per.push_back({{"j", i / 4 + 1},
                     {"k", i % 4 + 1},
                     {"probability", o.probability},
                     {"branch_xx_separable", o.branch_xx_separable},
                     {"branch_zz_separable", o.branch_zz_separable},
                     {"pauli_xx", term(o.pauli_xx)},
                     {"pauli_zz", term(o.pauli_zz)},
                     {"structure_error", o.structure_error},
                     {"corrected_fidelity", o.corrected_fidelity},
                     {"nonzero_terms", o.nonzero_terms},
                     {"is_bell_state", o.is_bell_state},
                     {"output", vector_to_json(o.output)}});
    }
    json doc = {{"gate", gate->name},
                {"basis", basis->basis.name},
                {"psi", vector_to_json(state)},
                {"tolerance", used},
                {"chi_marginal_error", marginal_error},
                {"clifford_case", r.clifford_case},
                {"max_corrected_fidelity", r.max_corrected_fidelity},
                {"max_structure_error", r.max_structure_error},
                {"total_probability", r.total_probability},
                {"outcomes", per}};
    return emit(doc, out);
  });
}

gp_status gp_validate_basis(const gp_basis* basis, double tol, char** out) {
  return guarded([&] {
    require_out(basis, "basis");
    require_out(out, "out");
    const double used = resolve_tol(tol, kUnitarityTol);
    const auto r = validate_basis(basis->basis, used);
    json betas = json::array();
    for (const Mat2& m : beta_matrices(basis->basis).mats)
      betas.push_back({{"matrix", matrix_to_json(m)}, {"unitary", is_unitary(m, used)}, {"name", name_up_to_phase(m)}});
    json doc = {{"basis", basis->basis.name},
                {"tolerance", used},
                {"orthonormal", r.orthonormal},
                {"all_beta_unitary", r.all_beta_unitary},
                {"capable", r.capable()},
                {"per_vector_entanglement", r.per_vector_entanglement},
                {"beta_matrices", betas}};
    return emit(doc, out);
  });
}

}  // extern "C"
