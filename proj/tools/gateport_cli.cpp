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

// Command-line front end. Links only the C API; reports arrive as JSON and
// are either passed through (--format json) or rendered as text tables.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gateport/gateport.h"

using nlohmann::json;

namespace {

struct Failure {
  int code;
};

void check(gp_status s) {
  if (s == GP_OK) return;
  std::cerr << "error: " << gp_last_error() << '\n';
  throw Failure{static_cast<int>(s)};
}

struct GateHandle {
  gp_gate* ptr = nullptr;
  explicit GateHandle(const std::string& spec) { check(gp_gate_parse(spec.c_str(), &ptr)); }
  ~GateHandle() { gp_gate_free(ptr); }
  GateHandle(const GateHandle&) = delete;
  GateHandle& operator=(const GateHandle&) = delete;
};

struct BasisHandle {
  gp_basis* ptr = nullptr;
  explicit BasisHandle(const std::string& spec) { check(gp_basis_parse(spec.c_str(), &ptr)); }
  ~BasisHandle() { gp_basis_free(ptr); }
  BasisHandle(const BasisHandle&) = delete;
  BasisHandle& operator=(const BasisHandle&) = delete;
};

// Takes ownership of a C string from the library. A self-check failure still
// carries a report, so the status is returned rather than thrown.
// `slot` is read only after the call producing `s` has filled it.
std::string take(gp_status s, char** slot, bool allow_selfcheck = false) {
  char* text = *slot;
  *slot = nullptr;
  if (s != GP_OK && !(allow_selfcheck && s == GP_ERR_SELFCHECK)) {
    gp_string_free(text);
    check(s);
  }
  std::string out = text ? text : "";
  gp_string_free(text);
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  // Avoid printing "-0.000".
  s << (std::abs(v) < 0.5 * std::pow(10.0, -digits) ? 0.0 : v);
  return s.str();
}

std::string complex_text(const json& c, int digits = 4) {
  const double re = c[0].get<double>(), im = c[1].get<double>();
  const double eps = 0.5 * std::pow(10.0, -digits);
  if (std::abs(im) < eps) return fixed(re, digits);
  if (std::abs(re) < eps) return fixed(im, digits) + "i";
  return fixed(re, digits) + (im < 0 ? "-" : "+") + fixed(std::abs(im), digits) + "i";
}

std::string matrix_text(const json& m, const std::string& indent) {
  std::string out;
  for (const auto& row : m) {
    out += indent + "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = complex_text(row[c]);
      cell.insert(0, cell.size() < 16 ? 16 - cell.size() : 0, ' ');
      out += cell;
    }
    out += " ]\n";
  }
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void print_kak(const json& r) {
  const auto& t = r["theta"];
  std::cout << "gate: " << r["gate"].get<std::string>() << '\n'
            << "theta: (" << fixed(t[0], 6) << ", " << fixed(t[1], 6) << ", " << fixed(t[2], 6) << ")\n"
            << "theta/pi: (" << fixed(r["theta_over_pi"][0], 6) << ", " << fixed(r["theta_over_pi"][1], 6) << ", "
            << fixed(r["theta_over_pi"][2], 6) << ")\n"
            << "global phase: " << fixed(r["global_phase"], 6) << '\n'
            << "reconstruction error: " << r["reconstruction_error"].get<double>() << '\n'
            << "clifford: " << yes(r["is_clifford"]) << '\n';
  const auto& c = r["nonlocal"];
  std::cout << "nonlocal class: delta=(" << c["delta"][0] << "," << c["delta"][1] << "," << c["delta"][2]
            << ") odd_quarter_pi=(" << c["odd_quarter_pi"][0] << "," << c["odd_quarter_pi"][1] << ","
            << c["odd_quarter_pi"][2] << ") swap_point=" << yes(c["is_swap_point"])
            << " generic=" << yes(c["generic_angle"]) << '\n';
  for (const char* n : {"a_local", "b_local", "c_local", "d_local"}) {
    const auto& e = r["locals"][n]["euler"];
    std::cout << n << " (zyz: " << fixed(e["lambda1"], 6) << ", " << fixed(e["lambda2"], 6) << ", "
              << fixed(e["lambda3"], 6) << ")\n"
              << matrix_text(r["locals"][n]["matrix"], "  ");
  }
}

void print_analyze(const json& r) {
  std::cout << "gate: " << r["gate"].get<std::string>() << "   basis: " << r["basis"].get<std::string>()
            << "   clifford: " << yes(r["is_clifford"]) << '\n'
            << "basis capable: " << yes(r["basis_capable"]) << '\n';
  const bool verified = r.contains("verification");
  std::cout << "  j  k  separable  schmidt[1]    corrections";
  if (verified) std::cout << "                    min fidelity";
  std::cout << '\n';
  for (std::size_t i = 0; i < 16; ++i) {
    const auto& o = r["outcomes"][i];
    std::string corr = "-";
    if (!o["corrections"].is_null()) {
      const std::string a = o["corrections"]["first_name"], b = o["corrections"]["second_name"];
      corr = (a.empty() ? "U" : a) + " (x) " + (b.empty() ? "U" : b);
    }
    std::printf("  %d  %d  %-9s  %-12s  %-28s", o["j"].get<int>(), o["k"].get<int>(),
                yes(o["separable"]).c_str(), fixed(o["schmidt_values"][1], 6).c_str(), corr.c_str());
    if (verified) std::printf(" %s", fixed(r["verification"]["outcomes"][i]["min_fidelity"], 6).c_str());
    std::printf("\n");
  }
  std::cout << "separable outcomes: " << r["n_separable"].get<int>() << "/16\n"
            << "success " << fixed(r["success_probability"], 3) << '\n';
  const auto& t = r["theorem1"];
  std::cout << "theorem 1: " << t["conclusion"].get<std::string>()
            << " (condition 1: " << yes(t["condition1_met"]) << ", case " << t["condition1_case"].get<std::string>()
            << "; condition 2: " << yes(t["condition2_met"]) << ")\n";
  if (verified) {
    const auto& v = r["verification"];
    std::cout << "oracle agreement: " << yes(v["agreement"]) << " over " << v["inputs"].get<int>()
              << " random inputs (seed " << v["seed"].get<std::uint64_t>() << ")\n";
  }
  std::cout << "(U = correction factor without a short name; see --format json for matrices)\n";
}

void print_tables(const json& r) {
  std::cout << "Table 1: success probability\n"
            << "  gate              M_Bell   M_1      M_2      match\n";
  for (const auto& row : r["table1"]) {
    std::printf("  %-16s  %-7s  %-7s  %-7s  %s\n", row["gate"].get<std::string>().c_str(),
                fixed(row["values"][0], 4).c_str(), fixed(row["values"][1], 4).c_str(),
                fixed(row["values"][2], 4).c_str(), yes(row["match"]).c_str());
  }
  for (const auto& t : r["table2"]) {
    std::cout << "\nTable 2: T beta_j (x) beta_k T^dagger for " << t["gate"].get<std::string>()
              << " under M_2 (deterministic: " << yes(t["deterministic"]) << ")\n"
              << "  j  k  factors                          phase/pi   match\n";
    for (const auto& e : t["entries"]) {
      const std::string f = e["first"].get<std::string>() + " (x) " + e["second"].get<std::string>();
      std::printf("  %d  %d  %-31s  %9s  %s\n", e["j"].get<int>(), e["k"].get<int>(), f.c_str(),
                  fixed(e["phase_over_pi"], 4).c_str(), yes(e["match"]).c_str());
    }
  }
  std::cout << "\nall entries match: " << yes(r["all_match"]) << '\n'
            << "note: entry (4,2) is listed with its factors in the order that reproduces the product.\n";
}

void print_state_teleport(const json& r) {
  std::cout << "resource: " << r["resource"].get<std::string>() << "   U: " << r["u_front"].get<std::string>()
            << "   basis: " << r["basis"].get<std::string>() << '\n'
            << "|det psi|: " << fixed(r["entanglement"], 6) << '\n'
            << "  j  probability  teleportable  V_j^dagger (up to phase)  min fidelity\n";
  for (const auto& o : r["outcomes"]) {
    std::string name = "-";
    if (!o["correction"].is_null()) {
      name = o["correction_inverse_name"].get<std::string>();
      if (name.empty()) name = "(matrix)";
    }
    std::printf("  %d  %-11s  %-12s  %-24s  %s\n", o["j"].get<int>(), fixed(o["probability"], 6).c_str(),
                yes(o["teleportable"]).c_str(), name.c_str(), fixed(o["min_fidelity"], 6).c_str());
  }
  std::cout << "deterministic: " << yes(r["deterministic"]) << "  (" << r["inputs"].get<int>()
            << " random inputs, seed " << r["seed"].get<std::uint64_t>() << ")\n";
}

void print_simulate(const json& r) {
  std::cout << "gate: " << r["gate"].get<std::string>() << "   basis: " << r["basis"].get<std::string>()
            << "   trials: " << r["trials"].get<int>() << "   seed: " << r["seed"].get<std::uint64_t>() << '\n'
            << "  j  k  separable  count  min fidelity  mean fidelity\n";
  for (const auto& o : r["outcomes"]) {
    const bool seen = o["count"].get<int>() > 0;
    std::printf("  %d  %d  %-9s  %5d  %-12s  %s\n", o["j"].get<int>(), o["k"].get<int>(),
                yes(o["separable"]).c_str(), o["count"].get<int>(),
                seen ? fixed(o["min_fidelity"], 6).c_str() : "-", seen ? fixed(o["mean_fidelity"], 6).c_str() : "-");
  }
  std::cout << "predicted success: " << fixed(r["predicted_success_probability"], 6)
            << "   observed success rate: " << fixed(r["observed_success_rate"], 6) << '\n';
}

void print_fourway(const json& r) {
  std::cout << "gate: " << r["gate"].get<std::string>() << "   basis: " << r["basis"].get<std::string>() << '\n'
            << "chi single-qubit marginal error: " << r["chi_marginal_error"].get<double>() << '\n'
            << "clifford case: " << yes(r["clifford_case"]) << '\n'
            << "  j  k  probability  XX sep  ZZ sep  XX branch      ZZ branch      fidelity  terms  bell\n";
  auto term = [](const json& t) {
    return t.is_null() ? std::string("-") : t["pauli"].get<std::string>() + " * " + complex_text(t["phase"], 3);
  };
  for (const auto& o : r["outcomes"]) {
    std::printf("  %d  %d  %-11s  %-6s  %-6s  %-13s  %-13s  %-8s  %5d  %s\n", o["j"].get<int>(), o["k"].get<int>(),
                fixed(o["probability"], 6).c_str(), yes(o["branch_xx_separable"]).c_str(),
                yes(o["branch_zz_separable"]).c_str(), term(o["pauli_xx"]).c_str(), term(o["pauli_zz"]).c_str(),
                fixed(o["corrected_fidelity"], 6).c_str(), o["nonzero_terms"].get<int>(),
                yes(o["is_bell_state"]).c_str());
  }
  std::cout << "max corrected fidelity: " << fixed(r["max_corrected_fidelity"], 6) << '\n'
            << "max structure error: " << r["max_structure_error"].get<double>() << '\n';
}

void print_validate(const json& r) {
  std::cout << "basis: " << r["basis"].get<std::string>() << '\n'
            << "orthonormal: " << yes(r["orthonormal"]) << '\n'
            << "all beta unitary: " << yes(r["all_beta_unitary"]) << '\n'
            << "teleportation capability: " << (r["capable"].get<bool>() ? "nonzero" : "zero") << '\n'
            << "  j  |det|      beta unitary  beta (up to phase)\n";
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& b = r["beta_matrices"][j];
    const std::string name = b["name"].get<std::string>();
    std::printf("  %zu  %-9s  %-12s  %s\n", j + 1, fixed(r["per_vector_entanglement"][j], 6).c_str(),
                yes(b["unitary"]).c_str(), name.empty() ? "-" : name.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gateport: two-qubit gate teleportation analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "text";
  double tol = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", tol, "Decision tolerance (overrides GATEPORT_TOL)")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(gp_version()));

  std::string gate_spec, basis_spec = "bell", family = "beta_ab", resource = "bell", u_spec = "identity",
                         psi = "haar:0", out_path;
  int points = 17, threads = 0, trials = 100, inputs = 20;
  double theta3 = 0;
  std::uint64_t seed = 1;
  bool verify = false;

  auto* kak = app.add_subcommand("kak", "KAK decomposition and non-local class of a gate");
  kak->add_option("--gate", gate_spec, "Gate spec")->required();

  auto* analyze = app.add_subcommand("analyze", "Gate teleportation analysis for a gate and basis");
  analyze->add_option("--gate", gate_spec, "Gate spec")->required();
  analyze->add_option("--basis", basis_spec, "Basis spec")->capture_default_str();
  analyze->add_flag("--verify", verify, "Cross-check with the statevector simulator");
  analyze->add_option("--inputs", inputs, "Random inputs for --verify")->capture_default_str();
  analyze->add_option("--seed", seed, "Seed for --verify inputs")->capture_default_str();

  auto* tables = app.add_subcommand("tables", "Reproduce Tables 1 and 2 and self-check them");

  auto* scan = app.add_subcommand("scan", "Success probability across a basis family");
  scan->add_option("--gate", gate_spec, "Gate spec")->required();
  scan->add_option("--family", family, "beta_ab or beta_nl")->check(CLI::IsMember({"beta_ab", "beta_nl"}));
  scan->add_option("--points", points, "Grid points per axis")->check(CLI::Range(2, 100000))->capture_default_str();
  scan->add_option("--theta3", theta3, "Fixed theta3 for beta_nl")->capture_default_str();
  scan->add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto* state = app.add_subcommand("state-teleport", "Single-qubit teleportation analysis");
  state->add_option("--resource", resource, "bell, product, cos:t, haar:seed or JSON amplitudes")->capture_default_str();
  state->add_option("--u", u_spec, "Gate applied before the measurement")->capture_default_str();
  state->add_option("--basis", basis_spec, "Basis spec")->capture_default_str();
  state->add_option("--inputs", inputs, "Random inputs for the simulator check")->capture_default_str();
  state->add_option("--seed", seed, "Seed")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo gate teleportation with corrections");
  simulate->add_option("--gate", gate_spec, "Gate spec")->required();
  simulate->add_option("--basis", basis_spec, "Basis spec")->capture_default_str();
  simulate->add_option("--trials", trials, "Number of shots")->check(CLI::Range(1, 100000000))->capture_default_str();
  simulate->add_option("--seed", seed, "Seed")->capture_default_str();

  auto* fourway = app.add_subcommand("fourway", "Gate teleportation over the four-qubit chi resource");
  fourway->add_option("--gate", gate_spec, "Gate spec")->required();
  fourway->add_option("--basis", basis_spec, "Basis spec")->capture_default_str();
  fourway->add_option("--psi", psi, "Input: haar:seed, clifford, or JSON amplitudes")->capture_default_str();

  auto* validate = app.add_subcommand("validate-basis", "Orthonormality and teleportation capability of a basis");
  validate->add_option("--basis", basis_spec, "Basis spec")->required();

  auto* export_gate = app.add_subcommand("export-gate", "Write a gate document");
  export_gate->add_option("--gate", gate_spec, "Gate spec")->required();
  export_gate->add_option("--out", out_path, "Output file (default stdout)");

  auto* export_basis = app.add_subcommand("export-basis", "Write a basis document");
  export_basis->add_option("--basis", basis_spec, "Basis spec")->required();
  export_basis->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const bool as_json = format == "json";
  auto show = [&](const std::string& text, void (*render)(const json&)) {
    if (as_json) {
      std::cout << text << '\n';
    } else {
      render(json::parse(text));
    }
  };

  try {
    char* text = nullptr;
    if (*kak) {
      GateHandle g(gate_spec);
      show(take(gp_kak(g.ptr, &text), &text), print_kak);
    } else if (*analyze) {
      GateHandle g(gate_spec);
      BasisHandle b(basis_spec);
      show(take(gp_analyze(g.ptr, b.ptr, tol, verify, inputs, seed, &text), &text), print_analyze);
    } else if (*tables) {
      const gp_status s = gp_tables(&text);
      show(take(s, &text, true), print_tables);
      if (s == GP_ERR_SELFCHECK) {
        std::cerr << "error: " << gp_last_error() << '\n';
        return 3;
      }
    } else if (*scan) {
      GateHandle g(gate_spec);
      std::cout << take(gp_scan(g.ptr, family.c_str(), points, theta3, threads, tol, &text), &text);
    } else if (*state) {
      GateHandle u(u_spec);
      BasisHandle b(basis_spec);
      show(take(gp_state_teleport(resource.c_str(), u.ptr, b.ptr, inputs, seed, tol, &text), &text),
           print_state_teleport);
    } else if (*simulate) {
      GateHandle g(gate_spec);
      BasisHandle b(basis_spec);
      show(take(gp_simulate(g.ptr, b.ptr, trials, seed, tol, &text), &text), print_simulate);
    } else if (*fourway) {
      GateHandle g(gate_spec);
      BasisHandle b(basis_spec);
      show(take(gp_fourway(g.ptr, b.ptr, psi.c_str(), tol, &text), &text), print_fourway);
    } else if (*validate) {
      BasisHandle b(basis_spec);
      show(take(gp_validate_basis(b.ptr, tol, &text), &text), print_validate);
    } else if (*export_gate || *export_basis) {
      std::string doc;
      if (*export_gate) {
        GateHandle g(gate_spec);
        doc = take(gp_gate_to_json(g.ptr, &text), &text);
      } else {
        BasisHandle b(basis_spec);
        doc = take(gp_basis_to_json(b.ptr, &text), &text);
      }
      if (out_path.empty()) {
        std::cout << doc << '\n';
      } else {
        std::ofstream f(out_path);
        if (!(f << doc << '\n')) {
          std::cerr << "error: cannot write '" << out_path << "'\n";
          return 1;
        }
      }
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
