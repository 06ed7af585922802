// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON and CSV formats shared by the CLI and the tests. Output is deterministic: keys are emitted
// in sorted order and reals in shortest round-trip form.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwsi/errors.hpp"
#include "qwsi/group.hpp"
#include "qwsi/imprimitivity.hpp"
#include "qwsi/momentum.hpp"
#include "qwsi/relativistic.hpp"
#include "qwsi/stratification.hpp"
#include "qwsi/walk.hpp"

namespace qwsi::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_argument("malformed " + what + ": " + e.what());
  }
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// walk spec: {"kind": "standard"|"split_step", "theta1", "theta2", "lattice_size",
//             "coin": "hadamard" | [[a, b], [c, d]] with real or [re, im] entries,
//             "initial": {"site": x, "coin": c}}

struct WalkConfig {
  WalkSpec spec;
  int initial_site = 0;
  int initial_coin = 0;
};

inline cplx parse_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return {v[0].get<double>(), v[1].get<double>()};
  throw invalid_argument("complex entry must be a number or [re, im]");
}

inline WalkConfig parse_walk_config(const json& j) {
  try {
    if (!j.is_object()) throw invalid_argument("walk spec must be a JSON object");
    WalkConfig cfg;
    const std::string kind = j.value("kind", std::string("split_step"));
    if (kind == "standard") cfg.spec.kind = WalkKind::standard;
    else if (kind == "split_step") cfg.spec.kind = WalkKind::split_step;
    else throw invalid_argument("unknown walk kind '" + kind + "'");
    cfg.spec.theta1 = j.value("theta1", 0.0);
    cfg.spec.theta2 = j.value("theta2", 0.0);
    if (!j.contains("lattice_size")) throw invalid_argument("walk spec needs lattice_size");
    cfg.spec.lattice_size = j.at("lattice_size").get<int>();
    if (j.contains("coin")) {
      const json& c = j.at("coin");
      if (c.is_string()) {
        if (c.get<std::string>() != "hadamard") throw invalid_argument("unknown named coin '" + c.get<std::string>() + "'");
        cfg.spec.coin_override = hadamard();
      } else {
        if (!c.is_array() || c.size() != 2 || !c[0].is_array() || !c[1].is_array() || c[0].size() != 2 || c[1].size() != 2) {
          throw invalid_argument("coin matrix must be 2x2");
        }
        Matrix2c m;
        for (int r = 0; r < 2; ++r)
          for (int col = 0; col < 2; ++col) m(r, col) = parse_complex(c[r][col]);
        cfg.spec.coin_override = CoinOperator(m);
      }
    }
    if (j.contains("initial")) {
      cfg.initial_site = j.at("initial").value("site", 0);
      cfg.initial_coin = j.at("initial").value("coin", 0);
      if (cfg.initial_coin != 0 && cfg.initial_coin != 1) throw invalid_argument("initial coin must be 0 or 1");
    }
    cfg.spec.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw invalid_argument(std::string("malformed walk spec: ") + e.what());
  }
}

inline json walk_spec_json(const WalkSpec& s) {
  json j{{"kind", s.kind == WalkKind::standard ? "standard" : "split_step"},
         {"theta1", s.theta1},
         {"theta2", s.theta2},
         {"lattice_size", s.lattice_size}};
  if (s.coin_override) {
    json m = json::array();
    for (int r = 0; r < 2; ++r) {
      json row = json::array();
      for (int c = 0; c < 2; ++c) row.push_back({s.coin_override->matrix()(r, c).real(), s.coin_override->matrix()(r, c).imag()});
      m.push_back(row);
    }
    j["coin"] = m;
  }
  return j;
}

/// x,re0,im0,re1,im1 with signed sites in ascending order.
inline std::string state_csv(const SpinorField& psi) {
  const int n = psi.lattice_size();
  std::ostringstream out;
  out << "x,re0,im0,re1,im1\n";
  for (int s = -(n / 2); s < n - n / 2; ++s) {
    out << s << ',' << format_real(psi.at(s, 0).real()) << ',' << format_real(psi.at(s, 0).imag()) << ','
        << format_real(psi.at(s, 1).real()) << ',' << format_real(psi.at(s, 1).imag()) << '\n';
  }
  return out.str();
}

/// x,p with signed sites in ascending order.
inline std::string distribution_csv(const SpinorField& psi) {
  const int n = psi.lattice_size();
  const auto p = position_distribution(psi);
  std::ostringstream out;
  out << "x,p\n";
  for (int s = -(n / 2); s < n - n / 2; ++s) out << s << ',' << format_real(p[SpinorField::wrap(s, n)]) << '\n';
  return out.str();
}

inline std::string dispersion_csv(const std::vector<DispersionPoint>& pts) {
  std::ostringstream out;
  out << "k,E_plus,E_minus,branch_flag\n";
  for (const auto& d : pts)
    out << format_real(d.k) << ',' << format_real(d.e_plus) << ',' << format_real(d.e_minus) << ',' << (d.branch_flag ? 1 : 0)
        << '\n';
  return out.str();
}

inline json vec3_json(const Vector3& v) { return json::array({v[0], v[1], v[2]}); }

inline json symmetry_json(const SymmetryReport& r) {
  json j{{"residual_chiral", r.residual_chiral},
         {"residual_ph", r.residual_ph},
         {"residual_tr", r.residual_tr},
         {"gap", r.gap},
         {"flagged_momenta", r.flagged_momenta}};
  if (r.axis_search.found && r.axis_search.gap_open && !r.axis_search.degenerate) {
    j["chiral_axis"] = vec3_json(r.chiral_axis);
  } else {
    j["chiral_axis"] = nullptr;
    json notes = json::array();
    if (!r.axis_search.gap_open) notes.push_back("gap closed: quasi-energy gap " + format_real(r.gap));
    if (r.axis_search.degenerate) notes.push_back("degenerate axis: n(k) spans fewer than two directions");
    if (!r.axis_search.found) notes.push_back("no common chiral axis: smallest singular value " +
                                              format_real(r.axis_search.min_singular_value));
    j["diagnostics"] = notes;
  }
  return j;
}

// ---------------------------------------------------------------------------
// graphs

inline json stratification_json(const Stratification& s) {
  return json{{"origin", s.origin}, {"strata", s.strata}, {"depth", s.depth()}};
}

inline json int_matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

inline json decomposition_json(const QuantumDecomposition& q) {
  return json{{"plus", int_matrix_json(q.plus)}, {"minus", int_matrix_json(q.minus)}, {"zero", int_matrix_json(q.zero)}};
}

inline json intersection_json(const IntersectionNumbers& p) { return json{{"diameter", p.diameter}, {"p", p.p}}; }

inline json regularity_json(const DistanceRegularity& d) {
  json j{{"distance_regular", d.regular}};
  if (d.numbers) j["intersection_numbers"] = intersection_json(*d.numbers);
  if (d.witness) {
    const auto& w = *d.witness;
    j["witness"] = json{{"pair", {w.x, w.y}}, {"distance", w.k}, {"i", w.i}, {"j", w.j}, {"count", w.count},
                        {"reference_pair", {w.ref_x, w.ref_y}}, {"reference_count", w.ref_count},
                        {"message", w.describe()}};
  }
  return j;
}

inline json jacobi_json(const JacobiSequence& s) {
  json omega = json::array();
  for (std::size_t i = 0; i < s.omega.size(); ++i) {
    if (s.omega_den[i] == 1) omega.push_back(s.omega_num[i]);
    else omega.push_back(s.omega[i]);
  }
  json frac = json::array();
  for (std::size_t i = 0; i < s.omega.size(); ++i) frac.push_back({s.omega_num[i], s.omega_den[i]});
  return json{{"omega", omega}, {"omega_fraction", frac}, {"alpha", s.alpha}};
}

inline json si_json(const GraphSIReport& r) {
  return json{{"residual", r.residual},
              {"rank_one_residual", r.rank_one_residual},
              {"fixed_origin_residual", r.fixed_origin_residual},
              {"resolution_defect", r.resolution_defect},
              {"group_order", r.group_order},
              {"transitive", r.transitive},
              {"orbit_sizes", r.orbit_sizes},
              {"stabilizer_orders", r.stabilizer_orders}};
}

// ---------------------------------------------------------------------------
// groups: {"order": n, "mult": [[...]]} or named "cyclic:n", "dihedral:n", "symmetric:n",
// "semidirect:n,m,r" (Z_n ⋊ Z_m, the generator of Z_m acting as a ↦ r·a)

inline FiniteGroup parse_group(const json& j) {
  try {
    if (!j.is_object() || !j.contains("mult")) throw invalid_argument("group JSON needs a mult table");
    const auto table = j.at("mult").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size())) {
      throw invalid_argument("group order does not match the table size");
    }
    return FiniteGroup::from_cayley_table(table);
  } catch (const json::exception& e) {
    throw invalid_argument(std::string("malformed group JSON: ") + e.what());
  }
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw invalid_argument("expected an integer list, got '" + s + "'");
    }
    if (used != item.size()) throw invalid_argument("expected an integer list, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

inline FiniteGroup named_group(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw invalid_argument("named group must look like kind:args");
  const std::string kind = name.substr(0, colon);
  const auto args = parse_int_list(name.substr(colon + 1));
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw invalid_argument("group '" + kind + "' needs " + std::to_string(n) + " argument(s)");
  };
  if (kind == "cyclic") return need(1), cyclic(args[0]);
  if (kind == "dihedral") return need(1), dihedral(args[0]).group;
  if (kind == "symmetric") {
    need(1);
    if (args[0] > 7) throw Error(ErrorKind::search_limit, "symmetric groups are limited to degree 7");
    return symmetric(args[0]).group;
  }
  if (kind == "semidirect") return need(3), cyclic_semidirect(args[0], args[1], args[2]);
  throw invalid_argument("unknown group kind '" + kind + "'");
}

inline json group_json(const FiniteGroup& g) {
  json census = json::object();
  for (auto [ord, count] : g.order_census()) census[std::to_string(ord)] = count;
  return json{{"order", g.order()}, {"mult", g.cayley_table()}, {"abelian", g.is_abelian()}, {"element_orders", census}};
}

// ---------------------------------------------------------------------------
// relativistic layer

inline ShellQuadrature parse_shell_quadrature(const json& j) {
  try {
    ShellQuadrature q;
    q.m = j.value("m", q.m);
    q.u_min = j.value("u_min", q.u_min);
    q.u_max = j.value("u_max", q.u_max);
    q.n_points = j.value("n_points", q.n_points);
    q.validate();
    return q;
  } catch (const json::exception& e) {
    throw invalid_argument(std::string("malformed shell config: ") + e.what());
  }
}

inline json continuum_json(const ContinuumReport& r) {
  json refs = json::array();
  for (const auto& x : r.refinements) {
    refs.push_back(json{{"a", x.a},
                        {"theta", x.theta},
                        {"lattice_size", x.lattice_size},
                        {"window_points", x.window_points},
                        {"max_dev", x.max_dev},
                        {"fitted_m", x.fitted_m}});
  }
  return json{{"m", r.m}, {"refinements", refs}, {"orders", r.orders}, {"order_estimate", r.order_estimate},
              {"monotone", r.monotone}};
}

inline json complex_vector_json(const Vector2c& v) {
  return json::array({json::array({v[0].real(), v[0].imag()}), json::array({v[1].real(), v[1].imag()})});
}

inline json complex_matrix_json(const Matrix2c& m) {
  json out = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    out.push_back(row);
  }
  return out;
}

/// Stable text form: two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qwsi::io
