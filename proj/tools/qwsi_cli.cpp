// SPDX-License-Identifier: Apache-2.0
// qwsi: command-line front end. Exit codes: 0 ok, 2 configuration, 3 invalid graph,
// 4 off-shell momentum, 5 tolerance failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwsi/graph.hpp"
#include "qwsi/group.hpp"
#include "qwsi/imprimitivity.hpp"
#include "qwsi/io.hpp"
#include "qwsi/momentum.hpp"
#include "qwsi/relativistic.hpp"
#include "qwsi/stratification.hpp"
#include "qwsi/testing/acceptance.hpp"
#include "qwsi/walk.hpp"

namespace {

using qwsi::io::json;

enum Exit { ok = 0, config = 2, graph_error = 3, off_shell = 4, tolerance = 5 };

int exit_code(qwsi::ErrorKind k) {
  switch (k) {
    case qwsi::ErrorKind::invalid_graph: return graph_error;
    case qwsi::ErrorKind::off_shell: return off_shell;
    case qwsi::ErrorKind::tolerance: return tolerance;
    case qwsi::ErrorKind::invalid_argument:
    case qwsi::ErrorKind::search_limit: return config;
  }
  return config;
}

struct Options {
  std::string spec, corpus, file, out, group, action, config_path;
  std::string point = "1,0";
  int origin = 0;
  std::uint64_t steps = 0;
  std::uint64_t seed = 20240601;
  double tol = 1e-7;
  double theta1 = std::nan(""), theta2 = std::nan("");
  int lattice = 256;
  double m = 1.0, phi = 0.0, p1 = 0.0, p2 = 0.0, window = 1.0;
  bool scramble = false, as_json = false, state = false;
};

/// Single output point: the file named by --out, or stdout.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw qwsi::invalid_argument("cannot write '" + o.out + "'");
  f << text;
}

std::vector<double> parse_reals(const std::string& s, std::size_t n) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw qwsi::invalid_argument("expected " + std::to_string(n) + " reals, got '" + s + "'");
  }
  if (out.size() != n) throw qwsi::invalid_argument("expected " + std::to_string(n) + " reals, got '" + s + "'");
  return out;
}

qwsi::Graph load_graph(const Options& o) {
  if (!o.corpus.empty() && !o.file.empty()) throw qwsi::invalid_argument("give either --corpus or --file");
  if (!o.corpus.empty()) return qwsi::corpus::by_name(o.corpus);
  if (o.file.empty()) throw qwsi::invalid_argument("graph input needs --corpus or --file");
  std::istringstream in(qwsi::io::read_file(o.file));
  return qwsi::read_edge_list(in);
}

qwsi::io::WalkConfig load_walk(const Options& o) {
  if (o.spec.empty()) throw qwsi::invalid_argument("--spec is required");
  return qwsi::io::parse_walk_config(qwsi::io::parse_json(qwsi::io::read_file(o.spec), "walk spec"));
}

int cmd_walk(const Options& o) {
  const auto cfg = load_walk(o);
  const auto psi0 = qwsi::SpinorField::localized(cfg.spec.lattice_size, cfg.initial_site, cfg.initial_coin);
  const auto psi = qwsi::evolve(psi0, cfg.spec, o.steps);
  if (o.as_json) {
    const auto p = qwsi::position_distribution(psi);
    json dist = json::object();
    const int n = psi.lattice_size();
    for (int s = -(n / 2); s < n - n / 2; ++s) {
      const double v = p[qwsi::SpinorField::wrap(s, n)];
      if (v > 0.0) dist[std::to_string(s)] = v;
    }
    emit(o, qwsi::io::dump(json{{"steps", o.steps}, {"norm", psi.norm_squared()}, {"distribution", dist}}));
  } else {
    emit(o, o.state ? qwsi::io::state_csv(psi) : qwsi::io::distribution_csv(psi));
  }
  return ok;
}

int cmd_dispersion(const Options& o) {
  const auto cfg = load_walk(o);
  emit(o, qwsi::io::dispersion_csv(qwsi::dispersion(cfg.spec, qwsi::MomentumGrid(cfg.spec.lattice_size))));
  return ok;
}

int cmd_symmetry(const Options& o) {
  qwsi::WalkSpec spec;
  if (!o.spec.empty()) {
    spec = load_walk(o).spec;
  } else {
    if (std::isnan(o.theta1) || std::isnan(o.theta2)) throw qwsi::invalid_argument("give --spec or both --theta1 and --theta2");
    spec = qwsi::WalkSpec::split_step(o.theta1, o.theta2, o.lattice);
  }
  if (spec.kind != qwsi::WalkKind::split_step) throw qwsi::invalid_argument("symmetry analysis needs a split-step walk");
  const auto rep = qwsi::symmetry_report(spec, o.scramble);
  json j = qwsi::io::symmetry_json(rep);
  j["scrambled"] = o.scramble;
  emit(o, qwsi::io::dump(j));
  const bool axis_ok = rep.axis_search.found && rep.axis_search.gap_open && !rep.axis_search.degenerate;
  if (!o.scramble && axis_ok && std::max({rep.residual_chiral, rep.residual_ph, rep.residual_tr}) > o.tol) {
    std::cerr << "symmetry residual exceeds --tol " << o.tol << '\n';
    return tolerance;
  }
  return ok;
}

int cmd_graph(const Options& o) {
  const qwsi::Graph g = load_graph(o);
  const std::string& a = o.action;
  if (a == "stratify") {
    qwsi::require_connected(g);
    const auto s = qwsi::stratify(g, o.origin);
    json j = qwsi::io::stratification_json(s);
    json deg = json::array();
    for (int x = 0; x < g.order(); ++x) {
      const auto d = qwsi::degree_decomposition(g, s, x);
      deg.push_back(json{{"vertex", x}, {"omega_o", d.zero}, {"omega_plus", d.plus}, {"omega_minus", d.minus}});
    }
    j["degrees"] = deg;
    emit(o, qwsi::io::dump(j));
  } else if (a == "decompose") {
    qwsi::require_connected(g);
    emit(o, qwsi::io::dump(qwsi::io::decomposition_json(qwsi::quantum_decompose(g, qwsi::stratify(g, o.origin)))));
  } else if (a == "drg") {
    emit(o, qwsi::io::dump(qwsi::io::regularity_json(qwsi::is_distance_regular(g))));
  } else if (a == "bose-mesner") {
    const auto d = qwsi::is_distance_regular(g);
    json j = qwsi::io::regularity_json(d);
    if (d.regular) j["defect"] = qwsi::verify_bose_mesner(g, *d.numbers);
    emit(o, qwsi::io::dump(j));
  } else if (a == "jacobi") {
    emit(o, qwsi::io::dump(qwsi::io::jacobi_json(qwsi::jacobi_sequence(g, o.origin))));
  } else if (a == "si") {
    emit(o, qwsi::io::dump(qwsi::io::si_json(qwsi::graph_si_check(g, o.origin))));
  } else {
    throw qwsi::invalid_argument("unknown graph action '" + a + "'");
  }
  return ok;
}

int cmd_group(const Options& o) {
  if (o.group.empty() == o.file.empty()) throw qwsi::invalid_argument("give exactly one of --name or --file");
  const qwsi::FiniteGroup g = o.group.empty() ? qwsi::io::parse_group(qwsi::io::parse_json(qwsi::io::read_file(o.file), "group JSON"))
                                              : qwsi::io::named_group(o.group);
  json j = qwsi::io::group_json(g);
  j["conjugacy_classes"] = qwsi::conjugacy_classes(g);
  const qwsi::PermutationRep rep = qwsi::regular_representation(g);
  std::vector<std::vector<int>> singletons(g.order());
  for (int i = 0; i < g.order(); ++i) singletons[i] = {i};
  const qwsi::PVM pvm = qwsi::pvm_from_partition(singletons, g.order());
  const auto index = qwsi::induced_block_action(qwsi::left_regular_action(g), pvm.base_sets);
  json si{{"residual", qwsi::verify_si(rep, pvm, index)}, {"homomorphism_defect", rep.homomorphism_defect()}};
  if (o.scramble) si["scrambled_residual"] = qwsi::verify_si(rep, pvm, qwsi::scrambled_index_action(index));
  j["regular_si"] = si;
  emit(o, qwsi::io::dump(j));
  return ok;
}

qwsi::MomentumPoint parse_point(const Options& o) {
  const auto v = parse_reals(o.point, 2);
  return {v[0], v[1]};
}

int cmd_relativity(const Options& o) {
  const std::string& a = o.action;
  if (a == "orbit") {
    const auto p = parse_point(o);
    const auto label = qwsi::classify_orbit(p, o.m, o.tol);
    emit(o, qwsi::io::dump(json{{"p", {p.p0, p.p1}}, {"m", o.m}, {"label", qwsi::to_string(label.kind)},
                                {"invariant", label.invariant}, {"square", p.square()}}));
  } else if (a == "boost") {
    const auto p = parse_point(o);
    const auto q = qwsi::boost_point(o.phi, p);
    emit(o, qwsi::io::dump(json{{"p", {p.p0, p.p1}}, {"phi", o.phi}, {"boosted", {q.p0, q.p1}},
                                {"label", qwsi::to_string(qwsi::classify_orbit(q, o.m, o.tol).kind)},
                                {"square_change", q.square() - p.square()}}));
  } else if (a == "trivialize") {
    const auto s = qwsi::trivialize(parse_point(o), o.m);
    emit(o, qwsi::io::dump(json{{"p", {s.p.p0, s.p.p1}}, {"m", o.m}, {"v", qwsi::io::complex_vector_json(s.v)},
                                {"residual", s.residual}}));
  } else if (a == "spinor-boost") {
    const auto s = qwsi::boost_spinor_rep(o.phi, o.m);
    emit(o, qwsi::io::dump(json{{"phi", o.phi}, {"m", o.m}, {"S", qwsi::io::complex_matrix_json(s.s)}, {"residual", s.residual}}));
    if (s.residual > 1e-6) return tolerance;
  } else if (a == "measure") {
    qwsi::ShellQuadrature q;
    if (!o.config_path.empty()) q = qwsi::io::parse_shell_quadrature(qwsi::io::parse_json(qwsi::io::read_file(o.config_path), "shell config"));
    else q.m = o.m;
    auto f = [&](const qwsi::MomentumPoint& p) {
      const double u = qwsi::rapidity(p, q.m);
      return std::exp(-u * u / 2);
    };
    const auto r = qwsi::invariant_measure_check(f, o.phi, q);
    const auto ctl = qwsi::invariant_measure_check(f, o.phi, q, qwsi::ShellMeasure::flat);
    emit(o, qwsi::io::dump(json{{"m", q.m}, {"phi", o.phi}, {"u_min", q.u_min}, {"u_max", q.u_max}, {"n_points", q.n_points},
                                {"integral", r.integral}, {"boosted_integral", r.boosted_integral}, {"residual", r.residual},
                                {"flat_measure_residual", ctl.residual}}));
    if (r.residual > std::max(o.tol, 1e-8)) return tolerance;
  } else if (a == "desitter") {
    const auto k = qwsi::desitter_dirac_kernel(o.p1, o.p2, o.m);
    emit(o, qwsi::io::dump(json{{"p1", o.p1}, {"p2", o.p2}, {"m", o.m}, {"D", qwsi::io::complex_matrix_json(k.d)},
                                {"det", {k.det.real(), k.det.imag()}}, {"kernel_exists", k.kernel_exists}}));
  } else if (a == "dirac-limit") {
    qwsi::ContinuumConfig cfg;
    cfg.m = o.m;
    cfg.window = o.window;
    const auto r = qwsi::dirac_continuum_check(cfg);
    emit(o, qwsi::io::dump(qwsi::io::continuum_json(r)));
    if (cfg.m > 0.0 && (!r.monotone || r.order_estimate < 1.0)) return tolerance;
  } else {
    throw qwsi::invalid_argument("unknown relativity action '" + a + "'");
  }
  return ok;
}

int cmd_verify_all(const Options& o) {
  const auto results = qwsi::acceptance::run_all(o.seed);
  std::ostringstream table;
  bool all = true;
  for (const auto& r : results) {
    table << qwsi::acceptance::format_row(r) << '\n';
    all = all && r.pass;
  }
  emit(o, table.str());
  return all ? ok : tolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walks, systems of imprimitivity and stratified graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--tol", o.tol, "Tolerance for pass/fail exit codes");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto* walk = app.add_subcommand("walk", "Evolve a localized walker and print its distribution");
  walk->add_option("--spec", o.spec, "Walk spec JSON")->required();
  walk->add_option("--steps", o.steps, "Number of steps");
  walk->add_flag("--state", o.state, "Print amplitudes instead of the distribution");
  walk->add_flag("--json", o.as_json, "JSON distribution instead of CSV");

  auto* disp = app.add_subcommand("dispersion", "Quasi-energy bands on the momentum grid (CSV)");
  disp->add_option("--spec", o.spec, "Walk spec JSON")->required();

  auto* sym = app.add_subcommand("symmetry", "Chiral, particle-hole and time-reversal residuals (JSON)");
  sym->add_option("--spec", o.spec, "Walk spec JSON");
  sym->add_option("--theta1", o.theta1, "First coin angle");
  sym->add_option("--theta2", o.theta2, "Second coin angle");
  sym->add_option("--n", o.lattice, "Momentum grid size (even)");
  sym->add_flag("--scramble", o.scramble, "Evaluate the scrambled negative control");

  auto* graph = app.add_subcommand("graph", "Graph stratification, regularity and imprimitivity");
  graph->add_option("action", o.action, "stratify | decompose | drg | bose-mesner | jacobi | si")
      ->required()
      ->check(CLI::IsMember({"stratify", "decompose", "drg", "bose-mesner", "jacobi", "si"}));
  graph->add_option("--corpus", o.corpus, "Named graph (cN, kN, pN, qN, kA,B, petersen, k33-minus-edge)");
  graph->add_option("--file", o.file, "Edge-list file");
  graph->add_option("--origin", o.origin, "Origin vertex");

  auto* group = app.add_subcommand("group", "Finite group table, classes and regular SI check (JSON)");
  group->add_option("--name", o.group, "cyclic:n | dihedral:n | symmetric:n | semidirect:n,m,r");
  group->add_option("--file", o.file, "Group JSON {order, mult}");
  group->add_flag("--scramble", o.scramble, "Also report the scrambled control residual");

  auto* rel = app.add_subcommand("relativity", "Mass-shell, spinor and continuum-limit checks (JSON)");
  rel->add_option("action", o.action, "orbit | boost | trivialize | spinor-boost | measure | desitter | dirac-limit")
      ->required()
      ->check(CLI::IsMember({"orbit", "boost", "trivialize", "spinor-boost", "measure", "desitter", "dirac-limit"}));
  rel->add_option("--p", o.point, "Momentum p0,p1");
  rel->add_option("--m", o.m, "Mass");
  rel->add_option("--phi", o.phi, "Rapidity");
  rel->add_option("--p1", o.p1, "de Sitter p1");
  rel->add_option("--p2", o.p2, "de Sitter p2");
  rel->add_option("--window", o.window, "Momentum window |k/a| for dirac-limit");
  rel->add_option("--config", o.config_path, "Shell quadrature JSON {m, u_min, u_max, n_points}");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance criteria and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config;
  }

  try {
    if (*walk) return cmd_walk(o);
    if (*disp) return cmd_dispersion(o);
    if (*sym) return cmd_symmetry(o);
    if (*graph) return cmd_graph(o);
    if (*group) return cmd_group(o);
    if (*rel) return cmd_relativity(o);
    if (*verify) return cmd_verify_all(o);
  } catch (const qwsi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config;
  }
  return config;
}
