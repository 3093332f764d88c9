#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtam/circuit.hpp"
#include "qtam/errors.hpp"

namespace qtam {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

Rotation rotation_from_degrees(int deg) {
  switch (deg) {
    case 0: return Rotation::R0;
    case 90: return Rotation::R90;
    case 180: return Rotation::R180;
    case 270: return Rotation::R270;
    default: fail("rotation must be one of 0, 90, 180, 270");
  }
}

int rotation_to_degrees(Rotation r) {
  return 90 * static_cast<int>(r);
}

NetPort parse_port(const json& j, const CircuitSpec& spec,
                   const std::string& where) {
  if (!j.is_object() || !j.contains("gate"))
    fail(where + ": port needs a gate id");
  NetPort p;
  p.gate = spec.gate_index(j.at("gate").get<std::string>());
  if (p.gate < 0)
    fail(where + ": unknown gate " + j.at("gate").get<std::string>());
  p.instance = j.value("instance", 0);
  p.port = j.value("port", 0);
  p.amplitude = j.value("amplitude", 1.0);
  return p;
}

ProblemGraph parse_problem(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": must be an object");
  ProblemGraph g;
  g.vertices = j.value("vertices", 0);
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2)
      fail(where + ": each edge is a [u, v] pair");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

ParameterCollections parse_params(const json& j) {
  ParameterCollections pc;
  pc.mixer = j.value("mixer", std::vector<std::vector<double>>{});
  pc.phase = j.value("phase", std::vector<std::vector<double>>{});
  return pc;
}

}  // namespace

CircuitSpec parse_circuit(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("circuit document must be a JSON object");

  CircuitSpec spec;
  spec.format = j.value("format", 0);
  if (spec.format != 1) fail("unsupported circuit format (expected 1)");

  const auto grid = j.value("grid", json::object());
  spec.grid_width = grid.value("width", 1);
  spec.grid_height = grid.value("height", 1);
  spec.num_layers = j.value("layers", grid.value("layers", 1));

  if (!j.contains("problem_graph")) fail("missing problem_graph");
  spec.problem = parse_problem(j.at("problem_graph"), "problem_graph");

  spec.num_inputs = j.value("inputs", spec.problem.vertices);
  spec.basis_dim = j.value("d", 2);

  for (const auto& gj : j.value("gates", json::array())) {
    GateSpec g;
    g.id = gj.value("id", "");
    g.num_ports = gj.value("ports", 1);
    g.width = gj.value("width", 1);
    g.height = gj.value("height", 1);
    g.rounds = gj.value("rounds", std::vector<int>{1});
    if (gj.contains("symmetry")) {
      const auto& sj = gj.at("symmetry");
      if (sj.contains("pair")) {
        g.symmetry.kind = SymmetryClass::PairMember;
        g.symmetry.partner = sj.at("pair").get<std::string>();
      } else if (sj.value("self", false)) {
        g.symmetry.kind = SymmetryClass::SelfSymmetric;
      }
    }
    if (gj.contains("place")) {
      const auto& pj = gj.at("place");
      g.initial_pos = GridPos{pj.value("x", 0), pj.value("y", 0)};
      g.initial_rotation = rotation_from_degrees(pj.value("rotation", 0));
    }
    spec.gates.push_back(std::move(g));
  }

  for (const auto& nj : j.value("nets", json::array())) {
    Net net;
    net.id = nj.value("id", "");
    const std::string where = "net " + net.id;
    for (const auto& pj : nj.value("sources", json::array()))
      net.sources.push_back(parse_port(pj, spec, where));
    for (const auto& pj : nj.value("sinks", json::array()))
      net.sinks.push_back(parse_port(pj, spec, where));
    net.subnets = nj.value("subnets", std::vector<std::vector<int>>{});
    if (nj.contains("edge")) {
      const auto& e = nj.at("edge");
      if (!e.is_array() || e.size() != 2)
        fail(where + ": edge must be a [u, v] pair");
      net.problem_edge = std::make_pair(e[0].get<int>(), e[1].get<int>());
    }
    spec.nets.push_back(std::move(net));
  }

  for (const auto& bj : j.value("blockages", json::array())) {
    Blockage b;
    b.layer = bj.value("layer", 1);
    for (const auto& c : bj.value("cells", json::array())) {
      if (!c.is_array() || c.size() != 2)
        fail("blockage cells are [x, y] pairs");
      b.cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    spec.blockages.push_back(std::move(b));
  }

  if (j.contains("reference")) {
    const auto& rj = j.at("reference");
    if (rj.contains("distribution"))
      spec.reference_distribution =
          rj.at("distribution").get<std::vector<double>>();
    if (rj.contains("circuit")) {
      const auto& cj = rj.at("circuit");
      ReferenceCircuit rc;
      rc.problem = parse_problem(cj.value("problem_graph", json::object()),
                                 "reference problem_graph");
      rc.params = parse_params(cj.value("params", json::object()));
      spec.reference_circuit = std::move(rc);
    }
  }

  if (j.contains("symmetry_axis"))
    spec.symmetry_axis = j.at("symmetry_axis").get<double>();

  if (j.contains("measurement")) {
    const auto& mj = j.at("measurement");
    spec.measurement.rounds = mj.value("rounds", 1);
    spec.measurement.gates = mj.value("gates", spec.num_inputs);
  } else {
    spec.measurement = {1, spec.num_inputs};
  }

  return spec;
}

CircuitSpec load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading circuit file: " + path);
  return parse_circuit(buf.str());
}

std::string circuit_to_json(const CircuitSpec& spec) {
  json j;
  j["format"] = spec.format;
  j["grid"] = {{"width", spec.grid_width}, {"height", spec.grid_height}};
  j["layers"] = spec.num_layers;
  j["inputs"] = spec.num_inputs;
  j["d"] = spec.basis_dim;

  auto problem_json = [](const ProblemGraph& g) {
    json out;
    out["vertices"] = g.vertices;
    auto edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    out["edges"] = edges;
    return out;
  };
  j["problem_graph"] = problem_json(spec.problem);

  auto gates = json::array();
  for (const auto& g : spec.gates) {
    json gj;
    gj["id"] = g.id;
    gj["ports"] = g.num_ports;
    gj["width"] = g.width;
    gj["height"] = g.height;
    gj["rounds"] = g.rounds;
    if (g.symmetry.kind == SymmetryClass::PairMember)
      gj["symmetry"] = {{"pair", g.symmetry.partner}};
    else if (g.symmetry.kind == SymmetryClass::SelfSymmetric)
      gj["symmetry"] = {{"self", true}};
    if (g.initial_pos)
      gj["place"] = {{"x", g.initial_pos->x},
                     {"y", g.initial_pos->y},
                     {"rotation", rotation_to_degrees(g.initial_rotation)}};
    gates.push_back(std::move(gj));
  }
  j["gates"] = gates;

  auto port_json = [&](const NetPort& p) {
    json pj;
    pj["gate"] = spec.gates[p.gate].id;
    pj["instance"] = p.instance;
    pj["port"] = p.port;
    pj["amplitude"] = p.amplitude;
    return pj;
  };
  auto nets = json::array();
  for (const auto& net : spec.nets) {
    json nj;
    nj["id"] = net.id;
    auto src = json::array();
    for (const auto& p : net.sources) src.push_back(port_json(p));
    nj["sources"] = src;
    auto snk = json::array();
    for (const auto& p : net.sinks) snk.push_back(port_json(p));
    nj["sinks"] = snk;
    if (!net.subnets.empty()) nj["subnets"] = net.subnets;
    if (net.problem_edge)
      nj["edge"] = {net.problem_edge->first, net.problem_edge->second};
    nets.push_back(std::move(nj));
  }
  j["nets"] = nets;

  if (!spec.blockages.empty()) {
    auto blocks = json::array();
    for (const auto& b : spec.blockages) {
      json bj;
      bj["layer"] = b.layer;
      auto cells = json::array();
      for (const auto& c : b.cells) cells.push_back({c.x, c.y});
      bj["cells"] = cells;
      blocks.push_back(std::move(bj));
    }
    j["blockages"] = blocks;
  }

  if (spec.reference_distribution || spec.reference_circuit) {
    json rj;
    if (spec.reference_distribution)
      rj["distribution"] = *spec.reference_distribution;
    if (spec.reference_circuit) {
      json cj;
      cj["problem_graph"] = problem_json(spec.reference_circuit->problem);
      cj["params"] = {{"mixer", spec.reference_circuit->params.mixer},
                      {"phase", spec.reference_circuit->params.phase}};
      rj["circuit"] = cj;
    }
    j["reference"] = rj;
  }

  if (spec.symmetry_axis) j["symmetry_axis"] = *spec.symmetry_axis;
  j["measurement"] = {{"rounds", spec.measurement.rounds},
                      {"gates", spec.measurement.gates}};

  return j.dump(2);
}

}  // namespace qtam
