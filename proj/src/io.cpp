#include "matchflip/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "matchflip/error.hpp"

namespace matchflip {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < -(1LL << 31) || v >= (1LL << 31)) fail(ErrorCode::ParseError, std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<RawEdge> edge_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<RawEdge> out;
  out.reserve(j.size());
  for (const json& e : j) {
    auto p = int_list(e, what);
    if (p.size() != 2) fail(ErrorCode::ParseError, std::string(what) + " entries must be pairs");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

Instance parse_instance(std::string_view text) {
  json j = parse_json(text);
  int n = as_int(field(j, "n"), "n");
  if (n < 0) fail(ErrorCode::ParseError, "n must be non-negative");
  Instance inst;
  inst.graph = validate_graph(n, edge_list(field(j, "edges"), "edges"));
  inst.m_ini = Matching::of(inst.graph, edge_list(field(j, "m_ini"), "m_ini"));
  inst.m_tar = Matching::of(inst.graph, edge_list(field(j, "m_tar"), "m_tar"));
  if (auto h = j.find("hints"); h != j.end() && !h->is_null()) {
    if (!h->is_object()) fail(ErrorCode::ParseError, "hints must be an object");
    if (auto s = h->find("strong_order"); s != h->end()) inst.strong_order = int_list(*s, "strong_order");
    if (auto b = h->find("boundary_order"); b != h->end()) inst.boundary_order = int_list(*b, "boundary_order");
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  json j;
  j["n"] = inst.graph.n();
  j["edges"] = edges_json(inst.graph.edges());
  j["m_ini"] = edges_json(inst.m_ini.edges());
  j["m_tar"] = edges_json(inst.m_tar.edges());
  json hints = json::object();
  if (inst.strong_order) hints["strong_order"] = *inst.strong_order;
  if (inst.boundary_order) hints["boundary_order"] = *inst.boundary_order;
  j["hints"] = hints;
  return dump(j);
}

ReconfigSequence parse_sequence(std::string_view text) {
  json j = parse_json(text);
  const json& mode = field(j, "mode");
  if (!mode.is_string()) fail(ErrorCode::ParseError, "mode must be a string");
  ReconfigSequence seq;
  auto name = mode.get<std::string>();
  if (name == "flip") {
    seq.mode = Mode::flip();
  } else if (name == "flip_slide") {
    seq.mode = Mode::flip_slide();
  } else if (name == "kflip") {
    try {
      seq.mode = Mode::kflip(as_int(field(j, "k"), "k"));
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
  } else {
    fail(ErrorCode::ParseError, "unknown mode \"" + name + "\"");
  }
  const json& moves = field(j, "moves");
  if (!moves.is_array()) fail(ErrorCode::ParseError, "moves must be an array");
  for (const json& mv : moves) {
    if (!mv.is_object() || mv.size() != 1) fail(ErrorCode::ParseError, "each move has exactly one key");
    if (auto f = mv.find("flip"); f != mv.end()) {
      auto cycle = int_list(*f, "flip");
      if (cycle.size() < 4 || cycle.size() % 2) fail(ErrorCode::ParseError, "flip needs an even cycle of length >= 4");
      seq.moves.push_back(Flip{std::move(cycle)});
    } else if (auto s = mv.find("slide"); s != mv.end()) {
      auto rem = edge_list(json::array({field(*s, "remove")}), "remove")[0];
      auto add = edge_list(json::array({field(*s, "add")}), "add")[0];
      seq.moves.push_back(Slide{Edge::of(rem.first, rem.second), Edge::of(add.first, add.second)});
    } else {
      fail(ErrorCode::ParseError, "unknown move kind");
    }
  }
  return seq;
}

std::string write_sequence(const ReconfigSequence& seq) {
  json j;
  switch (seq.mode.kind) {
    case Mode::Kind::FlipOnly: j["mode"] = "flip"; break;
    case Mode::Kind::FlipSlide: j["mode"] = "flip_slide"; break;
    case Mode::Kind::KFlip:
      j["mode"] = "kflip";
      j["k"] = seq.mode.k;
      break;
  }
  json moves = json::array();
  for (const Move& mv : seq.moves) {
    if (const auto* f = std::get_if<Flip>(&mv)) {
      moves.push_back({{"flip", f->cycle}});
    } else {
      const auto& s = std::get<Slide>(mv);
      int v = s.pivot();
      moves.push_back({{"slide", {{"remove", {s.removed.other(v), v}}, {"add", {v, s.added.other(v)}}}}});
    }
  }
  j["moves"] = moves;
  return dump(j);
}

NclInstance parse_ncl(std::string_view text) {
  json j = parse_json(text);
  NclInstance out;
  std::map<int, int> index;
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) fail(ErrorCode::ParseError, "vertices must be an array");
  for (const json& v : vs) {
    int id = as_int(field(v, "id"), "id");
    const json& type = field(v, "type");
    if (!type.is_string()) fail(ErrorCode::ParseError, "type must be a string");
    auto t = type.get<std::string>();
    if (t != "and" && t != "or") fail(ErrorCode::ParseError, "type must be \"and\" or \"or\"");
    if (!index.emplace(id, out.machine.vertex_count()).second)
      fail(ErrorCode::MalformedMachine, "repeated vertex id " + std::to_string(id));
    out.machine.types.push_back(t == "and" ? NclVertexType::And : NclVertexType::Or);
  }
  auto vertex = [&](int id) {
    auto it = index.find(id);
    if (it == index.end()) fail(ErrorCode::MalformedMachine, "unknown vertex id " + std::to_string(id));
    return it->second;
  };
  const json& es = field(j, "edges");
  if (!es.is_array()) fail(ErrorCode::ParseError, "edges must be an array");
  for (const json& e : es)
    out.machine.edges.push_back(
        {vertex(as_int(field(e, "u"), "u")), vertex(as_int(field(e, "v"), "v")), as_int(field(e, "w"), "w")});
  auto config = [&](const char* key) {
    const json& c = field(j, key);
    if (!c.is_array()) fail(ErrorCode::ParseError, std::string(key) + " must be an array");
    NclConfiguration cfg;
    cfg.head.assign(out.machine.edges.size(), NclConfiguration::kNeutral);
    std::vector<bool> seen(out.machine.edges.size(), false);
    for (const json& x : c) {
      int e = as_int(field(x, "edge"), "edge");
      if (e < 0 || e >= out.machine.edge_count())
        fail(ErrorCode::InvalidConfiguration, std::string(key) + " names edge " + std::to_string(e));
      if (seen[e]) fail(ErrorCode::InvalidConfiguration, std::string(key) + " orients edge " + std::to_string(e) + " twice");
      seen[e] = true;
      int head = as_int(field(x, "head"), "head");
      cfg.head[e] = head == NclConfiguration::kNeutral ? head : vertex(head);
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
      if (!seen[e]) fail(ErrorCode::InvalidConfiguration, std::string(key) + " misses edge " + std::to_string(e));
    return cfg;
  };
  out.c_ini = config("c_ini");
  out.c_tar = config("c_tar");
  return out;
}

std::string write_ncl(const NclInstance& ncl) {
  json j;
  json vs = json::array();
  for (int v = 0; v < ncl.machine.vertex_count(); ++v)
    vs.push_back({{"id", v}, {"type", ncl.machine.types[v] == NclVertexType::And ? "and" : "or"}});
  j["vertices"] = vs;
  json es = json::array();
  for (const NclEdge& e : ncl.machine.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"w", e.weight}});
  j["edges"] = es;
  for (const auto& [key, cfg] : {std::pair{"c_ini", &ncl.c_ini}, std::pair{"c_tar", &ncl.c_tar}}) {
    json c = json::array();
    for (std::size_t e = 0; e < cfg->head.size(); ++e) c.push_back({{"edge", e}, {"head", cfg->head[e]}});
    j[key] = c;
  }
  return dump(j);
}

std::string write_cotree(const Cotree& t) {
  auto node = [&](auto&& self, int i) -> json {
    const Cotree::Node& nd = t.nodes[static_cast<std::size_t>(i)];
    if (nd.kind == Cotree::Node::Kind::Leaf) return {{"leaf", nd.vertex}};
    return {{nd.kind == Cotree::Node::Kind::Union ? "union" : "join", {self(self, nd.left), self(self, nd.right)}}};
  };
  return dump(t.root < 0 ? json(nullptr) : node(node, t.root));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
}

}  // namespace matchflip
