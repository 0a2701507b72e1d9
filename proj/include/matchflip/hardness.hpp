#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"
#include "matchflip/oracle.hpp"

namespace matchflip {

enum class NclVertexType { And, Or };

struct NclEdge {
  int u = 0;
  int v = 0;
  int weight = 2;
};

/// AND/OR constraint graph. Parallel edges are allowed; self-loops are not.
struct NclMachine {
  std::vector<NclVertexType> types;
  std::vector<NclEdge> edges;

  int vertex_count() const { return static_cast<int>(types.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Head of every edge (the endpoint it points into), or kNeutral.
struct NclConfiguration {
  static constexpr int kNeutral = -1;
  std::vector<int> head;

  friend bool operator==(const NclConfiguration&, const NclConfiguration&) = default;
};

/// Degree 3 everywhere, weights {1,1,2} at AND and {2,2,2} at OR vertices.
/// Throws MalformedMachine.
void validate_machine(const NclMachine& m);

/// Every vertex receives in-weight at least two; neutral edges count for
/// neither endpoint. Throws MalformedMachine, or InvalidConfiguration when
/// the configuration does not orient the machine's edges.
bool validate_ncl(const NclMachine& m, const NclConfiguration& c);

/// All valid configurations without neutral edges, in binary order of the
/// heads (bit i set: edge i points into its v endpoint).
std::vector<NclConfiguration> valid_configurations(const NclMachine& m);

/// Whether c_tar is reachable from c_ini by single-edge reversals through
/// valid configurations.
bool ncl_reachable(const NclMachine& m, const NclConfiguration& c_ini, const NclConfiguration& c_tar);

enum class GadgetKind { Edge, And, Or };

std::string to_string(GadgetKind kind);

/// A gadget as local data. Ports are connector pairs (colour-0 vertex,
/// colour-1 vertex): edge gadget [v side, w side]; AND [weight-2, weight-1,
/// weight-1]; OR [a, b, c]. Orange edges are the subdividable ones.
struct GadgetTemplate {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<Edge> orange;
  std::vector<std::array<int, 2>> ports;
  std::vector<int> color;
};

const GadgetTemplate& gadget_template(GadgetKind kind);

/// One placed gadget: global vertices, owned edges and connector pairs.
struct Gadget {
  GadgetKind kind = GadgetKind::Edge;
  int ncl_id = 0;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<std::array<int, 2>> ports;
};

/// A subdivided orange edge: `path` runs from one endpoint to the other.
struct Subdivision {
  Edge original;
  std::vector<int> path;
};

struct GadgetInstance {
  NclMachine machine;
  Graph graph;
  /// Vertex gadgets first (index = NCL vertex), then edge gadgets
  /// (index = vertex count + NCL edge).
  std::vector<Gadget> gadgets;
  /// Owning gadget per graph edge id.
  std::vector<int> edge_owner;
  /// Current orange edges (after subdivision: the first edge of each path).
  std::vector<Edge> orange;
  std::vector<Subdivision> subdivisions;
  /// Proper 2-colouring of graph.
  std::vector<int> color;
  /// Cycle length the gadgets are prepared for (4 = unsubdivided).
  int k = 4;
  /// Port index of NCL edge e at its u and v endpoints.
  std::vector<std::array<int, 2>> edge_ports;
};

struct ReducedInstance {
  GadgetInstance gadgets;
  Matching m_ini;
  Matching m_tar;
};

/// Builds the gadget graph of a machine (no matchings). Throws
/// MalformedMachine.
GadgetInstance build_gadget_graph(const NclMachine& m);

/// Canonical perfect matching for a configuration without neutral edges:
/// per gadget, the first perfect matching (in enumeration order) of its
/// connector state. Throws InvalidConfiguration.
Matching encode(const GadgetInstance& inst, const NclConfiguration& c);

/// Reads the orientation off a perfect matching; neutral edges appear as
/// kNeutral. Throws InvalidConfiguration if a connector pair is split or
/// both ends of an edge are claimed by their vertex gadgets.
NclConfiguration decode(const GadgetInstance& inst, const Matching& m);

/// Full reduction. Asserts bipartiteness, maximum degree at most five and
/// straddling connector pairs. Throws InvalidConfiguration for invalid or
/// neutral configurations.
ReducedInstance reduce_ncl_to_pmr(const NclMachine& m, const NclConfiguration& c_ini,
                                  const NclConfiguration& c_tar);

/// Replaces every orange edge by a path on k-3 edges (k even, k >= 4).
/// Matchings are carried along by map_matching. Throws KOdd, KTooSmall,
/// InvalidArgument when already subdivided.
GadgetInstance subdivide_for_kflip(const GadgetInstance& inst, int k);

/// The image of a matching of the unsubdivided graph in a subdivided one.
Matching map_matching(const GadgetInstance& subdivided, const Matching& m);

struct GadgetClass {
  /// Per port: covered by this gadget (inward for a vertex gadget) or, for
  /// the edge gadget, claimed by the vertex gadget at that end.
  std::vector<bool> inward;
  bool legal = false;
  std::size_t matchings = 0;
  bool connected = true;
};

struct GadgetReport {
  GadgetKind kind = GadgetKind::Edge;
  int k = 4;
  std::vector<GadgetClass> classes;
  /// Class pairs joined by one move.
  std::vector<std::pair<int, int>> transitions;
  bool forbidden_unmatchable = true;
  bool legal_nonempty = true;
  bool internally_connected = true;
  bool external_adjacency = true;
  /// Every alternating k-cycle through edge-gadget material (the template
  /// itself for the edge gadget, the stubs otherwise) uses an orange edge.
  bool cycles_use_orange = true;

  bool passed() const {
    return forbidden_unmatchable && legal_nonempty && internally_connected && external_adjacency &&
           cycles_use_orange;
  }
};

/// Standalone check of a gadget, subdivided for k-flips when k > 4. The
/// edge gadget is closed with its two connector edges; a vertex gadget
/// gets, per port, a stub path standing in for the neighbouring edge
/// gadget. Classes are the connector states; the expected transitions join
/// legal classes that differ in one port.
GadgetReport gadget_selftest(GadgetKind kind, int k = 4);

/// Adds every edge inside `side`. Throws NotBipartite unless each edge has
/// exactly one end in side, UnbalancedSides unless |side| = n/2.
Graph split_completion(const Graph& g, std::span<const int> side);

struct KFactorInstance {
  Graph graph;
  std::vector<Edge> h_ini;
  std::vector<Edge> h_tar;
};

/// Attaches k-1 new vertices to each vertex and joins the new vertices of
/// 2t and 2t+1 completely, so every new vertex has degree k and all its
/// edges are forced; the k-factors are the forced edges plus a perfect
/// matching. Throws NotPerfect, InvalidArgument for k < 2.
KFactorInstance k_factor_instance(const Graph& g, const Matching& m_ini, const Matching& m_tar, int k);

bool is_k_factor(const Graph& g, std::span<const Edge> edges, int k);

/// Reachability between two factors by swapping the two factor edges of an
/// alternating 4-cycle for its two other edges. Throws BudgetExceeded.
bool factor_flip_reachable(const Graph& g, std::span<const Edge> from, std::span<const Edge> to,
                           std::size_t budget = kDefaultBudget);

}  // namespace matchflip
