// Coset digraphs Cos(G, H, g): vertices are the right cosets Hx, with an arc
// Hx -> Hy iff y x^-1 lies in HgH. Right multiplication by G acts as
// automorphisms.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistgrp/grp.hpp"

namespace twistgrp {

class DigraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CosetDigraph {
 public:
  using Vertex = std::uint32_t;

  const EnumeratedGroup& group() const noexcept { return *g_; }
  const EnumeratedGroup& stabilizer() const noexcept { return *h_; }
  /// The elements whose double cosets define the arc relation.
  const std::vector<Matrix>& connection() const noexcept { return connection_; }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  /// Sorted coset labels; vertex i has label vertices()[i].
  const std::vector<CosetLabel>& vertices() const noexcept { return labels_; }
  const Matrix& representative(Vertex v) const { return reps_.at(v); }
  Vertex vertex_of(const CosetLabel& label) const;
  /// The vertex Hx.
  Vertex vertex_of_element(const Matrix& x) const;
  /// The vertex H itself.
  Vertex base_vertex() const noexcept { return base_; }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
  std::vector<std::vector<Vertex>> in_adjacency() const;
  bool has_arc(Vertex from, Vertex to) const;
  std::size_t arc_count() const noexcept { return arc_count_; }
  /// Common out-degree, or nullopt when out-degrees differ.
  std::optional<std::size_t> out_degree() const;

  /// Permutation of the vertices induced by right multiplication by each
  /// generator of G.
  const std::vector<std::vector<Vertex>>& generator_actions() const noexcept { return actions_; }

  bool irreflexive() const;
  /// No pair of opposite arcs.
  bool antisymmetric() const;

 private:
  friend CosetDigraph build_coset_relation(std::shared_ptr<const EnumeratedGroup>, std::shared_ptr<const EnumeratedGroup>,
                                           std::vector<Matrix>);
  CosetDigraph() = default;

  std::shared_ptr<const EnumeratedGroup> g_;
  std::shared_ptr<const EnumeratedGroup> h_;
  std::vector<Matrix> connection_;
  std::vector<CosetLabel> labels_;
  std::vector<Matrix> reps_;
  std::unordered_map<CosetLabel, Vertex, CosetLabelHash> index_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> actions_;
  std::size_t arc_count_ = 0;
  Vertex base_ = 0;
};

/// Cos(G, H, g). Requires H <= G, g in G, g not in H and g^-1 not in HgH;
/// violations throw DigraphError.
CosetDigraph build_coset_digraph(std::shared_ptr<const EnumeratedGroup> g, std::shared_ptr<const EnumeratedGroup> h,
                                 const Matrix& connection);

/// The relation Hx -> Hy iff y x^-1 lies in the union of the H c H for c in
/// `connection`. Only requires H <= G and every c in G \ H; the result need
/// not be antisymmetric. An empty connection gives the empty digraph.
CosetDigraph build_coset_relation(std::shared_ptr<const EnumeratedGroup> g, std::shared_ptr<const EnumeratedGroup> h,
                                  std::vector<Matrix> connection);

/// Number of orbits of G on arcs.
std::size_t arc_orbit_count(const CosetDigraph& d);
/// True iff G is transitive on arcs (vacuously true with no arcs).
bool is_arc_transitive(const CosetDigraph& d);
bool is_vertex_transitive(const CosetDigraph& d);
/// Right multiplication by each generator of G maps arcs to arcs.
bool generators_preserve_arcs(const CosetDigraph& d);

struct TwoArcAnalysis {
  bool factorization_holds = false;  // G_v = G_uv G_vw
  std::size_t two_arc_count = 0;
  std::size_t two_arc_orbits = 0;
  std::size_t stabilizer_order = 0;      // |G_v|
  std::size_t arc_stabilizer_order = 0;  // |G_uv|
  std::size_t product_size = 0;          // |G_uv G_vw|
  bool regular = false;                  // G_v trivial: degenerate case
};

/// Both 2-arc tests on the 2-arc u -> v -> w through v = H. Throws
/// DigraphError if there is no 2-arc or if d is not arc-transitive.
TwoArcAnalysis analyze_two_arcs(const CosetDigraph& d);
/// Throws DigraphError if the factorisation criterion and the orbit count
/// disagree.
bool is_2arc_transitive(const CosetDigraph& d);

/// Primitivity of G on the vertices, via maximality of H in G.
bool is_vertex_primitive(const CosetDigraph& d, unsigned jobs = 1);

enum class ExportFormat { Dot, Edges, Json };
ExportFormat parse_export_format(const std::string& s);
/// Deterministic serialisation, vertices numbered by sorted label.
std::string export_digraph(const CosetDigraph& d, ExportFormat format);

}  // namespace twistgrp
