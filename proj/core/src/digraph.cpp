#include "twistgrp/digraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_set>

namespace twistgrp {

namespace {

using Vertex = CosetDigraph::Vertex;

// Arcs are numbered by (source, position in the sorted out-list).
class ArcIndex {
 public:
  explicit ArcIndex(const CosetDigraph& d) : d_(d), offset_(d.vertex_count() + 1, 0) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) offset_[v + 1] = offset_[v] + d.out_neighbors(v).size();
  }
  std::size_t id(Vertex from, Vertex to) const {
    const auto& out = d_.out_neighbors(from);
    const auto it = std::lower_bound(out.begin(), out.end(), to);
    if (it == out.end() || *it != to) throw DigraphError("not an arc");
    return offset_[from] + static_cast<std::size_t>(it - out.begin());
  }

 private:
  const CosetDigraph& d_;
  std::vector<std::size_t> offset_;
};

}  // namespace

Vertex CosetDigraph::vertex_of(const CosetLabel& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw DigraphError("unknown coset label");
  return it->second;
}

Vertex CosetDigraph::vertex_of_element(const Matrix& x) const {
  const auto i = g_->index_of(x);
  if (!i) throw DigraphError("element is not in G");
  return vertex_of(coset_label(x, *h_));
}

std::vector<std::vector<Vertex>> CosetDigraph::in_adjacency() const {
  std::vector<std::vector<Vertex>> in(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : out_[v]) in[w].push_back(v);
  return in;
}

bool CosetDigraph::has_arc(Vertex from, Vertex to) const {
  const auto& out = out_.at(from);
  return std::binary_search(out.begin(), out.end(), to);
}

std::optional<std::size_t> CosetDigraph::out_degree() const {
  if (out_.empty()) return std::nullopt;
  const std::size_t d = out_.front().size();
  for (const auto& o : out_)
    if (o.size() != d) return std::nullopt;
  return d;
}

bool CosetDigraph::irreflexive() const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (has_arc(v, v)) return false;
  return true;
}

bool CosetDigraph::antisymmetric() const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : out_[v])
      if (has_arc(w, v)) return false;
  return true;
}

CosetDigraph build_coset_relation(std::shared_ptr<const EnumeratedGroup> g, std::shared_ptr<const EnumeratedGroup> h,
                                  std::vector<Matrix> connection) {
  if (!g || !h) throw DigraphError("null group");
  if (!g->contains(*h)) throw DigraphError("H is not a subgroup of G");
  for (const auto& c : connection) {
    if (!g->contains(c)) throw DigraphError("connection element is not in G");
    if (h->contains(c)) throw DigraphError("connection element lies in H; the relation would have loops");
  }

  CosetDigraph d;
  d.g_ = std::move(g);
  d.h_ = std::move(h);
  d.connection_ = std::move(connection);
  const EnumeratedGroup& G = *d.g_;
  const EnumeratedGroup& H = *d.h_;

  // Partition G into right cosets; label = least encoding in the coset.
  std::vector<std::int64_t> coset_of(G.order(), -1);
  std::vector<std::pair<CosetLabel, std::size_t>> cosets;  // label, representative index
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (coset_of[i] >= 0) continue;
    const auto c = static_cast<std::int64_t>(cosets.size());
    std::size_t least = i;
    for (const auto& e : H.elements()) {
      const std::size_t j = *G.index_of(e * G.element(i));
      coset_of[j] = c;
      least = std::min(least, j);  // elements are sorted by encoding
    }
    cosets.emplace_back(CosetLabel(G.element(least).encoding()), least);
  }
  std::vector<std::size_t> order(cosets.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cosets[a].first < cosets[b].first; });
  std::vector<Vertex> vertex_of_coset(cosets.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& [label, rep] = cosets[order[k]];
    vertex_of_coset[order[k]] = static_cast<Vertex>(k);
    d.labels_.push_back(label);
    d.reps_.push_back(G.element(rep));
    d.index_.emplace(label, static_cast<Vertex>(k));
  }
  auto vertex_of_index = [&](std::size_t j) { return vertex_of_coset[static_cast<std::size_t>(coset_of[j])]; };
  d.base_ = vertex_of_index(*G.index_of(G.identity()));

  // Out-neighbours of Hx: H c h x for c in the connection and h in H.
  d.out_.resize(d.labels_.size());
  for (Vertex v = 0; v < d.labels_.size(); ++v) {
    std::vector<Vertex> out;
    for (const auto& c : d.connection_)
      for (const auto& e : H.elements()) out.push_back(vertex_of_index(*G.index_of(c * e * d.reps_[v])));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    d.arc_count_ += out.size();
    d.out_[v] = std::move(out);
  }

  for (const auto& s : G.generators()) {
    std::vector<Vertex> perm(d.labels_.size());
    for (Vertex v = 0; v < d.labels_.size(); ++v) perm[v] = vertex_of_index(*G.index_of(d.reps_[v] * s));
    d.actions_.push_back(std::move(perm));
  }
  return d;
}

CosetDigraph build_coset_digraph(std::shared_ptr<const EnumeratedGroup> g, std::shared_ptr<const EnumeratedGroup> h,
                                 const Matrix& connection) {
  if (!g || !h) throw DigraphError("null group");
  if (!g->contains(*h)) throw DigraphError("H is not a subgroup of G");
  if (!g->contains(connection)) throw DigraphError("g is not in G");
  if (h->contains(connection)) throw DigraphError("g lies in H; Cos(G, H, g) would not be irreflexive");
  if (double_coset(*h, connection).contains(coset_label(connection.inverse(), *h)))
    throw DigraphError("g^-1 lies in HgH; Cos(G, H, g) would not be antisymmetric");
  return build_coset_relation(std::move(g), std::move(h), {connection});
}

std::size_t arc_orbit_count(const CosetDigraph& d) {
  const ArcIndex index(d);
  std::vector<bool> seen(d.arc_count(), false);
  std::size_t orbits = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    for (Vertex w : d.out_neighbors(v)) {
      if (seen[index.id(v, w)]) continue;
      ++orbits;
      std::vector<std::pair<Vertex, Vertex>> queue{{v, w}};
      seen[index.id(v, w)] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [a, b] = queue[head];
        for (const auto& perm : d.generator_actions()) {
          const std::size_t id = index.id(perm[a], perm[b]);
          if (!seen[id]) {
            seen[id] = true;
            queue.emplace_back(perm[a], perm[b]);
          }
        }
      }
    }
  }
  return orbits;
}

bool is_arc_transitive(const CosetDigraph& d) { return arc_orbit_count(d) <= 1; }

bool is_vertex_transitive(const CosetDigraph& d) {
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& perm : d.generator_actions()) {
      const Vertex w = perm[queue[head]];
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  return queue.size() == d.vertex_count();
}

bool generators_preserve_arcs(const CosetDigraph& d) {
  for (const auto& perm : d.generator_actions())
    for (Vertex v = 0; v < d.vertex_count(); ++v)
      for (Vertex w : d.out_neighbors(v))
        if (!d.has_arc(perm[v], perm[w])) return false;
  return true;
}

TwoArcAnalysis analyze_two_arcs(const CosetDigraph& d) {
  const Vertex v = d.base_vertex();
  if (d.out_neighbors(v).empty()) throw DigraphError("no 2-arc exists: the digraph has no arcs");
  if (!is_arc_transitive(d)) throw DigraphError("2-arc analysis needs an arc-transitive digraph");
  const auto in = d.in_adjacency();
  if (in[v].empty()) throw DigraphError("no 2-arc exists through the base vertex");
  const Vertex u = in[v].front();
  const Vertex w = d.out_neighbors(v).front();

  const EnumeratedGroup& G = d.group();
  const EnumeratedGroup& H = d.stabilizer();
  auto arc_stabilizer = [&](Vertex x) {
    std::vector<Matrix> keep;
    for (const auto& e : H.elements())
      if (d.vertex_of_element(d.representative(x) * e) == x) keep.push_back(e);
    return EnumeratedGroup::from_elements(std::move(keep));
  };
  // G_v = H; G_uv fixes u as well, G_vw fixes w as well.
  const EnumeratedGroup g_uv = arc_stabilizer(u);
  const EnumeratedGroup g_vw = arc_stabilizer(w);

  TwoArcAnalysis r;
  r.stabilizer_order = H.order();
  r.arc_stabilizer_order = g_uv.order();
  r.product_size = product_set_size(g_uv, g_vw);
  r.factorization_holds = r.product_size == H.order();
  r.regular = H.order() == 1;
  (void)G;

  // Independent count: orbits of G on all 2-arcs.
  const std::uint64_t n = d.vertex_count();
  auto key = [n](Vertex a, Vertex b, Vertex c) { return (static_cast<std::uint64_t>(a) * n + b) * n + c; };
  std::unordered_set<std::uint64_t> seen;
  for (Vertex b = 0; b < n; ++b) r.two_arc_count += in[b].size() * d.out_neighbors(b).size();
  seen.reserve(r.two_arc_count);
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex a : in[b]) {
      for (Vertex c : d.out_neighbors(b)) {
        if (seen.contains(key(a, b, c))) continue;
        ++r.two_arc_orbits;
        std::vector<std::array<Vertex, 3>> queue{{a, b, c}};
        seen.insert(key(a, b, c));
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const auto t = queue[head];
          for (const auto& perm : d.generator_actions()) {
            const std::array<Vertex, 3> m{perm[t[0]], perm[t[1]], perm[t[2]]};
            if (seen.insert(key(m[0], m[1], m[2])).second) queue.push_back(m);
          }
        }
      }
    }
  }
  return r;
}

bool is_2arc_transitive(const CosetDigraph& d) {
  const TwoArcAnalysis r = analyze_two_arcs(d);
  const bool by_orbits = r.two_arc_orbits == 1;
  if (by_orbits != r.factorization_holds)
    throw DigraphError("2-arc criteria disagree: factorisation says " + std::string(r.factorization_holds ? "yes" : "no") +
                       ", orbit count is " + std::to_string(r.two_arc_orbits));
  return by_orbits;
}

bool is_vertex_primitive(const CosetDigraph& d, unsigned jobs) { return is_maximal(d.group(), d.stabilizer(), jobs); }

ExportFormat parse_export_format(const std::string& s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "edges") return ExportFormat::Edges;
  if (s == "json") return ExportFormat::Json;
  throw DigraphError("unknown export format '" + s + "' (expected dot, edges or json)");
}

std::string export_digraph(const CosetDigraph& d, ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::Edges:
      for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out_neighbors(v)) out << v << ' ' << w << '\n';
      break;
    case ExportFormat::Dot:
      out << "digraph cos {\n";
      for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out_neighbors(v)) out << "  " << v << " -> " << w << ";\n";
      out << "}\n";
      break;
    case ExportFormat::Json: {
      nlohmann::json arcs = nlohmann::json::array();
      for (Vertex v = 0; v < d.vertex_count(); ++v)
        for (Vertex w : d.out_neighbors(v)) arcs.push_back({v, w});
      nlohmann::json j;
      j["vertices"] = d.vertex_count();
      const auto deg = d.out_degree();
      j["degree"] = deg ? nlohmann::json(*deg) : nlohmann::json(nullptr);
      j["arcs"] = std::move(arcs);
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace twistgrp
