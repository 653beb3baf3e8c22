#include "twistgrp/grp.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace twistgrp {

namespace {

void check_generators(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw GroupError("closure needs at least one generator");
  const Matrix& first = gens.front();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != first.rows() || &g.field() != &first.field())
      throw GroupError("generators must be square matrices of one shape over one field");
    if (g.determinant().is_zero()) throw GroupError("generator is singular");
  }
}

}  // namespace

EnumeratedGroup::EnumeratedGroup(std::vector<Matrix> generators, std::vector<Matrix> elements)
    : generators_(std::move(generators)) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) keyed.emplace_back(elements[i].encoding(), i);
  std::sort(keyed.begin(), keyed.end());
  elements_.reserve(elements.size());
  index_.reserve(elements.size());
  for (auto& [key, i] : keyed) {
    index_.emplace(std::move(key), elements_.size());
    elements_.push_back(std::move(elements[i]));
  }
}

std::optional<EnumeratedGroup> EnumeratedGroup::try_closure(std::vector<Matrix> generators, std::size_t cap) {
  check_generators(generators);
  const Matrix id = Matrix::identity(generators.front().field(), generators.front().rows());
  std::vector<Matrix> elements{id};
  std::unordered_set<std::string> seen{id.encoding()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Matrix y = elements[head] * s;
      if (seen.insert(y.encoding()).second) {
        if (elements.size() >= cap) return std::nullopt;
        elements.push_back(std::move(y));
      }
    }
  }
  return EnumeratedGroup(std::move(generators), std::move(elements));
}

EnumeratedGroup EnumeratedGroup::closure(std::vector<Matrix> generators, std::size_t cap) {
  auto g = try_closure(std::move(generators), cap);
  if (!g) throw ClosureCapExceeded(cap);
  return std::move(*g);
}

EnumeratedGroup EnumeratedGroup::from_elements(std::vector<Matrix> elements, std::vector<Matrix> generators) {
  if (elements.empty()) throw GroupError("empty element list");
  EnumeratedGroup g(std::move(generators), std::move(elements));
  if (g.index_.size() != g.elements_.size()) throw GroupError("duplicate elements");
  if (!g.contains(g.identity())) throw GroupError("identity missing");
  // Greedy generating set: add the first element outside the current span.
  // The span never leaves the element set iff the set is closed.
  std::vector<Matrix> gens;
  std::optional<EnumeratedGroup> span;
  for (const auto& x : g.elements_) {
    if (x.is_identity() || (span && span->contains(x))) continue;
    gens.push_back(x);
    span = try_closure(gens, g.order());
    if (!span || !g.contains(*span)) throw GroupError("element list is not closed under products");
    if (span->order() == g.order()) break;
  }
  if (g.generators_.empty()) g.generators_ = gens.empty() ? std::vector<Matrix>{g.identity()} : std::move(gens);
  return g;
}

std::optional<std::size_t> EnumeratedGroup::index_of(const Matrix& x) const {
  if (&x.field() != &field() || x.rows() != dim() || x.cols() != dim()) return std::nullopt;
  const auto it = index_.find(x.encoding());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool EnumeratedGroup::contains(const EnumeratedGroup& sub) const {
  return std::all_of(sub.elements_.begin(), sub.elements_.end(), [&](const Matrix& x) { return contains(x); });
}

nlohmann::json EnumeratedGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back(g.to_json());
  return {{"order", order()}, {"generators", std::move(gens)}};
}

long long element_order(const Matrix& x) {
  if (!x.is_square()) throw GroupError("element_order of non-square matrix");
  if (x.determinant().is_zero()) throw GroupError("element_order of singular matrix");
  Matrix y = x;
  long long k = 1;
  while (!y.is_identity()) {
    y = y * x;
    ++k;
  }
  return k;
}

CosetLabel coset_label(const Matrix& x, const EnumeratedGroup& h) {
  std::string best;
  bool first = true;
  std::string key;
  for (const auto& e : h.elements()) {
    key.clear();
    (e * x).append_encoding(key);
    if (first || key < best) {
      best = key;
      first = false;
    }
  }
  return CosetLabel(std::move(best));
}

std::set<CosetLabel> double_coset(const EnumeratedGroup& h, const Matrix& g) {
  std::set<CosetLabel> out;
  for (const auto& e : h.elements()) out.insert(coset_label(g * e, h));
  return out;
}

EnumeratedGroup centralizer(const EnumeratedGroup& g, const Matrix& x) {
  std::vector<Matrix> out;
  for (const auto& y : g.elements())
    if (x * y == y * x) out.push_back(y);
  return EnumeratedGroup::from_elements(std::move(out), {});
}

EnumeratedGroup normalizer(const EnumeratedGroup& g, const EnumeratedGroup& s) {
  std::vector<Matrix> out;
  const auto& gens = s.generators();
  for (const auto& y : g.elements()) {
    const Matrix yi = y.inverse();
    const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const Matrix& t) { return s.contains(yi * t * y); });
    if (normalizes) out.push_back(y);
  }
  return EnumeratedGroup::from_elements(std::move(out), {});
}

EnumeratedGroup intersection(const EnumeratedGroup& a, const EnumeratedGroup& b) {
  std::vector<Matrix> out;
  for (const auto& x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return EnumeratedGroup::from_elements(std::move(out), {});
}

EnumeratedGroup conjugate(const EnumeratedGroup& s, const Matrix& x) {
  const Matrix xi = x.inverse();
  std::vector<Matrix> elems;
  elems.reserve(s.order());
  for (const auto& e : s.elements()) elems.push_back(xi * e * x);
  std::vector<Matrix> gens;
  for (const auto& e : s.generators()) gens.push_back(xi * e * x);
  return EnumeratedGroup::from_elements(std::move(elems), std::move(gens));
}

std::size_t count_subgroups_of_prime_order(const EnumeratedGroup& h, long long p) {
  if (p < 2 || h.order() % static_cast<std::size_t>(p) != 0)
    throw GroupError("prime " + std::to_string(p) + " does not divide |H| = " + std::to_string(h.order()));
  std::size_t count = 0;
  for (const auto& x : h.elements()) {
    if (x.is_identity()) continue;
    if (x.pow(p).is_identity()) ++count;  // order exactly p since p is prime
  }
  return count / static_cast<std::size_t>(p - 1);
}

std::size_t product_set_size(const EnumeratedGroup& a, const EnumeratedGroup& b) {
  std::size_t common = 0;
  for (const auto& x : a.elements())
    if (b.contains(x)) ++common;
  return a.order() * b.order() / common;
}

bool is_maximal(const EnumeratedGroup& g, const EnumeratedGroup& h, unsigned jobs) {
  if (!g.contains(h)) throw GroupError("is_maximal: H is not a subgroup of G");
  if (h.order() == g.order()) throw GroupError("is_maximal: H must be a proper subgroup");

  // One representative per double coset HxH, x outside H.
  std::vector<bool> covered(g.order(), false);
  for (const auto& x : h.elements()) covered[*g.index_of(x)] = true;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    reps.push_back(i);
    const Matrix& x = g.element(i);
    for (const auto& a : h.elements()) {
      const Matrix ax = a * x;
      for (const auto& b : h.elements()) covered[*g.index_of(ax * b)] = true;
    }
  }

  const std::size_t half = g.order() / 2;
  std::atomic<bool> proper_join_found{false};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (!proper_join_found.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= reps.size()) return;
      auto gens = h.generators();
      gens.push_back(g.element(reps[k]));
      // More than |G|/2 elements forces the join to be G.
      if (EnumeratedGroup::try_closure(std::move(gens), half).has_value()) proper_join_found = true;
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return !proper_join_found.load();
}

}  // namespace twistgrp
