#include "twistgrp/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>

namespace twistgrp {

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : s.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
    return h;
  }
};

bool is_prime_power(std::uint32_t n, std::uint32_t& prime) {
  if (n < 2) return false;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      prime = p;
      return n == 1;
    }
  }
  prime = n;
  return true;
}

std::uint32_t power(const CayleyTable& t, std::uint32_t x, std::uint32_t e) {
  std::uint32_t r = t.identity();
  for (std::uint32_t i = 0; i < e; ++i) r = t.mul(r, x);
  return r;
}

class Lattice {
 public:
  explicit Lattice(const CayleyTable& t) : t_(t) {}

  void add(std::vector<std::uint32_t> gens) {
    ElementSet s = generated_subgroup(t_, gens);
    if (index_.contains(s)) return;
    index_.emplace(s, subgroups_.size());
    subgroups_.push_back({std::move(s), std::move(gens)});
  }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const ElementSet& set(std::size_t i) const { return subgroups_[i].set; }
  const std::vector<std::uint32_t>& gens(std::size_t i) const { return subgroups_[i].gens; }

  bool normalizes(std::uint32_t x, std::size_t i) const {
    const auto xi = t_.inv(x);
    for (auto u : subgroups_[i].gens)
      if (!subgroups_[i].set.contains(t_.mul(t_.mul(xi, u), x))) return false;
    return true;
  }

  std::vector<ElementSet> take_sorted() {
    std::vector<ElementSet> out;
    out.reserve(subgroups_.size());
    for (auto& s : subgroups_) out.push_back(std::move(s.set));
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
      const auto sa = a.size(), sb = b.size();
      if (sa != sb) return sa < sb;
      return a < b;
    });
    return out;
  }

 private:
  struct Entry {
    ElementSet set;
    std::vector<std::uint32_t> gens;
  };
  const CayleyTable& t_;
  std::vector<Entry> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

}  // namespace

CayleyTable::CayleyTable(const EnumeratedGroup& group) : n_(group.order()) {
  if (n_ > kSubgroupOrderCap)
    throw GroupError("group of order " + std::to_string(n_) + " exceeds the subgroup-lattice cap of " +
                     std::to_string(kSubgroupOrderCap));
  table_.resize(n_ * n_);
  inv_.resize(n_);
  orders_.resize(n_);
  const auto& el = group.elements();
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) table_[a * n_ + b] = static_cast<std::uint32_t>(*group.index_of(el[a] * el[b]));
    if (el[a].is_identity()) identity_ = static_cast<std::uint32_t>(a);
  }
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::uint32_t x = a;
    std::uint32_t k = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
    inv_[a] = power(*this, a, k - 1);
  }
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::subset_of(const ElementSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::size_t ElementSet::intersection_size(const ElementSet& o) const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  return n;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

ElementSet generated_subgroup(const CayleyTable& table, const std::vector<std::uint32_t>& generators) {
  ElementSet s(table.order());
  std::vector<std::uint32_t> queue{table.identity()};
  s.insert(table.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : generators) {
      const auto y = table.mul(queue[head], g);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

std::vector<ElementSet> subgroup_lattice(const CayleyTable& t) {
  const auto n = static_cast<std::uint32_t>(t.order());
  Lattice lattice(t);
  lattice.add({});

  // Cyclic subgroups; keep one generator per prime-power-order cyclic group.
  std::vector<std::uint32_t> pp_gens;
  {
    std::set<ElementSet> seen;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x == t.identity()) continue;
      auto c = generated_subgroup(t, {x});
      if (!seen.insert(c).second) continue;
      lattice.add({x});
      std::uint32_t p = 0;
      if (is_prime_power(t.element_order(x), p)) pp_gens.push_back(x);
    }
  }

  // Cyclic extension: U < <U, x> with x normalising U and x^p in U.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (auto x : pp_gens) {
      const ElementSet& u = lattice.set(i);
      if (u.contains(x)) continue;
      std::uint32_t p = 0;
      is_prime_power(t.element_order(x), p);
      if (!u.contains(power(t, x, p)) || !lattice.normalizes(x, i)) continue;
      auto gens = lattice.gens(i);
      gens.push_back(x);
      lattice.add(std::move(gens));
    }
  }

  // Join completion to a fixpoint.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (auto x : pp_gens) {
      if (lattice.set(i).contains(x)) continue;
      auto gens = lattice.gens(i);
      gens.push_back(x);
      lattice.add(std::move(gens));
    }
  }
  return lattice.take_sorted();
}

namespace {

EnumeratedGroup to_group(const EnumeratedGroup& k, const ElementSet& s) {
  std::vector<Matrix> elems;
  for (auto i : s.members()) elems.push_back(k.element(i));
  return EnumeratedGroup::from_elements(std::move(elems));
}

}  // namespace

std::vector<EnumeratedGroup> all_subgroups(const EnumeratedGroup& k) {
  const CayleyTable t(k);
  std::vector<EnumeratedGroup> out;
  for (const auto& s : subgroup_lattice(t)) out.push_back(to_group(k, s));
  return out;
}

std::vector<Factorization> equal_order_factorizations(const EnumeratedGroup& k) {
  const CayleyTable t(k);
  const auto lattice = subgroup_lattice(t);
  const std::size_t n = k.order();
  std::vector<Factorization> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const std::size_t oa = lattice[i].size();
    if (oa == n) continue;
    for (std::size_t j = i + 1; j < lattice.size() && lattice[j].size() == oa; ++j) {
      if (oa * oa == n * lattice[i].intersection_size(lattice[j]))
        out.push_back({to_group(k, lattice[i]), to_group(k, lattice[j])});
    }
  }
  return out;
}

namespace {

std::set<CosetLabel> images(const EnumeratedGroup& x, const EnumeratedGroup& h) {
  std::set<CosetLabel> out;
  for (const auto& e : x.elements()) out.insert(coset_label(e, h));
  return out;
}

}  // namespace

bool verify_projection_lemma(const EnumeratedGroup& g, const EnumeratedGroup& h, const EnumeratedGroup& k,
                             const EnumeratedGroup& a, const Matrix& t) {
  using Kind = HypothesisError::Kind;
  if (!g.contains(h)) throw HypothesisError(Kind::NotSubgroup, "H is not a subgroup of G");
  if (!g.contains(k)) throw HypothesisError(Kind::NotSubgroup, "K is not a subgroup of G");
  if (!k.contains(a)) throw HypothesisError(Kind::NotSubgroup, "A is not a subgroup of K");
  if (!g.contains(t)) throw HypothesisError(Kind::NotSubgroup, "t is not in G");
  for (const auto& x : g.generators()) {
    const Matrix xi = x.inverse();
    for (const auto& y : h.generators())
      if (!h.contains(xi * y * x)) throw HypothesisError(Kind::NotNormal, "H is not normal in G");
  }

  const std::size_t index = g.order() / h.order();
  bool cyclic = false;
  for (const auto& x : g.elements()) {
    Matrix y = x;
    std::size_t m = 1;
    while (!h.contains(y)) {
      y = y * x;
      ++m;
    }
    if (m == index) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw HypothesisError(Kind::QuotientNotCyclic, "G/H is not cyclic");

  const EnumeratedGroup b = conjugate(a, t);
  if (!k.contains(b) || product_set_size(a, b) != k.order())
    throw HypothesisError(Kind::NotFactorization, "K is not the product A A^t");

  const auto pa = images(a, h);
  return pa == images(b, h) && pa == images(k, h);
}

}  // namespace twistgrp
