// Subgroup lattices of small groups (order <= 5000) and the factorisation
// searches built on them.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistgrp/grp.hpp"

namespace twistgrp {

inline constexpr std::size_t kSubgroupOrderCap = 5000;

/// Multiplication table of an enumerated group; element i is
/// group.element(i).
class CayleyTable {
 public:
  explicit CayleyTable(const EnumeratedGroup& group);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t element_order(std::uint32_t a) const noexcept { return orders_[a]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> orders_;
  std::uint32_t identity_ = 0;
};

/// Subset of a group given by a CayleyTable, as a bitset over element
/// indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(std::uint32_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::uint32_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t size() const noexcept;
  bool subset_of(const ElementSet& o) const noexcept;
  std::size_t intersection_size(const ElementSet& o) const noexcept;
  std::vector<std::uint32_t> members() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Subgroup generated by the given element indices.
ElementSet generated_subgroup(const CayleyTable& table, const std::vector<std::uint32_t>& generators);

/// Complete subgroup list of K as index sets, sorted by (order, set).
/// Cyclic extension (join a normalising element x with x^p in U), followed
/// by join completion U v <x> over cyclic subgroups of prime-power order,
/// which recovers perfect subgroups that cyclic extension cannot reach.
/// Throws GroupError if |K| > 5000.
std::vector<ElementSet> subgroup_lattice(const CayleyTable& table);

std::vector<EnumeratedGroup> all_subgroups(const EnumeratedGroup& k);

struct Factorization {
  EnumeratedGroup a;
  EnumeratedGroup b;
};

/// All unordered pairs {A, B} of distinct proper subgroups with |A| = |B|
/// and AB = K (|A||B|/|A cap B| = |K|). An empty result certifies that K has
/// no homogeneous factorisation. Throws GroupError if |K| > 5000.
std::vector<Factorization> equal_order_factorizations(const EnumeratedGroup& k);

class HypothesisError : public std::invalid_argument {
 public:
  enum class Kind { NotSubgroup, NotNormal, QuotientNotCyclic, NotFactorization };
  HypothesisError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// For H normal in G with G/H cyclic, K <= G, A <= K and t in G with
/// K = A A^t: returns whether AH = A^t H = KH, i.e. the images of A, A^t and
/// K in G/H coincide. Hypothesis violations throw HypothesisError.
bool verify_projection_lemma(const EnumeratedGroup& g, const EnumeratedGroup& h, const EnumeratedGroup& k,
                             const EnumeratedGroup& a, const Matrix& t);

}  // namespace twistgrp
