// Finitely enumerated matrix groups: closure, cosets, double cosets,
// centralisers, normalisers and maximality.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistgrp/linalg.hpp"

namespace twistgrp {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 22;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClosureCapExceeded : public std::runtime_error {
 public:
  explicit ClosureCapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeded the enumeration cap of " + std::to_string(cap) +
                           " elements; the group is too large to enumerate (raise --cap or use a smaller q)"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Canonical label of a right coset Hx: the encoding of its least element
/// under the byte-lexicographic order. Hx = Hy iff the labels are equal.
class CosetLabel {
 public:
  CosetLabel() = default;
  explicit CosetLabel(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const noexcept { return bytes_; }
  friend auto operator<=>(const CosetLabel&, const CosetLabel&) = default;

 private:
  std::string bytes_;
};

struct CosetLabelHash {
  std::size_t operator()(const CosetLabel& l) const noexcept { return std::hash<std::string>{}(l.bytes()); }
};

/// A matrix group together with its full element list. Elements are kept
/// sorted by encoding, so the element set does not depend on generator order.
class EnumeratedGroup {
 public:
  /// Breadth-first product closure. Throws ClosureCapExceeded if the group
  /// has more than `cap` elements.
  static EnumeratedGroup closure(std::vector<Matrix> generators, std::size_t cap = kDefaultClosureCap);
  /// As closure(), but returns nullopt instead of throwing.
  static std::optional<EnumeratedGroup> try_closure(std::vector<Matrix> generators, std::size_t cap);
  /// Wraps an explicit element list; throws GroupError unless it is a group.
  static EnumeratedGroup from_elements(std::vector<Matrix> elements, std::vector<Matrix> generators = {});

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  const FieldSpec& field() const noexcept { return elements_.front().field(); }
  int dim() const noexcept { return elements_.front().rows(); }
  Matrix identity() const { return Matrix::identity(field(), dim()); }

  std::optional<std::size_t> index_of(const Matrix& x) const;
  bool contains(const Matrix& x) const { return index_of(x).has_value(); }
  /// Element-set containment.
  bool contains(const EnumeratedGroup& sub) const;

  nlohmann::json to_json() const;

 private:
  EnumeratedGroup(std::vector<Matrix> generators, std::vector<Matrix> elements);

  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Least k >= 1 with x^k = I.
long long element_order(const Matrix& x);

CosetLabel coset_label(const Matrix& x, const EnumeratedGroup& h);

/// Labels of the right cosets contained in HgH, i.e. {label(Hgh) : h in H}.
std::set<CosetLabel> double_coset(const EnumeratedGroup& h, const Matrix& g);

EnumeratedGroup centralizer(const EnumeratedGroup& g, const Matrix& x);
/// N_G(S) for a subgroup S (given enumerated); S need not lie in G.
EnumeratedGroup normalizer(const EnumeratedGroup& g, const EnumeratedGroup& s);
/// Intersection of two enumerated groups of the same shape.
EnumeratedGroup intersection(const EnumeratedGroup& a, const EnumeratedGroup& b);
/// x^-1 S x.
EnumeratedGroup conjugate(const EnumeratedGroup& s, const Matrix& x);

/// Number of subgroups of prime order p (elements of order p over p - 1).
/// Throws GroupError if p does not divide |H|.
std::size_t count_subgroups_of_prime_order(const EnumeratedGroup& h, long long p);

/// True iff H is maximal in G: <H, x> = G for every x in G \ H. One closure
/// is run per double coset HxH (the join only depends on it); `jobs` > 1
/// spreads them over threads. This is the same as primitivity of G on the
/// right cosets of H.
bool is_maximal(const EnumeratedGroup& g, const EnumeratedGroup& h, unsigned jobs = 1);

/// Size of the element set product |A B| = |A||B| / |A cap B|.
std::size_t product_set_size(const EnumeratedGroup& a, const EnumeratedGroup& b);

}  // namespace twistgrp
