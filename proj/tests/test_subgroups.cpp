#include <doctest.h>

#include <set>

#include "support.hpp"
#include "twistgrp/classical.hpp"
#include "twistgrp/subgroups.hpp"

using namespace twistgrp;

namespace {

// Every subgroup generated by at most two elements, by direct closure.
std::set<std::set<std::string>> two_generated_subgroups(const EnumeratedGroup& g) {
  std::set<std::set<std::string>> out;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      const EnumeratedGroup h = EnumeratedGroup::closure({a, b});
      std::set<std::string> s;
      for (const auto& x : h.elements()) s.insert(x.encoding());
      out.insert(std::move(s));
    }
  return out;
}

std::set<std::set<std::string>> as_sets(const std::vector<EnumeratedGroup>& groups) {
  std::set<std::set<std::string>> out;
  for (const auto& h : groups) {
    std::set<std::string> s;
    for (const auto& x : h.elements()) s.insert(x.encoding());
    out.insert(std::move(s));
  }
  return out;
}

EnumeratedGroup gl2_3() {
  const FieldSpec& f = field_make(3, 1);
  return EnumeratedGroup::closure({Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 0}}),
                                   Matrix::from_ints(f, {{2, 0}, {0, 1}})});
}

const FrobeniusExtension& pgammal2_8() {
  static const FrobeniusExtension ext = psl2_frobenius_extension(3);
  return ext;
}

}  // namespace

TEST_CASE("Cayley table") {
  const EnumeratedGroup g = gl2_3();
  const CayleyTable t(g);
  for (std::uint32_t a = 0; a < t.order(); ++a) {
    CHECK(g.element(t.mul(a, t.inv(a))).is_identity());
    CHECK(static_cast<long long>(t.element_order(a)) == element_order(g.element(a)));
    for (std::uint32_t b = 0; b < t.order(); b += 7) CHECK(g.element(t.mul(a, b)) == g.element(a) * g.element(b));
  }
  CHECK(g.element(t.identity()).is_identity());
}

TEST_CASE("element sets") {
  ElementSet a(130), b(130);
  for (std::uint32_t i : {0u, 5u, 64u, 129u}) a.insert(i);
  for (std::uint32_t i : {5u, 64u, 100u}) b.insert(i);
  CHECK(a.size() == 4);
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.contains(129));
  CHECK_FALSE(a.contains(100));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.members() == std::vector<std::uint32_t>{0, 5, 64, 129});
}

TEST_CASE("D14 has 10 subgroups, matching the two-generator oracle") {
  const EnumeratedGroup d14 = testing::dihedral14();
  const auto subgroups = all_subgroups(d14);
  CHECK(subgroups.size() == 10);
  CHECK(as_sets(subgroups) == two_generated_subgroups(d14));
}

TEST_CASE("GL2(3) lattice matches the two-generator oracle") {
  const EnumeratedGroup g = gl2_3();
  const auto subgroups = all_subgroups(g);
  CHECK(as_sets(subgroups) == two_generated_subgroups(g));
  for (std::size_t i = 1; i < subgroups.size(); ++i) CHECK(subgroups[i - 1].order() <= subgroups[i].order());
}

TEST_CASE("perfect subgroups are found") {
  // SL2(8) is perfect and 2-generated but unreachable by cyclic extension
  // alone; PSL2(8) has 386 subgroups.
  const auto& ext = pgammal2_8();
  CHECK(ext.socle.order() == 504);
  CHECK(ext.group.order() == 1512);
  const auto subgroups = all_subgroups(ext.socle);
  CHECK(subgroups.size() == 386);
  CHECK(subgroups.back().order() == 504);
}

TEST_CASE("lattice size cap") {
  const FieldSpec& f = field_make(3, 2);
  const EnumeratedGroup gl2_9 = EnumeratedGroup::closure(
      {Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 0}}), Matrix::diagonal({f.primitive_element(), f.one()})});
  CHECK(gl2_9.order() == 5760);
  CHECK_THROWS_AS(all_subgroups(gl2_9), GroupError);
  CHECK_THROWS_AS(equal_order_factorizations(gl2_9), GroupError);
}

TEST_CASE("equal-order factorisations") {
  const auto klein = equal_order_factorizations(testing::klein_four());
  CHECK(klein.size() == 3);
  for (const auto& fz : klein) {
    CHECK(fz.a.order() == 2);
    CHECK(fz.b.order() == 2);
    CHECK(product_set_size(fz.a, fz.b) == 4);
  }
  // D14 = C7 C2 only, with unequal orders.
  CHECK(equal_order_factorizations(testing::dihedral14()).empty());
  // GL2(3) has none either: the Borel subgroup (order 12) must be a factor.
  CHECK(equal_order_factorizations(gl2_3()).empty());
}

TEST_CASE("projection of a factorisation onto a cyclic quotient") {
  const auto& ext = pgammal2_8();
  const EnumeratedGroup& g = ext.group;
  const EnumeratedGroup& h = ext.socle;
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  int instances = 0;
  for (int trial = 0; trial < 400 && instances < 40; ++trial) {
    const Matrix x = g.element(pick(testing::rng()));
    const Matrix y = g.element(pick(testing::rng()));
    const Matrix t = g.element(pick(testing::rng()));
    const EnumeratedGroup a = trial % 2 ? EnumeratedGroup::closure({x}) : EnumeratedGroup::closure({x, y});
    if (a.order() == g.order()) continue;
    const EnumeratedGroup at = conjugate(a, t);
    std::vector<Matrix> gens = a.generators();
    gens.insert(gens.end(), at.generators().begin(), at.generators().end());
    const EnumeratedGroup k = EnumeratedGroup::closure(gens);
    if (product_set_size(a, at) != k.order()) continue;
    ++instances;
    CHECK(verify_projection_lemma(g, h, k, a, t));
  }
  CHECK(instances >= 10);
}

TEST_CASE("projection hypotheses are enforced") {
  const auto& ext = pgammal2_8();
  const EnumeratedGroup& g = ext.group;
  const EnumeratedGroup& h = ext.socle;
  const Matrix t = g.generators().front();
  const EnumeratedGroup one = EnumeratedGroup::closure({g.identity()});

  auto kind_of = [&](auto&& call) {
    try {
      call();
    } catch (const HypothesisError& e) {
      return e.kind();
    }
    FAIL("no HypothesisError");
    return HypothesisError::Kind::NotSubgroup;
  };
  // a non-normal subgroup in place of H
  const EnumeratedGroup c2 = EnumeratedGroup::closure({restrict_scalars(Matrix::from_ints(field_make(2, 3), {{0, 1}, {1, 0}}))});
  CHECK(kind_of([&] { verify_projection_lemma(g, c2, one, one, t); }) == HypothesisError::Kind::NotNormal);
  // G/1 is not cyclic
  CHECK(kind_of([&] { verify_projection_lemma(g, one, one, one, t); }) == HypothesisError::Kind::QuotientNotCyclic);
  // K = G is not A A^t for A = 1
  CHECK(kind_of([&] { verify_projection_lemma(g, h, g, one, t); }) == HypothesisError::Kind::NotFactorization);
  // A not inside K
  CHECK(kind_of([&] { verify_projection_lemma(g, h, one, c2, t); }) == HypothesisError::Kind::NotSubgroup);
}

TEST_CASE("PSL2(8):3 has no factorisation with equal-order factors") {
  const auto& ext = pgammal2_8();
  CHECK(equal_order_factorizations(ext.group).empty());
  // nor does the socle
  CHECK(equal_order_factorizations(ext.socle).empty());
}
