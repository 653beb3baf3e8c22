#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "twistgrp/grp.hpp"

using namespace twistgrp;

namespace {

// GL2(3), order 48.
EnumeratedGroup gl2_3() {
  const FieldSpec& f = field_make(3, 1);
  return EnumeratedGroup::closure({Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 0}}),
                                   Matrix::from_ints(f, {{2, 0}, {0, 1}})});
}

std::set<std::string> coset_by_definition(const EnumeratedGroup& h, const Matrix& x) {
  std::set<std::string> out;
  for (const auto& e : h.elements()) out.insert((e * x).encoding());
  return out;
}

}  // namespace

TEST_CASE("closure orders") {
  CHECK(gl2_3().order() == 48);
  CHECK(testing::dihedral14().order() == 14);
  CHECK(testing::klein_four().order() == 4);
  const FieldSpec& f = field_make(2, 1);
  CHECK(EnumeratedGroup::closure({Matrix::identity(f, 3)}).order() == 1);
  CHECK_THROWS_AS(EnumeratedGroup::closure({}), GroupError);
  CHECK_THROWS_AS(EnumeratedGroup::closure({Matrix::zero(f, 2, 2)}), GroupError);
}

TEST_CASE("closure does not depend on generator order") {
  const FieldSpec& f = field_make(3, 1);
  std::vector<Matrix> gens{Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 0}}),
                           Matrix::from_ints(f, {{2, 0}, {0, 1}})};
  const auto reference = EnumeratedGroup::closure(gens).elements();
  std::sort(gens.begin(), gens.end(), [](const Matrix& a, const Matrix& b) { return a.encoding() < b.encoding(); });
  do {
    CHECK(EnumeratedGroup::closure(gens).elements() == reference);
  } while (std::next_permutation(gens.begin(), gens.end(),
                                 [](const Matrix& a, const Matrix& b) { return a.encoding() < b.encoding(); }));
}

TEST_CASE("closure cap") {
  const FieldSpec& f = field_make(3, 1);
  const std::vector<Matrix> gens{Matrix::from_ints(f, {{1, 1}, {0, 1}}), Matrix::from_ints(f, {{0, 1}, {1, 0}})};
  CHECK_THROWS_AS(EnumeratedGroup::closure(gens, 10), ClosureCapExceeded);
  CHECK_FALSE(EnumeratedGroup::try_closure(gens, 10).has_value());
  CHECK(EnumeratedGroup::try_closure(gens, 1000).has_value());
}

TEST_CASE("from_elements validates the group axioms") {
  const EnumeratedGroup g = gl2_3();
  CHECK(EnumeratedGroup::from_elements(g.elements()).order() == 48);
  std::vector<Matrix> partial(g.elements().begin(), g.elements().begin() + 5);
  CHECK_THROWS_AS(EnumeratedGroup::from_elements(partial), GroupError);
  CHECK_THROWS_AS(EnumeratedGroup::from_elements({}), GroupError);
}

TEST_CASE("element orders") {
  const EnumeratedGroup g = gl2_3();
  std::multiset<long long> orders;
  for (const auto& x : g.elements()) {
    const long long k = element_order(x);
    CHECK(x.pow(k).is_identity());
    CHECK(48 % k == 0);
    orders.insert(k);
  }
  // GL2(3): 1 + 13 involutions + 8 of order 3 + 6 of order 4 + 8 of order 6 + 12 of order 8
  CHECK(orders.count(1) == 1);
  CHECK(orders.count(2) == 13);
  CHECK(orders.count(3) == 8);
  CHECK(orders.count(4) == 6);
  CHECK(orders.count(6) == 8);
  CHECK(orders.count(8) == 12);
}

TEST_CASE("coset labels identify right cosets") {
  const EnumeratedGroup g = gl2_3();
  const EnumeratedGroup h = centralizer(g, Matrix::from_ints(field_make(3, 1), {{1, 1}, {0, 1}}));
  std::set<CosetLabel> labels;
  for (const auto& x : g.elements()) {
    const CosetLabel l = coset_label(x, h);
    labels.insert(l);
    const auto coset = coset_by_definition(h, x);
    CHECK(l.bytes() == *coset.begin());
    for (const auto& e : h.elements()) CHECK(coset_label(e * x, h) == l);
  }
  // Lagrange
  CHECK(labels.size() * h.order() == g.order());
}

TEST_CASE("double cosets") {
  const EnumeratedGroup d14 = testing::dihedral14();
  const FieldSpec& f = field_make(2, 3);
  const EnumeratedGroup c2 = EnumeratedGroup::closure({Matrix::from_ints(f, {{0, 1}, {1, 0}})});
  std::size_t total = 0;
  std::set<std::set<CosetLabel>> seen;
  for (const auto& x : d14.elements()) {
    const auto dc = double_coset(c2, x);
    if (seen.insert(dc).second) total += dc.size();
  }
  CHECK(total == 7);
  CHECK(double_coset(c2, d14.identity()).size() == 1);
}

TEST_CASE("centralisers, normalisers, intersections, conjugates") {
  const EnumeratedGroup d14 = testing::dihedral14();
  const FieldSpec& f = field_make(2, 3);
  const Matrix r = Matrix::diagonal({f.x(), f.x().inv()});
  const Matrix s = Matrix::from_ints(f, {{0, 1}, {1, 0}});
  const EnumeratedGroup c7 = EnumeratedGroup::closure({r});
  CHECK(centralizer(d14, r).order() == 7);
  CHECK(centralizer(d14, s).order() == 2);
  CHECK(normalizer(d14, c7).order() == 14);
  const EnumeratedGroup c2 = EnumeratedGroup::closure({s});
  CHECK(normalizer(d14, c2).order() == 2);
  CHECK(intersection(c7, c2).order() == 1);
  CHECK(intersection(d14, c7).order() == 7);
  const EnumeratedGroup c2r = conjugate(c2, r);
  CHECK(c2r.order() == 2);
  CHECK(c2r.contains(r.inverse() * s * r));
  CHECK(product_set_size(c7, c2) == 14);
  CHECK(product_set_size(c7, c7) == 7);
}

TEST_CASE("subgroups of prime order") {
  const EnumeratedGroup d14 = testing::dihedral14();
  CHECK(count_subgroups_of_prime_order(d14, 7) == 1);
  CHECK(count_subgroups_of_prime_order(d14, 2) == 7);
  CHECK(count_subgroups_of_prime_order(gl2_3(), 3) == 4);
  CHECK_THROWS_AS(count_subgroups_of_prime_order(d14, 3), GroupError);
}

TEST_CASE("maximality") {
  const EnumeratedGroup d14 = testing::dihedral14();
  const FieldSpec& f = field_make(2, 3);
  const EnumeratedGroup c7 = EnumeratedGroup::closure({Matrix::diagonal({f.x(), f.x().inv()})});
  const EnumeratedGroup c2 = EnumeratedGroup::closure({Matrix::from_ints(f, {{0, 1}, {1, 0}})});
  const EnumeratedGroup one = EnumeratedGroup::closure({d14.identity()});
  CHECK(is_maximal(d14, c7));
  CHECK(is_maximal(d14, c2));
  CHECK_FALSE(is_maximal(d14, one));
  CHECK(is_maximal(d14, c7, 4) == is_maximal(d14, c7, 1));
  CHECK_THROWS_AS(is_maximal(d14, d14), GroupError);
  CHECK_THROWS_AS(is_maximal(c7, c2), GroupError);

  const EnumeratedGroup g = gl2_3();
  const EnumeratedGroup borel = EnumeratedGroup::closure(
      {Matrix::from_ints(field_make(3, 1), {{1, 1}, {0, 1}}), Matrix::from_ints(field_make(3, 1), {{2, 0}, {0, 1}}),
       Matrix::from_ints(field_make(3, 1), {{1, 0}, {0, 2}})});
  CHECK(borel.order() == 12);
  CHECK(is_maximal(g, borel));
  // the unipotent radical lies inside the Borel subgroup
  CHECK_FALSE(is_maximal(g, EnumeratedGroup::closure({Matrix::from_ints(field_make(3, 1), {{1, 1}, {0, 1}})})));
}

TEST_CASE("group JSON") {
  const auto j = testing::klein_four().to_json();
  CHECK(j["order"] == 4);
}
