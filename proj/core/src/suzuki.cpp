#include "twistgrp/suzuki.hpp"

#include <algorithm>
#include <set>

#include "twistgrp/numth.hpp"

namespace twistgrp {

namespace {

std::string point_key(const Vector& v) {
  std::string key;
  for (const auto& e : v) key += e.to_string() + ",";
  return key;
}

Vector normalize_point(Vector v) {
  for (const auto& e : v) {
    if (!e.is_zero()) {
      const FieldElement s = e.inv();
      for (auto& c : v) c = c * s;
      return v;
    }
  }
  throw SuzukiError("zero vector is not a projective point");
}

Vector basis_vector(const FieldSpec& f, int n, int i) {
  Vector v(static_cast<std::size_t>(n), f.zero());
  v[static_cast<std::size_t>(i)] = f.one();
  return v;
}

}  // namespace

SuzukiContext::SuzukiContext(std::uint64_t q, unsigned n, const FieldSpec& field)
    : q_(q), n_(n), field_(&field), lambda0_(field.primitive_element()), weyl_(Matrix::permutation(field, std::vector<int>{3, 2, 1, 0})) {}

SuzukiContext SuzukiContext::build(std::uint64_t q, std::size_t cap) {
  const unsigned n = twisted_exponent(q, 2);
  const FieldSpec& field = field_make(2, static_cast<int>(2 * n + 1));
  SuzukiContext ctx(q, n, field);
  if (suzuki_order(q) <= cap) ctx.group_ = std::make_shared<const EnumeratedGroup>(EnumeratedGroup::closure(ctx.generators(), cap));
  return ctx;
}

Matrix SuzukiContext::unipotent(const FieldElement& a, const FieldElement& b) const {
  const FieldElement at = a.suzuki_twist();
  const FieldElement bt = b.suzuki_twist();
  const FieldSpec& f = *field_;
  Matrix s = Matrix::identity(f, 4);
  s.set(1, 0, a);
  s.set(2, 0, a * at + b);
  s.set(2, 1, at);
  s.set(3, 0, a * a * at + a * b + bt);
  s.set(3, 1, b);
  s.set(3, 2, a);
  return s;
}

Matrix SuzukiContext::torus(const FieldElement& lambda) const {
  const long long t = 1LL << n_;
  return Matrix::diagonal({lambda.pow(1 + t), lambda.pow(t), lambda.pow(-t), lambda.pow(-1 - t)});
}

std::vector<Matrix> SuzukiContext::generators() const {
  const FieldSpec& f = *field_;
  return {unipotent(f.one(), f.zero()), unipotent(f.zero(), f.one()), torus(lambda0_), weyl_};
}

const EnumeratedGroup& SuzukiContext::group() const {
  if (!group_)
    throw SuzukiError("Sz(" + std::to_string(q_) + ") has " + std::to_string(suzuki_order(q_)) +
                      " elements, above the enumeration cap; only q = 8 is enumerated by default");
  return *group_;
}

std::shared_ptr<const EnumeratedGroup> SuzukiContext::group_ptr() const {
  group();
  return group_;
}

Matrix kappa(const SuzukiContext& ctx) { return ctx.torus(ctx.torus_generator()); }

Matrix tau(const SuzukiContext& ctx) { return ctx.weyl(); }

Matrix rho(const SuzukiContext& ctx) { return ctx.unipotent(ctx.field().one(), ctx.field().zero()); }

EnumeratedGroup unipotent_subgroup(const SuzukiContext& ctx) {
  const FieldSpec& f = ctx.field();
  std::vector<Matrix> elems;
  for (FieldSpec::Code a = 0; a < f.order(); ++a)
    for (FieldSpec::Code b = 0; b < f.order(); ++b) elems.push_back(ctx.unipotent(f.element(a), f.element(b)));
  return EnumeratedGroup::from_elements(std::move(elems));
}

// Ovoid

Ovoid::Ovoid(const SuzukiContext& ctx) : group_(ctx.group_ptr()) {
  const FieldSpec& f = ctx.field();
  points_.push_back(basis_vector(f, 4, 0));
  index_.emplace(point_key(points_.front()), 0);
  const auto gens = ctx.generators();
  for (std::size_t head = 0; head < points_.size(); ++head) {
    for (const auto& s : gens) {
      Vector y = normalize_point(points_[head] * s);
      auto key = point_key(y);
      if (!index_.contains(key)) {
        index_.emplace(std::move(key), points_.size());
        points_.push_back(std::move(y));
      }
    }
  }
  const auto it = index_.find(point_key(basis_vector(f, 4, 3)));
  if (it == index_.end()) throw SuzukiError("<e_3> is not on the ovoid");
  opposite_ = it->second;
}

std::size_t Ovoid::image(std::size_t i, const Matrix& x) const {
  const auto it = index_.find(point_key(normalize_point(points_.at(i) * x)));
  if (it == index_.end()) throw SuzukiError("matrix does not preserve the ovoid");
  return it->second;
}

EnumeratedGroup Ovoid::stabilizer(const std::vector<std::size_t>& points) const {
  std::vector<Matrix> out;
  for (const auto& x : group_->elements()) {
    const bool fixes = std::all_of(points.begin(), points.end(), [&](std::size_t p) { return image(p, x) == p; });
    if (fixes) out.push_back(x);
  }
  return EnumeratedGroup::from_elements(std::move(out));
}

std::vector<std::size_t> Ovoid::orbit(std::size_t i, const EnumeratedGroup& s) const {
  std::set<std::size_t> seen;
  for (const auto& x : s.elements()) seen.insert(image(i, x));
  return {seen.begin(), seen.end()};
}

// Lemmas

Report verify_centralizer_lemma(const SuzukiContext& ctx) {
  Report report("suzuki-centralizer");
  const EnumeratedGroup& g = ctx.group();
  const EnumeratedGroup q = unipotent_subgroup(ctx);

  report.run("centralizers-in-Q", "C_G(x) lies in Q for every nontrivial x in Q", "1 != x in Q  =>  C_G(x) <= Q", [&](Check& c) {
    std::size_t checked = 0;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& x : q.elements()) {
      if (x.is_identity()) continue;
      ++checked;
      for (const auto& y : g.elements()) {
        if (x * y == y * x && !q.contains(y)) {
          violations.push_back(x.to_json());
          break;
        }
      }
    }
    c.details["checked"] = checked;
    c.details["violations"] = violations;
    c.status = checked + 1 == q.order() && violations.empty() ? Status::Pass : Status::Fail;
  });

  report.run("centre-centralizer", "C_G(S(0,1)) equals Q", "S(0,1) is central in Q and C_G(S(0,1)) <= Q", [&](Check& c) {
    const FieldSpec& f = ctx.field();
    const EnumeratedGroup cz = centralizer(g, ctx.unipotent(f.zero(), f.one()));
    c.details["order"] = cz.order();
    c.status = cz.order() == q.order() && q.contains(cz) ? Status::Pass : Status::Fail;
  });
  return report;
}

Report verify_tau_lemma(const SuzukiContext& ctx) {
  Report report("suzuki-tau");
  const EnumeratedGroup& g = ctx.group();
  const Ovoid omega(ctx);
  const Matrix t = tau(ctx);
  const std::size_t a = omega.base();
  const std::size_t b = omega.opposite();
  const EnumeratedGroup l = omega.stabilizer({a});
  const EnumeratedGroup gb = omega.stabilizer({b});
  const EnumeratedGroup k = omega.stabilizer({a, b});
  const EnumeratedGroup q = unipotent_subgroup(ctx);
  const EnumeratedGroup tlt = conjugate(l, t);

  report.run("tau-involution", "tau has order 2", "tau^2 = 1", [&](Check& c) {
    c.details["order"] = element_order(t);
    c.status = element_order(t) == 2 && g.contains(t) ? Status::Pass : Status::Fail;
  });
  report.run("tau-swaps", "tau swaps the base points a and b", "a^tau = b and b^tau = a", [&](Check& c) {
    c.status = omega.image(a, t) == b && omega.image(b, t) == a ? Status::Pass : Status::Fail;
  });
  report.run("tau-conjugates-stabilizer", "tau L tau is the stabiliser of b", "tau L tau = G_b", [&](Check& c) {
    c.details["order"] = tlt.order();
    c.status = tlt.order() == gb.order() && gb.contains(tlt) ? Status::Pass : Status::Fail;
  });
  report.run("L-cap-tauLtau", "L meets tau L tau exactly in K", "L cap tau L tau = K", [&](Check& c) {
    const EnumeratedGroup meet = intersection(l, tlt);
    c.details["order"] = meet.order();
    c.details["K_order"] = k.order();
    c.status = meet.order() == k.order() && k.contains(meet) && meet.order() == ctx.q() - 1 ? Status::Pass : Status::Fail;
  });
  report.run("Q-cap-tauLtau", "Q meets tau L tau trivially", "Q cap tau L tau = 1", [&](Check& c) {
    const EnumeratedGroup meet = intersection(q, tlt);
    c.details["order"] = meet.order();
    c.status = meet.order() == 1 ? Status::Pass : Status::Fail;
  });
  return report;
}

SuzukiDigraphIngredients suzuki_digraph_ingredients(const SuzukiContext& ctx) {
  const EnumeratedGroup& g = ctx.group();
  const EnumeratedGroup k = EnumeratedGroup::closure({kappa(ctx)});
  EnumeratedGroup h = normalizer(g, k);
  if (h.order() != 2 * (ctx.q() - 1))
    throw SuzukiError("|N_G(K)| = " + std::to_string(h.order()) + ", expected 2(q-1)");
  Matrix r = rho(ctx);
  if (h.contains(r)) throw SuzukiError("rho lies in N_G(K)");
  if (double_coset(h, r).contains(coset_label(r.inverse(), h))) throw SuzukiError("rho^-1 lies in H rho H");
  return {std::move(h), std::move(r)};
}

EnumeratedGroup cyclic_normalizer(const SuzukiContext& ctx, long long order) {
  const EnumeratedGroup& g = ctx.group();
  for (const auto& x : g.elements()) {
    if (element_order(x) == order) return normalizer(g, EnumeratedGroup::closure({x}));
  }
  throw SuzukiError("no element of order " + std::to_string(order) + " in Sz(" + std::to_string(ctx.q()) + ")");
}

}  // namespace twistgrp
