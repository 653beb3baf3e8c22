#include "twistgrp/ree.hpp"

#include <array>
#include <vector>

#include "twistgrp/numth.hpp"

namespace twistgrp {

namespace {

// v_1..v_7 in u-coordinates.
constexpr std::array<std::array<int, 7>, 7> kVBasis{{
    {0, 0, 0, 1, 0, 1, 1},     // v1 = u3 + u5 + u6
    {0, 1, 1, 0, 1, 0, 0},     // v2 = u1 + u2 + u4
    {-1, 0, 0, -1, 0, 0, 1},   // v3 = -u0 - u3 + u6
    {0, -1, 1, 0, 0, 0, 0},    // v4 = u2 - u1
    {-1, 0, 0, 1, 0, 0, -1},   // v5 = -u0 + u3 - u6
    {0, -1, -1, 0, 1, 0, 0},   // v6 = -u1 - u2 + u4
    {0, 0, 0, -1, 0, 1, -1},   // v7 = -u3 + u5 - u6
}};

// Image of v_i under g, in v-coordinates.
constexpr std::array<std::array<int, 7>, 7> kGOnV{{
    {1, 0, 0, 0, 0, 0, 0},  // v1 -> v1
    {0, 1, 0, 0, 0, 0, 0},  // v2 -> v2
    {1, 0, 1, 0, 0, 0, 0},  // v3 -> v1 + v3
    {0, 1, 0, 1, 0, 0, 0},  // v4 -> v2 + v4
    {2, 0, 0, 0, 1, 0, 0},  // v5 -> 2v1 + v5
    {0, 1, 0, 2, 0, 1, 0},  // v6 -> v2 + 2v4 + v6
    {1, 0, 1, 0, 2, 0, 1},  // v7 -> v1 + v3 + 2v5 + v7
}};

// u_i -> u_{perm[i]}
constexpr std::array<int, 7> kGOnU{0, 2, 4, 6, 1, 3, 5};

// Signs: +1 fixes u_i, -1 negates it.
constexpr std::array<int, 7> kGammaSigns{1, 1, -1, 1, -1, -1, -1};
constexpr std::array<int, 7> kSigmaSigns{1, -1, -1, -1, 1, 1, -1};
constexpr std::array<int, 7> kDeltaSigns{1, -1, 1, -1, -1, -1, 1};

Matrix table_matrix(const FieldSpec& f, const std::array<std::array<int, 7>, 7>& t) {
  Matrix m(f, 7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.set(i, j, f.from_int(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  return m;
}

Matrix sign_matrix(const FieldSpec& f, const std::array<int, 7>& signs) {
  Vector d;
  for (int s : signs) d.push_back(f.from_int(s));
  return Matrix::diagonal(d);
}

const FieldSpec& ree_field(std::uint64_t q) {
  const unsigned n = twisted_exponent(q, 3);
  return field_make(3, static_cast<int>(2 * n + 1));
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace

Matrix tabulated_g_on_v_basis(const FieldSpec& field) { return table_matrix(field, kGOnV); }

ReeContext::ReeContext(std::uint64_t q, const FieldSpec& field)
    : q_(q),
      field_(&field),
      form_(BilinearForm::standard(field, 7)),
      v_basis_(table_matrix(field, kVBasis)),
      gamma_(sign_matrix(field, kGammaSigns)),
      sigma_(sign_matrix(field, kSigmaSigns)),
      delta_(sigma_ * gamma_),
      g_(Matrix::permutation(field, kGOnU)),
      w_(Subspace::coordinate(field, 7, {1, 2, 3, 4, 5, 6})),
      w1_(Subspace::coordinate(field, 7, {1, 3})),
      w2_(Subspace::coordinate(field, 7, {2, 6})),
      w3_(Subspace::coordinate(field, 7, {4, 5})) {}

ReeContext ReeContext::build(std::uint64_t q) {
  ReeContext ctx(q, ree_field(q));
  const FieldSpec& f = ctx.field();
  const Matrix id = Matrix::identity(f, 7);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ReeError(std::string("Ree data invariant failed: ") + what);
  };
  require(ctx.v_basis_.rank() == 7, "v-basis has rank 7");
  require((ctx.gamma_ * ctx.gamma_).is_identity(), "gamma^2 = 1");
  require((ctx.sigma_ * ctx.sigma_).is_identity(), "sigma^2 = 1");
  require(ctx.gamma_ * ctx.sigma_ == ctx.sigma_ * ctx.gamma_, "gamma and sigma commute");
  require(ctx.delta_ == sign_matrix(f, kDeltaSigns), "sigma gamma matches the delta sign table");
  require(!(ctx.gamma_ == id) && !(ctx.sigma_ == id) && !(ctx.delta_ == id), "involutions are nontrivial");
  require(!ctx.g_.determinant().is_zero() && preserves_form(ctx.g_, ctx.form_), "g is invertible and orthogonal");
  require(intersect(ctx.w1_, ctx.w2_).dim() == 0 && intersect(ctx.w2_, ctx.w3_).dim() == 0 &&
              intersect(ctx.w1_, ctx.w3_).dim() == 0,
          "W_i pairwise intersect trivially");
  require(sum(sum(ctx.w1_, ctx.w2_), ctx.w3_) == ctx.w_, "W_1 + W_2 + W_3 = W");
  ree_g(ctx);
  return ctx;
}

Vector ReeContext::u(int i) const {
  if (i < 0 || i > 6) throw ReeError("u index out of range");
  return Matrix::identity(*field_, 7).row(i);
}

const Subspace& ReeContext::w_part(int i) const {
  switch (i) {
    case 1:
      return w1_;
    case 2:
      return w2_;
    case 3:
      return w3_;
    default:
      throw ReeError("W_i index must be 1, 2 or 3");
  }
}

Matrix ree_g(const ReeContext& ctx) {
  const Matrix& c = ctx.v_basis();
  if (!(c * ctx.g() == tabulated_g_on_v_basis(ctx.field()) * c))
    throw ReeError("g on the u-basis disagrees with the tabulated action on the v-basis");
  return ctx.g();
}

Report verify_T_stabilizer_lemma(const ReeContext& ctx) {
  Report report("ree-T-stabilizer");
  const FieldSpec& f = ctx.field();
  const Subspace u0 = Subspace::coordinate(f, 7, {0});
  const Matrix& g = ctx.g();

  report.run("fix-K", "Fix(<gamma, sigma>) = <u_0>", "Fix(K) = <u_0>", [&](Check& c) {
    const Subspace fix = intersect(fixed_space(ctx.gamma()), fixed_space(ctx.sigma()));
    c.details["fix"] = fix.to_json();
    c.status = pass_if(fix == u0);
  });
  report.run("fix-K-perp", "the orthogonal complement of <u_0> is W", "Fix(K)^perp = W", [&](Check& c) {
    const Subspace perp = orthogonal_complement(u0, ctx.form());
    c.details["perp"] = perp.to_json();
    c.status = pass_if(perp == ctx.w());
  });
  report.run("g-fixes-u0", "u_0 g = u_0", "u_0 -> u_0", [&](Check& c) { c.status = pass_if(ctx.u(0) * g == ctx.u(0)); });
  report.run("g-stabilizes-W", "W g = W", "g leaves W invariant", [&](Check& c) { c.status = pass_if(image(ctx.w(), g) == ctx.w()); });
  report.run("g-normalizes-K", "g^-1 K g = K", "g lies in T = N_G(K)", [&](Check& c) {
    const Matrix gi = g.inverse();
    const std::vector<Matrix> k{Matrix::identity(f, 7), ctx.gamma(), ctx.sigma(), ctx.delta()};
    bool ok = true;
    for (const auto& x : k) {
      const Matrix y = gi * x * g;
      bool found = false;
      for (const auto& z : k) found = found || y == z;
      ok = ok && found;
    }
    c.status = pass_if(ok);
  });
  return report;
}

Report verify_W_cycle_lemma(const ReeContext& ctx) {
  Report report("ree-W-cycle");
  const Matrix& g = ctx.g();
  const Matrix gi = g.inverse();

  report.run("C_W-gamma", "C_W(gamma) = W_1 = <u_1, u_3>", "C_W(gamma) = W_1", [&](Check& c) {
    c.status = pass_if(fixed_space_within(ctx.w(), ctx.gamma()) == ctx.w_part(1));
  });
  report.run("C_W-delta", "C_W(delta) = W_2 = <u_2, u_6>", "C_W(delta) = W_2", [&](Check& c) {
    c.status = pass_if(fixed_space_within(ctx.w(), ctx.delta()) == ctx.w_part(2));
  });
  report.run("C_W-sigma", "C_W(sigma) = W_3 = <u_4, u_5>", "C_W(sigma) = W_3", [&](Check& c) {
    c.status = pass_if(fixed_space_within(ctx.w(), ctx.sigma()) == ctx.w_part(3));
  });
  report.run("W-cycle", "g maps W_1 -> W_2 -> W_3 -> W_1", "W_i^g = W_{i+1}", [&](Check& c) {
    const bool ok = image(ctx.w_part(1), g) == ctx.w_part(2) && image(ctx.w_part(2), g) == ctx.w_part(3) &&
                    image(ctx.w_part(3), g) == ctx.w_part(1);
    c.status = pass_if(ok);
  });
  report.run("conjugation-3-cycle", "conjugation by g cycles gamma -> delta -> sigma -> gamma",
             "g permutes {gamma, delta, sigma} as a 3-cycle", [&](Check& c) {
               const std::array<const Matrix*, 3> inv{&ctx.gamma(), &ctx.delta(), &ctx.sigma()};
               std::array<int, 3> perm{-1, -1, -1};
               for (int i = 0; i < 3; ++i) {
                 const Matrix y = gi * *inv[static_cast<std::size_t>(i)] * g;
                 for (int j = 0; j < 3; ++j)
                   if (y == *inv[static_cast<std::size_t>(j)]) perm[static_cast<std::size_t>(i)] = j;
               }
               c.details["image_indices"] = perm;  // 0 = gamma, 1 = delta, 2 = sigma
               c.status = pass_if(perm == std::array<int, 3>{1, 2, 0});
             });
  Check assumption{"index-T-over-C_G(K)", "|T : C_G(K)| = 3, so T acts on {W_1, W_2, W_3} as C_3",
                   "[T : C_G(K)] = 3", Status::Skipped,
                   {{"note", "T is not enumerated; the index is taken as a known property of 2G2(q)"}}};
  report.add(std::move(assumption));
  return report;
}

Report verify_final_lemma_certificate(const ReeContext& ctx) {
  Report report("ree-certificate");
  const FieldSpec& f = ctx.field();
  const Matrix& g = ctx.g();
  const Matrix gi = g.inverse();
  const Subspace e1 = eigenspace(ctx.sigma(), f.one());
  const Subspace em1 = eigenspace(ctx.sigma(), -f.one());

  report.run("a-eigenspaces", "E_1(sigma) = <u_0, u_4, u_5>, E_-1(sigma) = <u_1, u_2, u_3, u_6>",
             "E_1 = <u_0,u_4,u_5>, E_-1 = <u_1,u_2,u_3,u_6>", [&](Check& c) {
               c.details["E1"] = e1.to_json();
               c.details["E-1"] = em1.to_json();
               c.status = pass_if(e1 == Subspace::coordinate(f, 7, {0, 4, 5}) && em1 == Subspace::coordinate(f, 7, {1, 2, 3, 6}));
             });
  report.run("b-images", "u_0 g = u_0, u_4 g = u_1, u_5 g = u_3, hence E_1 cap E_1^g = <u_0>",
             "u_0^{xg} = b_0 u_0 + b_4 u_1 + b_5 u_3 forces u_0^x, u_0^y in <u_0>", [&](Check& c) {
               const bool images = ctx.u(0) * g == ctx.u(0) && ctx.u(4) * g == ctx.u(1) && ctx.u(5) * g == ctx.u(3);
               const Subspace meet = intersect(e1, image(e1, g));
               c.details["E1_cap_E1g"] = meet.to_json();
               c.status = pass_if(images && meet == Subspace::coordinate(f, 7, {0}));
             });
  report.run("c-intersections", "E_1 meets W_1 and W_2 trivially and contains W_3",
             "E_1 cap W_i != 0 only for i = 3", [&](Check& c) {
               const Subspace i1 = intersect(e1, ctx.w_part(1));
               const Subspace i2 = intersect(e1, ctx.w_part(2));
               const Subspace i3 = intersect(e1, ctx.w_part(3));
               c.details["dims"] = {i1.dim(), i2.dim(), i3.dim()};
               c.status = pass_if(i1.dim() == 0 && i2.dim() == 0 && i3 == ctx.w_part(3));
             });
  report.run("d-contradiction", "W_1 g = W_2 but W_1 g^-1 = W_3", "W_1^{xg} = W_2 while W_1^{g'y} = W_3", [&](Check& c) {
    const Subspace fwd = image(ctx.w_part(1), g);
    const Subspace back = image(ctx.w_part(1), gi);
    c.details["W1_g"] = fwd.to_json();
    c.details["W1_ginv"] = back.to_json();
    c.status = pass_if(fwd == ctx.w_part(2) && back == ctx.w_part(3) && !(fwd == back));
  });
  report.run("g-necessary-conditions", "g has order 3, determinant 1 and preserves the form",
             "g is an orthogonal element of order 3", [&](Check& c) {
               c.status = pass_if(g.pow(3).is_identity() && !g.is_identity() && g.determinant().is_one() && preserves_form(g, ctx.form()));
             });
  report.add({"quantified-steps", "steps quantified over all x, y in H = C_G(sigma)",
              "x, y in H and xg = g^-1 y is impossible", Status::Skipped,
              {{"note", "certified by the argument built on steps a-d; H is not enumerated"}}});
  report.add({"g-membership", "g lies in 2G2(q)", "g is in a Borel subgroup of G", Status::Skipped,
              {{"note", "taken from the group's construction; only necessary conditions are machine-checked"}}});
  return report;
}

}  // namespace twistgrp
