#include <doctest.h>

#include <array>

#include "twistgrp/numth.hpp"
#include "twistgrp/ree.hpp"

using namespace twistgrp;

namespace {

using Int7 = std::array<std::array<int, 7>, 7>;

// Plain integer arithmetic mod 3, independent of the field code.
Int7 mul_mod3(const Int7& a, const Int7& b) {
  Int7 c{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      int s = 0;
      for (int k = 0; k < 7; ++k) s += a[i][k] * b[k][j];
      c[i][j] = ((s % 3) + 3) % 3;
    }
  return c;
}

Int7 to_ints(const Matrix& m) {
  Int7 out{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const auto c = m.at(i, j).coeffs();
      for (std::size_t k = 1; k < c.size(); ++k) REQUIRE(c[k] == 0);  // prime-field entries
      out[i][j] = c[0];
    }
  return out;
}

}  // namespace

TEST_CASE("tables are consistent in plain mod-3 arithmetic") {
  const ReeContext ctx = ReeContext::build(27);
  const Int7 c = to_ints(ctx.v_basis());
  const Int7 gu = to_ints(ctx.g());
  const Int7 gv = to_ints(tabulated_g_on_v_basis(ctx.field()));
  CHECK(mul_mod3(c, gu) == mul_mod3(gv, c));
  // v3 -> v1 + v3
  CHECK(gv[2] == std::array<int, 7>{1, 0, 1, 0, 0, 0, 0});
  // g has order 3, gamma and sigma are commuting involutions
  CHECK(mul_mod3(mul_mod3(gu, gu), gu) == to_ints(Matrix::identity(ctx.field(), 7)));
  const Int7 gamma = to_ints(ctx.gamma());
  const Int7 sigma = to_ints(ctx.sigma());
  CHECK(mul_mod3(gamma, sigma) == mul_mod3(sigma, gamma));
  CHECK(mul_mod3(sigma, gamma) == to_ints(ctx.delta()));
}

TEST_CASE("sign patterns") {
  const ReeContext ctx = ReeContext::build(27);
  const FieldSpec& f = ctx.field();
  const std::array<int, 7> gamma{1, 1, -1, 1, -1, -1, -1};
  const std::array<int, 7> sigma{1, -1, -1, -1, 1, 1, -1};
  const std::array<int, 7> delta{1, -1, 1, -1, -1, -1, 1};
  for (int i = 0; i < 7; ++i) {
    CHECK(ctx.gamma().at(i, i) == f.from_int(gamma[i]));
    CHECK(ctx.sigma().at(i, i) == f.from_int(sigma[i]));
    CHECK(ctx.delta().at(i, i) == f.from_int(delta[i]));
  }
}

TEST_CASE("lemma reports at q = 27 and q = 243") {
  for (std::uint64_t q : {27, 243}) {
    CAPTURE(q);
    const ReeContext ctx = ReeContext::build(q);
    CHECK(ctx.field().order() == q);
    const Report t = verify_T_stabilizer_lemma(ctx);
    const Report w = verify_W_cycle_lemma(ctx);
    const Report c = verify_final_lemma_certificate(ctx);
    CHECK(t.passed());
    CHECK(w.passed());
    CHECK(c.passed());
    CHECK(t.count(Status::Pass) == 5);
    CHECK(w.count(Status::Pass) == 5);
    CHECK(c.count(Status::Pass) == 5);
    CHECK(w.check("index-T-over-C_G(K)").status == Status::Skipped);
  }
}

TEST_CASE("subspace facts of the certificate") {
  const ReeContext ctx = ReeContext::build(27);
  const FieldSpec& f = ctx.field();
  const Subspace e1 = eigenspace(ctx.sigma(), f.one());
  CHECK(e1 == Subspace::coordinate(f, 7, {0, 4, 5}));
  CHECK(intersect(e1, ctx.w_part(1)).dim() == 0);
  CHECK(intersect(e1, ctx.w_part(2)).dim() == 0);
  CHECK(intersect(e1, ctx.w_part(3)) == ctx.w_part(3));
  CHECK(image(ctx.w_part(1), ctx.g()) == ctx.w_part(2));
  CHECK(image(ctx.w_part(1), ctx.g().inverse()) == ctx.w_part(3));
  CHECK(intersect(e1, image(e1, ctx.g())) == Subspace::coordinate(f, 7, {0}));
  CHECK(fixed_space(ctx.gamma() * ctx.sigma()) != Subspace::full(f, 7));
  CHECK(fixed_space_within(ctx.w(), ctx.gamma()) == ctx.w_part(1));
  CHECK(orthogonal_complement(Subspace::coordinate(f, 7, {0}), ctx.form()) == ctx.w());
  CHECK_THROWS_AS(ctx.w_part(4), ReeError);
  CHECK_THROWS_AS(ctx.u(7), ReeError);
}

TEST_CASE("invalid q") {
  CHECK_THROWS_AS(ReeContext::build(9), NumthError);
  CHECK_THROWS_AS(ReeContext::build(3), NumthError);
  CHECK_THROWS_AS(ReeContext::build(8), NumthError);
}
