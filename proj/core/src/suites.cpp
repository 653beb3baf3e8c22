#include "twistgrp/suites.hpp"

#include <algorithm>
#include <cmath>

#include "twistgrp/classical.hpp"
#include "twistgrp/digraph.hpp"
#include "twistgrp/numth.hpp"
#include "twistgrp/ree.hpp"
#include "twistgrp/subgroups.hpp"
#include "twistgrp/suzuki.hpp"

namespace twistgrp {

namespace {

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::uint64_t valid_q(const SuiteParams& params, std::uint64_t fallback, std::uint64_t p) {
  const std::uint64_t q = params.q.value_or(fallback);
  try {
    twisted_exponent(q, p);
  } catch (const NumthError& e) {
    throw UsageError(std::string("invalid --q: ") + e.what());
  }
  return q;
}

SuzukiContext enumerated_suzuki(const SuiteParams& params) {
  const std::uint64_t q = valid_q(params, 8, 2);
  if (suzuki_order(q) > params.cap)
    throw UsageError("Sz(" + std::to_string(q) + ") has " + std::to_string(suzuki_order(q)) +
                     " elements, above the enumeration cap of " + std::to_string(params.cap) +
                     "; use --q 8 or raise --cap");
  return SuzukiContext::build(q, params.cap);
}

Report numth_suite(const SuiteParams& params) {
  Report report("numth");
  report.run("zsigmondy-sweep", "a^m - 1 lacks a primitive prime divisor exactly at the exceptions, 2 <= a <= 20, 2 <= m <= 12",
             "ppd(a, m) exists unless (a, m) = (2, 6) or m = 2 and a + 1 is a power of 2", [](Check& c) {
               nlohmann::json missing = nlohmann::json::array();
               bool agree = true;
               for (std::uint64_t a = 2; a <= 20; ++a)
                 for (unsigned m = 2; m <= 12; ++m) {
                   const bool none = primitive_prime_divisors(a, m).empty();
                   if (none) missing.push_back({a, m});
                   agree = agree && none == is_zsigmondy_exception(a, m);
                 }
               c.details["exceptions"] = missing;
               c.status = pass_if(agree);
             });
  report.run("p-part-factorial", "(n!)_p < p^(n/(p-1)) for n <= 30 and primes p <= 29", "(n!)_p < p^{n/(p-1)}", [](Check& c) {
    std::size_t checked = 0;
    bool ok = true;
    for (u128 p = 2; p <= 29; ++p) {
      if (!is_prime(static_cast<std::uint64_t>(p))) continue;
      u128 fact = 1;
      for (unsigned n = 1; n <= 30; ++n) {
        fact *= n;
        // (n!)_p = p^k < p^(n/(p-1))  iff  k (p-1) < n
        unsigned k = 0;
        for (auto part = p_part<u128>(fact, p); part > 1; part /= p) ++k;
        ok = ok && k * static_cast<unsigned>(p - 1) < n;
        ++checked;
      }
    }
    c.details["checked"] = checked;
    c.status = pass_if(ok);
  });
  const std::uint64_t qs = params.q && params.q.value() % 2 == 0 ? *params.q : 8;
  const std::uint64_t qr = params.q && params.q.value() % 3 == 0 ? *params.q : 27;
  MaxSubgroupTable sz, ree;
  try {
    sz = max_subgroup_table(Family::Suzuki, qs, qs == 8 ? 1 : params.m);
    ree = max_subgroup_table(Family::Ree, qr, qr == 27 ? 1 : params.m);
  } catch (const NumthError& e) {
    throw UsageError(std::string("invalid table parameters: ") + e.what());
  }
  report.run("suzuki-table", "maximal subgroup orders of Sz(" + std::to_string(qs) + ")",
             "rows (i)-(v) of the Suzuki maximal subgroup list", [&](Check& c) {
               c.details = sz.to_json();
               bool ok = std::all_of(sz.rows.begin(), sz.rows.end(),
                                     [&](const MaxSubgroupRow& r) { return sz.group_order % r.order == 0; });
               if (qs == 8 && sz.m == 1) {
                 std::vector<std::uint64_t> orders;
                 for (const auto& r : sz.rows) orders.push_back(r.order);
                 ok = ok && orders == std::vector<std::uint64_t>{448, 14, 52, 20};
               }
               c.status = pass_if(ok);
             });
  report.run("ree-table", "maximal subgroup orders of 2G2(" + std::to_string(qr) + ")",
             "rows (i)-(vi) of the Ree maximal subgroup list", [&](Check& c) {
               c.details = ree.to_json();
               bool ok = std::all_of(ree.rows.begin(), ree.rows.end(),
                                     [&](const MaxSubgroupRow& r) { return ree.group_order % r.order == 0; });
               const std::uint64_t q3 = qr * qr * qr + 1;
               for (const auto& r : ree.rows)
                 if (r.type == "iv" || r.type == "v") ok = ok && q3 % (r.order / (6 * ree.m)) == 0;
               if (qr == 27 && ree.m == 1) {
                 ok = ok && ree.rows[3].order == 6 * 19 && ree.rows[4].order == 6 * 37 && ree.rows[5].order == 1512;
               }
               c.status = pass_if(ok);
             });
  return report;
}

Report factorization_suite(const SuiteParams&) {
  Report report("grp-factorization");
  const FrobeniusExtension ext = psl2_frobenius_extension(3);
  report.run("psl2-8-order", "PSL2(8):3 has order 1512 with socle of order 504", "|PSL_2(8):3| = 1512", [&](Check& c) {
    c.details["order"] = ext.group.order();
    c.details["socle"] = ext.socle.order();
    c.status = pass_if(ext.group.order() == 1512 && ext.socle.order() == 504 && ext.group.contains(ext.socle));
  });
  report.run("no-equal-order-factorization", "PSL2(8):3 = AB with proper A, B forces |A| != |B|",
             "G = AB, A, B < G  =>  |A| != |B|", [&](Check& c) {
               const auto subgroups = all_subgroups(ext.group);
               const auto found = equal_order_factorizations(ext.group);
               c.details["subgroups"] = subgroups.size();
               nlohmann::json pairs = nlohmann::json::array();
               for (const auto& f : found) pairs.push_back({f.a.order(), f.b.order()});
               c.details["factorizations"] = pairs;
               c.status = pass_if(found.empty());
             });
  report.run("dihedral-unique-7", "D14 has a unique subgroup of order 7", "unique subgroup Q_p of order p", [&](Check& c) {
    const FieldSpec& f = field_make(2, 3);
    const EnumeratedGroup d14 = EnumeratedGroup::closure(
        {Matrix::diagonal({f.x(), f.x().inv()}), Matrix::from_ints(f, {{0, 1}, {1, 0}})});
    c.details["order"] = d14.order();
    c.details["count"] = count_subgroups_of_prime_order(d14, 7);
    c.status = pass_if(d14.order() == 14 && count_subgroups_of_prime_order(d14, 7) == 1);
  });
  return report;
}

Report suzuki_lemmas_suite(const SuiteParams& params) {
  const SuzukiContext ctx = enumerated_suzuki(params);
  const std::uint64_t q = ctx.q();
  Report report("suzuki-lemmas");
  report.run("order", "closure order equals q^2(q^2+1)(q-1)", "|Sz(q)| = q^2(q^2+1)(q-1)", [&](Check& c) {
    c.details["order"] = ctx.group().order();
    c.details["formula"] = suzuki_order(q);
    c.status = pass_if(ctx.group().order() == suzuki_order(q));
  });
  report.run("ovoid", "the ovoid has q^2+1 points and G is 2-transitive on it",
             "L = G_a = [q^2]:(q-1), K = G_ab = <kappa> = q-1", [&](Check& c) {
               const Ovoid omega(ctx);
               const EnumeratedGroup l = omega.stabilizer({omega.base()});
               const EnumeratedGroup k = omega.stabilizer({omega.base(), omega.opposite()});
               const auto orbit = omega.orbit(omega.opposite(), l);
               c.details["points"] = omega.size();
               c.details["L"] = l.order();
               c.details["K"] = k.order();
               c.details["L_orbit_on_rest"] = orbit.size();
               c.status = pass_if(omega.size() == q * q + 1 && l.order() == q * q * (q - 1) && k.order() == q - 1 &&
                                  orbit.size() == q * q && k.contains(kappa(ctx)));
             });
  report.merge(verify_centralizer_lemma(ctx), "centralizer");
  report.merge(verify_tau_lemma(ctx), "tau");
  const std::uint64_t r = static_cast<std::uint64_t>(std::llround(std::sqrt(2.0 * static_cast<double>(q))));
  const long long p = static_cast<long long>(q + r + 1);
  report.run("frobenius-unique-p", "C_" + std::to_string(p) + ":4 has a unique subgroup of order " + std::to_string(p),
             "unique subgroup Q_p of order p", [&](Check& c) {
               const EnumeratedGroup n = cyclic_normalizer(ctx, p);
               c.details["order"] = n.order();
               c.details["count"] = count_subgroups_of_prime_order(n, p);
               c.status = pass_if(n.order() == static_cast<std::size_t>(4 * p) && count_subgroups_of_prime_order(n, p) == 1);
             });
  return report;
}

Report suzuki_digraph_suite(const SuiteParams& params) {
  const SuzukiContext ctx = enumerated_suzuki(params);
  const std::uint64_t q = ctx.q();
  Report report("suzuki-digraph");
  const auto g = ctx.group_ptr();
  report.run("order", "closure order equals q^2(q^2+1)(q-1)", "|Sz(q)| = q^2(q^2+1)(q-1)", [&](Check& c) {
    c.details["order"] = g->order();
    c.status = pass_if(g->order() == suzuki_order(q));
  });
  report.run("ovoid", "the ovoid has q^2+1 points", "|Omega| = q^2 + 1", [&](Check& c) {
    const Ovoid omega(ctx);
    c.details["points"] = omega.size();
    c.status = pass_if(omega.size() == q * q + 1);
  });

  std::shared_ptr<const EnumeratedGroup> h;
  std::optional<Matrix> rho_;
  report.run("double-coset", "H = N_G(K) has order 2(q-1), rho has order 4 and rho^-1 is not in H rho H",
             "g = rho, H = N_G(K) = D_{2(q-1)}, g^-1 not in HgH", [&](Check& c) {
               auto ingredients = suzuki_digraph_ingredients(ctx);
               c.details["H"] = ingredients.h.order();
               c.details["rho_order"] = element_order(ingredients.g);
               c.details["double_coset_cosets"] = double_coset(ingredients.h, ingredients.g).size();
               c.status = pass_if(element_order(ingredients.g) == 4 && ingredients.h.order() == 2 * (q - 1));
               h = std::make_shared<const EnumeratedGroup>(std::move(ingredients.h));
               rho_ = ingredients.g;
             });
  if (!h) return report;

  const CosetDigraph d = build_coset_digraph(g, h, *rho_);
  const std::size_t vertices = g->order() / h->order();
  report.run("degree", "constant out-degree |H rho H| / |H| on |G:H| vertices", "Cos(G, H, g) is regular", [&](Check& c) {
    const auto deg = d.out_degree();
    c.details["vertices"] = d.vertex_count();
    c.details["degree"] = deg ? nlohmann::json(*deg) : nlohmann::json(nullptr);
    c.details["arcs"] = d.arc_count();
    const auto in = d.in_adjacency();
    const bool in_regular = deg && std::all_of(in.begin(), in.end(), [&](const auto& l) { return l.size() == *deg; });
    c.status = pass_if(d.vertex_count() == vertices && deg && *deg == double_coset(*h, *rho_).size() &&
                       d.arc_count() == vertices * *deg && in_regular);
  });
  report.run("irreflexive", "no vertex has a loop", "g not in H", [&](Check& c) { c.status = pass_if(d.irreflexive()); });
  report.run("antisymmetric", "no pair of opposite arcs", "g^-1 not in HgH", [&](Check& c) { c.status = pass_if(d.antisymmetric()); });
  report.run("arc-transitive", "G is transitive on vertices and on arcs, acting by automorphisms",
             "Cos(G, H, g) is (G, 1)-arc-transitive", [&](Check& c) {
               c.details["arc_orbits"] = arc_orbit_count(d);
               c.status = pass_if(generators_preserve_arcs(d) && is_vertex_transitive(d) && is_arc_transitive(d));
             });
  report.run("not-2-arc-transitive", "G_v != G_uv G_vw and G has more than one orbit on 2-arcs",
             "s <= 1: not (G, 2)-arc-transitive", [&](Check& c) {
               const TwoArcAnalysis a = analyze_two_arcs(d);
               c.details["G_v"] = a.stabilizer_order;
               c.details["G_uv"] = a.arc_stabilizer_order;
               c.details["G_uv_G_vw"] = a.product_size;
               c.details["two_arcs"] = a.two_arc_count;
               c.details["two_arc_orbits"] = a.two_arc_orbits;
               c.status = pass_if(!a.factorization_holds && a.two_arc_orbits > 1 && !is_2arc_transitive(d));
             });
  report.run("primitive", "H is maximal in G, so G is primitive on vertices", "D_{2(q-1)} is maximal in Sz(q)",
             [&](Check& c) { c.status = pass_if(is_vertex_primitive(d, params.jobs)); });
  return report;
}

Report ree_suite(const SuiteParams& params) {
  const std::uint64_t q = valid_q(params, 27, 3);
  Report report("ree-certificate");
  std::optional<ReeContext> ctx;
  report.run("tables", "gamma, sigma, delta = sigma gamma and g satisfy every tabulated relation",
             "the v/u tables are consistent: C g_u = g_v C", [&](Check& c) {
               ctx.emplace(ReeContext::build(q));
               c.details["field"] = ctx->field().name();
               c.details["modulus"] = ctx->field().modulus_string();
               c.status = Status::Pass;
             });
  if (!ctx) return report;
  report.merge(verify_T_stabilizer_lemma(*ctx), "T");
  report.merge(verify_W_cycle_lemma(*ctx), "W");
  report.merge(verify_final_lemma_certificate(*ctx), "final");
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"numth", "grp-factorization", "suzuki-lemmas", "suzuki-digraph", "ree-certificate", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  if (params.jobs == 0) throw UsageError("--jobs must be at least 1");
  if (name == "numth") return numth_suite(params);
  if (name == "grp-factorization") return factorization_suite(params);
  if (name == "suzuki-lemmas") return suzuki_lemmas_suite(params);
  if (name == "suzuki-digraph") return suzuki_digraph_suite(params);
  if (name == "ree-certificate") return ree_suite(params);
  if (name == "all") {
    if (params.q) throw UsageError("--q cannot be combined with --suite all");
    Report report("all");
    for (const auto& s : suite_names())
      if (s != "all") report.merge(run_suite(s, params), s);
    return report;
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace twistgrp
