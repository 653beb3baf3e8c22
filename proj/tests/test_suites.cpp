#include <doctest.h>

#include "twistgrp/suites.hpp"

using namespace twistgrp;

TEST_CASE("numth and ree suites pass") {
  const Report n = run_suite("numth");
  CHECK(n.passed());
  CHECK(n.count(Status::Fail) == 0);
  const Report r = run_suite("ree-certificate", {27});
  CHECK(r.passed());
  for (const char* id : {"final.a-eigenspaces", "final.b-images", "final.c-intersections", "final.d-contradiction"})
    CHECK(r.check(id).status == Status::Pass);
  CHECK(run_suite("ree-certificate", {243}).passed());
}

TEST_CASE("suzuki-digraph suite reports every required check") {
  const Report r = run_suite("suzuki-digraph", {8});
  for (const char* id : {"order", "ovoid", "double-coset", "arc-transitive", "not-2-arc-transitive", "primitive", "irreflexive",
                         "antisymmetric", "degree"}) {
    CAPTURE(id);
    CHECK(r.check(id).status == Status::Pass);
  }
  CHECK(r.passed());
}

TEST_CASE("reports are byte-stable") {
  CHECK(run_suite("ree-certificate").to_json().dump() == run_suite("ree-certificate").to_json().dump());
  CHECK(run_suite("numth").to_json().dump() == run_suite("numth").to_json().dump());
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(run_suite("bogus"), UsageError);
  CHECK_THROWS_AS(run_suite("ree-certificate", {9}), UsageError);
  CHECK_THROWS_AS(run_suite("suzuki-lemmas", {27}), UsageError);
  CHECK_THROWS_WITH_AS(run_suite("suzuki-digraph", {32}), doctest::Contains("enumeration cap"), UsageError);
  CHECK_THROWS_AS(run_suite("all", {8}), UsageError);
  SuiteParams zero_jobs;
  zero_jobs.jobs = 0;
  CHECK_THROWS_AS(run_suite("numth", zero_jobs), UsageError);
  CHECK(suite_names().size() == 6);
}
