// Named verification suites, composed from the module-level checks.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistgrp/grp.hpp"
#include "twistgrp/report.hpp"

namespace twistgrp {

/// Bad suite name or parameters; the command line maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteParams {
  std::optional<std::uint64_t> q;  // suite default when unset
  std::uint64_t m = 1;             // outer automorphism order for the numth tables
  std::size_t cap = kDefaultClosureCap;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

/// numth, grp-factorization, suzuki-lemmas, suzuki-digraph, ree-certificate
/// or all. Throws UsageError for an unknown name or invalid parameters.
Report run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace twistgrp
