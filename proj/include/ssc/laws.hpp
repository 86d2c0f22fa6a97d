#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssc/report.hpp"

namespace ssc {

struct LawOptions {
  std::uint64_t seed = 1;
  /// Largest modulus for the Z/n and Spec Z sweeps.
  std::uint64_t max_n = 1000;
};

/// polyring, groebner, algebra, scheme, subscheme, oracle.
const std::vector<std::string>& law_modules();

/// Seeded property suite of one module, or every module for "all". Throws
/// Error for an unknown module name.
Report run_laws(std::string_view module, const LawOptions& options = {});

}  // namespace ssc
