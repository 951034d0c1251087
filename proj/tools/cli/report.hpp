#ifndef MONOCONV_TOOLS_REPORT_HPP_
#define MONOCONV_TOOLS_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace monoconv::cli {

using Json = nlohmann::ordered_json;

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t enumeration_bound = 10;
};

// Each report carries a top-level "passed" boolean.
Json verify_partitions(const VerifyOptions& options);
Json verify_fock(const VerifyOptions& options);
Json verify_moments(const VerifyOptions& options);
Json verify_transforms(const VerifyOptions& options);
Json verify_orthopoly(const VerifyOptions& options);

// Shortest round-trip decimal form.
std::string format_double(double value);

// {"value": v, "tolerance": t}
Json tagged(double value, double tolerance);

}  // namespace monoconv::cli

#endif  // MONOCONV_TOOLS_REPORT_HPP_
