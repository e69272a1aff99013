#pragma once

#include <ostream>
#include <string>

#include "ldp/rational.hpp"

namespace ldp {

enum class OutputFormat { Table, Json };

struct CliConfig {
  std::string catalog_path;  // empty: environment override, then bundled
  Rational threshold{6, 7};
  OutputFormat output = OutputFormat::Table;
  bool parallel = false;
};

inline constexpr const char* kCatalogEnv = "LDP_CATALOG";

// Catalog path from the explicit option, the environment, or the copy
// shipped with the build, in that order.
std::string resolve_catalog_path(const std::string& explicit_path);

// Exit codes: 0 success, 1 verification failures, 2 input or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ldp
