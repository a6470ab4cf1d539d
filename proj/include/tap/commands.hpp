#pragma once

#include <string>

#include "tap/gen.hpp"
#include "tap/io.hpp"

namespace tap {

// CLI command bodies; each returns the JSON document the command prints.
// Failures are reported by throwing tap::Error.

OrderedJson cmd_validate(const std::string& path);
OrderedJson cmd_reduce(const std::string& path, const std::string& out_path);
OrderedJson cmd_exact(const std::string& path);
OrderedJson cmd_lp(const std::string& path, const std::string& relaxation);
OrderedJson cmd_approx(const std::string& path, int level, bool parallel);
OrderedJson cmd_gap(const std::string& path, bool parallel);
OrderedJson cmd_membership(const std::string& path, const std::string& point_path);
OrderedJson cmd_gen(const GenParams& params, const std::string& out_path);
OrderedJson cmd_paper(const std::string& case_name, int k, const std::string& out_path);

}  // namespace tap
