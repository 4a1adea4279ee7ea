#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcoh::cli {

/// Environment variable naming the default field descriptor ("Q" or "Fp:<p>").
inline constexpr const char* kFieldEnv = "QCOH_FIELD";

/// Parses `args` (without the program name) and executes them. Reports go to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 on success, 1 when the
/// operation fails or the input violates an invariant, 2 on usage errors.
int run(const std::vector<std::string>& args, const std::string& default_field, std::ostream& out, std::ostream& err);

}  // namespace qcoh::cli
