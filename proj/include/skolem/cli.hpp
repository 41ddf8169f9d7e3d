#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skolem::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInternalFailure = 1,  // a constructed starter failed its own verification
  kUsage = 2,            // argument, parse or precondition error
  kPropertyFailure = 3,  // verify: well-formed input lacking a property
  kCeiling = 4,          // search: n above the tractability ceiling
};

/// Schema tag carried by every JSON envelope.
inline constexpr const char* kSchema = "skolem-starters/1";

/// Environment variable overriding the search ceiling.
inline constexpr const char* kCeilingEnv = "SKOLEM_SEARCH_CEILING";

/// Runs `skolem <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace skolem::cli
