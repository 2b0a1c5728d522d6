#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcat::cli {

  // Exit statuses of run().
  enum class Status : int {
    ok = 0,
    // A verification suite reported a predicate violation or a failed check.
    verification_failed = 1,
    // Unknown subcommand or flag, missing or malformed argument.
    usage = 2,
    // Unreadable or unwritable file, or a bound the request cannot meet.
    runtime = 3
  };

  // Runs one subcommand; args excludes the program name.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pcat::cli
