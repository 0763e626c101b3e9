#ifndef GED_CLI_H_
#define GED_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ged {

// Entry point of the `gedkit` executable. Subcommands: inject, split,
// train-baseline, predict-baseline, score, curve, feedback, pipeline.
// Returns the process exit status; diagnostics go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ged

#endif  // GED_CLI_H_
