#ifndef BFASP_GUARD_BFASP_CLI_HH
#define BFASP_GUARD_BFASP_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace bfasp::cli
{
    enum ExitCode : int
    {
        Success = 0,
        NotStable = 1,
        NoStableModel = 2,
        InputError = 3,
        ResourceLimit = 4
    };

    /// Runs one `solve`, `check` or `ground` invocation. `args` excludes the
    /// program name. Solutions and verdicts go to `out`, diagnostics to `err`.
    [[nodiscard]] auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
