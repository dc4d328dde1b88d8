#pragma once

namespace gsr {

// Exit codes: 0 success (audit counterexamples are findings, not failures),
// 1 structure invalid under validate, 2 usage, parse, or capacity errors.
int run_cli(int argc, const char* const* argv);

}  // namespace gsr
