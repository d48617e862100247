#pragma once

namespace rawbench::io {

/// Entry point behind the `rawbench` binary. Subcommands: synth, process,
/// bench, metrics, report. Returns 0 on success, 1 on usage errors, 2 on
/// data errors.
int cli_main(int argc, const char* const* argv);

}  // namespace rawbench::io
