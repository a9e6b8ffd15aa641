#pragma once

// Command-line front end. Exit codes: 0 ok, 1 a check failed, 2 bad
// configuration or input. Machine output goes to stdout (or --out), logs to
// stderr.

namespace sjgeo {

int run_cli(int argc, char** argv);

}  // namespace sjgeo
