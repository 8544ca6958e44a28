#pragma once

namespace kgon::cli {

// Entry point behind the kgon binary. Exit codes: 0 success, 1 a check
// failed (non-extremal graph, oracle disagreement, packing failure), 2
// usage or input errors.
int run(int argc, const char* const* argv);

}  // namespace kgon::cli
