// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace immi::cli {

/// Runs the command line tool. Exit status: 0 success, 2 usage error,
/// 1 runtime error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace immi::cli
