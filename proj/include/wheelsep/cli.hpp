// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wheelsep::cli {

// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInternal = 2;
inline constexpr int kWitness = 3;
inline constexpr int kVerifyFailed = 4;

// args excludes the program name. Documents without --output go to `out`;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace wheelsep::cli
