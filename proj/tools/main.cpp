// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/cli.hpp"

int main(int argc, char** argv) { return wheelsep::cli::run(argc, argv); }
