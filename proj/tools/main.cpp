// SPDX-License-Identifier: Apache-2.0

#include "immi/cli.hpp"

int main(int argc, char** argv) { return immi::cli::run(argc, argv); }
