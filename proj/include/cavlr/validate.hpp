// validate.hpp — Built-in oracle suites behind the CLI `validate` subcommand.

#pragma once

#include <string>
#include <vector>

namespace cavlr {

struct ValidationResult {
    std::string name;
    bool pass;
    double worst;    // largest deviation observed
    double budget;   // the tolerance it was held to
};

std::vector<ValidationResult> run_validation();

} // namespace cavlr
