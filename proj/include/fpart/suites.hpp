#pragma once

// Built-in property suites behind `fpart check`.

#include <cstdint>
#include <string>
#include <vector>

#include "fpart/group.hpp"

namespace fpart {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;  ///< first few failures
};

/// Known names: cyclotomic, group, partition, induced, enumerator, poset.
const std::vector<std::string>& suite_names();

/// "all" runs every suite. Throws invalid_input on an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed = 1, const Limits& limits = {});

}  // namespace fpart
