#pragma once

#include "mfc/serialize.hpp"

#include <string>
#include <vector>

namespace mfc {

struct ReplayInfo {
    std::string id;
    std::string argument;  // the argument the replay reproduces
};

const std::vector<ReplayInfo>& replay_table();

struct ReplayResult {
    bool verdict = false;  // the argument's stated outcome is reproduced
    Json payload;
};

// Throws std::invalid_argument for an unknown id.
ReplayResult run_replay(const std::string& id, int threads = 1);

}  // namespace mfc
