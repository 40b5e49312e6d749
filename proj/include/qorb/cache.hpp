#pragma once

#include <string>
#include <vector>

#include "qorb/decompose.hpp"

namespace qorb {

// Disk memo for generated modules and decompositions, active when the
// QORB_CACHE_DIR environment variable names a directory.
bool load_cached_rep(const std::string& file, Rep& r);
void store_cached_rep(const std::string& file, const Rep& r);
bool load_cached_blocks(const std::string& file, std::vector<IntertwinerBlock>& blocks);
void store_cached_blocks(const std::string& file, const std::vector<IntertwinerBlock>& blocks);

}  // namespace qorb
