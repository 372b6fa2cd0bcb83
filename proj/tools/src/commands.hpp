#pragma once

#include "io.hpp"

#include <string>
#include <vector>

namespace qunip::cli {

struct MinorsFlags {
    bool check_qcommute = false;
    bool check_factor = false;
};

json cmd_gram(const RunConfig& cfg);
json cmd_rootvec(const RunConfig& cfg, int k);
json cmd_pbw(const RunConfig& cfg, const std::string& c);
json cmd_dcb(const RunConfig& cfg, const std::string& c);
json cmd_straighten(const RunConfig& cfg, int j, int k, int cj, int ck);
json cmd_product(const RunConfig& cfg, const std::string& c1, const std::string& c2);
json cmd_compat(const RunConfig& cfg, const std::string& c1, const std::string& c2);
json cmd_minors(const RunConfig& cfg, const MinorsFlags& flags);
json cmd_seed(const RunConfig& cfg);
// ops: comma-separated f<i>, e<i>, f<i>*, e<i>* applied left to right, 1-based i.
json cmd_crystal(const RunConfig& cfg, const std::string& c, const std::string& ops);

} // namespace qunip::cli
