#pragma once

#include <json.hpp>
#include <string>

namespace heisfree::cli {

using Json = nlohmann::ordered_json;

// Common flags shared by every subcommand.
struct Options {
    int depth = 0;       // word-search depth; 0 disables the engine
    double tol = 1e-12;  // floating tolerance for quaternion-path checks
    int workers = 1;     // word-search partitioning; results match sequential
};

// Each command returns one structured report; serialization is stable and
// free of timestamps, so repeated runs are byte-identical.
Json cmd_check(const std::string& mu, const std::string& path, const Options& opt);
Json cmd_cartan(const std::string& nu, const Options& opt);
Json cmd_cartan_sq(const std::string& nu_sq, const Options& opt);
Json cmd_refute(const Options& opt);
Json cmd_sweep(const std::string& nu_min, const std::string& nu_max, long steps,
               const std::string& out_path, const Options& opt);
Json cmd_heis(const std::string& p, const std::string& q, const Options& opt);
Json cmd_lu(const std::string& m, const std::string& n, const Options& opt);
Json cmd_vquat(const std::string& tau, const Options& opt);

// structured: compact single-line JSON; pretty: indented
std::string render(const Json& report, bool pretty);

}  // namespace heisfree::cli
