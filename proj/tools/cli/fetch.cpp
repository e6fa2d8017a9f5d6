#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "commands.hpp"

#include <cstdlib>

namespace knightpaths::cli {

std::optional<std::string> download_bfile(const std::string& base_url, const std::string& id, std::string& why) {
    httplib::Client client(base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = client.Get(path);
    if (!res) {
        why = "request to " + base_url + path + " failed: " + httplib::to_string(res.error());
        return std::nullopt;
    }
    if (res->status != 200) {
        why = base_url + path + " returned HTTP " + std::to_string(res->status);
        return std::nullopt;
    }
    return res->body;
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("KNIGHTPATHS_OEIS_CACHE"); env && *env) return env;
    return "oeis-cache";
}

}  // namespace knightpaths::cli
