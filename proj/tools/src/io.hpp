#pragma once

#include "qunip/dualbasis.hpp"
#include "qunip/minors.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qunip::cli {

using nlohmann::json;

struct RunConfig {
    std::string type = "A2";
    std::string datum_file;
    std::string word; // "1,2,1", 1-based letters
    int sign = 1;
    int height = 8;
    int degree = 3;
    std::string format = "json";
    std::string cache_dir;
};

// "1,2,1" -> {1, 2, 1}; ValidationError on anything else.
std::vector<int> parse_list(const std::string& text);
RootDatum load_datum(const RunConfig& cfg);
// Letters are 1-based on the command line and in every emitted document.
ReducedWord load_word(const RootDatum& datum, const RunConfig& cfg);
void validate(const RunConfig& cfg);

json scalar_json(const ScalarQ& a);
json letters_json(const std::vector<int>& letters);
json context_json(const RootDatum& datum, const ReducedWord& w, int e);
json wordelt_json(const WordElt& x);
json pbwvector_json(const RootDatum& datum, const PBWVector& v);
json expansion_json(const Expansion& x);
json seed_json(const SeedRecord& s);

// Deterministic rendering: json is pretty-printed with sorted keys, table flattens key paths.
std::string render(const json& doc, const std::string& format);

// Output cache keyed by SHA-256 of the request. Entries carry a digest of their payload; a
// mismatch counts as a miss.
class OutputCache {
public:
    explicit OutputCache(std::string dir) : dir_(std::move(dir)) {}
    bool enabled() const { return !dir_.empty(); }
    std::optional<json> load(const std::string& request) const;
    void store(const std::string& request, const json& doc) const;

private:
    std::string path(const std::string& request) const;
    std::string dir_;
};

std::string sha256_hex(const std::string& data);

} // namespace qunip::cli
