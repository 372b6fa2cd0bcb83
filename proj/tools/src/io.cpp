#include "io.hpp"

#include "qunip/errors.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qunip::cli {

std::vector<int> parse_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("not an integer list: " + text);
        }
        if (used != item.size())
            throw ValidationError("not an integer list: " + text);
        out.push_back(v);
    }
    return out;
}

RootDatum load_datum(const RunConfig& cfg)
{
    if (cfg.datum_file.empty())
        return RootDatum::preset(cfg.type);
    std::ifstream in(cfg.datum_file);
    if (!in)
        throw ValidationError("cannot read datum file " + cfg.datum_file);
    json j;
    try {
        in >> j;
        return RootDatum(j.at("cartan").get<std::vector<std::vector<int>>>(),
                         j.at("symmetrizers").get<std::vector<int>>(),
                         j.value("labels", std::vector<std::string>{}),
                         std::filesystem::path(cfg.datum_file).stem().string());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed datum file: ") + e.what());
    }
}

ReducedWord load_word(const RootDatum& datum, const RunConfig& cfg)
{
    std::vector<int> letters = parse_list(cfg.word);
    for (int& i : letters) {
        if (i < 1 || i > datum.rank())
            throw ValidationError("letter out of range in --word");
        --i;
    }
    return ReducedWord(datum, std::move(letters));
}

void validate(const RunConfig& cfg)
{
    if (cfg.sign != 1 && cfg.sign != -1)
        throw ValidationError("--sign must be +1 or -1");
    if (cfg.height < 1 || cfg.degree < 1)
        throw ValidationError("bounds must be positive");
    if (cfg.format != "json" && cfg.format != "table")
        throw ValidationError("--format must be json or table");
}

json scalar_json(const ScalarQ& a)
{
    return a.to_string();
}

json letters_json(const std::vector<int>& letters)
{
    json out = json::array();
    for (int i : letters)
        out.push_back(i + 1);
    return out;
}

json context_json(const RootDatum& datum, const ReducedWord& w, int e)
{
    return {{"datum", datum.name()}, {"word", letters_json(w.letters())}, {"sign", e}};
}

json wordelt_json(const WordElt& x)
{
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"word", letters_json(w.letters())}, {"coeff", scalar_json(c)}});
    return {{"terms", terms}};
}

json expansion_json(const Expansion& x)
{
    json coords = json::array();
    for (const auto& [c, a] : x)
        coords.push_back({{"c", c}, {"coeff", scalar_json(a)}});
    return coords;
}

json pbwvector_json(const RootDatum& datum, const PBWVector& v)
{
    return {{"context", context_json(datum, v.word(), v.sign())}, {"coords", expansion_json(v.coords())}};
}

json seed_json(const SeedRecord& s)
{
    return {{"minors", s.minors}, {"lambda_matrix", s.lambda_matrix}, {"frozen", s.frozen}, {"exchange_matrix", nullptr}};
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t k = 0; k < j.size(); ++k)
            flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
    } else {
        out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

} // namespace

std::string render(const json& doc, const std::string& format)
{
    if (format == "table") {
        std::ostringstream out;
        flatten(doc, "", out);
        return out.str();
    }
    return doc.dump(2) + "\n";
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

std::string OutputCache::path(const std::string& request) const
{
    return (std::filesystem::path(dir_) / (sha256_hex(request) + ".json")).string();
}

std::optional<json> OutputCache::load(const std::string& request) const
{
    std::ifstream in(path(request));
    if (!in)
        return std::nullopt;
    try {
        json entry = json::parse(in);
        std::string payload = entry.at("payload").get<std::string>();
        if (entry.at("request").get<std::string>() != request || entry.at("sha256").get<std::string>() != sha256_hex(payload))
            return std::nullopt;
        return json::parse(payload);
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void OutputCache::store(const std::string& request, const json& doc) const
{
    std::filesystem::create_directories(dir_);
    std::string payload = doc.dump();
    json entry{{"request", request}, {"sha256", sha256_hex(payload)}, {"payload", payload}};
    // Write then rename so a crash never leaves a half-written entry under the final name.
    std::string target = path(request), tmp = target + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << entry.dump();
    }
    std::filesystem::rename(tmp, target);
}

} // namespace qunip::cli
