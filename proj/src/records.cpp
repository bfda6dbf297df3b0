#include "zetaforge/records.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#ifndef ZETAFORGE_VERSION
#define ZETAFORGE_VERSION "0.0.0"
#endif

namespace zetaforge {

json form_record(FamilySpec spec, const ZetaForm& form)
{
    json zeta = json::object();
    for (const auto& [a, q] : form.zeta_coeffs())
        zeta[std::to_string(a)] = to_string(q);
    json rec = {
        {"family", std::string(family_name(spec.family))},
        {"n", spec.n},
        {"rational", to_string(form.rational_part())},
        {"zeta", zeta},
        {"finite", form.is_finite()},
    };
    if (!form.is_finite()) {
        rec["divergent_harmonic"] = to_string(form.divergent_harmonic());
        json poly = json::array();
        for (const auto& c : form.divergent_poly().coeffs())
            poly.push_back(to_string(c));
        rec["divergent_poly"] = poly;
    }
    return rec;
}

FormRecord parse_form_record(const json& rec)
{
    try {
        FormRecord out;
        out.spec.family = parse_family(rec.at("family").get<std::string>());
        out.spec.n = rec.at("n").get<unsigned>();
        out.form.add_rational(parse_rational(rec.at("rational").get<std::string>()));
        for (const auto& [key, value] : rec.at("zeta").items())
            out.form.add_zeta(static_cast<unsigned>(std::stoul(key)), parse_rational(value.get<std::string>()));
        if (rec.contains("divergent_harmonic"))
            out.form.add_divergent_harmonic(parse_rational(rec["divergent_harmonic"].get<std::string>()));
        if (rec.contains("divergent_poly")) {
            std::vector<BigRational> c;
            for (const auto& s : rec["divergent_poly"])
                c.push_back(parse_rational(s.get<std::string>()));
            out.form.add_divergent_poly(UPoly(std::move(c)));
        }
        if (rec.at("finite").get<bool>() != out.form.is_finite())
            throw std::invalid_argument("finite flag disagrees with divergence ledger");
        return out;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed form record: ") + e.what());
    }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

std::string tool_version() { return ZETAFORGE_VERSION; }

json RunManifest::to_json() const
{
    json j = {
        {"command", command},
        {"parameters", parameters},
        {"tool_version", tool_version()},
        {"seeds", seeds},
        {"precision", precision},
        {"result_digest", result_digest},
    };
    if (timestamp)
        j["timestamp"] = *timestamp;
    return j;
}

std::string current_timestamp()
{
    std::time_t t{};
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::stoll(epoch));
    else
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

FormCache::FormCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FormCache::entry_path(FamilySpec spec) const
{
    return dir_ / (std::string(family_name(spec.family)) + "_n" + std::to_string(spec.n) + ".json");
}

std::optional<std::string> FormCache::load(FamilySpec spec) const
{
    std::ifstream in(entry_path(spec), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void FormCache::store(FamilySpec spec, const std::string& bytes) const
{
    std::filesystem::create_directories(dir_);
    const auto target = entry_path(spec);
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache entry " + tmp.string());
        out << bytes;
        if (!out.flush())
            throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value)
{
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("ZETAFORGE_CACHE"); env && *env)
        return env;
    return "zetaforge-cache";
}

std::string cache_entry_bytes(const ComputedForm& computed)
{
    const json record = form_record(computed.spec, computed.form);
    RunManifest manifest;
    manifest.command = "form";
    manifest.parameters = {{"family", std::string(family_name(computed.spec.family))}, {"n", computed.spec.n}};
    manifest.precision = {{"arithmetic", "exact"}};
    manifest.result_digest = sha256_hex(canonical_dump(record));
    const json entry = {
        {"form", record},
        {"structure", {{"nonzero_zeta", computed.report.nonzero_zeta}, {"target_only", computed.report.target_only}}},
        {"manifest", manifest.to_json()},
    };
    return canonical_dump(entry);
}

ComputedForm parse_cache_entry(const std::string& bytes)
{
    json entry;
    try {
        entry = json::parse(bytes);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("unreadable cache entry: ") + e.what());
    }
    if (!entry.contains("form"))
        throw std::invalid_argument("cache entry has no form record");
    FormRecord rec = parse_form_record(entry["form"]);
    return ComputedForm{rec.spec, rec.form, structural_report(rec.spec.family, rec.form)};
}

ComputedForm compute_form_cached(FamilySpec spec, const FormCache& cache)
{
    if (auto bytes = cache.load(spec)) {
        ComputedForm hit = parse_cache_entry(*bytes);
        if (hit.spec == spec)
            return hit;
    }
    ComputedForm fresh = compute_form(spec);
    cache.store(spec, cache_entry_bytes(fresh));
    return fresh;
}

}  // namespace zetaforge
