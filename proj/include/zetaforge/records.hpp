#pragma once

#include "zetaforge/reducer.hpp"
#include "zetaforge/zeta_form.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace zetaforge {

using json = nlohmann::json;

/// Machine-readable ZetaForm: family, n, rational, zeta {a: rational}, finite.
/// Non-finite forms also carry divergent_harmonic and divergent_poly
/// (coefficient strings, constant term first).
json form_record(FamilySpec spec, const ZetaForm& form);

struct FormRecord {
    FamilySpec spec;
    ZetaForm form;
};

/// Inverse of form_record. Throws std::invalid_argument on malformed input.
FormRecord parse_form_record(const json& record);

/// Stable textual form used for files and digests.
std::string canonical_dump(const json& j);

std::string sha256_hex(std::string_view bytes);

std::string tool_version();

/// Provenance block embedded in every emitted result.
struct RunManifest {
    std::string command;
    json parameters = json::object();
    json seeds = json::object();
    json precision = json::object();
    std::optional<std::string> timestamp;  ///< omitted from cache entries
    std::string result_digest;

    json to_json() const;
};

/// UTC ISO-8601 now, or SOURCE_DATE_EPOCH when set.
std::string current_timestamp();

/// Directory of computed forms keyed by (family, n).
///
/// Entries hold the form record, its structural report and a manifest with
/// no timestamp, so recomputation reproduces a hit byte for byte. Writes go
/// to a temporary file that is then renamed into place.
class FormCache {
public:
    explicit FormCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(FamilySpec spec) const;
    std::optional<std::string> load(FamilySpec spec) const;
    void store(FamilySpec spec, const std::string& bytes) const;

private:
    std::filesystem::path dir_;
};

/// Flag value if nonempty, else $ZETAFORGE_CACHE, else ./zetaforge-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

std::string cache_entry_bytes(const ComputedForm& computed);
ComputedForm parse_cache_entry(const std::string& bytes);

/// Cache hit if present, otherwise computes and stores.
ComputedForm compute_form_cached(FamilySpec spec, const FormCache& cache);

}  // namespace zetaforge
