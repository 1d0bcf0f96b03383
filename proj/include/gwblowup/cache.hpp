#pragma once

// Line-oriented persistence of a MemoStore:
//
//   gwblowup-cache v1
//   {"d":3,"alpha":[],"N":"12"}
//   {"d":4,"alpha":[2,2],"N":"12"}
//
// Records are sorted by (d, alpha); values are decimal strings.

#include "gwblowup/lattice.hpp"
#include "gwblowup/memo_store.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gwb {

inline constexpr std::string_view kCacheHeader = "gwblowup-cache v1";

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::size_t save(const MemoStore& store, std::ostream& out) {
    out << kCacheHeader << '\n';
    const auto entries = store.snapshot();
    for (const auto& [key, value] : entries) {
        nlohmann::ordered_json rec;
        rec["d"] = key.d;
        rec["alpha"] = key.alpha;
        rec["N"] = to_decimal(value);
        out << rec.dump() << '\n';
    }
    return entries.size();
}

inline std::size_t save(const MemoStore& store, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache for writing: " + path.string());
    const std::size_t n = save(store, out);
    out.flush();
    if (!out) throw CacheError("write failed: " + path.string());
    return n;
}

namespace detail {
inline std::pair<CanonKey, BigCount> parse_record(const std::string& line, std::size_t lineno) {
    auto fail = [&](const std::string& why) -> CacheError {
        return CacheError("malformed cache record at line " + std::to_string(lineno) + ": " + why);
    };
    nlohmann::json rec;
    try {
        rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw fail("not a JSON object");
    }
    if (!rec.is_object() || rec.size() != 3 || !rec.contains("d") || !rec.contains("alpha") ||
        !rec.contains("N"))
        throw fail("expected exactly the keys d, alpha, N");
    if (!rec["d"].is_number_integer()) throw fail("d is not an integer");
    if (!rec["alpha"].is_array()) throw fail("alpha is not an array");
    if (!rec["N"].is_string()) throw fail("N is not a string");

    CanonKey key;
    key.d = rec["d"].get<int>();
    for (const auto& a : rec["alpha"]) {
        if (!a.is_number_integer()) throw fail("alpha entry is not an integer");
        key.alpha.push_back(a.get<int>());
    }
    CanonResult canon = key.d > 0 && expected_dim(key.to_class()) >= 0
                            ? canonicalize(key.to_class())
                            : CanonResult{BigCount(0)};
    if (!std::holds_alternative<CanonKey>(canon) || std::get<CanonKey>(canon) != key)
        throw fail("class is not a canonical key");

    const auto text = rec["N"].get<std::string>();
    auto value = parse_decimal(text);
    if (!value || text.front() == '-') throw fail("N is not a non-negative decimal");
    return {std::move(key), std::move(*value)};
}
}  // namespace detail

inline MemoStore load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw CacheError("unsupported cache version: empty input");
    if (line != kCacheHeader) throw CacheError("unsupported cache version: '" + line + "'");
    MemoStore store;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto [key, value] = detail::parse_record(line, lineno);
        store.assign(key, std::move(value));
    }
    return store;
}

inline MemoStore load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache for reading: " + path.string());
    return load(in);
}

}  // namespace gwb
