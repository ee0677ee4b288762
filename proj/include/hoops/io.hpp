#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"

namespace hoops {

// ============================================================================
// Algebra file format
// ============================================================================
//
// UTF-8 text, '#' starts a comment that runs to end of line.
//
//   alg v1
//   size m
//   top i
//   bottom j          (optional)
//   prod
//   <m rows of m space-separated indices>
//   to
//   ...
//   sto
//   ...
//   meet              (optional; cross-checked against the derived table)
//   join              (optional; cross-checked against the derived table)
//
// save(load(d)) reproduces the tables and declared constants byte for byte.

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string s = "fnv1a:";
    for (int i = 15; i >= 0; --i) s += digits[(h >> (4 * i)) & 0xF];
    return s;
}

namespace detail {

inline std::vector<std::string> tokenize_algebra_doc(const std::string& doc) {
    std::vector<std::string> toks;
    std::istringstream lines(doc);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ws(line);
        std::string tok;
        while (ws >> tok) toks.push_back(tok);
    }
    return toks;
}

inline int parse_index(const std::string& tok, int m, const char* what) {
    for (char c : tok)
        if (c < '0' || c > '9') fail(errc::parse_error, std::string("bad ") + what + " '" + tok + "'");
    long v = std::strtol(tok.c_str(), nullptr, 10);
    if (v < 0 || (m > 0 && v >= m)) fail(errc::parse_error, std::string(what) + " out of range: " + tok);
    return static_cast<int>(v);
}

} // namespace detail

/// Parses an algebra document. When `expected` is given, profile-level
/// structural demands are enforced up front (a bounded profile requires a
/// declared bottom).
inline FiniteAlgebra load_algebra(const std::string& doc,
                                  std::optional<Profile> expected = std::nullopt) {
    auto toks = detail::tokenize_algebra_doc(doc);
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= toks.size()) fail(errc::parse_error, "unexpected end of document");
        return toks[pos++];
    };

    if (toks.size() < 2 || toks[0] != "alg" || toks[1] != "v1")
        fail(errc::parse_error, "missing 'alg v1' header");
    pos = 2;

    int m = 0, top = -1;
    std::optional<int> bottom;
    std::vector<int> prod, to, sto, meet_decl, join_decl;
    bool have_prod = false, have_to = false, have_sto = false;
    bool have_meet = false, have_join = false;

    auto read_table = [&](std::vector<int>& tbl, const char* name) {
        if (m <= 0) fail(errc::parse_error, std::string("'size' must precede '") + name + "'");
        tbl.reserve(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m * m; ++i) tbl.push_back(detail::parse_index(next(), m, name));
    };

    while (pos < toks.size()) {
        const std::string key = next();
        if (key == "size") {
            m = detail::parse_index(next(), 0, "size");
            if (m <= 0) fail(errc::parse_error, "size must be positive");
        } else if (key == "top") {
            top = detail::parse_index(next(), m, "top");
        } else if (key == "bottom") {
            bottom = detail::parse_index(next(), m, "bottom");
        } else if (key == "prod") {
            read_table(prod, "prod");
            have_prod = true;
        } else if (key == "to") {
            read_table(to, "to");
            have_to = true;
        } else if (key == "sto") {
            read_table(sto, "sto");
            have_sto = true;
        } else if (key == "meet") {
            read_table(meet_decl, "meet");
            have_meet = true;
        } else if (key == "join") {
            read_table(join_decl, "join");
            have_join = true;
        } else {
            fail(errc::parse_error, "unknown directive '" + key + "'");
        }
    }

    if (m <= 0) fail(errc::parse_error, "missing 'size'");
    if (top < 0) fail(errc::parse_error, "missing 'top'");
    if (!have_prod || !have_to || !have_sto)
        fail(errc::parse_error, "missing prod/to/sto block");
    if (expected && profile_requires_bounded(*expected) && !bottom)
        fail(errc::profile_mismatch,
             std::string(profile_name(*expected)) + " profile requires a declared bottom");

    FiniteAlgebra a = FiniteAlgebra::from_tables(m, std::move(prod), std::move(to),
                                                 std::move(sto), top, bottom);

    // Declared meet/join blocks are optional but must agree with the derived
    // order when present.
    if (have_meet)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (meet_decl[static_cast<std::size_t>(x) * m + y] != a.meet(x, y))
                    fail(errc::table_mismatch, "declared meet disagrees with derived meet at (" +
                                                   std::to_string(x) + "," + std::to_string(y) + ")");
    if (have_join)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (join_decl[static_cast<std::size_t>(x) * m + y] != a.join(x, y))
                    fail(errc::table_mismatch, "declared join disagrees with derived join at (" +
                                                   std::to_string(x) + "," + std::to_string(y) + ")");
    return a;
}

/// Serializes `a` in the file format; `comments` become leading '#' lines.
inline std::string save_algebra(const FiniteAlgebra& a,
                                const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    os << "alg v1\n";
    os << "size " << a.size() << "\n";
    os << "top " << a.top() << "\n";
    if (a.bounded()) os << "bottom " << a.bottom() << "\n";
    auto table = [&](const char* name, auto&& get) {
        os << name << "\n";
        for (int x = 0; x < a.size(); ++x) {
            for (int y = 0; y < a.size(); ++y) {
                if (y) os << ' ';
                os << get(x, y);
            }
            os << "\n";
        }
    };
    table("prod", [&](int x, int y) { return a.prod(x, y); });
    table("to", [&](int x, int y) { return a.to(x, y); });
    table("sto", [&](int x, int y) { return a.sto(x, y); });
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write '" + path + "'");
    out << content;
    if (!out) fail(errc::io_error, "write failed for '" + path + "'");
}

inline FiniteAlgebra load_algebra_file(const std::string& path,
                                       std::optional<Profile> expected = std::nullopt) {
    return load_algebra(read_file(path), expected);
}

} // namespace hoops
