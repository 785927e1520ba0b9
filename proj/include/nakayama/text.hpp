#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& reason)
        : std::runtime_error("parse error: " + reason) {}
};

namespace detail {

inline int parse_int(const std::string& token) {
    std::size_t pos = 0;
    int value;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + token + "'");
    }
    if (pos != token.size())
        throw ParseError("trailing characters in '" + token + "'");
    return value;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    return parts;
}

} // namespace detail

/// "3,5,4,5,4" -> Kupisch series
inline std::vector<int> parse_kupisch(const std::string& text) {
    std::vector<int> series;
    for (const std::string& tok : detail::split(text, ','))
        series.push_back(detail::parse_int(tok));
    if (series.empty())
        throw ParseError("empty Kupisch series");
    return series;
}

/// "1:3;3:4" -> list of (start, arrow_count)
inline std::vector<std::pair<int, int>> parse_relations(const std::string& text) {
    std::vector<std::pair<int, int>> rels;
    for (const std::string& tok : detail::split(text, ';')) {
        auto parts = detail::split(tok, ':');
        if (parts.size() != 2)
            throw ParseError("relation must be start:arrows, got '" + tok + "'");
        rels.emplace_back(detail::parse_int(parts[0]), detail::parse_int(parts[1]));
    }
    if (rels.empty())
        throw ParseError("empty relation list");
    return rels;
}

/// "4:3" -> (top, length)
inline std::pair<int, int> parse_module_spec(const std::string& text) {
    auto parts = detail::split(text, ':');
    if (parts.size() != 2)
        throw ParseError("module must be top:length, got '" + text + "'");
    return {detail::parse_int(parts[0]), detail::parse_int(parts[1])};
}

inline std::string kupisch_str(const Algebra& a) {
    std::string out;
    for (int i = 0; i < a.n_vertices(); ++i)
        out += (i ? "," : "") + std::to_string(a.kupisch()[i]);
    return out;
}

} // namespace nakayama
