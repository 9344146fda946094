#include "umbra/sequence_io.hpp"

#include <json.hpp>

#include "umbra/errors.hpp"

namespace umbra::seq {

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position locate(std::string_view text, std::size_t offset) {
    Position pos;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

/// Offset of the quoted token `token`, searching forward from `from`.
std::size_t find_token(std::string_view text, const std::string& token, std::size_t from) {
    const std::string quoted = "\"" + token + "\"";
    auto at = text.find(quoted, from);
    if (at == std::string_view::npos) at = text.find(token, from);
    return at == std::string_view::npos ? from : at;
}

}  // namespace

Sequence parse_sequence(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto pos = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("invalid JSON", pos.line, pos.column);
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("expected an object with a \"terms\" array", 1, 1);
    }
    const auto& arr = doc["terms"];
    if (arr.empty()) throw ParseError("\"terms\" must hold at least one rational", 1, 1);
    std::vector<Rational> terms;
    terms.reserve(arr.size());
    std::size_t cursor = text.find("\"terms\"");
    for (const auto& item : arr) {
        std::string token;
        if (item.is_string()) {
            token = item.get<std::string>();
        } else if (item.is_number_integer()) {
            token = item.dump();
        } else {
            const auto pos = locate(text, cursor);
            throw ParseError("terms must be rational strings", pos.line, pos.column);
        }
        const std::size_t at = find_token(text, token, cursor);
        try {
            terms.push_back(parse_rational(token));
        } catch (const ParseError& e) {
            const auto pos = locate(text, at);
            throw ParseError("malformed rational \"" + token + "\"", pos.line, pos.column + e.column());
        }
        cursor = at + token.size();
    }
    return Sequence(std::move(terms));
}

std::string format_sequence(const Sequence& a) {
    nlohmann::json doc;
    doc["terms"] = nlohmann::json::array();
    for (const auto& t : a.terms()) doc["terms"].push_back(to_string(t));
    return doc.dump() + "\n";
}

}  // namespace umbra::seq
