#include "ladder/io.hpp"

#include <charconv>
#include <vector>

namespace ladder {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

int positive_int(std::string_view s, std::string_view whole)
{
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) {
        throw error(errc::parse_error, "bad partition string '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    const auto whole = text;
    text = trim(text);
    if (text == "empty") {
        return Partition{};
    }
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        auto caret = token.find('^');
        int part = positive_int(token.substr(0, caret), whole);
        int times = caret == std::string_view::npos ? 1 : positive_int(token.substr(caret + 1), whole);
        if (times > 100000) {
            throw error(errc::parse_error, "exponent too large in '" + std::string(whole) + "'");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(times), part);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    try {
        return Partition(std::move(parts));
    } catch (const error&) {
        throw error(errc::parse_error, "parts of '" + std::string(whole) + "' are not weakly decreasing");
    }
}

std::string to_string(const Partition& lambda)
{
    if (lambda.empty()) {
        return "empty";
    }
    std::string out;
    for (int p : lambda.parts()) {
        if (!out.empty()) {
            out.push_back(',');
        }
        out += std::to_string(p);
    }
    return out;
}

std::string to_string(BoxPos b)
{
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

} // namespace ladder
