#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace shakekit::detail {

/// Fixed 6-decimal formatting with a '.' separator regardless of the host
/// process locale. All serialized numbers go through here so that writers
/// are byte-deterministic.
inline std::string format_fixed6(double value) {
    char buf[352]; // enough for any finite double under %.6f
    const int n = std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string out(buf, static_cast<std::size_t>(n));
    if (char& sep = out[out.size() - 7]; sep != '.') sep = '.';
    return out;
}

/// Parse an entire field as a finite double. Rejects leading whitespace,
/// partial consumption, and non-finite values ("nan", "inf", overflow).
inline std::optional<double> parse_finite_double(std::string_view field) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        return std::nullopt;
    return value;
}

/// Parse an entire field as a non-negative integer count.
inline std::optional<std::size_t> parse_count(std::string_view field) {
    std::size_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

/// Call `fn(line, number)` for each '\n'-separated line with its 1-based
/// number. A trailing newline does not produce an extra empty line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        fn(text.substr(pos, nl - pos), ++line_no);
        pos = nl + 1;
    }
}

/// Split one line on commas, preserving empty fields.
inline void split_fields(std::string_view line, std::string_view* out,
                         std::size_t max_fields, std::size_t& count) {
    count = 0;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) comma = line.size();
        if (count < max_fields) out[count] = line.substr(pos, comma - pos);
        ++count;
        if (comma == line.size()) break;
        pos = comma + 1;
    }
}

} // namespace shakekit::detail
