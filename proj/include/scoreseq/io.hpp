#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "scoreseq/checker.hpp"
#include "scoreseq/slicing.hpp"
#include "scoreseq/types.hpp"

namespace scoreseq {

/// Malformed command-line input. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && is_blank(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_blank(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

inline std::string where(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

/// Parses a nonnegative decimal integer or throws UsageError.
inline Score parse_count(std::string_view token, std::size_t line, std::size_t column) {
    if (!token.empty() && token.front() == '-') {
        throw UsageError(where(line, column) + ": negative value '" + std::string(token) + "'");
    }
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    Score value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec == std::errc::invalid_argument || ptr != last) {
        throw UsageError(where(line, column) + ": not an integer '" + std::string(token) + "'");
    }
    if (ec == std::errc::result_out_of_range) {
        throw UsageError(where(line, column) + ": value out of range '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace detail

/// Whitespace- or comma-separated decimal integers; '#' comments out the
/// rest of the line. Order is preserved.
inline std::vector<Score> parse_scores(std::string_view text) {
    std::vector<Score> out;
    std::size_t line = 1;
    std::size_t pos = 0;
    std::size_t line_start = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '\n') {
            ++line;
            line_start = ++pos;
            continue;
        }
        if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') {
                ++pos;
            }
            continue;
        }
        if (detail::is_blank(c) || c == ',') {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        while (pos < text.size() && !detail::is_blank(text[pos]) && text[pos] != ',' &&
               text[pos] != '#') {
            ++pos;
        }
        out.push_back(detail::parse_count(text.substr(start, pos - start), line,
                                          start - line_start + 1));
    }
    if (out.empty()) {
        throw UsageError("no scores in input");
    }
    return out;
}

/// A score vector sorted for the library, plus the way back.
struct SortedScores {
    ScoreSequence sequence;
    /// order[i] = original position of the i-th smallest score.
    std::vector<std::size_t> order;
};

inline SortedScores sort_scores(const std::vector<Score>& scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return scores[l] < scores[r]; });
    std::vector<Score> sorted;
    sorted.reserve(scores.size());
    for (const auto idx : order) {
        sorted.push_back(scores[idx]);
    }
    return {ScoreSequence(std::move(sorted)), std::move(order)};
}

/// Relabels a table built for sorted players back to the original order.
inline PointTable restore_order(const PointTable& sorted_table,
                                const std::vector<std::size_t>& order) {
    PointTable out(sorted_table.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < order.size(); ++j) {
            out(order[i], order[j]) = sorted_table(i, j);
        }
    }
    return out;
}

/// n lines of n comma-separated fields. The diagonal may be written as
/// "0", "-" or an em dash; blank lines and '#' comments are skipped.
inline PointTable parse_point_table(std::string_view text) {
    std::vector<std::vector<Score>> rows;
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line;
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        if (detail::trim(raw).empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        std::vector<Score> row;
        std::size_t field_start = 0;
        while (true) {
            auto comma = raw.find(',', field_start);
            const bool last = comma == std::string_view::npos;
            if (last) {
                comma = raw.size();
            }
            const auto field = detail::trim(raw.substr(field_start, comma - field_start));
            const std::size_t column = field_start + 1;
            const std::size_t col_index = row.size();
            const std::size_t row_index = rows.size();
            if (field == "-" || field == "\xE2\x80\x94") {
                if (col_index != row_index) {
                    throw UsageError(detail::where(line, column) +
                                     ": '-' is only allowed on the diagonal");
                }
                row.push_back(0);
            } else {
                const Score v = detail::parse_count(field, line, column);
                if (col_index == row_index && v != 0) {
                    throw UsageError(detail::where(line, column) + ": nonzero diagonal entry");
                }
                row.push_back(v);
            }
            if (last) {
                break;
            }
            field_start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw UsageError("line " + std::to_string(line) + ": ragged row (" +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()) + ")");
        }
        rows.push_back(std::move(row));
        if (end == text.size()) {
            break;
        }
    }
    if (rows.empty()) {
        throw UsageError("empty point table");
    }
    if (rows.size() != rows.front().size()) {
        throw UsageError("point table is not square (" + std::to_string(rows.size()) + " rows, " +
                         std::to_string(rows.front().size()) + " columns)");
    }
    PointTable table(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            table(i, j) = rows[i][j];
        }
    }
    return table;
}

inline std::string format_table(const PointTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += std::to_string(table(i, j));
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json out;
    out["verdict"] = std::string(to_string(report.verdict));
    out["index"] = report.failing_index ? nlohmann::json(*report.failing_index) : nlohmann::json();
    out["B"] = report.tables.binomials;
    out["S"] = report.tables.prefix_sums;
    out["L"] = report.tables.losses;
    return out;
}

inline CheckReport report_from_json(const nlohmann::json& j) {
    CheckReport report;
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict == "accepted") {
        report.verdict = Verdict::accepted;
    } else if (verdict == "score_too_small") {
        report.verdict = Verdict::score_too_small;
    } else if (verdict == "score_too_large") {
        report.verdict = Verdict::score_too_large;
    } else {
        throw UsageError("unknown verdict '" + verdict + "'");
    }
    if (!j.at("index").is_null()) {
        report.failing_index = j.at("index").get<std::size_t>();
    }
    report.tables.binomials = j.at("B").get<std::vector<Score>>();
    report.tables.prefix_sums = j.at("S").get<std::vector<Score>>();
    report.tables.losses = j.at("L").get<std::vector<Score>>();
    return report;
}

/// One row per slicing step: k, x, A_pool, M, f, d, m, y.
inline std::string format_steps_tsv(const ReconstructionTrace& trace) {
    std::ostringstream out;
    out << "k\tx\tA_pool\tM\tf\td\tm\ty\n";
    for (const auto& s : trace.steps) {
        out << s.k << '\t' << s.x << '\t' << s.a_pool << '\t' << s.missing << '\t' << s.f << '\t'
            << s.d << '\t' << s.m << '\t' << s.y << '\n';
    }
    return out.str();
}

/// Players as rows, one column per round (p_n, p_{n-1}, ...); "-" once a
/// player has been sliced off.
inline std::string format_rounds_tsv(const ReconstructionTrace& trace) {
    std::ostringstream out;
    const std::size_t n = trace.rounds.empty() ? 0 : trace.rounds.front().size();
    out << "player";
    for (const auto& round : trace.rounds) {
        out << "\tp" << round.size();
    }
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out << (i + 1);
        for (const auto& round : trace.rounds) {
            out << '\t';
            if (i < round.size()) {
                out << round[i];
            } else {
                out << '-';
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace scoreseq
