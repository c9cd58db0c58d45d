#include "rocaware/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "rocaware/error.hpp"

namespace rocaware {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct Row {
    std::size_t line;
    std::vector<std::string_view> cells;
};

// Splits into non-blank lines of comma-separated, trimmed cells.
std::vector<Row> split_csv(std::string_view text) {
    std::vector<Row> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        Row r{line_no, {}};
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            r.cells.push_back(trim(line.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
    throw Error(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

std::optional<double> parse_number(std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<std::size_t> find_column(const Row& header, std::string_view name) {
    for (std::size_t j = 0; j < header.cells.size(); ++j)
        if (lower(header.cells[j]) == name) return j;
    return std::nullopt;
}

bool parse_label(std::string_view cell, std::string_view source, std::size_t line) {
    if (cell == "0") return false;
    if (cell == "1") return true;
    fail(source, line, "label must be 0 or 1, got '" + std::string(cell) + "'");
}

} // namespace

ScoredDataset parse_score_csv(std::string_view text, std::string_view source) {
    auto rows = split_csv(text);
    if (rows.empty()) throw Error(std::string(source) + ": empty file");
    const Row& header = rows.front();
    auto score_col = find_column(header, "score");
    auto label_col = find_column(header, "label");
    auto id_col = find_column(header, "id");
    if (!score_col || !label_col)
        fail(source, header.line, "header must name 'score' and 'label' columns");
    if (rows.size() == 1) throw Error(std::string(source) + ": empty dataset");

    std::vector<double> scores;
    std::vector<std::uint8_t> labels;
    std::vector<std::string> ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const Row& row = rows[r];
        if (row.cells.size() != header.cells.size())
            fail(source, row.line,
                 "expected " + std::to_string(header.cells.size()) + " fields, got " +
                     std::to_string(row.cells.size()));
        auto s = parse_number(row.cells[*score_col]);
        if (!s) fail(source, row.line, "malformed score '" + std::string(row.cells[*score_col]) + "'");
        if (!(*s >= 0.0 && *s <= 1.0)) fail(source, row.line, "score out of range [0,1]");
        scores.push_back(*s);
        labels.push_back(parse_label(row.cells[*label_col], source, row.line) ? 1 : 0);
        if (id_col) ids.emplace_back(row.cells[*id_col]);
    }
    return ScoredDataset(std::move(scores), std::move(labels), std::move(ids));
}

ScoredDataset read_score_csv(const std::filesystem::path& path) {
    return parse_score_csv(read_text_file(path), path.string());
}

FeatureDataset parse_feature_csv(std::string_view text, std::string_view source,
                                 const std::string& label_column) {
    auto rows = split_csv(text);
    if (rows.empty()) throw Error(std::string(source) + ": empty file");
    const Row& header = rows.front();
    auto label_col = find_column(header, lower(label_column));
    if (!label_col) fail(source, header.line, "header has no '" + label_column + "' column");
    auto id_col = find_column(header, "id");
    if (rows.size() == 1) throw Error(std::string(source) + ": empty dataset");

    std::vector<std::size_t> feature_cols;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < header.cells.size(); ++j) {
        if (j == *label_col || (id_col && j == *id_col)) continue;
        if (header.cells[j].empty()) fail(source, header.line, "empty column name");
        feature_cols.push_back(j);
        names.emplace_back(header.cells[j]);
    }

    std::vector<std::vector<double>> columns(feature_cols.size());
    std::vector<std::uint8_t> labels;
    std::vector<std::string> ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const Row& row = rows[r];
        if (row.cells.size() != header.cells.size())
            fail(source, row.line,
                 "expected " + std::to_string(header.cells.size()) + " fields, got " +
                     std::to_string(row.cells.size()));
        for (std::size_t k = 0; k < feature_cols.size(); ++k) {
            auto cell = row.cells[feature_cols[k]];
            if (cell.empty()) fail(source, row.line, "missing value in column '" + names[k] + "'");
            auto v = parse_number(cell);
            if (!v || !std::isfinite(*v))
                fail(source, row.line,
                     "malformed value '" + std::string(cell) + "' in column '" + names[k] + "'");
            columns[k].push_back(*v);
        }
        labels.push_back(parse_label(row.cells[*label_col], source, row.line) ? 1 : 0);
        if (id_col) ids.emplace_back(row.cells[*id_col]);
    }
    return FeatureDataset(std::move(names), std::move(columns), std::move(labels), std::move(ids));
}

FeatureDataset read_feature_csv(const std::filesystem::path& path, const std::string& label_column) {
    return parse_feature_csv(read_text_file(path), path.string(), label_column);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_score_csv(std::ostream& out, const ScoredDataset& ds) {
    const bool with_ids = !ds.ids().empty();
    out << (with_ids ? "id,score,label\n" : "score,label\n");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (with_ids) out << ds.ids()[i] << ',';
        out << format_double(ds.score(i)) << ',' << (ds.positive(i) ? 1 : 0) << '\n';
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
}

} // namespace rocaware
