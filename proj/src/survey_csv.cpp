#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zerofact/errors.hpp"
#include "zerofact/survey.hpp"

namespace zerofact {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view field, std::string_view column, std::size_t line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError("line " + std::to_string(line) + ": " + std::string(column) + " '" + std::string(field) +
                             "' is not an integer",
                         line);
    }
    return value;
}

/// Calls row(fields, line_number) for each non-blank data line after
/// checking the header.
template <typename RowFn>
void for_each_row(std::string_view text, std::string_view header, std::size_t columns, RowFn row) {
    std::size_t line_no = 0;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (!saw_header) {
            if (line != header) {
                throw ParseError("line " + std::to_string(line_no) + ": expected header '" + std::string(header) + "'",
                                 line_no);
            }
            saw_header = true;
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != columns) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                                 " fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        for (auto& f : fields) f = trim(f);
        row(fields, line_no);
        if (end == text.size()) break;
    }
    if (!saw_header) throw ParseError("missing header '" + std::string(header) + "'", line_no);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

std::vector<StatementTable> parse_tables_csv(std::string_view text) {
    std::vector<StatementTable> tables;
    std::vector<std::array<bool, 5>> seen;
    for_each_row(text, "statement_id,category,count", 3, [&](const auto& fields, std::size_t line) {
        const std::string id(fields[0]);
        if (!is_known_statement(id)) {
            throw ParseError("line " + std::to_string(line) + ": unknown statement_id '" + id + "'", line);
        }
        const auto category = parse_likert_token(fields[1]);
        if (!category) {
            throw ParseError("line " + std::to_string(line) + ": unknown category '" + std::string(fields[1]) + "'",
                             line);
        }
        const int count = parse_int(fields[2], "count", line);
        if (count < 0) throw ParseError("line " + std::to_string(line) + ": count must be non-negative", line);

        auto it = std::find_if(tables.begin(), tables.end(), [&](const StatementTable& t) { return t.statement_id == id; });
        if (it == tables.end()) {
            tables.push_back({id, {}});
            seen.push_back({});
            it = tables.end() - 1;
        }
        const auto table_index = static_cast<std::size_t>(it - tables.begin());
        const auto c = static_cast<std::size_t>(*category);
        if (seen[table_index][c]) {
            throw ParseError("line " + std::to_string(line) + ": duplicate row for statement " + id, line);
        }
        seen[table_index][c] = true;
        it->counts[c] = count;
    });
    return tables;
}

std::vector<StatementTable> read_tables_csv(const std::filesystem::path& path) { return parse_tables_csv(slurp(path)); }

PairedResponses parse_pairs_csv(std::string_view text) {
    PairedResponses data;
    for_each_row(text, "respondent_id,before,after", 3, [&](const auto& fields, std::size_t line) {
        if (fields[0].empty()) throw ParseError("line " + std::to_string(line) + ": empty respondent_id", line);
        const int before = parse_int(fields[1], "before", line);
        const int after = parse_int(fields[2], "after", line);
        if (before < 1 || before > 5 || after < 1 || after > 5) {
            throw ParseError("line " + std::to_string(line) + ": likert codes must lie in 1..5", line);
        }
        data.pairs.emplace_back(before, after);
    });
    return data;
}

PairedResponses read_pairs_csv(const std::filesystem::path& path) { return parse_pairs_csv(slurp(path)); }

}  // namespace zerofact
