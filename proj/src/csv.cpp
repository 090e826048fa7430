#include "renyi/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <vector>

namespace renyi {

namespace {

// One CSV record, honoring quotes and "" escapes; returns false on EOF with
// no data.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    int ch;
    while ((ch = in.get()) != EOF) {
        any = true;
        const char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (!any) return false;
    fields.push_back(std::move(field));
    return true;
}

double parse_cell(const std::string& text, std::size_t row, std::size_t col) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    // trailing spaces are tolerated, anything else is not numeric
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        fail(errc::parse_error, "row " + std::to_string(row) + ", column " + std::to_string(col) +
                                    ": '" + text + "' is not numeric");
    return value;
}

} // namespace

Dataset load_csv(const std::string& path, const std::optional<std::string>& label_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");

    std::vector<std::string> header;
    if (!read_record(in, header) || header.empty())
        fail(errc::parse_error, "'" + path + "': missing header row");

    int label_idx = -1;
    if (label_column) {
        for (std::size_t j = 0; j < header.size(); ++j)
            if (header[j] == *label_column) label_idx = static_cast<int>(j);
        if (label_idx < 0)
            fail(errc::parse_error, "'" + path + "': no column named '" + *label_column + "'");
    }

    Dataset data;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (static_cast<int>(j) != label_idx) data.names.push_back(header[j]);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> fields;
    std::size_t row_no = 1; // header was row 1
    while (read_record(in, fields)) {
        ++row_no;
        if (fields.size() == 1 && fields[0].empty()) continue; // blank line
        if (fields.size() != header.size())
            fail(errc::parse_error, "row " + std::to_string(row_no) + ": expected " +
                                        std::to_string(header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(header.size());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (static_cast<int>(j) == label_idx) {
                data.labels.push_back(fields[j]);
            } else {
                row.push_back(parse_cell(fields[j], row_no, j + 1));
            }
        }
        rows.push_back(std::move(row));
    }

    if (rows.size() < 2)
        fail(errc::parse_error,
             "'" + path + "': need at least 2 data rows, got " + std::to_string(rows.size()));

    data.features.resize(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            data.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return data;
}

} // namespace renyi
