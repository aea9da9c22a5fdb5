#include "graphbounds/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "graphbounds/errors.hpp"

namespace graphbounds {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    // drop trailing blank lines
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t end = line.find(sep, start);
        if (end == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view field, double& value) {
    field = trim(field);
    if (field.empty()) return false;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end;
}

bool parse_int(std::string_view field, int& value) {
    field = trim(field);
    if (field.empty()) return false;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> whitespace_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

CorrelationMatrix parse_correlation_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw MalformedLine("empty correlation file");

    std::size_t first_data_row = 0;
    std::vector<std::string> labels;
    {
        // a header row is one whose fields do not all parse as reals
        const auto fields = split_fields(lines[0], ',');
        bool numeric = true;
        for (const auto& field : fields) {
            double unused;
            if (!parse_double(field, unused)) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            for (const auto& field : fields) labels.emplace_back(trim(field));
            first_data_row = 1;
        }
    }

    const std::size_t rows = lines.size() - first_data_row;
    if (rows == 0) throw MalformedLine("correlation file has no data rows");
    const int n = static_cast<int>(rows);
    if (!labels.empty() && labels.size() != rows) {
        throw NotSquare("header has " + std::to_string(labels.size()) + " labels but " +
                        std::to_string(rows) + " data rows follow");
    }

    CorrelationMatrix c;
    c.n = n;
    c.labels = std::move(labels);
    c.r.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (std::size_t row = 0; row < rows; ++row) {
        const int line_no = static_cast<int>(first_data_row + row) + 1;
        const auto fields = split_fields(lines[first_data_row + row], ',');
        if (fields.size() != rows) {
            throw NotSquare("expected " + std::to_string(rows) + " columns, got " +
                            std::to_string(fields.size()), line_no);
        }
        for (std::size_t col = 0; col < fields.size(); ++col) {
            double value;
            if (!parse_double(fields[col], value)) {
                throw MalformedLine("unparseable entry '" + std::string(trim(fields[col])) + "'",
                                    line_no);
            }
            if (std::isnan(value)) throw OutOfRangeEntry("NaN entry", line_no);
            if (std::fabs(value) > 1.0 + 1e-9) {
                throw OutOfRangeEntry("correlation " + std::to_string(value) +
                                      " outside [-1, 1]", line_no);
            }
            c.r[row * rows + col] = std::clamp(value, -1.0, 1.0);
        }
    }

    for (int i = 0; i < n; ++i) {
        if (std::fabs(c.at(i, i) - 1.0) > 1e-6) {
            throw OutOfRangeEntry("diagonal entry " + std::to_string(c.at(i, i)) +
                                  " must be 1", i + static_cast<int>(first_data_row) + 1);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = c.at(i, j);
            const double b = c.at(j, i);
            if (std::fabs(a - b) > 1e-6) {
                throw AsymmetryTooLarge("entries (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") differ by " +
                                        std::to_string(std::fabs(a - b)));
            }
            // repair rounding noise by averaging
            const double averaged = 0.5 * (a + b);
            c.r[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)] = averaged;
            c.r[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(i)] = averaged;
        }
    }
    return c;
}

Graph binarize(const CorrelationMatrix& c, double threshold, bool inclusive) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < c.n; ++i) {
        for (int j = i + 1; j < c.n; ++j) {
            const double r = c.at(i, j);
            if (inclusive ? r >= threshold : r > threshold) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(c.n, edges);
}

Graph parse_edge_list(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw MalformedLine("empty edge-list file");
    const auto header = whitespace_tokens(lines[0]);
    int n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) ||
        n < 0 || m < 0) {
        throw MalformedLine("expected header 'n m'", 1);
    }
    if (lines.size() != static_cast<std::size_t>(m) + 1) {
        throw MalformedLine("header promises " + std::to_string(m) + " edges but file has " +
                            std::to_string(lines.size() - 1) + " edge lines");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const int line_no = e + 2;
        const auto tokens = whitespace_tokens(lines[static_cast<std::size_t>(e) + 1]);
        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            throw MalformedLine("expected 'u v'", line_no);
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_adjacency_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw MalformedLine("empty adjacency file");
    const int n = static_cast<int>(lines.size());
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
        const int line_no = row + 1;
        const auto fields = split_fields(lines[static_cast<std::size_t>(row)], ',');
        if (fields.size() != static_cast<std::size_t>(n)) {
            throw MalformedLine("expected " + std::to_string(n) + " columns, got " +
                                std::to_string(fields.size()), line_no);
        }
        auto& row_cells = cells[static_cast<std::size_t>(row)];
        row_cells.reserve(static_cast<std::size_t>(n));
        for (const auto& field : fields) {
            int value = 0;
            if (!parse_int(field, value) || (value != 0 && value != 1)) {
                throw NonBinaryEntry("adjacency entry '" + std::string(trim(field)) +
                                     "' is not 0/1", line_no);
            }
            row_cells.push_back(value);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0) {
            throw SelfLoopEntry("nonzero diagonal at row " + std::to_string(i), i + 1);
        }
        for (int j = i + 1; j < n; ++j) {
            const int a = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int b = cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a != b) {
                throw AsymmetricAdjacency("entries (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") and (" + std::to_string(j) +
                                          "," + std::to_string(i) + ") disagree");
            }
            if (a == 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace graphbounds
