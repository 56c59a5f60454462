#include "tourpack/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tourpack/errors.hpp"

namespace tourpack {

namespace {

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

// Splits on '\n'; the final line must be terminated.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            throw ParseError(number, text.size() - start + 1, "missing trailing newline");
        }
        lines.push_back({text.substr(start, end - start), number++});
        start = end + 1;
    }
    return lines;
}

// Canonical non-negative decimal: digits only, no leading zero unless "0".
bool parse_count(std::string_view s, long long& out) {
    if (s.empty() || s.size() > 12) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<long long> parse_id_line(const Line& line) {
    std::vector<long long> ids;
    std::size_t pos = 0;
    while (pos <= line.text.size()) {
        const std::size_t end = std::min(line.text.find(' ', pos), line.text.size());
        long long value = 0;
        if (!parse_count(line.text.substr(pos, end - pos), value)) {
            throw ParseError(line.number, pos + 1, "expected a vertex id");
        }
        ids.push_back(value);
        pos = end + 1;
    }
    return ids;
}

}  // namespace

Tournament parse_tournament(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 0, "empty input");

    constexpr std::string_view kHeader = "tournament ";
    const std::string_view header = lines[0].text;
    if (header.substr(0, kHeader.size()) != kHeader) {
        throw ParseError(1, 1, "header must read 'tournament <n>'");
    }
    long long n = 0;
    if (!parse_count(header.substr(kHeader.size()), n) || n > 1'000'000) {
        throw ParseError(1, kHeader.size() + 1, "invalid vertex count");
    }
    const std::size_t rows = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
    if (lines.size() < rows + 1) {
        throw ParseError(lines.size() + 1, 0, "missing row " + std::to_string(lines.size()));
    }
    if (lines.size() > rows + 1) throw ParseError(rows + 2, 0, "unexpected line after last row");

    Tournament t(static_cast<int>(n));
    for (std::size_t r = 1; r <= rows; ++r) {
        const Line& line = lines[r];
        const std::size_t expected = static_cast<std::size_t>(n) - r;
        for (std::size_t c = 0; c < line.text.size() && c < expected; ++c) {
            const char ch = line.text[c];
            if (ch != '0' && ch != '1') {
                throw ParseError(line.number, c + 1,
                                 "row " + std::to_string(r) + ": expected '0' or '1'");
            }
        }
        if (line.text.size() != expected) {
            throw ParseError(line.number, std::min(line.text.size(), expected) + 1,
                             "row " + std::to_string(r) + " must have " + std::to_string(expected) +
                                 " characters");
        }
        const auto source = static_cast<Vertex>(r - 1);
        for (std::size_t c = 0; c < expected; ++c) {
            if (line.text[c] == '0') t.orient(source + static_cast<Vertex>(c) + 1, source);
        }
    }
    return t;
}

std::string serialize_tournament(const Tournament& t) {
    std::string out = "tournament " + std::to_string(t.size()) + "\n";
    for (Vertex i = 0; i + 1 < t.size(); ++i) {
        for (Vertex j = i + 1; j < t.size(); ++j) out.push_back(t.has_arc(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string serialize_packing(const CyclePacking& p) {
    std::string out;
    for (const Cycle& c : p.cycles) {
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(c.vertices[i]);
        }
        out.push_back('\n');
    }
    return out;
}

CyclePacking parse_packing(std::string_view text) {
    CyclePacking p;
    for (const Line& line : split_lines(text)) {
        Cycle c;
        for (long long id : parse_id_line(line)) c.vertices.push_back(static_cast<Vertex>(id));
        p.cycles.push_back(std::move(c));
    }
    return p;
}

std::string serialize_arcs(const std::vector<Arc>& arcs) {
    std::string out;
    for (const Arc& a : arcs) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

std::vector<Arc> parse_arcs(std::string_view text) {
    std::vector<Arc> arcs;
    for (const Line& line : split_lines(text)) {
        const auto ids = parse_id_line(line);
        if (ids.size() != 2) throw ParseError(line.number, 0, "expected 'u v'");
        arcs.push_back({static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1])});
    }
    return arcs;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace tourpack
