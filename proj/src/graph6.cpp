#include "ebu/graph6.hpp"

#include <istream>
#include <stdexcept>

namespace ebu {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

// 6-bit groups are biased by 63 into the printable range 63..126.
bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view bytes) {
    if (bytes.starts_with(kHeader)) bytes.remove_prefix(kHeader.size());
    if (bytes.empty()) throw std::invalid_argument("graph6: empty input");

    size_t pos = 0;
    auto take = [&]() -> unsigned {
        if (pos >= bytes.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(bytes[pos++]);
        if (!printable(c)) throw std::invalid_argument("graph6: non-printable byte");
        return c - 63u;
    };

    long long n = 0;
    unsigned first = take();
    if (first < 63) {
        n = first;
    } else {  // first == 63: long form, 3 or 6 more groups
        unsigned second = take();
        int groups = 3;
        if (second == 63) {
            groups = 6;
            second = take();
        }
        n = second;
        for (int i = 1; i < groups; ++i) n = (n << 6) | take();
    }
    if (n > 100000) throw std::invalid_argument("graph6: order too large");

    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    unsigned current = 0;
    int avail = 0;
    for (long long col = 1, row = 0, bit = 0; bit < bits; ++bit) {
        if (avail == 0) {
            current = take();
            avail = 6;
        }
        if (current & (1u << (avail - 1))) g.add_edge(static_cast<int>(row), static_cast<int>(col));
        --avail;
        if (++row == col) {
            ++col;
            row = 0;
        }
    }
    if (avail > 0 && (current & ((1u << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != bytes.size()) throw std::invalid_argument("graph6: trailing garbage");
    return g;
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    } else {
        throw std::invalid_argument("graph6: order not representable here");
    }

    unsigned current = 0;
    int used = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            current = (current << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++used == 6) {
                out.push_back(static_cast<char>(current + 63));
                current = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((current << (6 - used)) + 63));
    return out;
}

std::optional<std::string> next_graph6_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.starts_with(kHeader)) line = line.substr(kHeader.size());
        if (!line.empty()) return line;
    }
    return std::nullopt;
}

}  // namespace ebu
