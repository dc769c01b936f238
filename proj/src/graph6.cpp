#include "bcast/graph.hpp"

namespace bcast {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxLongForm = 258047;

std::string_view trim_line(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim_line(text);
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
    }
    if (text.empty()) {
        throw Graph6Error("graph6: empty input");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) {
            throw Graph6Error("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                              " outside 63..126");
        }
    }

    std::size_t pos = 0;
    auto next = [&]() { return static_cast<int>(static_cast<unsigned char>(text[pos++])) - 63; };
    int n = next();
    if (n == 63) {
        if (text.size() < 4) {
            throw Graph6Error("graph6: truncated size field");
        }
        if (text[1] == '~') {
            throw Graph6Error("graph6: graphs with more than 258047 vertices are not supported");
        }
        n = (next() << 12) | (next() << 6) | next();
    }

    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t groups = (pairs + 5) / 6;
    if (text.size() - pos != groups) {
        throw Graph6Error("graph6: expected " + std::to_string(groups) + " data bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(text.size() - pos));
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    int row = 0;
    int col = 1;
    for (std::size_t gi = 0; gi < groups; ++gi) {
        int value = next();
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = ((value >> b) & 1) != 0;
            if (bit >= pairs) {
                if (set) {
                    throw Graph6Error("graph6: nonzero padding bits");
                }
                continue;
            }
            if (set) {
                edges.emplace_back(row, col);
            }
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxLongForm) {
        throw Graph6Error("graph6: graph too large to encode");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int value = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            value = (value << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    }
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim_line(text.substr(0, nl));
        if (!line.empty()) {
            out.push_back(parse_graph6(line));
        }
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return out;
}

}  // namespace bcast
