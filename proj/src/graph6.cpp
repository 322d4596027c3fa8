#include "copwin/graph6.hpp"

#include <stdexcept>

namespace copwin {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph graph6_decode(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    for (char c : text)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");

    int n = text[0] - 63;
    if (n == 63) throw std::invalid_argument("graph6: n > 62 unsupported");
    if (n < 1) throw std::invalid_argument("graph6: order must be positive");

    int bits = n * (n - 1) / 2;
    std::size_t need = 1 + (bits + 5) / 6;
    if (text.size() != need) throw std::invalid_argument("graph6: wrong payload length");

    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 unsupported");

    std::string out(1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6), 63);
    out[0] = static_cast<char>(n + 63);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

} // namespace copwin
