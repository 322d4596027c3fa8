// Small helper: reads "n" then "u v" edge pairs from stdin (whitespace
// separated, # comments allowed) and prints the graph6 string.
#include <iostream>
#include <sstream>
#include <string>

#include "copwin/graph6.hpp"

int main() {
    std::string all, line;
    while (std::getline(std::cin, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        all += line + ' ';
    }
    std::istringstream in(all);
    int n;
    if (!(in >> n)) {
        std::cerr << "expected: n, then edge pairs\n";
        return 1;
    }
    try {
        copwin::Graph g(n);
        int u, v;
        while (in >> u >> v) g.add_edge(u, v);
        std::cout << copwin::graph6_encode(g) << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
