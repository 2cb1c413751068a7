// Regenerates the committed graph6 corpora: every connected graph on n
// vertices up to isomorphism, one file per order, one graph per line.
//
// usage: gen_corpus <output-dir> [max-n]

#include <cstdio>
#include <fstream>
#include <string>

#include "midroman/enumerate.hpp"
#include "midroman/graph6.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <output-dir> [max-n]\n", argv[0]);
        return 2;
    }
    std::string dir = argv[1];
    int max_n = argc > 2 ? std::atoi(argv[2]) : 7;
    for (int n = 1; n <= max_n; ++n) {
        auto graphs = midroman::connected_graphs_upto_iso(n);
        std::string path = dir + "/connected_n" + std::to_string(n) + ".g6";
        std::ofstream out(path);
        if (!out) {
            std::fprintf(stderr, "cannot open %s\n", path.c_str());
            return 1;
        }
        for (const auto& g : graphs) out << midroman::encode_graph6(g) << "\n";
        std::printf("%s: %zu graphs\n", path.c_str(), graphs.size());
    }
    return 0;
}
