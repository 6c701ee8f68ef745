#pragma once

#include <dismantle/graph.hpp>

#include <string>
#include <vector>

namespace dismantle {

// A named family plus integer parameters, e.g. "cubion:3" or "kneser:5,2".
struct FamilySpec {
    std::string family;
    std::vector<int> params;

    static FamilySpec parse(const std::string & text);
    std::string to_string() const;
};

// Families: complete n, cycle n, path n, octahedron n, cubion n, parasol,
// parasol_plus, dunce_hat, bings_house, kneser n k, wheel m,
// hypercube_clique n, plus circulant n d1 d2 ... and hypercube n (the n-cube).
Graph generate(const FamilySpec & spec);
std::vector<std::string> family_names();

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
// complement of n disjoint edges; vertex 2i and 2i+1 are the missing pairs
Graph octahedron(int n);
// 2^n-clique on tuples "x<bits>" then apexes "alpha_<i>_<e>" (i from 1)
Graph cubion(int n);
Graph hypercube_clique(int n);
// cubion built from hypercube_clique(n) by attaching the 2n apexes
Graph attach_cubion_apexes(const Graph & clique, int n);
Graph parasol();
Graph parasol_plus();
Graph dunce_hat();
Graph bings_house();
Graph kneser(int n, int k);
// m-cycle 0..m-1 plus hub m
Graph wheel(int m);
Graph circulant(int n, const std::vector<int> & distances);
Graph hypercube(int n);

// Directory holding the bundled graph and certificate files.
// DISMANTLE_DATA_DIR overrides the compiled-in location.
std::string data_dir();
std::string data_path(const std::string & file);

} // namespace dismantle
