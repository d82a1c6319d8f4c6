#pragma once

#include <cstdint>
#include <vector>

#include "jasso/map.hpp"
#include "jasso/token.hpp"

namespace jasso {

struct EnumStats {
    std::uint64_t candidates = 0;  // complete words handed to the validator
    std::uint64_t nodes = 0;       // search nodes visited
};

// All valid words with exactly `pairs` binomial pairs, in generation order.
// The search only prunes prefixes that rules 1-4 already condemn; monomials
// stay finite because every CU/CH needs a pair in its ramajo and every
// BA/CA sits in a TG/TC fan.
std::vector<Word> enumerate_words(int pairs, EnumStats* stats = nullptr);
// True iff enumerate_words would produce w; walks only w's branch.
bool search_admits(const Word& w);

// Rotation-system maps: darts 0..2E-1, alpha pairs darts into edges, sigma
// turns around vertices.
struct DartMap {
    std::vector<int> alpha, sigma;
    int darts() const { return static_cast<int>(alpha.size()); }
    std::vector<int> face_of() const;  // face index per dart, faces along sigma(alpha(d))
};

DartMap theta_darts();
// Canonical code of the map rooted at dart r.
std::vector<int> rooted_code(const DartMap& m, int r);
RootedMap to_rooted_map(const DartMap& m, int root);

// Every rooted bridgeless cubic planar map with `faces` faces, one per class.
std::vector<RootedMap> generate_maps(int faces);

}  // namespace jasso
