#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jasso {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Faces are dense indices; names are kept for I/O.
// bordure[f] is B(f): the neighbours of f read from its anchor, without the
// repeated first term.
struct RootedMap {
    std::vector<std::string> names;
    std::vector<std::vector<int>> bordure;
    int root_neg = -1;
    int root_pos = -1;

    int face_count() const { return static_cast<int>(names.size()); }
    int find(const std::string& name) const;  // -1 when absent
    int at(const std::string& name) const;    // throws InputError
    std::vector<int> extended(int f) const;
};

struct MapCounts {
    int faces = 0;
    int edges = 0;
    int vertices = 0;
    int sum = 0;  // sum of bordure lengths
};

struct Violation {
    std::string rule;
    std::string detail;
};

struct MapReport {
    std::vector<Violation> violations;
    MapCounts counts;
    bool ok() const { return violations.empty(); }
};

RootedMap parse_map(const std::string& text);
std::string format_map(const RootedMap& m);

MapReport validate_map(const RootedMap& m);
MapCounts count_map(const RootedMap& m);

std::vector<std::string> extended_bordure(const RootedMap& m, const std::string& face);

// Backtracking search for a root-preserving face bijection.
bool are_equivalent(const RootedMap& a, const RootedMap& b);

// Faces sharing at least one edge.
std::vector<std::vector<int>> adjacency(const RootedMap& m);

// Renames faces (perm[old] = new index) and rotates every non-root bordure
// by rot[f] steps. Used to build equivalent variants.
RootedMap relabel(const RootedMap& m, const std::vector<int>& perm,
                  const std::vector<std::string>& new_names,
                  const std::vector<int>& rot);

}  // namespace jasso
