#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jasso/map.hpp"
#include "jasso/sequences.hpp"
#include "jasso/token.hpp"
#include "jasso/tree.hpp"

namespace jasso {

struct EncodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entries of H, T, S and Sigma rows: a face index (>= 0) or a monomial.
using Item = int;
inline Item mono_item(Mono m) { return -1 - static_cast<int>(m); }
inline bool is_face(Item x) { return x >= 0; }
inline Mono item_mono(Item x) { return static_cast<Mono>(-1 - x); }

using FacePair = std::pair<int, int>;
constexpr FacePair kNoPair{-1, -1};

struct Rovejasse {
    int level = 0;
    std::vector<int> cells;
    std::vector<int> support;        // pi(v), in the previous layer
    std::map<int, int> cplus, cminus;  // ring successor maps on the support
    int zouc = -1;
    FacePair baou = kNoPair;
    FacePair caouly = kNoPair;
    std::vector<int> fan;
};

struct Layering {
    std::vector<std::vector<int>> jasses;
    std::vector<int> level;   // per face
    std::vector<int> rov_of;  // per face
    std::vector<Rovejasse> rovs;
};

struct CellAnnotation {
    Binome binome = Binome::SN;
    bool mediane = false;
    int parent = -1;
    FacePair gh = kNoPair, dh = kNoPair;
    std::vector<Item> H, T, S;
    int v = 0;
    Stratino row;
    bool placed = false;
};

struct StratoTable {
    std::map<Stratino, std::vector<Item>> sigma;  // non-empty rows only
    const std::vector<Item>& row(const Stratino& x) const;
    std::vector<Stratino> nj() const;
};

struct Encoding {
    Layering layers;
    std::vector<CellAnnotation> cells;
    StratoTable table;
    Dallajascar tree;             // on faces, rooted at root_neg
    std::vector<int> visit;       // w_0 .. w_N
    std::vector<int> color;       // 0..3 per face
    Word word;
};

Layering compute_layering(const RootedMap& m);

// c+ / c- around a rovejasse, read from the bordures of its support.
void ring_walk(const RootedMap& m, const Layering& l, Rovejasse& v);

struct CaoulyFan {
    FacePair caouly;
    std::vector<int> fan;
};
CaoulyFan derive_caouly_fan(const Rovejasse& v, FacePair baou, bool mediane);

struct Oriented {
    std::vector<int> rotated;  // extended bordure starting with gh
    std::vector<int> br;       // prefix ending with dh
};
Oriented oriented_boundary(const RootedMap& m, int e, FacePair gh, std::optional<FacePair> dh);

std::vector<Item> project_delta(const std::vector<int>& xi, FacePair baou, FacePair caouly);

Encoding encode(const RootedMap& m);

// Natural-row color classes.
int stratino_color(const Stratino& row);

// Pairs of same-colored faces that break the contact property: such faces
// touch iff they are consecutive cells of one row with no CH between them.
// Unitary rows never link their cells unless linked_rows asks for the
// literal reading that treats them like any other row.
std::vector<std::string> contact_violations(const RootedMap& m, const Encoding& e, bool linked_rows = false);

std::string format_items(const RootedMap& m, const std::vector<Item>& items);

}  // namespace jasso
