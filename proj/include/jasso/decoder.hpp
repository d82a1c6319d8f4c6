#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jasso/map.hpp"
#include "jasso/rules.hpp"

namespace jasso {

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid coordinates: x grows rightward with kept columns, y grows downward
// with ladder rows. A point is a cell corner.
struct Point {
    int x = 0, y = 0;
    auto operator<=>(const Point&) const = default;
};

struct HSeg {
    int y = 0, x0 = 0, x1 = 0;  // x0 <= x1
    bool covers(int x) const { return x0 <= x && x <= x1; }
};

struct Ladder {
    struct Row {
        Stratino x;
        bool blank = false;  // the inserted row below (Z, a_k)
    };
    std::vector<Row> rows;
    std::map<Stratino, int> row_of;    // stratino rows
    std::map<Stratino, int> blank_of;  // unitary stratino -> its blank row
    std::map<Stratino, int> extent;    // unitary (Z,1) -> a_k
};

struct Table {
    std::vector<int> columns;  // kept word positions, increasing
    std::map<int, int> col_of;
    std::map<int, int> row_of;  // kept position -> ladder row
    Point A(int pos) const { return {col_of.at(pos), row_of.at(pos)}; }
    bool kept(int pos) const { return col_of.count(pos) != 0; }
};

struct Polyline {
    std::string kind;  // curve, segment, transversal, lambda
    int owner = 0;     // word position naming the piece
    std::vector<Point> pts;
    bool closed = false;
};

struct Curve {
    int owner = 0;
    Polyline line;
    HSeg upper;
    std::vector<HSeg> lower;
};

struct StratajoSegment {
    Seq items;
    int enclosing = 0;  // owner of the enclosing curve
    Polyline line;
    HSeg top;
};

struct Transversal {
    int stratajo = 0;  // index into segments
    int index = 0;     // i in phi_i
    int opener = 0;
    bool through_shifted = false;  // routed via the shifted row
    int drop_case = 1;             // 1: down to the enclosing curve, 2: curve top, 3: stratajo
    Polyline line;
};

struct GeometricMap {
    Ladder ladder;
    Table table;
    std::vector<Curve> curves;
    std::vector<StratajoSegment> segments;
    std::vector<Transversal> transversals;
    Polyline lambda;
    RootedMap map;
    std::vector<Point> opener_cell;             // p -> cell of alpha_p
    std::map<std::pair<int, int>, int> region;  // cell -> face
    int width = 0, height = 0;                  // grid extent in cells
};

Ladder build_ladder(const WordAnalysis& a);
Table build_table(const WordAnalysis& a, const Ladder& l);
std::vector<Curve> build_curves(const WordAnalysis& a, const Ladder& l, const Table& t);
std::vector<StratajoSegment> build_segments(const WordAnalysis& a, const Table& t,
                                            const std::vector<Curve>& curves);
std::vector<Transversal> build_transversals(const WordAnalysis& a, const Ladder& l, const Table& t,
                                            const std::vector<Curve>& curves,
                                            const std::vector<StratajoSegment>& segs);

// Full pipeline on a validated word.
GeometricMap decode(const WordAnalysis& a);

std::string geometry_dump(const GeometricMap& g);
// colors: optional per-face color index 0..3
std::string render_svg(const GeometricMap& g, const std::vector<int>* colors = nullptr);

}  // namespace jasso
