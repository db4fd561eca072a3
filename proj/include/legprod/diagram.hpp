#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "legprod/feasibility.hpp"
#include "legprod/model.hpp"

namespace legprod {

enum class Side { Right, Left };

// Planar diagram of a knot in the Lagrangian projection.
//
// Each crossing lists its four arc labels counterclockwise starting from the incoming under-strand, so the
// under-strand runs from slot 0 to slot 2. With n crossings the labels are 1..2n, each used exactly twice.
// The unbounded face is named by an arc and the side of it (relative to the knot orientation) it lies on.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int outer_arc = 1;
    Side outer_side = Side::Right;

    std::size_t size() const { return crossings.size(); }
    PDCode reversed() const;  // same diagram, opposite knot orientation

    friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Grammar: whitespace-separated "X[a,b,c,d]" tokens followed by one "outer=k" (or "outer=k:left",
// "outer=k:right"). '#' starts a comment. Throws ParseError or InvalidDiagram.
PDCode parse_pd(std::string_view text);
std::string format_pd(const PDCode& pd);

// Throws InvalidDiagram unless pd is a connected, consistently oriented, planar single-component diagram.
void validate_diagram(const PDCode& pd);

// Sign of each crossing, indexed like pd.crossings.
std::vector<Sign> crossing_signs(const PDCode& pd);

// Writhe of the Lagrangian projection.
long long diagram_tb(const PDCode& pd);

// Quadrant `quadrant` of a crossing lies between arm `quadrant` and arm `quadrant - 1` (mod 4).
// Walking a face boundary counterclockwise, a corner is positive when the boundary leaves on the higher
// (over) strand.
struct Corner {
    int crossing = 0;
    int quadrant = 0;
    bool positive = false;

    friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
    std::vector<Corner> corners;  // counterclockwise for bounded faces
    std::vector<int> arcs;        // boundary arcs in traversal order
    bool unbounded = false;
};

std::vector<Face> faces(const PDCode& pd);

// Chord variable for crossing i (0-based) is prefix + (i+1).
std::string crossing_label(const std::string& prefix, std::size_t i);

// One strict inequality per bounded face (positive-corner actions minus negative-corner actions > 0)
// plus positivity of every crossing's action.
LinearSystem area_constraints(const PDCode& pd, const std::string& prefix = "x");

// Knot model with one chord per crossing. Throws ConstraintViolated when the actions break an area inequality.
LegendrianModel diagram_model(const PDCode& pd, const Assignment& actions, const std::string& prefix = "x");

}  // namespace legprod
