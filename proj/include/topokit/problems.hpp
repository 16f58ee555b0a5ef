#pragma once

#include <string>
#include <vector>

#include "topokit/assembly.hpp"
#include "topokit/grid.hpp"

namespace topokit {

// Half MBB beam (2D): unit downward load on the vertical DOF of the
// top-left corner node; symmetry plane fixes all horizontal DOFs on the
// left edge, and a roller fixes the vertical DOF of the bottom-right
// corner node. In 1-based Matlab indexing this is F(2)=-1 with
// fixeddofs = union(1:2:2*(nely+1), 2*(nelx+1)*(nely+1)).
LoadCase mbb_half(const Grid& grid);

// Long cantilever beam (2D): left edge fully clamped
// (fixeddofs = 1:2*(nely+1)); unit downward load at the right-edge
// mid-height node, F(2*((nely+1)*nelx+(ceil(nely/2)+1))) = -1 in 1-based
// form. Internally everything is 0-based.
LoadCase cantilever_2d(const Grid& grid);

// Cantilever beam (3D): the x=0 face is fully clamped; a unit downward
// (y) load is applied at every node of the bottom edge of the x=nelx face,
// independent of z.
LoadCase cantilever_3d(const Grid& grid);

// Preset ids: "mbb", "cantilever2d", "cantilever3d".
const std::vector<std::string>& problem_ids();
LoadCase make_load_case(const std::string& preset_id, const Grid& grid);

}  // namespace topokit
