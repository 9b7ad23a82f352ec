#pragma once

#include "meshgen/blockio.hpp"

namespace meshgen::datasets {

/// Builders for the example geometries shipped under data/. Each takes
/// the refinement level (1 or 2), which selects the target partition
/// counts; the border point sets are the same at both refinements.
/// The data/*.block files are generated from these builders and the two
/// must stay in sync (the test suite checks).

/// Rectangle with a notch cut into the top border.
BlockInput cutout(int refinement);

/// Upright bottle: wide body, tapering shoulder, narrow neck.
BlockInput bottle(int refinement);

/// Ring between two circles, cut open along the segment joining them;
/// the left and right borders both trace the cut.
BlockInput doubly_connected(int refinement);

/// Three-block lake: an elongated main basin and two tributary fingers
/// whose mouths share boundary nodes with the main block's east shore
/// exactly, at both refinements.
std::vector<BlockInput> igapo(int refinement);

/// Serializes a block back to the on-disk format.
std::string write_block_file(const BlockInput& block);

} // namespace meshgen::datasets
