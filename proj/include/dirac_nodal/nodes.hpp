#pragma once

#include "dirac_nodal/integrator.hpp"
#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

struct NodeConfig {
    double position_tolerance = 1e-12;
    /// Roots closer than this to 0 or pi are boundary zeros, not nodes.
    double endpoint_margin = 1e-7;
};

/// Interior zeros of component 1 or 2 of the eigenfunction at rec.lambda.
///
/// Sign changes on the retained grid are refined by re-integrating from the
/// retained state to the probe position. A sample counts as zero when the component
/// is below 1e-13 of the spinor magnitude; two consecutive zero samples mean the
/// component vanishes on an interval (DegenerateComponent).
NodalSet extract_nodes(const Shooter& shooter, const EigenRecord& rec, int component,
                       const NodeConfig& config = {});

/// Node count stated by the nodal theory: the N(alpha, beta) table for case I
/// (component 1 only) and |n| + 1 - i for case II. Requires n >= 4.
int node_count_prediction(const BoundaryForm& boundary, int n, int component);

struct NodeCountCheck {
    int observed = 0;
    int predicted = 0;
    bool matches = false;
};

NodeCountCheck check_node_count(const BoundaryForm& boundary, const NodalSet& nodes);

}  // namespace dirac_nodal
