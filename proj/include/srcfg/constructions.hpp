#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srcfg/configuration.hpp"
#include "srcfg/graph.hpp"
#include "srcfg/group.hpp"

namespace srcfg {

/// Desarguesian plane PG(2,q): points are the 1-spaces of F_q^3 and lines the
/// 2-spaces, both indexed in sorted echelon order. The result is a (v_k)
/// configuration with v = q^2+q+1 and k = q+1.
Configuration projective_plane(std::uint32_t q);

/// Point indices of (1:0:0), (0:1:0), (0:0:1) in projective_plane(q).
std::vector<Point> coordinate_triangle(std::uint32_t q);

/// Deletes every point on the sides of triangle ABC and every line through a
/// vertex. Remaining points and lines are renumbered in increasing order.
/// `plane` must be a projective plane of order n >= 5 given as a (v_k)
/// configuration. Throws CollinearTriple, OrderTooSmall, InvalidConfiguration.
Configuration triangle_removal(const Configuration& plane, Point a, Point b, Point c);

/// triangle_removal(projective_plane(q), coordinate triangle).
Configuration triangle_removal(std::uint32_t q);

/// Lines are the open neighbourhoods of the vertices of a Moore graph
/// SRG(k^2+1, k, 0, 1) with k >= 3. Throws NotMooreGraph.
Configuration moore_configuration(const Graph& g);

struct PolarityFlags {
  bool hyperplane_side = false;  // rewire incidences inside H0 = {x5 = 0}
  bool point_side = false;       // rewire incidences through P0 = (0:0:0:0:1)

  std::string str() const;
};

/// Lines versus planes of PG(4,q) under inclusion, with the optional polarity
/// transformations. Points and lines are the sorted lines and planes of
/// PG(4,q). The symplectic form x1y2 - x2y1 + x3y4 - x4y3 supplies both
/// polarities.
Configuration lp4(std::uint32_t q, PolarityFlags flags);

/// Points are the group elements, line g is the left translate gD.
/// Throws NotDeficient if two left differences coincide.
Configuration development(const Group& g, const std::vector<GroupElement>& d);

/// Deficient set {(log x, log(x+1)) : x != 0, -1} in Z_{q-1} x Z_{q-1}, the
/// discrete log image of F_q* x F_q*. Elements use direct_product indexing.
std::vector<GroupElement> fq_star_sdds(std::uint32_t q);
Group fq_star_group(std::uint32_t q);

/// Looks up each label with Group::find; throws InvalidSpec on an unknown label.
std::vector<GroupElement> elements_by_name(const Group& g, const std::vector<std::string>& labels);

}  // namespace srcfg
