#include "sprite/kinematics/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>


namespace sprite::kinematics {

namespace {

constexpr std::size_t kMaxGridSamples = 60'000'000;

long half_count(double bound, double resolution) {
  return static_cast<long>(std::floor(bound / resolution + 1e-9));
}

struct Grid {
  std::vector<Pose6> poses;
  std::vector<std::uint8_t> mask;
};

Grid evaluate(std::vector<Pose6> poses, const PlatformGeometry& geom, Execution exec) {
  Grid g;
  g.mask.resize(poses.size());
  reachability_mask(poses, geom, g.mask, exec);
  g.poses = std::move(poses);
  return g;
}

// Walks from the center index along a stride while samples stay reachable.
long contiguous(const std::vector<std::uint8_t>& mask, std::size_t center, std::ptrdiff_t stride, long steps) {
  if (!mask[center]) return 0;
  long k = 0;
  while (k < steps && mask[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(center) + (k + 1) * stride)]) ++k;
  return k;
}

}  // namespace

WorkspaceReport sample_workspace(const PlatformGeometry& geom, const WorkspaceResolution& res,
                                 const WorkspaceBounds& bounds, Execution exec) {
  if (!(res.translation > 0.0) || !(res.angle > 0.0)) {
    throw std::invalid_argument("workspace resolution must be positive");
  }
  if (!(bounds.translation >= 0.0) || !(bounds.angle >= 0.0)) {
    throw std::invalid_argument("workspace bounds must be non-negative");
  }
  const long nt = half_count(bounds.translation, res.translation);
  const long na = half_count(bounds.angle, res.angle);
  const auto side_t = static_cast<std::size_t>(2 * nt + 1);
  const auto side_a = static_cast<std::size_t>(2 * na + 1);
  if (side_t * side_t * side_t + side_a * side_a + side_a > kMaxGridSamples) {
    throw std::invalid_argument("workspace grid too fine for the sampled bounds");
  }

  WorkspaceReport report;
  report.geometryName = geom.name;
  report.resolution = res;
  report.bounds = bounds;

  // Translation grid, x fastest.
  std::vector<Pose6> tposes;
  tposes.reserve(side_t * side_t * side_t);
  for (long k = -nt; k <= nt; ++k) {
    for (long j = -nt; j <= nt; ++j) {
      for (long i = -nt; i <= nt; ++i) {
        tposes.push_back({static_cast<double>(i) * res.translation, static_cast<double>(j) * res.translation,
                          static_cast<double>(k) * res.translation, 0.0, 0.0, 0.0});
      }
    }
  }
  const Grid trans = evaluate(std::move(tposes), geom, exec);
  const std::size_t tcenter = (side_t * side_t + side_t + 1) * static_cast<std::size_t>(nt);
  const std::array<std::ptrdiff_t, 3> tstride = {1, static_cast<std::ptrdiff_t>(side_t),
                                                 static_cast<std::ptrdiff_t>(side_t * side_t)};
  for (std::size_t a = 0; a < 3; ++a) {
    auto& e = report.translationExtent[a];
    e.positive = static_cast<double>(contiguous(trans.mask, tcenter, tstride[a], nt)) * res.translation;
    e.negative = static_cast<double>(contiguous(trans.mask, tcenter, -tstride[a], nt)) * res.translation;
    report.maxTranslation[a] = e.symmetric();
  }

  // Roll/pitch grid, roll fastest.
  std::vector<Pose6> aposes;
  aposes.reserve(side_a * side_a);
  for (long j = -na; j <= na; ++j) {
    for (long i = -na; i <= na; ++i) {
      aposes.push_back({0.0, 0.0, 0.0, static_cast<double>(i) * res.angle, static_cast<double>(j) * res.angle, 0.0});
    }
  }
  const Grid tilt = evaluate(std::move(aposes), geom, exec);
  const std::size_t acenter = (side_a + 1) * static_cast<std::size_t>(na);
  for (std::size_t a = 0; a < 2; ++a) {
    const std::ptrdiff_t stride = a == 0 ? 1 : static_cast<std::ptrdiff_t>(side_a);
    auto& e = report.rotationExtent[a];
    e.positive = static_cast<double>(contiguous(tilt.mask, acenter, stride, na)) * res.angle;
    e.negative = static_cast<double>(contiguous(tilt.mask, acenter, -stride, na)) * res.angle;
  }
  double first_unreachable = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < tilt.poses.size(); ++i) {
    if (!tilt.mask[i]) first_unreachable = std::min(first_unreachable, tilt_from_vertical(tilt.poses[i]));
  }
  for (std::size_t i = 0; i < tilt.poses.size(); ++i) {
    if (!tilt.mask[i]) continue;
    const double t = tilt_from_vertical(tilt.poses[i]);
    report.peakTiltFromVertical = std::max(report.peakTiltFromVertical, t);
    if (t < first_unreachable) report.maxTiltFromVertical = std::max(report.maxTiltFromVertical, t);
  }

  // Yaw line.
  std::vector<Pose6> yposes;
  yposes.reserve(side_a);
  for (long i = -na; i <= na; ++i) yposes.push_back({0.0, 0.0, 0.0, 0.0, 0.0, static_cast<double>(i) * res.angle});
  const Grid yaw = evaluate(std::move(yposes), geom, exec);
  auto& ye = report.rotationExtent[2];
  ye.positive = static_cast<double>(contiguous(yaw.mask, static_cast<std::size_t>(na), 1, na)) * res.angle;
  ye.negative = static_cast<double>(contiguous(yaw.mask, static_cast<std::size_t>(na), -1, na)) * res.angle;

  report.samplesTested = trans.poses.size() + tilt.poses.size() + yaw.poses.size();
  for (const Grid* g : {&trans, &tilt, &yaw}) {
    for (std::size_t i = 0; i < g->poses.size(); ++i) {
      if (g->mask[i]) report.reachable.push_back(g->poses[i]);
    }
  }
  return report;
}

nlohmann::json to_json(const WorkspaceReport& r) {
  auto extent = [](const AxisExtent& e, double scale) {
    return nlohmann::json{{"negative", e.negative * scale}, {"positive", e.positive * scale}};
  };
  nlohmann::json trans, rot;
  for (std::size_t a = 0; a < 3; ++a) {
    trans[kPoseAxisNames[a]] = extent(r.translationExtent[a], 1.0);
    rot[kPoseAxisNames[a + 3]] = extent(r.rotationExtent[a], rad2deg(1.0));
  }
  return {{"geometry", r.geometryName},
          {"resolution", {{"translation_m", r.resolution.translation}, {"angle_deg", rad2deg(r.resolution.angle)}}},
          {"bounds", {{"translation_m", r.bounds.translation}, {"angle_deg", rad2deg(r.bounds.angle)}}},
          {"max_translation_m", {{"x", r.maxTranslation[0]}, {"y", r.maxTranslation[1]}, {"z", r.maxTranslation[2]}}},
          {"max_tilt_from_vertical_deg", rad2deg(r.maxTiltFromVertical)},
          {"peak_tilt_from_vertical_deg", rad2deg(r.peakTiltFromVertical)},
          {"translation_extent_m", trans},
          {"rotation_extent_deg", rot},
          {"samples_tested", r.samplesTested},
          {"samples_reachable", r.reachable.size()}};
}

void write_csv(const WorkspaceReport& r, std::ostream& out) {
  out << "x,y,z,roll,pitch,yaw,tilt\n";
  for (const Pose6& p : r.reachable) {
    out << p.x << ',' << p.y << ',' << p.z << ',' << rad2deg(p.roll) << ',' << rad2deg(p.pitch) << ','
        << rad2deg(p.yaw) << ',' << rad2deg(tilt_from_vertical(p)) << '\n';
  }
}

}  // namespace sprite::kinematics
