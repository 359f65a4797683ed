#include "sprite/kinematics/geometry.hpp"

#include <cmath>
#include <fstream>

#include "sprite/kinematics/forward.hpp"

namespace sprite::kinematics {

void check_geometry(const PlatformGeometry& g) {
  if (!(g.hornLength > 0.0)) throw GeometryError("horn length must be positive");
  if (!(g.rodLength > 0.0)) throw GeometryError("rod length must be positive");
  if (!(g.rodLength > g.hornLength)) throw GeometryError("rod must be longer than horn");
  if (!(g.servoMin < g.servoMax)) throw GeometryError("servoMin must be below servoMax");
  for (std::size_t i = 0; i < kLegs; ++i) {
    if (!g.baseAnchors[i].allFinite() || !g.platformAnchors[i].allFinite() || !std::isfinite(g.servoAxisAngles[i])) {
      throw GeometryError("leg " + std::to_string(i) + " has a non-finite parameter");
    }
    if (g.hornDirection[i] != 1 && g.hornDirection[i] != -1) {
      throw GeometryError("leg " + std::to_string(i) + " horn direction must be +1 or -1");
    }
  }
}

namespace {

// Platform height at zero angles from leg 0 alone; the seed for the full solve.
double seed_height(const PlatformGeometry& g) {
  const Vec3 tip = horn_tip(g, 0, 0.0);
  const Vec3 anchor = g.platformAnchors[0];
  const double dx = anchor.x() - tip.x(), dy = anchor.y() - tip.y();
  const double planar = dx * dx + dy * dy;
  const double d2 = g.rodLength * g.rodLength;
  if (planar >= d2) throw GeometryError("rod cannot reach the platform anchor at zero angles");
  return tip.z() - anchor.z() + std::sqrt(d2 - planar);
}

}  // namespace

PlatformGeometry finalize_geometry(PlatformGeometry g) {
  check_geometry(g);
  g.homePosition = Vec3(0.0, 0.0, seed_height(g));
  // Offsets are relative to homePosition, so the zero-angle pose must come
  // out as the zero offset.
  FkResult home;
  try {
    home = solve_fk(ServoAngles{}, g, Pose6{});
  } catch (const NoConvergence&) {
    throw GeometryError("zero-angle configuration does not assemble");
  }
  const Pose6& p = home.pose;
  if (std::abs(p.roll) > 1e-9 || std::abs(p.pitch) > 1e-9 || std::abs(p.yaw) > 1e-9) {
    throw GeometryError("zero-angle pose is not level; unsupported geometry");
  }
  g.homePosition += translation(p);
  return g;
}

PlatformGeometry symmetric_geometry(const SymmetricLayout& l) {
  PlatformGeometry g;
  g.name = l.name;
  g.hornLength = l.hornLength;
  g.rodLength = l.rodLength;
  g.servoMin = l.servoMin;
  g.servoMax = l.servoMax;
  for (std::size_t pair = 0; pair < 3; ++pair) {
    const double center = deg2rad(120.0 * static_cast<double>(pair));
    for (int side = 0; side < 2; ++side) {
      const std::size_t leg = 2 * pair + static_cast<std::size_t>(side);
      const double sign = side == 0 ? -1.0 : 1.0;
      const double tb = center + sign * l.baseHalfAngle;
      const double tp = center + sign * l.platformHalfAngle;
      g.baseAnchors[leg] = Vec3(l.baseRadius * std::cos(tb), l.baseRadius * std::sin(tb), 0.0);
      g.platformAnchors[leg] = Vec3(l.platformRadius * std::cos(tp), l.platformRadius * std::sin(tp), 0.0);
      // Horns of a pair point tangentially away from each other.
      g.servoAxisAngles[leg] = normalize_angle(tb + sign * kPi / 2);
      g.hornDirection[leg] = side == 0 ? 1 : -1;
    }
  }
  return finalize_geometry(g);
}

SymmetricLayout sprite_default_layout() {
  SymmetricLayout l;
  l.name = "sprite-default";
  l.baseRadius = 0.09;
  l.platformRadius = 0.06;
  l.baseHalfAngle = deg2rad(8.0);
  l.platformHalfAngle = deg2rad(55.0);
  l.hornLength = 0.05;
  l.rodLength = 0.14;
  l.servoMin = deg2rad(-90.0);
  l.servoMax = deg2rad(90.0);
  return l;
}

PlatformGeometry sprite_default_geometry() {
  static const PlatformGeometry geom = symmetric_geometry(sprite_default_layout());
  return geom;
}

namespace {

Vec3 vec_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw GeometryError(where + ": expected [x, y, z]");
  Vec3 v;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) throw GeometryError(where + ": coordinates must be numbers");
    v[k] = j[k].get<double>();
  }
  return v;
}

double number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw GeometryError(std::string("missing numeric field '") + key + "'");
  }
  return doc[key].get<double>();
}

}  // namespace

PlatformGeometry geometry_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw GeometryError("geometry document must be an object");
  if (doc.value("format", std::string{}) != "sprite-geometry") throw GeometryError("format must be 'sprite-geometry'");
  if (doc.value("version", 0) != kGeometryFormatVersion) {
    throw GeometryError("unsupported geometry version " + doc.value("version", nlohmann::json(0)).dump());
  }
  PlatformGeometry g;
  g.name = doc.value("name", std::string("unnamed"));
  g.hornLength = number(doc, "horn_length");
  g.rodLength = number(doc, "rod_length");
  g.servoMin = deg2rad(number(doc, "servo_min_deg"));
  g.servoMax = deg2rad(number(doc, "servo_max_deg"));
  const auto& legs = doc.at("legs");
  if (!legs.is_array() || legs.size() != kLegs) throw GeometryError("'legs' must list exactly 6 legs");
  for (std::size_t i = 0; i < kLegs; ++i) {
    const auto& leg = legs[i];
    const std::string where = "legs[" + std::to_string(i) + "]";
    g.baseAnchors[i] = vec_from_json(leg.at("base"), where + ".base");
    g.platformAnchors[i] = vec_from_json(leg.at("platform"), where + ".platform");
    g.servoAxisAngles[i] = deg2rad(number(leg, "axis_deg"));
    if (!leg.contains("horn_direction") || !leg["horn_direction"].is_number_integer()) {
      throw GeometryError(where + ": horn_direction must be +1 or -1");
    }
    g.hornDirection[i] = leg["horn_direction"].get<int>();
  }
  return finalize_geometry(g);
}

nlohmann::json geometry_to_json(const PlatformGeometry& g) {
  nlohmann::json legs = nlohmann::json::array();
  for (std::size_t i = 0; i < kLegs; ++i) {
    const auto& b = g.baseAnchors[i];
    const auto& p = g.platformAnchors[i];
    legs.push_back({{"base", {b.x(), b.y(), b.z()}},
                    {"platform", {p.x(), p.y(), p.z()}},
                    {"axis_deg", rad2deg(g.servoAxisAngles[i])},
                    {"horn_direction", g.hornDirection[i]}});
  }
  return {{"format", "sprite-geometry"},
          {"version", kGeometryFormatVersion},
          {"name", g.name},
          {"horn_length", g.hornLength},
          {"rod_length", g.rodLength},
          {"servo_min_deg", rad2deg(g.servoMin)},
          {"servo_max_deg", rad2deg(g.servoMax)},
          {"legs", legs}};
}

PlatformGeometry load_geometry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open geometry file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw GeometryError(path.string() + ": " + e.what());
  }
  return geometry_from_json(doc);
}

Vec3 horn_tip(const PlatformGeometry& g, std::size_t leg, double alpha) {
  const double elevation = g.hornDirection[leg] * alpha;
  const double heading = g.servoAxisAngles[leg];
  const double c = std::cos(elevation);
  return g.baseAnchors[leg] +
         g.hornLength * Vec3(c * std::cos(heading), c * std::sin(heading), std::sin(elevation));
}

Vec3 platform_point(const PlatformGeometry& g, std::size_t leg, const Pose6& pose, const Mat3& rot) {
  return g.homePosition + translation(pose) + rot * g.platformAnchors[leg];
}

Vec3 platform_point(const PlatformGeometry& g, std::size_t leg, const Pose6& pose) {
  return platform_point(g, leg, pose, rotation(pose));
}

}  // namespace sprite::kinematics
