#include "orbiseif/seifert.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "orbiseif/errors.hpp"

namespace orbiseif {

std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::Sphere: return "S2";
    case BaseKind::Disc: return "D2";
    case BaseKind::ProjectivePlane: return "RP2";
  }
  return "?";
}

std::string to_string(Location l) { return l == Location::ConePoint ? "cone" : "corner"; }

std::optional<BaseKind> parse_base_kind(const std::string& s) {
  for (BaseKind k : {BaseKind::Sphere, BaseKind::Disc, BaseKind::ProjectivePlane})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<Location> parse_location(const std::string& s) {
  if (s == "cone") return Location::ConePoint;
  if (s == "corner") return Location::CornerReflector;
  return std::nullopt;
}

BaseSignature BaseSignature::normalized() const {
  BaseSignature b = *this;
  auto clean = [](std::vector<std::int64_t>& v) {
    std::erase_if(v, [](std::int64_t x) { return x <= 1; });
    std::sort(v.begin(), v.end());
  };
  clean(b.cones);
  clean(b.corners);
  return b;
}

std::string BaseSignature::str() const {
  std::ostringstream os;
  os << to_string(kind) << "(";
  for (std::size_t i = 0; i < cones.size(); ++i) os << (i ? "," : "") << cones[i];
  if (kind == BaseKind::Disc) {
    os << ";";
    for (std::size_t i = 0; i < corners.size(); ++i) os << (i ? "," : "") << corners[i];
  }
  os << ")";
  return os.str();
}

std::int64_t LocalInvariant::index() const { return gcd(normalized_num(), den); }

Rational somma_residue(const SeifertData& d) {
  Rational sum = d.euler;
  Rational corners;
  for (const auto& inv : d.invariants) {
    if (inv.location == Location::ConePoint) {
      sum += inv.value();
    } else {
      corners += Rational(inv.normalized_num(), inv.den);
    }
  }
  corners += Rational(d.xi.value_or(0));
  return sum + corners / Rational(2);
}

std::optional<int> xi_from_somma(const SeifertData& d) {
  SeifertData t = d;
  for (int xi : {0, 1}) {
    t.xi = xi;
    if (somma_residue(t).is_integer()) return xi;
  }
  return std::nullopt;
}

void sort_invariants(std::vector<LocalInvariant>& v) {
  std::sort(v.begin(), v.end(), [](const LocalInvariant& a, const LocalInvariant& b) {
    auto key = [](const LocalInvariant& x) {
      return std::make_tuple(static_cast<int>(x.location), Rational(x.normalized_num(), x.den), x.index(), x.den,
                             x.num);
    };
    return key(a) < key(b);
  });
}

SeifertData normalize(const SeifertData& d) {
  SeifertData r = d;
  for (auto& inv : r.invariants) inv.num = inv.normalized_num();
  sort_invariants(r.invariants);
  return r;
}

SeifertData flip_orientation(const SeifertData& d) {
  SeifertData r = normalize(d);
  r.euler = -r.euler;
  for (auto& inv : r.invariants) inv.num = inv.num == 0 ? 0 : inv.den - inv.num;
  sort_invariants(r.invariants);
  return r;
}

Underlying Underlying::sphere() { return {UnderlyingKind::ThreeSphere, 1, 0, ""}; }

Underlying Underlying::lens(std::int64_t p, std::int64_t q) {
  if (p < 1) throw PreconditionError("lens space needs p >= 1");
  if (p == 1) return sphere();
  std::int64_t qq = mod(q, p);
  if (gcd(qq, p) != 1) throw PreconditionError("L(p,q) needs gcd(p,q)=1");
  return {UnderlyingKind::LensSpace, p, qq, ""};
}

Underlying Underlying::not_computed(std::string reason) { return {UnderlyingKind::NotComputed, 0, 0, std::move(reason)}; }

std::string Underlying::str() const {
  switch (kind) {
    case UnderlyingKind::ThreeSphere: return "S3";
    case UnderlyingKind::LensSpace: return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case UnderlyingKind::NotComputed: return "not computed (" + reason + ")";
  }
  return "?";
}

bool lens_equivalent(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  if (p == 1) return true;
  std::int64_t a = mod(q1, p), b = mod(q2, p);
  if (a == b || a == mod(-b, p)) return true;
  auto inv = inverse_mod(b, p);
  if (!inv) return false;
  return a == *inv || a == mod(-*inv, p);
}

bool underlying_compatible(const Underlying& a, const Underlying& b) {
  if (a.kind == UnderlyingKind::NotComputed || b.kind == UnderlyingKind::NotComputed) return true;
  if (a.kind != b.kind) return false;
  if (a.kind == UnderlyingKind::ThreeSphere) return true;
  return a.p == b.p && lens_equivalent(a.p, a.q, b.q);
}

std::optional<std::int64_t> fundamental_group_order(const Underlying& u) {
  switch (u.kind) {
    case UnderlyingKind::ThreeSphere: return 1;
    case UnderlyingKind::LensSpace: return u.p;
    default: return std::nullopt;
  }
}

std::optional<Underlying> lens_from_sphere_fibers(const Rational& euler, const std::vector<LocalInvariant>& inv) {
  // Manifold fibers: alpha = q/k, beta = p/k with k the singularity index.
  std::vector<std::pair<std::int64_t, std::int64_t>> fibers;
  Rational total = euler;
  for (const auto& x : inv) {
    std::int64_t p = x.normalized_num(), q = x.den;
    total += Rational(p, q);
    std::int64_t k = gcd(p, q);
    if (q / k > 1) fibers.emplace_back(q / k, p / k);
  }
  if (!total.is_integer()) throw InternalInconsistency("Euler number and invariants are not congruent");
  if (fibers.size() > 2) return std::nullopt;
  while (fibers.size() < 2) fibers.emplace_back(1, 0);
  const std::int64_t b = -total.num();
  const auto [a1, b1] = fibers[0];
  const auto [a2, b2] = fibers[1];
  // Meridians on the common torus in the (section, fiber) basis:
  // m1 = (a1, b1 + b a1) and m2 = (-a2, b2).
  const std::int64_t b1p = b1 + b * a1;
  const std::int64_t y = a1 * b2 + a2 * b1p;
  if (y == 0) return Underlying::not_computed("S2 x S1");
  // Longitude (rho, sigma) with a1 sigma - b1p rho = 1.
  std::int64_t rho = 0, sigma = 0;
  {
    std::int64_t old_r = a1, r = b1p, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      std::int64_t qt = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    // old_s * a1 + old_t * b1p = old_r = +-1.
    if (old_r < 0) {
      old_s = -old_s;
      old_t = -old_t;
      old_r = -old_r;
    }
    if (old_r != 1) throw InternalInconsistency("fiber coefficients are not coprime");
    sigma = old_s;
    rho = -old_t;
  }
  const std::int64_t x = -a2 * sigma - b2 * rho;
  const std::int64_t p = y < 0 ? -y : y;
  return Underlying::lens(p, y < 0 ? -x : x);
}

}  // namespace orbiseif
