#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbiseif/rational.hpp"

namespace orbiseif {

enum class BaseKind { Sphere, Disc, ProjectivePlane };
enum class Location { ConePoint, CornerReflector };

std::string to_string(BaseKind k);
std::string to_string(Location l);
std::optional<BaseKind> parse_base_kind(const std::string& s);
std::optional<Location> parse_location(const std::string& s);

// X(cones; corners). Index-1 entries are dropped and both lists kept sorted.
struct BaseSignature {
  BaseKind kind = BaseKind::Sphere;
  std::vector<std::int64_t> cones;
  std::vector<std::int64_t> corners;

  friend bool operator==(const BaseSignature&, const BaseSignature&) = default;
  BaseSignature normalized() const;
  std::string str() const;
};

// p/q kept unreduced: gcd(p mod q, q) is the singularity index of the fiber.
struct LocalInvariant {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Location location = Location::ConePoint;

  friend bool operator==(const LocalInvariant&, const LocalInvariant&) = default;
  std::int64_t normalized_num() const { return mod(num, den); }
  std::int64_t index() const;
  Rational value() const { return Rational(num, den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct SeifertData {
  BaseSignature base;
  std::vector<LocalInvariant> invariants;
  std::optional<int> xi;  // present exactly when the base is a disc
  Rational euler;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// e + sum of cone invariants + (sum of normalized corner invariants + xi)/2.
// Corner terms are normalized first because an integer shift there moves the
// sum by 1/2.
Rational somma_residue(const SeifertData& d);
// The unique xi in {0, 1} that makes the residue integral, if any.
std::optional<int> xi_from_somma(const SeifertData& d);

SeifertData normalize(const SeifertData& d);
SeifertData flip_orientation(const SeifertData& d);
// Stable order: location, then normalized value, then index.
void sort_invariants(std::vector<LocalInvariant>& v);

enum class UnderlyingKind { ThreeSphere, LensSpace, NotComputed };

struct Underlying {
  UnderlyingKind kind = UnderlyingKind::NotComputed;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string reason;

  static Underlying sphere();
  // L(1, q) is reported as the 3-sphere; q is reduced into [0, p).
  static Underlying lens(std::int64_t p, std::int64_t q);
  static Underlying not_computed(std::string reason);

  friend bool operator==(const Underlying&, const Underlying&) = default;
  std::string str() const;
};

// L(p,q) and L(p,q') are homeomorphic iff q' = +-q^{+-1} mod p.
bool lens_equivalent(std::int64_t p, std::int64_t q1, std::int64_t q2);
// Same manifold, with NotComputed on either side counting as compatible.
bool underlying_compatible(const Underlying& a, const Underlying& b);
// Order of the fundamental group: 1 for the 3-sphere, p for L(p,q).
std::optional<std::int64_t> fundamental_group_order(const Underlying& u);

struct TopologyReport {
  Underlying underlying;
  std::vector<std::int64_t> singular_components;  // singularity indices > 1, sorted

  friend bool operator==(const TopologyReport&, const TopologyReport&) = default;
};

// Seifert fibration over the sphere with at most two exceptional fibers,
// read off from reduced invariants (alpha, beta) and the integer b.
// Returns nullopt when more than two fibers are exceptional.
std::optional<Underlying> lens_from_sphere_fibers(const Rational& euler, const std::vector<LocalInvariant>& inv);

}  // namespace orbiseif
