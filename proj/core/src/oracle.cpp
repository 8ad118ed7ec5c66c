#include "orbiseif/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "orbiseif/errors.hpp"

namespace orbiseif {

namespace {

constexpr double kPointTol = 1e-6;
constexpr double kMatrixTol = 1e-7;

double dist(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

Vec3 act(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

bool same_matrix(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(a[i][j] - b[i][j]) > kMatrixTol) return false;
  return true;
}

bool is_identity(const Mat3& m) {
  static const Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return same_matrix(m, id);
}

Vec3 normalized(Vec3 v) {
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Axis of a non-identity rotation.
Vec3 rotation_axis(const Mat3& r) {
  Vec3 w{r[2][1] - r[1][2], r[0][2] - r[2][0], r[1][0] - r[0][1]};
  double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  if (n > 1e-6) return {w[0] / n, w[1] / n, w[2] / n};
  // Half turn: R + I = 2 v v^T.
  int best = 0;
  double best_norm = -1;
  for (int j = 0; j < 3; ++j) {
    Vec3 c{r[0][j] + (j == 0), r[1][j] + (j == 1), r[2][j] + (j == 2)};
    double cn = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    if (cn > best_norm) {
      best_norm = cn;
      best = j;
    }
  }
  return normalized({r[0][best] + (best == 0), r[1][best] + (best == 1), r[2][best] + (best == 2)});
}

double trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

std::tuple<long, long, long> canonical_key(const Vec3& v) {
  // Prefer points near infinity (north pole), then lexicographic.
  return {std::lround(-v[2] * 1e6), std::lround(v[0] * 1e6), std::lround(v[1] * 1e6)};
}

struct BaseData {
  BaseActionGroup group;
  std::vector<Mat3> matrices;          // aligned with group.isometries
  std::vector<std::size_t> image_of;   // pair element index -> isometry index
};

BaseData compute_base(const PairGroup& g) {
  BaseData b;
  b.image_of.reserve(g.elements.size());
  for (const auto& e : g.elements) {
    BaseIsometry iso = induced_base_isometry(e);
    Mat3 m = iso.to_orthogonal();
    std::size_t found = b.matrices.size();
    for (std::size_t i = 0; i < b.matrices.size(); ++i) {
      if (b.group.isometries[i].orientation_reversing == iso.orientation_reversing && same_matrix(b.matrices[i], m)) {
        found = i;
        break;
      }
    }
    if (found == b.matrices.size()) {
      b.group.isometries.push_back(iso);
      b.matrices.push_back(m);
    }
    b.image_of.push_back(found);
  }
  b.group.order = static_cast<std::int64_t>(b.matrices.size());

  std::vector<Vec3> candidates;
  for (std::size_t i = 0; i < b.matrices.size(); ++i) {
    if (b.group.isometries[i].orientation_reversing || is_identity(b.matrices[i])) continue;
    Vec3 axis = rotation_axis(b.matrices[i]);
    for (const Vec3& v : {axis, Vec3{-axis[0], -axis[1], -axis[2]}}) {
      bool dup = std::any_of(candidates.begin(), candidates.end(), [&](const Vec3& c) { return dist(c, v) < kPointTol; });
      if (!dup) candidates.push_back(v);
    }
  }

  bool has_reversing = false, has_reflection = false;
  for (std::size_t i = 0; i < b.matrices.size(); ++i) {
    if (!b.group.isometries[i].orientation_reversing) continue;
    has_reversing = true;
    if (std::abs(trace(b.matrices[i]) - 1.0) < 1e-6) has_reflection = true;
  }
  BaseSignature sig;
  sig.kind = !has_reversing ? BaseKind::Sphere : (has_reflection ? BaseKind::Disc : BaseKind::ProjectivePlane);

  std::vector<bool> assigned(candidates.size(), false);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (assigned[c]) continue;
    std::vector<Vec3> orbit;
    for (const auto& m : b.matrices) {
      Vec3 img = act(m, candidates[c]);
      if (std::none_of(orbit.begin(), orbit.end(), [&](const Vec3& o) { return dist(o, img) < kPointTol; })) {
        orbit.push_back(img);
      }
    }
    for (std::size_t o = 0; o < candidates.size(); ++o) {
      if (assigned[o]) continue;
      for (const auto& v : orbit) {
        if (dist(v, candidates[o]) < kPointTol) {
          assigned[o] = true;
          break;
        }
      }
    }
    Vec3 rep = *std::min_element(orbit.begin(), orbit.end(), [](const Vec3& x, const Vec3& y) {
      return canonical_key(x) < canonical_key(y);
    });
    SingularPoint sp;
    sp.point = SpherePoint::from_unit(rep);
    for (std::size_t i = 0; i < b.matrices.size(); ++i) {
      if (dist(act(b.matrices[i], rep), rep) >= kPointTol) continue;
      if (b.group.isometries[i].orientation_reversing) {
        sp.on_mirror = true;
      } else {
        ++sp.stabilizer_order;
      }
    }
    --sp.stabilizer_order;  // the identity was counted on top of the initial 1
    if (sp.stabilizer_order < 2) continue;
    (sp.on_mirror ? sig.corners : sig.cones).push_back(sp.stabilizer_order);
    b.group.points.push_back(sp);
  }
  std::sort(b.group.points.begin(), b.group.points.end(), [](const SingularPoint& x, const SingularPoint& y) {
    return std::make_tuple(x.on_mirror, x.stabilizer_order, canonical_key(x.point.to_unit())) <
           std::make_tuple(y.on_mirror, y.stabilizer_order, canonical_key(y.point.to_unit()));
  });
  b.group.signature = sig.normalized();
  return b;
}

// Unit quaternion w with Phi(1, w) carrying p to infinity on the base.
Quaternion conjugator(const SpherePoint& p) {
  if (p.is_infinite()) return {1, 0, 0, 0};
  Complex z = p.value();
  double w2 = 1.0 / std::sqrt(1.0 + std::norm(z));
  Complex w1 = z * w2;
  return {w1.real(), w1.imag(), w2, 0};
}

LocalInvariant invariant_at(const PairGroup& g, const BaseData& b, const SingularPoint& sp) {
  const Vec3 target = sp.point.to_unit();
  const std::int64_t max_den = 2 * phi_order(g);
  std::vector<std::size_t> members;
  for (std::size_t idx = 0; idx < g.elements.size(); ++idx) {
    if (std::get<CircleJElement>(g.elements[idx].left).jflag) continue;
    if (dist(act(b.matrices[b.image_of[idx]], target), target) >= kPointTol) continue;
    members.push_back(idx);
  }
  const Quaternion w0 = conjugator(sp.point);
  for (const Quaternion& w : {w0, w0.conj()}) {
    std::vector<TorusAction> stab;
    bool diagonal = true;
    for (std::size_t idx : members) {
      const auto& e = g.elements[idx];
      Quaternion r = w * to_numeric(e.right) * w.conj();
      if (std::abs(r.y) > kGeomTol || std::abs(r.z) > kGeomTol) {
        diagonal = false;
        break;
      }
      const auto& left = std::get<CircleJElement>(e.left);
      Rational theta = snap_angle(std::atan2(r.x, r.w) / (2 * std::numbers::pi), max_den);
      stab.push_back({(left.angle - theta).frac(), (left.angle + theta).frac()});
    }
    if (!diagonal) continue;
    LocalInvariant li = torus_local_invariant(stab);
    li.location = sp.on_mirror ? Location::CornerReflector : Location::ConePoint;
    return li;
  }
  throw InternalInconsistency("stabilizer of " + sp.point.str() + " is not diagonalized");
}

void require_fibered(const PairGroup& g) {
  if (!is_fibered(g.spec.family)) throw NotHopfPreserving("family " + to_string(g.spec.family) + " has polyhedral left factor");
}

}  // namespace

BaseActionGroup base_group(const PairGroup& g) {
  require_fibered(g);
  return compute_base(g).group;
}

Rational euler_oracle(const PairGroup& g, const BaseActionGroup& base) {
  return Rational(-phi_order(g), base.order * base.order);
}

Rational euler_oracle(const PairGroup& g) { return euler_oracle(g, base_group(g)); }

std::vector<LocalInvariant> exceptional_fibers_oracle(const PairGroup& g, const BaseActionGroup& base) {
  require_fibered(g);
  BaseData b = compute_base(g);
  std::vector<LocalInvariant> out;
  for (const auto& sp : base.points) out.push_back(invariant_at(g, b, sp));
  sort_invariants(out);
  return out;
}

std::vector<LocalInvariant> exceptional_fibers_oracle(const PairGroup& g) {
  require_fibered(g);
  BaseData b = compute_base(g);
  std::vector<LocalInvariant> out;
  for (const auto& sp : b.group.points) out.push_back(invariant_at(g, b, sp));
  sort_invariants(out);
  return out;
}

Underlying lens_oracle(const PairGroup& g) {
  if (!is_abelian(g.spec.family)) throw PreconditionError("lens_oracle needs family 1 or 1p");
  // Angles (A, B) of z1, z2 under each element; all elements are diagonal.
  std::set<std::pair<Rational, Rational>> h;
  for (const auto& e : g.elements) {
    const auto& l = std::get<CircleJElement>(e.left);
    const auto& r = std::get<CircleJElement>(e.right);
    h.insert({(l.angle - r.angle).frac(), (l.angle + r.angle).frac()});
  }
  std::int64_t ka = 0, kb = 0;
  for (const auto& [a, b] : h) {
    ka += b.is_zero() ? 1 : 0;
    kb += a.is_zero() ? 1 : 0;
  }
  std::set<std::pair<Rational, Rational>> f;
  for (const auto& [a, b] : h) f.insert({(a * Rational(ka)).frac(), (b * Rational(kb)).frac()});
  const std::int64_t e = static_cast<std::int64_t>(f.size());
  if (e == 1) return Underlying::sphere();
  for (const auto& [a, b] : f) {
    if (a.is_zero() || b.is_zero()) {
      if (!(a.is_zero() && b.is_zero())) throw InternalInconsistency("residual action is not free");
    }
  }
  std::int64_t d = -1;
  for (const auto& [a, b] : f) {
    if (a == Rational(1, e)) d = (b * Rational(e)).num();
  }
  if (d < 0) throw InternalInconsistency("residual action is not cyclic");
  const std::int64_t gg = 1;
  // T1 has core z2 (angle d/e) and disc z1 (angle g/e); T2 the reverse, with
  // meridian and longitude exchanged on the common boundary.
  TorusQuotientMap t1 = torus_quotient_map(d, e, gg);
  TorusQuotientMap t2 = torus_quotient_map(gg, e, d);
  const auto& p1 = t1.matrix;
  const std::array<std::array<std::int64_t, 2>, 2> p2{{{t2.matrix[0][1], t2.matrix[0][0]},
                                                      {t2.matrix[1][1], t2.matrix[1][0]}}};
  const std::int64_t det1 = t1.determinant();
  const std::array<std::array<std::int64_t, 2>, 2> adj1{{{p1[1][1], -p1[0][1]}, {-p1[1][0], p1[0][0]}}};
  std::array<std::array<std::int64_t, 2>, 2> c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::int64_t v = p2[i][0] * adj1[0][j] + p2[i][1] * adj1[1][j];
      if (v % det1 != 0) throw InternalInconsistency("boundary change of basis is not integral");
      c[i][j] = v / det1;
    }
  }
  const std::int64_t detc = c[0][0] * c[1][1] - c[0][1] * c[1][0];
  if (detc != 1 && detc != -1) throw InternalInconsistency("boundary change of basis is not unimodular");
  // Meridian of the second quotient torus in the basis of the first.
  const std::int64_t x = c[1][1] * detc, y = -c[1][0] * detc;
  const std::int64_t p = std::abs(y);
  return Underlying::lens(p, y < 0 ? -x : x);
}

namespace {

PairElement power(PairElement x, std::int64_t k, const PairElement& one) {
  PairElement r = one;
  while (k > 0) {
    if (k & 1) r = multiply(r, x);
    x = multiply(x, x);
    k >>= 1;
  }
  return r;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FixedPointQuotient fixed_point_quotient(const PairGroup& g) {
  const PairElement one{identity_like(g.elements.front().left), identity_like(g.elements.front().right)};
  std::set<PairElement> n{one};
  std::vector<PairElement> used;
  for (const auto& e : g.elements) {
    if (std::abs(to_numeric(e.left).w - to_numeric(e.right).w) >= 1e-9 || n.count(e)) continue;
    used.push_back(e);
    std::vector<PairElement> frontier(n.begin(), n.end());
    while (!frontier.empty()) {
      PairElement x = frontier.back();
      frontier.pop_back();
      for (const auto& s : used) {
        PairElement y = multiply(x, s);
        if (n.insert(y).second) frontier.push_back(y);
      }
    }
  }
  FixedPointQuotient q;
  q.order = static_cast<std::int64_t>(g.elements.size() / n.size());
  q.cyclic = q.order == 1;
  const auto primes = prime_divisors(q.order);
  // xN generates G/N iff no x^(Q/p) lies in N.
  for (const auto& e : g.elements) {
    if (q.cyclic) break;
    q.cyclic = std::none_of(primes.begin(), primes.end(),
                            [&](std::int64_t p) { return n.count(power(e, q.order / p, one)) > 0; });
  }
  return q;
}

OracleReport oracle_report(const PairGroup& g) {
  require_fibered(g);
  OracleReport r;
  BaseData b = compute_base(g);
  r.base = b.group;
  r.seifert.base = b.group.signature;
  r.seifert.euler = euler_oracle(g, b.group);
  for (const auto& sp : b.group.points) r.seifert.invariants.push_back(invariant_at(g, b, sp));
  sort_invariants(r.seifert.invariants);
  if (r.seifert.base.kind == BaseKind::Disc) r.seifert.xi = xi_from_somma(r.seifert);
  r.pi1 = fixed_point_quotient(g);
  if (is_abelian(g.spec.family)) {
    r.topology.underlying = lens_oracle(g);
  } else if (r.pi1.order == 1) {
    r.topology.underlying = Underlying::sphere();
  } else {
    r.topology.underlying = Underlying::not_computed("fundamental group of order " + std::to_string(r.pi1.order));
  }
  for (const auto& x : r.seifert.invariants)
    if (x.index() > 1) r.topology.singular_components.push_back(x.index());
  std::sort(r.topology.singular_components.begin(), r.topology.singular_components.end());
  return r;
}

}  // namespace orbiseif
