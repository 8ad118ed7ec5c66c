#include "orbiseif/engine.hpp"

#include <algorithm>
#include <cstdlib>

#include "orbiseif/errors.hpp"

namespace orbiseif {

std::string Reading::str() const {
  std::string s = a_cross ? "a=gcd(n'-sm',m'+sn')" : "a=gcd(n'+sm',n'-sm')";
  s += b1_from_sum ? ",b1~n'+sm'" : ",b1~n'-sm'";
  return s;
}

Reading default_reading() { return Reading{}; }

namespace {

std::int64_t div_exact(std::int64_t x, std::int64_t y, const char* what) {
  if (y == 0 || x % y != 0) {
    throw InternalInconsistency(std::string(what) + " is not an integer (" + std::to_string(x) + "/" +
                                std::to_string(y) + ")");
  }
  return x / y;
}

FamilySpec canonical(const FamilySpec& spec) {
  Validation v = validate(spec);
  if (!v.ok()) throw PreconditionError(spec.str() + ": " + v.violations.front());
  return v.canonical;
}

bool primed(FamilyId f) { return f == FamilyId::F1p || f == FamilyId::F11p; }

LocalInvariant inv(std::int64_t num, std::int64_t den, Location loc = Location::ConePoint) {
  if (den < 1) throw InternalInconsistency("invariant with non-positive denominator");
  return {num, den, loc};
}

}  // namespace

DerivedQuantities derived_quantities(const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  if (!is_abelian(sp.family) && !is_dihedral(sp.family)) {
    throw PreconditionError("derived quantities exist only for families 1, 1p, 11, 11p");
  }
  const bool pr = primed(sp.family);
  const std::int64_t m = sp.m, n = sp.n, r = sp.r, s = sp.s;
  DerivedQuantities q;
  q.h = gcd(m, n);
  q.mPrime = m / q.h;
  q.nPrime = n / q.h;
  const std::int64_t mp = q.mPrime, np = q.nPrime;
  const std::int64_t big = pr ? mp * np * r : 2 * mp * np * r;
  const std::int64_t plus = np + s * mp, minus = np - s * mp;
  q.a = reading.a_cross ? gcd(minus, mp + s * np, big) : gcd(plus, minus, big);
  const bool swap_b = !pr && reading.b1_from_sum;
  q.b1 = gcd(div_exact(swap_b ? plus : minus, q.a, "(n'-sm')/a"), big / q.a);
  q.b2 = gcd(div_exact(swap_b ? minus : plus, q.a, "(n'+sm')/a"), big / q.a);

  const bool odd_form = pr || (mp * np) % 2 == 1;
  if (odd_form && q.a % 2 != 0) throw InternalInconsistency("a must be even here");
  for (std::int64_t nu = 1; nu <= 2 * np; ++nu) {
    const std::int64_t an = q.a * nu;
    if (odd_form) {
      if ((2 * np) % an == 0 && gcd(2 * np / an, q.a / 2) == 1) {
        q.nu = nu;
        break;
      }
    } else if (np % an == 0 && gcd(np / an, q.a) == 1) {
      q.nu = nu;
      break;
    }
  }
  if (q.nu == 0) throw InternalInconsistency("no admissible nu");

  if (!pr && odd_form) {
    q.e1 = div_exact(r, q.b1, "r/b1") % 2 == 0 ? 2 : 1;
    q.e2 = div_exact(r, q.b2, "r/b2") % 2 == 0 ? 2 : 1;
  }
  const std::int64_t nu = q.nu, a = q.a;
  const std::int64_t dd = pr ? 2 * a * nu * q.b2 : q.e2 * a * nu * q.b2;
  const std::int64_t gd = pr ? 2 * a * nu * q.b1 : q.e1 * a * nu * q.b1;
  q.d = div_exact(nu * nu * a * plus + 2 * np * mp * r, dd, "d");
  q.g = div_exact(nu * nu * a * minus - 2 * np * mp * r, gd, "g");
  q.e = pr ? div_exact(mp * np * r, 2 * q.b1 * q.b2, "e") : div_exact(2 * mp * np * r, q.e1 * q.e2 * q.b1 * q.b2, "e");
  if (q.e < 1) throw InternalInconsistency("e must be positive");
  auto gb = inverse_mod(q.g, q.e);
  if (!gb) throw InternalInconsistency("g is not invertible modulo e");
  q.gBar = *gb;
  const std::int64_t two_n_over = div_exact(2 * np, a * nu, "2n'/(a nu)");
  auto fb = inverse_mod(nu * s + r * two_n_over, np * r);
  if (!fb) throw InternalInconsistency("f has no inverse modulo n'r");
  q.fBar = *fb;
  return q;
}

namespace {

std::vector<LocalInvariant> abelian_invariants(const FamilySpec& sp, const DerivedQuantities& q, Location loc) {
  if (primed(sp.family)) {
    const std::int64_t den = sp.n * sp.r / 2;
    return {inv(q.d * q.fBar * q.b2 * q.h, den, loc), inv(-q.g * q.fBar * q.b1 * q.h, den, loc)};
  }
  const std::int64_t den = sp.n * sp.r;
  return {inv(q.d * q.fBar * q.e2 * q.b2 * q.h, den, loc), inv(-q.g * q.fBar * q.e1 * q.b1 * q.h, den, loc)};
}

}  // namespace

SeifertData seifert_abelian(const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  if (!is_abelian(sp.family)) throw PreconditionError("seifert_abelian needs family 1 or 1p");
  DerivedQuantities q = derived_quantities(sp, reading);
  SeifertData d;
  d.invariants = abelian_invariants(sp, q, Location::ConePoint);
  const std::int64_t den = d.invariants.front().den;
  d.base = BaseSignature{BaseKind::Sphere, {den, den}, {}}.normalized();
  d.euler = Rational(-2 * sp.m, sp.n * sp.r);
  return d;
}

SeifertData seifert_dihedral(const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  if (!is_dihedral(sp.family)) throw PreconditionError("seifert_dihedral needs family 11 or 11p");
  DerivedQuantities q = derived_quantities(sp, reading);
  SeifertData d;
  d.invariants = abelian_invariants(sp, q, Location::CornerReflector);
  const std::int64_t den = d.invariants.front().den;
  d.base = BaseSignature{BaseKind::Disc, {}, {den, den}}.normalized();
  d.euler = Rational(-sp.m, sp.n * sp.r);
  d.xi = xi_from_somma(d);
  return d;
}

namespace {

struct Row {
  BaseKind kind;
  Rational euler;
  std::vector<LocalInvariant> invariants;
  std::string branch;
};

Row polyhedral_row(const FamilySpec& sp) {
  const std::int64_t m = sp.m, n = sp.n;
  const bool n_even = n % 2 == 0;
  const auto S = BaseKind::Sphere, D = BaseKind::Disc, P = BaseKind::ProjectivePlane;
  const auto cone = Location::ConePoint, corner = Location::CornerReflector;
  auto c = [&](std::int64_t p, std::int64_t q) { return inv(p, q, cone); };
  auto k = [&](std::int64_t p, std::int64_t q) { return inv(p, q, corner); };
  using F = FamilyId;
  switch (sp.family) {
    case F::F2: return {S, Rational(-m, n), {c(m, n), c(m, 2), c(m, 2)}, ""};
    case F::F3: return {S, Rational(-m, n), {c(m, n), c(m + 1, 2), c(m + 1, 2)}, ""};
    case F::F4: return {S, Rational(-m, 2 * n), {c(m + n, 2 * n), c(m, 2), c(m + 1, 2)}, ""};
    case F::F34: return {S, Rational(-m, 2 * n), {c((m + n) / 2, n), c(m, 2), c(m + 1, 2)}, ""};
    case F::F10:
      if (n_even) return {D, Rational(-m, 2 * n), {k(m, n), k(m, 2), k(m, 2)}, "n-even"};
      return {D, Rational(-m, 2 * n), {k(m, n), c(m, 2)}, "n-odd"};
    case F::F13bis:
      if (!n_even) return {D, Rational(-m, 2 * n), {k(m, n), k(m, 2), k(m, 2)}, "n-odd"};
      return {D, Rational(-m, 2 * n), {k(m, n), c(m, 2)}, "n-even"};
    case F::F13:
      if (n_even) return {D, Rational(-m, 2 * n), {k(m, n), k(m + 1, 2), k(m + 1, 2)}, "n-even"};
      return {D, Rational(-m, 2 * n), {k(m, n), c(m + 1, 2)}, "n-odd"};
    case F::F33:
      if (!n_even) return {D, Rational(-m, 2 * n), {k(m, n), k(m + 1, 2), k(m + 1, 2)}, "n-odd"};
      return {D, Rational(-m, 2 * n), {k(m, n), c(m + 1, 2)}, "n-even"};
    case F::F12: return {D, Rational(-m, 4 * n), {k(m + n, 2 * n), k(m, 2), k(m + 1, 2)}, ""};
    case F::F33p: return {D, Rational(-m, 4 * n), {k((m + n) / 2, n), k(m, 2), k(m + 1, 2)}, ""};
    case F::F2bis:
      if (n_even) return {D, Rational(-m, n), {c(m, n)}, "n-even"};
      return {P, Rational(-m, n), {c(m, n)}, "n-odd"};
    case F::F3bis:
      if (!n_even) return {D, Rational(-m, n), {c(m, n)}, "n-odd"};
      return {P, Rational(-m, n), {c(m, n)}, "n-even"};
    case F::F4bis: return {D, Rational(-m, 2 * n), {c(m + n, 2 * n)}, ""};
    case F::F34bis: return {D, Rational(-m, 2 * n), {c((m + n) / 2, n)}, ""};
    case F::F5: return {S, Rational(-m, 6), {c(m, 2), c(m, 3), c(m, 3)}, ""};
    case F::F6: return {S, Rational(-m, 6), {c(m, 2), c(m + 1, 3), c(m + 2, 3)}, ""};
    case F::F16: return {D, Rational(-m, 12), {k(m, 2), k(m, 3), k(m, 3)}, ""};
    case F::F18: return {D, Rational(-m, 12), {k(m, 2), k(m + 1, 3), k(m + 2, 3)}, ""};
    case F::F14: return {D, Rational(-m, 12), {k(m, 2), c(m, 3)}, ""};
    case F::F7: return {S, Rational(-m, 12), {c(m, 2), c(m, 3), c(m, 4)}, ""};
    case F::F8: return {S, Rational(-m, 12), {c(m + 1, 2), c(m, 3), c(m + 2, 4)}, ""};
    case F::F15: return {D, Rational(-m, 24), {k(m, 2), k(m, 3), k(m, 4)}, ""};
    case F::F17: return {D, Rational(-m, 24), {k(m + 1, 2), k(m, 3), k(m + 2, 4)}, ""};
    case F::F9: return {S, Rational(-m, 30), {c(m, 2), c(m, 3), c(m, 5)}, ""};
    case F::F19: return {D, Rational(-m, 60), {k(m, 2), k(m, 3), k(m, 5)}, ""};
    default: break;
  }
  throw UnsupportedFamily("family " + to_string(sp.family) + " has no closed-form row");
}

}  // namespace

SeifertData seifert_polyhedral(const FamilySpec& spec) {
  FamilySpec sp = canonical(spec);
  if (!is_polyhedral_row(sp.family)) {
    throw UnsupportedFamily("family " + to_string(sp.family) + " has no closed-form row");
  }
  Row row = polyhedral_row(sp);
  SeifertData d;
  d.euler = row.euler;
  d.base.kind = row.kind;
  for (const auto& x : row.invariants) {
    (x.location == Location::ConePoint ? d.base.cones : d.base.corners).push_back(x.den);
    if (x.den > 1) d.invariants.push_back(x);
  }
  d.base = d.base.normalized();
  if (d.base.kind == BaseKind::Disc) d.xi = xi_from_somma(d);
  return d;
}

SeifertData seifert_data(const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  if (is_abelian(sp.family)) return seifert_abelian(sp, reading);
  if (is_dihedral(sp.family)) return seifert_dihedral(sp, reading);
  if (is_polyhedral_row(sp.family)) return seifert_polyhedral(sp);
  throw UnsupportedFamily("family " + to_string(sp.family) + " preserves no fibration of S3");
}

Underlying underlying_space(const SeifertData& d, const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  if (is_abelian(sp.family)) {
    DerivedQuantities q = derived_quantities(sp, reading);
    return Underlying::lens(q.e, q.d * q.gBar);
  }
  if (is_dihedral(sp.family)) return Underlying::sphere();
  switch (d.base.kind) {
    case BaseKind::ProjectivePlane:
      return Underlying::not_computed("projective plane base");
    case BaseKind::Sphere: {
      auto u = lens_from_sphere_fibers(d.euler, d.invariants);
      if (!u) return Underlying::not_computed("more than two exceptional fibers");
      return *u;
    }
    case BaseKind::Disc: {
      std::vector<LocalInvariant> cones;
      for (const auto& x : d.invariants)
        if (x.location == Location::ConePoint) cones.push_back(x);
      if (cones.empty()) return Underlying::sphere();
      if (cones.size() > 1) return Underlying::not_computed("disc base with several cone points");
      // Generic fibers near the cone fiber run along a*mu + q'*lambda with
      // a the inverse of p' modulo q'; the other solid torus has them as meridians.
      const std::int64_t k = cones[0].index();
      const std::int64_t pp = cones[0].normalized_num() / k, qq = cones[0].den / k;
      if (qq == 1) return Underlying::sphere();
      return Underlying::lens(qq, *inverse_mod(pp, qq));
    }
  }
  return Underlying::not_computed("unknown base");
}

std::vector<std::int64_t> singular_set(const SeifertData& d, const FamilySpec& spec, Reading reading) {
  FamilySpec sp = canonical(spec);
  std::vector<std::int64_t> out;
  if (is_abelian(sp.family)) {
    DerivedQuantities q = derived_quantities(sp, reading);
    out = {q.e2 * q.b2 * q.h, q.e1 * q.b1 * q.h};
  } else {
    for (const auto& x : d.invariants) out.push_back(x.index());
  }
  std::erase_if(out, [](std::int64_t x) { return x <= 1; });
  std::sort(out.begin(), out.end());
  return out;
}

std::string provenance(const FamilySpec& spec) {
  FamilySpec sp = canonical(spec);
  const std::string f = to_string(sp.family);
  if (sp.family == FamilyId::F1 || sp.family == FamilyId::F11) {
    const std::int64_t h = gcd(sp.m, sp.n);
    const bool odd = ((sp.m / h) * (sp.n / h)) % 2 == 1;
    return std::string(sp.family == FamilyId::F1 ? "abelian-" : "dihedral-") + f +
           (odd ? ":odd-product" : ":even-product");
  }
  if (sp.family == FamilyId::F1p) return "abelian-1p";
  if (sp.family == FamilyId::F11p) return "dihedral-11p";
  if (is_polyhedral_row(sp.family)) {
    std::string b = polyhedral_row(sp).branch;
    return "row-" + f + (b.empty() ? "" : ":" + b);
  }
  return "non-fibered-" + f;
}

EngineReport engine_report(const FamilySpec& spec, Reading reading) {
  EngineReport r;
  r.spec = canonical(spec);
  r.seifert = seifert_data(r.spec, reading);
  r.topology.underlying = underlying_space(r.seifert, r.spec, reading);
  r.topology.singular_components = singular_set(r.seifert, r.spec, reading);
  r.provenance = provenance(r.spec);
  if (is_abelian(r.spec.family) || is_dihedral(r.spec.family)) r.provenance += " [" + reading.str() + "]";
  return r;
}

}  // namespace orbiseif
