#include "orbiseif/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "orbiseif/errors.hpp"

namespace orbiseif {

StandardGroupId StandardGroupId::cyclic(std::int64_t n) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  return {StandardKind::Cyclic, n};
}

StandardGroupId StandardGroupId::binary_dihedral(std::int64_t order) {
  if (order < 4 || order % 4 != 0) throw PreconditionError("binary dihedral order must be a positive multiple of 4");
  return {StandardKind::BinaryDihedral, order};
}

bool StandardGroupId::polyhedral() const {
  return kind == StandardKind::BinaryTetrahedral || kind == StandardKind::BinaryOctahedral ||
         kind == StandardKind::BinaryIcosahedral;
}

std::string StandardGroupId::name() const {
  switch (kind) {
    case StandardKind::Cyclic: return "C" + std::to_string(order);
    case StandardKind::BinaryDihedral: return "D*" + std::to_string(order);
    case StandardKind::BinaryTetrahedral: return "T*";
    case StandardKind::BinaryOctahedral: return "O*";
    case StandardKind::BinaryIcosahedral: return "I*";
  }
  return "?";
}

namespace quat {

namespace {
using Q = QuadFieldElement;
}  // namespace

AlgebraicQuaternion one() { return {}; }
AlgebraicQuaternion minus_one() { return {Q(-1), Q(0), Q(0), Q(0)}; }
AlgebraicQuaternion i() { return {Q(0), Q(1), Q(0), Q(0)}; }
AlgebraicQuaternion j() { return {Q(0), Q(0), Q(1), Q(0)}; }
AlgebraicQuaternion k() { return {Q(0), Q(0), Q(0), Q(1)}; }

AlgebraicQuaternion omega() {
  Rational h(1, 2);
  return {Q(h), Q(h), Q(h), Q(h)};
}

AlgebraicQuaternion octa() {
  QuadFieldElement r{0, Rational(1, 2), 0, 0};
  return {r, Q(0), r, Q(0)};
}

AlgebraicQuaternion icosa() {
  // tau^{-1}/2 = (sqrt5 - 1)/4 and tau/2 = (sqrt5 + 1)/4.
  QuadFieldElement w{Rational(-1, 4), 0, Rational(1, 4), 0};
  QuadFieldElement y{Rational(1, 4), 0, Rational(1, 4), 0};
  return {w, Q(0), y, Q(Rational(1, 2))};
}

}  // namespace quat

namespace {

GroupElement rot(std::int64_t num, std::int64_t den) { return CircleJElement(Rational(num, den), false); }
GroupElement jel() { return CircleJElement(Rational(0), true); }

}  // namespace

std::vector<GroupElement> generators(const StandardGroupId& id) {
  switch (id.kind) {
    case StandardKind::Cyclic:
      if (id.order == 1) return {};
      return {rot(1, id.order)};
    case StandardKind::BinaryDihedral: {
      std::vector<GroupElement> g;
      if (id.order / 2 > 1) g.push_back(rot(1, id.order / 2));
      g.push_back(jel());
      return g;
    }
    default:
      return algebraic_generators(id);
  }
}

std::vector<GroupElement> algebraic_generators(const StandardGroupId& id) {
  switch (id.kind) {
    case StandardKind::Cyclic:
      if (id.order == 1) return {};
      if (id.order == 2) return {quat::minus_one()};
      if (id.order == 4) return {quat::i()};
      break;
    case StandardKind::BinaryDihedral:
      if (id.order == 8) return {quat::i(), quat::j()};
      break;
    case StandardKind::BinaryTetrahedral:
      return {quat::i(), quat::j(), quat::omega()};
    case StandardKind::BinaryOctahedral:
      return {quat::i(), quat::j(), quat::omega(), quat::octa()};
    case StandardKind::BinaryIcosahedral:
      return {quat::i(), quat::j(), quat::omega(), quat::icosa()};
  }
  throw PreconditionError(id.name() + " has no algebraic form here");
}

std::vector<GroupElement> close_group(const std::vector<GroupElement>& gens, const GroupElement& identity,
                                      std::size_t cap) {
  std::set<GroupElement> seen{identity};
  std::deque<GroupElement> frontier{identity};
  while (!frontier.empty()) {
    GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement y = multiply(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw InternalInconsistency("group closure exceeded its expected size");
        frontier.push_back(y);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<GroupElement> standard_group(const StandardGroupId& id) {
  std::vector<GroupElement> gens = generators(id);
  GroupElement e = id.polyhedral() ? GroupElement(AlgebraicQuaternion{}) : GroupElement(CircleJElement{});
  auto elems = close_group(gens, e, static_cast<std::size_t>(id.order));
  if (static_cast<std::int64_t>(elems.size()) != id.order) {
    throw InternalInconsistency(id.name() + " closed to " + std::to_string(elems.size()) + " elements");
  }
  return elems;
}

namespace {

struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  AlgebraicQuaternion apply(const AlgebraicQuaternion& q) const {
    std::array<QuadFieldElement, 3> v{q.x, q.y, q.z};
    std::array<QuadFieldElement, 3> out;
    for (int a = 0; a < 3; ++a) out[a] = sign[a] == 1 ? v[perm[a]] : -v[perm[a]];
    return {q.w, out[0], out[1], out[2]};
  }
};

AlgebraicQuaternion galois5(const AlgebraicQuaternion& q) {
  return {q.w.conj5(), q.x.conj5(), q.y.conj5(), q.z.conj5()};
}

const SignedPerm& icosahedral_fix() {
  static const SignedPerm fix = [] {
    auto elems = standard_group(StandardGroupId::icosahedral());
    std::array<int, 3> perm{0, 1, 2};
    do {
      int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
      for (int mask = 0; mask < 8; ++mask) {
        SignedPerm p;
        p.perm = perm;
        int negs = 0;
        for (int a = 0; a < 3; ++a) {
          p.sign[a] = (mask >> a) & 1 ? -1 : 1;
          negs += (mask >> a) & 1;
        }
        if ((inversions + negs) % 2 != 0) continue;  // keep rotations only
        bool ok = true;
        for (const auto& g : algebraic_generators(StandardGroupId::icosahedral())) {
          GroupElement img = p.apply(galois5(std::get<AlgebraicQuaternion>(g)));
          if (!std::binary_search(elems.begin(), elems.end(), img)) {
            ok = false;
            break;
          }
        }
        if (ok) return p;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw InternalInconsistency("no signed permutation restores I* after Galois conjugation");
  }();
  return fix;
}

}  // namespace

AlgebraicQuaternion icosahedral_outer(const AlgebraicQuaternion& q) { return icosahedral_fix().apply(galois5(q)); }

// ---------------------------------------------------------------------------
// Families

namespace {

struct FamilyInfo {
  FamilyId id;
  const char* name;
  bool m, n, rs;
};

const std::vector<FamilyInfo>& family_table() {
  using F = FamilyId;
  static const std::vector<FamilyInfo> t = {
      {F::F1, "1", true, true, true},        {F::F1p, "1p", true, true, true},
      {F::F2, "2", true, true, false},       {F::F3, "3", true, true, false},
      {F::F4, "4", true, true, false},       {F::F5, "5", true, false, false},
      {F::F6, "6", true, false, false},      {F::F7, "7", true, false, false},
      {F::F8, "8", true, false, false},      {F::F9, "9", true, false, false},
      {F::F10, "10", true, true, false},     {F::F11, "11", true, true, true},
      {F::F11p, "11p", true, true, true},    {F::F12, "12", true, true, false},
      {F::F13, "13", true, true, false},     {F::F14, "14", true, false, false},
      {F::F15, "15", true, false, false},    {F::F16, "16", true, false, false},
      {F::F17, "17", true, false, false},    {F::F18, "18", true, false, false},
      {F::F19, "19", true, false, false},    {F::F33, "33", true, true, false},
      {F::F33p, "33p", true, true, false},   {F::F34, "34", true, true, false},
      {F::F2bis, "2bis", true, true, false}, {F::F3bis, "3bis", true, true, false},
      {F::F4bis, "4bis", true, true, false}, {F::F13bis, "13bis", true, true, false},
      {F::F34bis, "34bis", true, true, false},
      {F::F20, "20", false, false, false},   {F::F21, "21", false, false, false},
      {F::F21p, "21p", false, false, false}, {F::F22, "22", false, false, false},
      {F::F23, "23", false, false, false},   {F::F24, "24", false, false, false},
      {F::F25, "25", false, false, false},   {F::F26, "26", false, false, false},
      {F::F26p, "26p", false, false, false}, {F::F26pp, "26pp", false, false, false},
      {F::F27, "27", false, false, false},   {F::F28, "28", false, false, false},
      {F::F29, "29", false, false, false},   {F::F30, "30", false, false, false},
      {F::F31, "31", false, false, false},   {F::F31p, "31p", false, false, false},
      {F::F32, "32", false, false, false},   {F::F32p, "32p", false, false, false},
  };
  return t;
}

const FamilyInfo& info(FamilyId f) {
  for (const auto& i : family_table())
    if (i.id == f) return i;
  throw UnsupportedFamily("unknown family");
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& i : family_table()) v.push_back(i.id);
    return v;
  }();
  return ids;
}

std::string to_string(FamilyId f) { return info(f).name; }

std::optional<FamilyId> parse_family(const std::string& s) {
  for (const auto& i : family_table())
    if (s == i.name) return i.id;
  return std::nullopt;
}

bool uses_m(FamilyId f) { return info(f).m; }
bool uses_n(FamilyId f) { return info(f).n; }
bool uses_rs(FamilyId f) { return info(f).rs; }
bool is_fibered(FamilyId f) { return info(f).m; }
bool is_abelian(FamilyId f) { return f == FamilyId::F1 || f == FamilyId::F1p; }
bool is_dihedral(FamilyId f) { return f == FamilyId::F11 || f == FamilyId::F11p; }
bool is_polyhedral_row(FamilyId f) { return is_fibered(f) && !is_abelian(f) && !is_dihedral(f); }

std::optional<FamilyId> bis_base(FamilyId f) {
  switch (f) {
    case FamilyId::F2bis: return FamilyId::F2;
    case FamilyId::F3bis: return FamilyId::F3;
    case FamilyId::F4bis: return FamilyId::F4;
    case FamilyId::F13bis: return FamilyId::F13;
    case FamilyId::F34bis: return FamilyId::F34;
    default: return std::nullopt;
  }
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << "family " << to_string(family);
  if (uses_m(family)) os << " m=" << m;
  if (uses_n(family)) os << " n=" << n;
  if (uses_rs(family)) os << " r=" << r << " s=" << s;
  return os.str();
}

Validation validate(const FamilySpec& spec) {
  Validation v;
  v.canonical = spec;
  FamilySpec& c = v.canonical;
  FamilyId f = spec.family;
  auto need_positive = [&](bool used, std::int64_t value, const char* name, std::int64_t& slot) {
    if (!used) {
      slot = 1;
      return;
    }
    if (value < 1) v.violations.push_back(std::string(name) + " must be a positive integer");
  };
  need_positive(uses_m(f), spec.m, "m", c.m);
  need_positive(uses_n(f), spec.n, "n", c.n);
  need_positive(uses_rs(f), spec.r, "r", c.r);
  need_positive(uses_rs(f), spec.s, "s", c.s);
  if (!v.ok()) return v;

  auto odd = [&](std::int64_t x, const char* name) {
    if (x % 2 == 0) v.violations.push_back(std::string(name) + " must be odd");
  };
  if (uses_rs(f)) {
    if (gcd(spec.s, spec.r) != 1) {
      v.violations.push_back("gcd(s,r)=1 fails");
    } else {
      std::int64_t s = mod(spec.s, spec.r);
      if (s == 0) s = spec.r;
      if (s != spec.s) v.notes.push_back("s reduced modulo r to " + std::to_string(s));
      if ((f == FamilyId::F1 || f == FamilyId::F11) && s % 2 == 0) {
        v.notes.push_back("even s replaced by r-s = " + std::to_string(spec.r - s) + " (conjugate group)");
        s = spec.r - s;
      }
      c.s = s;
    }
  }
  switch (f) {
    case FamilyId::F1p:
    case FamilyId::F11p:
      odd(spec.m, "m");
      odd(spec.n, "n");
      if (spec.r % 2 != 0) v.violations.push_back("r must be even");
      break;
    case FamilyId::F33:
      if (spec.m == 1) v.violations.push_back("m must differ from 1");
      if (spec.n == 1) v.violations.push_back("n must differ from 1");
      break;
    case FamilyId::F33p:
      odd(spec.m, "m");
      odd(spec.n, "n");
      if (spec.m == 1) v.violations.push_back("m must differ from 1");
      if (spec.n == 1) v.violations.push_back("n must differ from 1");
      break;
    case FamilyId::F34:
    case FamilyId::F34bis:
      odd(spec.m, "m");
      odd(spec.n, "n");
      break;
    default:
      break;
  }
  return v;
}

std::int64_t table_phi_order(const FamilySpec& spec) {
  const std::int64_t m = spec.m, n = spec.n, r = spec.r;
  using F = FamilyId;
  switch (spec.family) {
    case F::F1: return 2 * m * n * r;
    case F::F1p: return m * n * r / 2;
    case F::F2: case F::F3: case F::F2bis: case F::F3bis: return 4 * m * n;
    case F::F4: case F::F4bis: return 8 * m * n;
    case F::F5: case F::F6: return 24 * m;
    case F::F7: case F::F8: return 48 * m;
    case F::F9: return 120 * m;
    case F::F10: return 8 * m * n;
    case F::F11: return 4 * m * n * r;
    case F::F11p: return m * n * r;
    case F::F12: return 16 * m * n;
    case F::F13: case F::F13bis: return 8 * m * n;
    case F::F14: return 48 * m;
    case F::F15: return 96 * m;
    case F::F16: return 48 * m;
    case F::F17: return 96 * m;
    case F::F18: return 48 * m;
    case F::F19: return 240 * m;
    case F::F33: return 8 * m * n;
    case F::F33p: return 4 * m * n;
    case F::F34: case F::F34bis: return 2 * m * n;
    case F::F20: return 288;
    case F::F21: return 24;
    case F::F21p: return 12;
    case F::F22: return 96;
    case F::F23: return 576;
    case F::F24: return 1440;
    case F::F25: return 1152;
    case F::F26: return 48;
    case F::F26p: case F::F26pp: return 24;
    case F::F27: return 192;
    case F::F28: return 576;
    case F::F29: return 2880;
    case F::F30: return 7200;
    case F::F31: case F::F32: return 120;
    case F::F31p: case F::F32p: return 60;
  }
  throw UnsupportedFamily("unknown family");
}

bool PairGroup::contains(const PairElement& e) const { return std::binary_search(elements.begin(), elements.end(), e); }

std::int64_t phi_order(const PairGroup& g) { return static_cast<std::int64_t>(g.elements.size()) / 2; }

namespace {

using SG = StandardGroupId;

struct Construction {
  SG L, LK, R, RK;
  bool left_algebraic = false, right_algebraic = false;
  // Images of generators of L/L_K.
  std::vector<PairElement> glue;
};

GroupElement alg(const AlgebraicQuaternion& q) { return q; }

std::vector<GroupElement> gens_in(const SG& id, bool algebraic) {
  return algebraic ? algebraic_generators(id) : generators(id);
}

Construction construct(const FamilySpec& sp) {
  const std::int64_t m = sp.m, n = sp.n, r = sp.r, s = sp.s;
  using F = FamilyId;
  auto cyc = SG::cyclic;
  auto dih = SG::binary_dihedral;
  const SG T = SG::tetrahedral(), O = SG::octahedral(), I = SG::icosahedral();
  const SG D8 = dih(8), C1 = cyc(1), C2 = cyc(2);
  const GroupElement j = jel(), w = alg(quat::omega()), o = alg(quat::octa());
  switch (sp.family) {
    case F::F1: return {cyc(2 * m * r), cyc(2 * m), cyc(2 * n * r), cyc(2 * n), false, false, {{rot(1, 2 * m * r), rot(s, 2 * n * r)}}};
    case F::F1p: return {cyc(m * r), cyc(m), cyc(n * r), cyc(n), false, false, {{rot(1, m * r), rot(s, n * r)}}};
    case F::F2: return {cyc(2 * m), cyc(2 * m), dih(4 * n), dih(4 * n), false, false, {}};
    case F::F3: return {cyc(4 * m), cyc(2 * m), dih(4 * n), cyc(2 * n), false, false, {{rot(1, 4 * m), j}}};
    case F::F4: return {cyc(4 * m), cyc(2 * m), dih(8 * n), dih(4 * n), false, false, {{rot(1, 4 * m), rot(1, 4 * n)}}};
    case F::F5: return {cyc(2 * m), cyc(2 * m), T, T, false, true, {}};
    case F::F6: return {cyc(6 * m), cyc(2 * m), T, D8, false, true, {{rot(1, 6 * m), w}}};
    case F::F7: return {cyc(2 * m), cyc(2 * m), O, O, false, true, {}};
    case F::F8: return {cyc(4 * m), cyc(2 * m), O, T, false, true, {{rot(1, 4 * m), o}}};
    case F::F9: return {cyc(2 * m), cyc(2 * m), I, I, false, true, {}};
    case F::F10: return {dih(4 * m), dih(4 * m), dih(4 * n), dih(4 * n), false, false, {}};
    case F::F11:
      return {dih(4 * m * r), cyc(2 * m), dih(4 * n * r), cyc(2 * n), false, false,
              {{rot(1, 2 * m * r), rot(s, 2 * n * r)}, {j, j}}};
    case F::F11p:
      return {dih(2 * m * r), cyc(m), dih(2 * n * r), cyc(n), false, false, {{rot(1, m * r), rot(s, n * r)}, {j, j}}};
    case F::F12: return {dih(8 * m), dih(4 * m), dih(8 * n), dih(4 * n), false, false, {{rot(1, 4 * m), rot(1, 4 * n)}}};
    case F::F13: return {dih(8 * m), dih(4 * m), dih(4 * n), cyc(2 * n), false, false, {{rot(1, 4 * m), j}}};
    case F::F14: return {dih(4 * m), dih(4 * m), T, T, false, true, {}};
    case F::F15: return {dih(4 * m), dih(4 * m), O, O, false, true, {}};
    case F::F16: return {dih(4 * m), cyc(2 * m), O, T, false, true, {{j, o}}};
    case F::F17: return {dih(8 * m), dih(4 * m), O, T, false, true, {{rot(1, 4 * m), o}}};
    case F::F18: return {dih(12 * m), cyc(2 * m), O, D8, false, true, {{rot(1, 6 * m), w}, {j, o}}};
    case F::F19: return {dih(4 * m), dih(4 * m), I, I, false, true, {}};
    case F::F33:
      return {dih(8 * m), cyc(2 * m), dih(8 * n), cyc(2 * n), false, false, {{rot(1, 4 * m), j}, {j, rot(1, 4 * n)}}};
    case F::F33p:
      return {dih(8 * m), cyc(m), dih(8 * n), cyc(n), false, false, {{rot(1, 4 * m), j}, {j, rot(1, 4 * n)}}};
    case F::F34: return {cyc(4 * m), cyc(m), dih(4 * n), cyc(n), false, false, {{rot(1, 4 * m), j}}};
    case F::F2bis: return {dih(4 * m), dih(4 * m), cyc(2 * n), cyc(2 * n), false, false, {}};
    case F::F3bis: return {dih(4 * m), cyc(2 * m), cyc(4 * n), cyc(2 * n), false, false, {{j, rot(1, 4 * n)}}};
    case F::F4bis: return {dih(8 * m), dih(4 * m), cyc(4 * n), cyc(2 * n), false, false, {{rot(1, 4 * m), rot(1, 4 * n)}}};
    case F::F13bis: return {dih(4 * m), cyc(2 * m), dih(8 * n), dih(4 * n), false, false, {{j, rot(1, 4 * n)}}};
    case F::F34bis: return {dih(4 * m), cyc(m), cyc(4 * n), cyc(n), false, false, {{j, rot(1, 4 * n)}}};
    default: break;
  }
  // Both factors polyhedral: no Hopf-preserving structure, built for order checks.
  auto diagonal = [](const SG& g, bool twist_octa, bool outer_ico) {
    std::vector<PairElement> out;
    for (const auto& x : algebraic_generators(g)) {
      GroupElement y = x;
      const auto& q = std::get<AlgebraicQuaternion>(x);
      if (twist_octa && q == quat::octa()) y = -q;
      if (outer_ico) y = icosahedral_outer(q);
      out.push_back({x, y});
    }
    return out;
  };
  switch (sp.family) {
    case F::F20: return {T, T, T, T, true, true, {}};
    case F::F21: return {T, C2, T, C2, true, true, diagonal(T, false, false)};
    case F::F21p: return {T, C1, T, C1, true, true, diagonal(T, false, false)};
    case F::F22: return {T, D8, T, D8, true, true, {{w, w}}};
    case F::F23: return {T, T, O, O, true, true, {}};
    case F::F24: return {T, T, I, I, true, true, {}};
    case F::F25: return {O, O, O, O, true, true, {}};
    case F::F26: return {O, C2, O, C2, true, true, diagonal(O, false, false)};
    case F::F26p: return {O, C1, O, C1, true, true, diagonal(O, false, false)};
    case F::F26pp: return {O, C1, O, C1, true, true, diagonal(O, true, false)};
    case F::F27: return {O, D8, O, D8, true, true, {{w, w}, {o, o}}};
    case F::F28: return {O, T, O, T, true, true, {{o, o}}};
    case F::F29: return {O, O, I, I, true, true, {}};
    case F::F30: return {I, I, I, I, true, true, {}};
    case F::F31: return {I, C2, I, C2, true, true, diagonal(I, false, false)};
    case F::F31p: return {I, C1, I, C1, true, true, diagonal(I, false, false)};
    case F::F32: return {I, C2, I, C2, true, true, diagonal(I, false, true)};
    case F::F32p: return {I, C1, I, C1, true, true, diagonal(I, false, true)};
    default: break;
  }
  throw UnsupportedFamily("no construction for family " + to_string(sp.family));
}

}  // namespace

PairGroup goursat_group(const FamilySpec& spec) {
  Validation v = validate(spec);
  if (!v.ok()) throw PreconditionError(spec.str() + ": " + v.violations.front());
  // The group is built from the spec as given; s-normalization only matters downstream.
  FamilySpec sp = spec;
  if (uses_rs(sp.family)) sp.s = mod(sp.s, sp.r) == 0 ? sp.r : mod(sp.s, sp.r);
  Construction c = construct(sp);

  GroupElement one_l = c.left_algebraic ? GroupElement(AlgebraicQuaternion{}) : GroupElement(CircleJElement{});
  GroupElement one_r = c.right_algebraic ? GroupElement(AlgebraicQuaternion{}) : GroupElement(CircleJElement{});
  std::vector<PairElement> gens = c.glue;
  for (const auto& k : gens_in(c.LK, c.left_algebraic)) gens.push_back({k, one_r});
  for (const auto& k : gens_in(c.RK, c.right_algebraic)) gens.push_back({one_l, k});

  const std::int64_t expected = c.L.order * c.RK.order;
  if (expected != 2 * table_phi_order(sp)) {
    throw InternalInconsistency(sp.str() + ": Goursat data order disagrees with the order formula");
  }

  std::set<PairElement> seen{{one_l, one_r}};
  std::deque<PairElement> frontier{{one_l, one_r}};
  while (!frontier.empty()) {
    PairElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      PairElement y = multiply(x, g);
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(seen.size()) > expected) {
          throw InternalInconsistency(sp.str() + ": closure is larger than |L|*|R_K|");
        }
        frontier.push_back(y);
      }
    }
  }
  if (static_cast<std::int64_t>(seen.size()) != expected) {
    throw InternalInconsistency(sp.str() + ": closure has " + std::to_string(seen.size()) + " elements, expected " +
                                std::to_string(expected));
  }
  PairGroup g;
  g.spec = spec;
  g.left = c.L;
  g.left_kernel = c.LK;
  g.right = c.R;
  g.right_kernel = c.RK;
  g.elements.assign(seen.begin(), seen.end());
  return g;
}

std::vector<FamilySpec> enumerate_specs(std::int64_t max_order, const std::vector<FamilyId>& families) {
  std::vector<FamilySpec> out;
  // Every order formula is at least m*n*r/2, so m*n*r <= 2*max_order bounds the search.
  const std::int64_t bound = 2 * max_order;
  auto consider = [&](const FamilySpec& sp) {
    if (validate(sp).ok() && table_phi_order(sp) <= max_order) out.push_back(sp);
  };
  for (FamilyId f : families) {
    FamilySpec sp{f};
    if (!uses_m(f)) {
      consider(sp);
      continue;
    }
    for (sp.m = 1; sp.m <= bound; ++sp.m) {
      const std::int64_t n_max = uses_n(f) ? bound / sp.m : 1;
      for (sp.n = 1; sp.n <= n_max; ++sp.n) {
        if (!uses_rs(f)) {
          consider(sp);
          continue;
        }
        for (sp.r = 1; sp.r <= bound / (sp.m * sp.n); ++sp.r) {
          for (sp.s = 1; sp.s <= sp.r; ++sp.s) consider(sp);
        }
      }
    }
  }
  return out;
}

}  // namespace orbiseif
