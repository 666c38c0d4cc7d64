#include "cy3/dioph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cy3::dioph {

using lattice::Mat3;
using lattice::Vec3;

namespace {

// Column operation mixing columns i and j of a (2x3) and u (3x3) so that
// a[row][j] becomes 0 and a[row][i] becomes gcd(a[row][i], a[row][j]).
void clear_entry(std::array<Vec3, 2>& a, Mat3& u, int row, int i, int j) {
  const Int p = a[row][i];
  const Int q = a[row][j];
  if (q == 0) return;
  const ExtGcd e = ext_gcd(p, q);
  const Int pg = p / e.g;
  const Int qg = q / e.g;
  auto mix = [&](Int ci, Int cj, Int& out_i, Int& out_j) {
    const Int ni = add(mul(e.s, ci), mul(e.t, cj));
    const Int nj = add(mul(neg(qg), ci), mul(pg, cj));
    out_i = ni;
    out_j = nj;
  };
  for (auto& r : a) mix(r[i], r[j], r[i], r[j]);
  for (auto& r : u) mix(r[i], r[j], r[i], r[j]);
}

Vec3 apply(const Mat3& u, const Vec3& w) {
  Vec3 v{};
  for (int i = 0; i < 3; ++i) {
    Int acc = 0;
    for (int j = 0; j < 3; ++j) acc = add(acc, mul(u[i][j], w[j]));
    v[i] = acc;
  }
  return v;
}

bool compare(Int lhs, Cmp cmp, Int rhs) {
  switch (cmp) {
    case Cmp::Eq: return lhs == rhs;
    case Cmp::Le: return lhs <= rhs;
    case Cmp::Ge: return lhs >= rhs;
  }
  return false;
}

SolveResult bounded(const ConstraintSystem& sys, Int box) {
  SolveResult r;
  auto preds = predicates_for(sys);
  r.classes = brute_force_oracle(sys.G, preds, box);
  r.mode = SolveMode::BoundedSearch;
  r.exhaustive = false;
  r.box = box;
  return r;
}

}  // namespace

Int SolveResult::max_abs_coordinate() const {
  Int best = 0;
  for (const auto& c : classes)
    for (Int x : c.coords) best = std::max(best, abs_checked(x));
  return best;
}

std::vector<Predicate> predicates_for(const ConstraintSystem& sys) {
  std::vector<Predicate> preds{Predicate::self_intersection(sys.self_int_target)};
  for (const auto& lc : sys.linear) preds.push_back(Predicate::pairing(lc.with, lc.value));
  return preds;
}

bool Predicate::holds(const DivisorClass& v, const GramMatrix& G) const {
  const Int lhs = with ? lattice::pair(v, *with, G) : lattice::pair(v, v, G);
  return compare(lhs, cmp, value);
}

SolveResult solve(const ConstraintSystem& sys, Int box) {
  if (sys.linear.size() > 2) throw DomainError("solve: at most two linear constraints");
  for (const auto& lc : sys.linear)
    if (lc.with.basis != sys.G.basis()) throw BasisMismatch("solve: constraint class in a different basis");
  if (sys.linear.size() < 2) return bounded(sys, box);

  std::array<Vec3, 2> a{lattice::linear_form(sys.linear[0].with, sys.G),
                        lattice::linear_form(sys.linear[1].with, sys.G)};
  Mat3 u{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  // Column Hermite form: a = [[g1,0,0],[p,g2,0]].
  if (a[0][0] == 0 && a[0][1] == 0 && a[0][2] == 0) return bounded(sys, box);
  clear_entry(a, u, 0, 0, 1);
  clear_entry(a, u, 0, 0, 2);
  if (a[0][0] == 0) {
    // Only possible if the first two columns were zero; bring a nonzero one up front.
    return bounded(sys, box);
  }
  clear_entry(a, u, 1, 1, 2);
  if (a[1][1] == 0) return bounded(sys, box);  // dependent constraints

  SolveResult result;
  const Int b1 = sys.linear[0].value;
  const Int b2 = sys.linear[1].value;
  if (!divides(a[0][0], b1)) return result;
  const Int w1 = b1 / a[0][0];
  const Int rest = sub(b2, mul(a[1][0], w1));
  if (!divides(a[1][1], rest)) return result;
  const Int w2 = rest / a[1][1];

  const lattice::BasisTag tag = sys.G.basis();
  const Vec3 v0c = apply(u, {w1, w2, 0});
  const Vec3 kc = apply(u, {0, 0, 1});
  const DivisorClass v0{v0c[0], v0c[1], v0c[2], tag};
  const DivisorClass k{kc[0], kc[1], kc[2], tag};

  // (v0 + t k)^2 - q = A t^2 + 2 B t + C.
  const Int A = lattice::pair(k, k, sys.G);
  const Int B = lattice::pair(v0, k, sys.G);
  const Int C = sub(lattice::pair(v0, v0, sys.G), sys.self_int_target);

  std::vector<Int> ts;
  if (A != 0) {
    const Int disc = sub(mul(B, B), mul(A, C));
    const Int root = exact_isqrt(disc);
    if (root >= 0) {
      for (Int sgn : {Int{1}, Int{-1}}) {
        const Int num = add(neg(B), mul(sgn, root));
        if (divides(A, num)) ts.push_back(num / A);
      }
    }
  } else if (B != 0) {
    if (divides(mul(2, B), neg(C))) ts.push_back(neg(C) / mul(2, B));
  } else if (C == 0) {
    // Every point of the line solves the system.
    result.infinite_family = true;
    result.exhaustive = false;
    result.box = box;
    for (const auto& v : bounded(sys, box).classes) result.classes.push_back(v);
    return result;
  }

  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (Int t : ts) result.classes.push_back(v0 + t * k);
  std::sort(result.classes.begin(), result.classes.end());
  return result;
}

std::vector<DivisorClass> brute_force_oracle(const GramMatrix& G, std::span<const Predicate> predicates, Int box) {
  if (box < 0) throw DomainError("oracle box must be non-negative");
  const lattice::BasisTag tag = G.basis();

  struct Linear {
    Vec3 row;
    Cmp cmp;
    Int value;
  };
  std::vector<Linear> linear;
  std::vector<Predicate> quadratic;
  for (const auto& p : predicates) {
    if (p.with) {
      linear.push_back({lattice::linear_form(*p.with, G), p.cmp, p.value});
    } else {
      quadratic.push_back(p);
    }
  }

  // Range checks up front so the scan itself can use plain arithmetic.
  for (const auto& l : linear) {
    Int bound = 0;
    for (Int c : l.row) bound = add(bound, mul(abs_checked(c), box));
  }
  {
    Int bound = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) bound = add(bound, mul(abs_checked(G(i, j)), mul(box, box)));
  }

  // An equality whose z-coefficient is nonzero pins z for each (x, y); the
  // scan then visits one z instead of 2*box+1.  Order is unchanged.
  const Linear* pin = nullptr;
  for (const auto& l : linear)
    if (l.cmp == Cmp::Eq && l.row[2] != 0) {
      pin = &l;
      break;
    }

  std::vector<DivisorClass> out;
  auto visit = [&](Int x, Int y, Int z) {
    for (const auto& l : linear)
      if (!compare(l.row[0] * x + l.row[1] * y + l.row[2] * z, l.cmp, l.value)) return;
    const DivisorClass v{x, y, z, tag};
    for (const auto& q : quadratic)
      if (!q.holds(v, G)) return;
    out.push_back(v);
  };
  for (Int x = -box; x <= box; ++x)
    for (Int y = -box; y <= box; ++y) {
      if (pin) {
        const Int rem = pin->value - pin->row[0] * x - pin->row[1] * y;
        if (rem % pin->row[2] != 0) continue;
        const Int z = rem / pin->row[2];
        if (z >= -box && z <= box) visit(x, y, z);
      } else {
        for (Int z = -box; z <= box; ++z) visit(x, y, z);
      }
    }
  return out;
}

Int oracle_box_from_env(Int fallback) {
  const char* env = std::getenv("CY3_ORACLE_BOX");
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(env, &used);
  } catch (const std::exception&) {
    throw DomainError(std::string("CY3_ORACLE_BOX is not an integer: ") + env);
  }
  if (used != std::string(env).size() || v < 0) throw DomainError(std::string("bad CY3_ORACLE_BOX: ") + env);
  return v;
}

}  // namespace cy3::dioph
