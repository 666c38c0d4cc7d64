#include "cy3/classify.hpp"

#include <map>
#include <utility>

#include "cy3/k3core.hpp"
#include "cy3/lattice.hpp"

namespace cy3::classify {

namespace {

using Pair = std::pair<Int, Int>;  // (d, a) or (d0, a)

bool in_list(Int d, Int a, std::initializer_list<Pair> pairs) {
  for (const auto& p : pairs)
    if (p.first == d && p.second == a) return true;
  return false;
}

// (num/den, a) if the division is exact; non-integral special pairs never match.
bool is_pair(Int d, Int a, Int num, Int den, Int pa) {
  return a == pa && divides(den, num) && d == num / den;
}

struct Literal {
  bool ok;
  std::string why;
};

Verdict component_verdict(Int n, Int d, Int a) {
  Verdict v;
  v.n = n;
  v.d = d;
  v.a = a;
  v.lattice_exists = check_lattice_exists(n, d, a);
  if (!v.lattice_exists) {
    v.triggered.push_back({"lemma1", "lemma1", anchor_for("lemma1")});
    return v;
  }
  const k3::SurfaceSpec s = k3::derive_invariants(n, d, a);
  if (s.d0 < 1) {
    // Gamma.L = d0 must be positive before the ampleness analysis applies; only
    // a = 1 with d0 in {-1, 0} reaches this point.
    v.triggered.push_back({"lemma2", "lemma2(d0)", anchor_for("lemma2(d0)")});
    const CheckResult H = check_H_very_ample(n, d, a);
    v.H_very_ample = H.ok;
    if (!H) v.triggered.push_back({"lemma3", H.label, anchor_for(H.label)});
    return v;
  }
  const CheckResult L = check_L_ample(s.m, s.d0, a);
  const CheckResult H = check_H_very_ample(n, d, a);
  v.L_ample = L.ok;
  v.H_very_ample = H.ok;
  if (!L) v.triggered.push_back({"lemma2", L.label, anchor_for(L.label)});
  if (!H) v.triggered.push_back({"lemma3", H.label, anchor_for(H.label)});
  // Irreducibility of Gamma is only analysed when L is ample.
  if (L) {
    const CheckResult G = check_gamma_irreducible(s.m, s.d0, a);
    v.gamma_irreducible = G.ok;
    if (!G) v.triggered.push_back({"lemma4", G.label, anchor_for(G.label)});
  }
  v.components_admissible = v.lattice_exists && v.L_ample && v.H_very_ample && v.gamma_irreducible;
  return v;
}

// 3ad > ka^2 - 9, i.e. d > ka/3 - 3/a.
bool strict_bound(Int k, Int d, Int a) { return mul(mul(3, a), d) > sub(mul(k, mul(a, a)), 9); }

Literal summa_literal(Int n, Int d, Int a) {
  switch (n % 3) {
    case 0:
      if (is_pair(d, a, n, 3, 1) || is_pair(d, a, 2 * n, 3, 2)) return {true, "summa(i): special pair"};
      if (!strict_bound(n, d, a)) return {false, "summa(i): d <= na/3 - 3/a"};
      if (a == 2 && d == 2 * n / 3 - 1) return {false, "summa(i): excluded pair"};
      if (3 * d == n * a) return {false, "summa(i): 3d = na"};
      return {true, "summa(i): general"};
    case 1:
      if (in_list(d, a, {{n, 3}, {2 * n, 6}})) return {true, "summa(ii): special pair"};
      if (!strict_bound(n, d, a)) return {false, "summa(ii): d <= na/3 - 3/a"};
      if (is_pair(d, a, 2 * (n - 1), 3, 2) || is_pair(d, a, 4 * n - 1, 3, 4) || is_pair(d, a, 7 * n - 1, 3, 7))
        return {false, "summa(ii): excluded pair"};
      if (3 * d == n * a) return {false, "summa(ii): 3d = na"};
      return {true, "summa(ii): general"};
    default:
      if (is_pair(d, a, n - 2, 3, 1) || is_pair(d, a, 2 * n - 1, 3, 2)) return {true, "summa(iii): special pair"};
      if (mul(3, d) >= mul(n + 1, a)) return {true, "summa(iii): d >= (n+1)a/3"};
      return {false, "summa(iii): d < (n+1)a/3"};
  }
}

Literal iso_literal(Int g, Int d, Int a) {
  switch (g % 3) {
    case 1:
      if (is_pair(d, a, g - 1, 3, 1) || is_pair(d, a, 2 * (g - 1), 3, 2)) return {true, "iso(i): special pair"};
      if (!strict_bound(g - 1, d, a)) return {false, "iso(i): d <= (g-1)a/3 - 3/a"};
      if (a == 2 && d == 2 * (g - 1) / 3 - 1) return {false, "iso(i): excluded pair"};
      if (3 * d == (g - 1) * a) return {false, "iso(i): 3d = (g-1)a"};
      return {true, "iso(i): general"};
    case 2:
      if (in_list(d, a, {{g - 1, 3}, {2 * g - 2, 6}})) return {true, "iso(ii): special pair"};
      if (!strict_bound(g - 1, d, a)) return {false, "iso(ii): d <= (g-1)a/3 - 3/a"};
      if (is_pair(d, a, 2 * (g - 2), 3, 2) || is_pair(d, a, 4 * g - 5, 3, 4) || is_pair(d, a, 7 * g - 8, 3, 7))
        return {false, "iso(ii): excluded pair"};
      if (3 * d == (g - 1) * a) return {false, "iso(ii): 3d = (g-1)a"};
      return {true, "iso(ii): general"};
    default:
      if (is_pair(d, a, g - 3, 3, 1) || is_pair(d, a, 2 * g - 3, 3, 2)) return {true, "iso(iii): special pair"};
      if (mul(3, d) >= mul(g, a)) return {true, "iso(iii): d >= ga/3"};
      return {false, "iso(iii): d < ga/3"};
  }
}

void check_inputs(Int n, Int d, Int a) {
  if (n < 4 || d < 1 || a < 1) throw DomainError("need n >= 4, d >= 1, a >= 1");
}

void check_m(Int m, Int a) {
  if (m < 4 || m > 6) throw DomainError("m must be 4, 5 or 6");
  if (a < 1) throw DomainError("a must be positive");
}

}  // namespace

bool check_lattice_exists(Int n, Int d, Int a) {
  check_inputs(n, d, a);
  if (!strict_bound(n, d, a)) return false;
  const lattice::Signature sig = lattice::signature(lattice::build_gram(n, d, a));
  return sig.pos == 1 && sig.neg == 2 && sig.zero == 0;
}

CheckResult check_L_ample(Int m, Int d0, Int a) {
  check_m(m, a);
  if (d0 < 1) throw DomainError("check_L_ample needs d0 >= 1");
  if (mul(m, a) == mul(3, d0) && mul(m, a) % 9 == 0) return {false, "lemma2(a)"};
  if (m == 4 && in_list(d0, a, {{2, 2}, {5, 4}, {9, 7}})) return {false, "lemma2(b)"};
  if (m == 5 && in_list(d0, a, {{2, 2}, {6, 4}, {13, 8}})) return {false, "lemma2(c)"};
  if (m == 6 && d0 == 3 && a == 2) return {false, "lemma2(d)"};
  return {};
}

CheckResult check_H_very_ample(Int n, Int d, Int a) {
  check_inputs(n, d, a);
  const Int r = n % 3;
  if (mul(n, a) == mul(3, d) && a % (r == 0 ? 3 : 9) == 0) return {false, "lemma3(i)"};
  if (r == 0 && a == 2 && d == 3 + 2 * (n - 6) / 3) return {false, "lemma3(ii)"};
  // d = d0 + a(n-4)/3, resp. d0 + a(n-5)/3; n - 4 (resp. n - 5) is divisible by 3 here.
  if (r == 1) {
    for (const auto& [d0, pa] : {Pair{2, 2}, Pair{5, 4}, Pair{9, 7}})
      if (a == pa && d == d0 + a * (n - 4) / 3) return {false, "lemma3(iii)"};
  }
  if (r == 2) {
    for (const auto& [d0, pa] : {Pair{2, 2}, Pair{6, 4}, Pair{13, 8}})
      if (a == pa && d == d0 + a * (n - 5) / 3) return {false, "lemma3(iv)"};
  }
  return {};
}

CheckResult check_gamma_irreducible(Int m, Int d0, Int a) {
  check_m(m, a);
  if (m == 4 && 3 * d0 == 4 * a && a > 9) return {false, "lemma4(a)"};
  if (m == 5 && 4 < d0 && d0 < 2 * a) return {false, "lemma4(b)"};
  if (m == 6 && d0 == 2 * a && a > 3) return {false, "lemma4(c)"};
  return {};
}

std::string anchor_for(const std::string& label) {
  static const std::map<std::string, std::string> anchors{
      {"lemma1", "d <= na/3 - 3/a: no even lattice of signature (1,2)"},
      {"lemma2(d0)", "d0 = d - b a <= 0, so L.Gamma > 0 fails"},
      {"lemma2(a)", "m a = 3 d0 with 9 | m a"},
      {"lemma2(b)", "m = 4 and (d0,a) in {(2,2),(5,4),(9,7)}"},
      {"lemma2(c)", "m = 5 and (d0,a) in {(2,2),(6,4),(13,8)}"},
      {"lemma2(d)", "m = 6 and (d0,a) = (3,2)"},
      {"lemma3(i)", "na = 3d with 9 | a (n = 1,2 mod 3) or 3 | a (n = 0 mod 3)"},
      {"lemma3(ii)", "n = 0 mod 3, a = 2, d = 3 + 2(n-6)/3"},
      {"lemma3(iii)", "n = 1 mod 3, d = d0 + a(n-4)/3 with (d0,a) in {(2,2),(5,4),(9,7)}"},
      {"lemma3(iv)", "n = 2 mod 3, d = d0 + a(n-5)/3 with (d0,a) in {(2,2),(6,4),(13,8)}"},
      {"lemma4(a)", "m = 4, 3 d0 = 4a and a > 9"},
      {"lemma4(b)", "m = 5 and 4 < d0 < 2a"},
      {"lemma4(c)", "m = 6, d0 = 2a and a > 3"},
  };
  auto it = anchors.find(label);
  return it == anchors.end() ? std::string{} : it->second;
}

Verdict admissible_summa(Int n, Int d, Int a) {
  check_inputs(n, d, a);
  Verdict v = component_verdict(n, d, a);
  const Literal lit = summa_literal(n, d, a);
  v.admissible = lit.ok;
  v.literal_case = lit.why;
  return v;
}

Verdict admissible_iso(Int g, Int d, Int a) {
  if (g < 5) throw DomainError("admissible_iso needs g >= 5");
  Verdict v = component_verdict(g - 1, d, a);
  const Literal lit = iso_literal(g, d, a);
  v.admissible = lit.ok;
  v.literal_case = lit.why;
  return v;
}

}  // namespace cy3::classify
