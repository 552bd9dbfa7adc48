#include "e8check/graded.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace e8check {

namespace {

constexpr int kGenDegree[kNumGens] = {1, 2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6};
constexpr const char* kGenName[kNumGens] = {
    "U",     "pX2",   "pX4",   "pX6",   "pY2_1", "pY4_1", "pY6_1",
    "pY2_2", "pY4_2", "pY6_2", "pY2_3", "pY4_3", "pY6_3"};

uint64_t pack_key(const std::array<uint8_t, kNumGens>& e) {
  uint64_t k = 0;
  for (int g = 0; g < kNumGens; ++g) k = (k << 4) | e[g];
  return k;
}

// degree ascending, then lexicographic with U most significant and higher
// powers first
bool mono_before(const std::array<uint8_t, kNumGens>& x, int dx,
                 const std::array<uint8_t, kNumGens>& y, int dy) {
  if (dx != dy) return dx < dy;
  for (int g = 0; g < kNumGens; ++g)
    if (x[g] != y[g]) return x[g] > y[g];
  return false;
}

std::unordered_map<uint64_t, int>& key_index() {
  static std::unordered_map<uint64_t, int> m;
  return m;
}

}  // namespace

int gen_degree(Gen g) { return kGenDegree[static_cast<int>(g)]; }
const char* gen_name(Gen g) { return kGenName[static_cast<int>(g)]; }

Gen e8_powersum_gen(int bundle, int power) {
  if (bundle < 1 || bundle > 3 || power < 2 || power > 6 || power % 2 != 0)
    throw std::invalid_argument("e8_powersum_gen: bad bundle/power");
  int base = static_cast<int>(Gen::pY2_1) + 3 * (bundle - 1);
  return static_cast<Gen>(base + (power / 2 - 1));
}

MonomialTable::MonomialTable() {
  std::array<uint8_t, kNumGens> e{};
  // enumerate exponent vectors of weighted degree <= kMaxDegree
  auto rec = [&](auto&& self, int g, int deg) -> void {
    if (g == kNumGens) {
      monos_.push_back({e, deg});
      return;
    }
    int d = kGenDegree[g];
    for (int k = 0; deg + k * d <= kMaxDegree; ++k) {
      e[g] = static_cast<uint8_t>(k);
      self(self, g + 1, deg + k * d);
    }
    e[g] = 0;
  };
  rec(rec, 0, 0);

  std::sort(monos_.begin(), monos_.end(), [](const Mono& x, const Mono& y) {
    return mono_before(x.e, x.degree, y.e, y.degree);
  });

  auto& idx = key_index();
  for (int i = 0; i < size(); ++i) idx[pack_key(monos_[i].e)] = i;

  for (int g = 0; g < kNumGens; ++g) {
    std::array<uint8_t, kNumGens> v{};
    v[g] = 1;
    gen_index_[g] = idx.at(pack_key(v));
  }

  int n = size();
  prod_.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (monos_[i].degree + monos_[j].degree > kMaxDegree) continue;
      std::array<uint8_t, kNumGens> v;
      for (int g = 0; g < kNumGens; ++g)
        v[g] = static_cast<uint8_t>(monos_[i].e[g] + monos_[j].e[g]);
      int k = idx.at(pack_key(v));
      prod_[static_cast<size_t>(i) * n + j] = static_cast<int16_t>(k);
      prod_[static_cast<size_t>(j) * n + i] = static_cast<int16_t>(k);
    }
  }
}

const MonomialTable& MonomialTable::get() {
  static MonomialTable t;
  return t;
}

int MonomialTable::index_of(const std::array<uint8_t, kNumGens>& e) const {
  auto it = key_index().find(pack_key(e));
  return it == key_index().end() ? -1 : it->second;
}

std::string MonomialTable::name(int idx) const {
  const Mono& m = monos_[idx];
  std::string s;
  for (int g = 0; g < kNumGens; ++g) {
    if (m.e[g] == 0) continue;
    if (!s.empty()) s += "*";
    s += kGenName[g];
    if (m.e[g] > 1) {
      s += "^";
      s += std::to_string(m.e[g]);
    }
  }
  return s.empty() ? "1" : s;
}

GradedElem GradedElem::from_rat(const Rat& r) {
  GradedElem x;
  if (sgn(r) != 0) x.terms.emplace_back(0, r);
  return x;
}

GradedElem GradedElem::gen(Gen g) {
  GradedElem x;
  x.terms.emplace_back(MonomialTable::get().index_of_gen(g), Rat(1));
  return x;
}

GradedElem GradedElem::monomial(int idx, const Rat& coeff) {
  GradedElem x;
  if (sgn(coeff) != 0) x.terms.emplace_back(idx, coeff);
  return x;
}

Rat GradedElem::scalar_part() const {
  if (!terms.empty() && terms.front().first == 0) return terms.front().second;
  return Rat(0);
}

Rat GradedElem::coeff(int mono_idx) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), mono_idx,
      [](const std::pair<int, Rat>& t, int i) { return t.first < i; });
  if (it != terms.end() && it->first == mono_idx) return it->second;
  return Rat(0);
}

bool GradedElem::contains(Gen g) const {
  const auto& T = MonomialTable::get();
  for (const auto& [i, c] : terms)
    if (T.exponent(i, g) > 0) return true;
  return false;
}

int GradedElem::max_degree() const {
  const auto& T = MonomialTable::get();
  int d = 0;
  for (const auto& [i, c] : terms) d = std::max(d, T.degree(i));
  return d;
}

GradedElem& GradedElem::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<int, Rat>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return sgn(t.second) == 0; }),
            out.end());
  terms = std::move(out);
  return *this;
}

GradedElem operator+(const GradedElem& a, const GradedElem& b) {
  GradedElem r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].first < b.terms[j].first) {
      r.terms.push_back(a.terms[i++]);
    } else if (a.terms[i].first > b.terms[j].first) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Rat c = a.terms[i].second + b.terms[j].second;
      if (sgn(c) != 0) r.terms.emplace_back(a.terms[i].first, c);
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

GradedElem operator-(const GradedElem& a) {
  GradedElem r = a;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

GradedElem operator-(const GradedElem& a, const GradedElem& b) { return a + (-b); }

GradedElem operator*(const GradedElem& a, const GradedElem& b) {
  const auto& T = MonomialTable::get();
  const int n = T.size();
  thread_local std::vector<Rat> scratch;
  thread_local std::vector<char> used;
  if (static_cast<int>(scratch.size()) < n) {
    scratch.assign(n, Rat(0));
    used.assign(n, 0);
  }
  for (const auto& [ia, ca] : a.terms) {
    for (const auto& [ib, cb] : b.terms) {
      int k = T.mul(ia, ib);
      if (k < 0) continue;
      if (!used[k]) {
        scratch[k] = ca * cb;
        used[k] = 1;
      } else {
        scratch[k] += ca * cb;
      }
    }
  }
  GradedElem r;
  for (int k = 0; k < n; ++k) {
    if (!used[k]) continue;
    if (sgn(scratch[k]) != 0) r.terms.emplace_back(k, scratch[k]);
    scratch[k] = 0;
    used[k] = 0;
  }
  return r;
}

GradedElem operator*(const GradedElem& a, const Rat& r) {
  if (sgn(r) == 0) return GradedElem();
  GradedElem x = a;
  for (auto& t : x.terms) t.second *= r;
  return x;
}

GradedElem operator*(const Rat& r, const GradedElem& a) { return a * r; }

bool operator==(const GradedElem& a, const GradedElem& b) { return a.terms == b.terms; }

GradedElem degree_component(const GradedElem& a, int d) {
  const auto& T = MonomialTable::get();
  GradedElem r;
  for (const auto& t : a.terms)
    if (T.degree(t.first) == d) r.terms.push_back(t);
  return r;
}

GradedElem graded_pow(const GradedElem& a, int n) {
  if (n < 0) throw std::invalid_argument("graded_pow: negative exponent");
  GradedElem r = ring<GradedElem>::one();
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

GradedElem adams(int m, const GradedElem& a) {
  if (m < 1) throw std::invalid_argument("adams: m must be >= 1");
  const auto& T = MonomialTable::get();
  Rat pw[kMaxDegree + 1];
  pw[0] = 1;
  for (int d = 1; d <= kMaxDegree; ++d) pw[d] = pw[d - 1] * m;
  GradedElem r = a;
  for (auto& t : r.terms) t.second *= pw[T.degree(t.first)];
  return r;
}

GradedElem substitute(const GradedElem& a, Gen var, const GradedElem& repl) {
  const auto& T = MonomialTable::get();
  int vdeg = gen_degree(var);
  int maxp = kMaxDegree / vdeg;
  std::vector<GradedElem> pw(maxp + 1);
  pw[0] = ring<GradedElem>::one();
  for (int k = 1; k <= maxp; ++k) pw[k] = pw[k - 1] * repl;

  GradedElem out;
  for (const auto& [idx, c] : a.terms) {
    int e = T.exponent(idx, var);
    if (e == 0) {
      out = out + GradedElem::monomial(idx, c);
      continue;
    }
    std::array<uint8_t, kNumGens> rest{};
    for (int g = 0; g < kNumGens; ++g) rest[g] = T.exponent(idx, static_cast<Gen>(g));
    rest[static_cast<int>(var)] = 0;
    int ridx = T.index_of(rest);
    out = out + GradedElem::monomial(ridx, c) * pw[e];
  }
  return out;
}

GradedElem eliminate(const GradedElem& a, Gen var, const GradedElem& repl) {
  if (repl.contains(var))
    throw std::invalid_argument("eliminate: replacement mentions the eliminated generator");
  if (!repl.is_zero()) {
    const auto& T = MonomialTable::get();
    for (const auto& [i, c] : repl.terms)
      if (T.degree(i) != gen_degree(var))
        throw std::invalid_argument("eliminate: replacement is not homogeneous of the right degree");
  }
  return substitute(a, var, repl);
}

GradedElem graded_inv(const GradedElem& a) {
  Rat c = a.scalar_part();
  if (sgn(c) == 0) throw std::invalid_argument("graded_inv: scalar part vanishes");
  GradedElem n = (a - GradedElem::from_rat(c)) * Rat(Rat(-1) / c);
  // 1/a = (1/c) * (1 + n + n^2 + ...), n nilpotent
  GradedElem acc = ring<GradedElem>::one();
  GradedElem pw = n;
  while (!pw.is_zero()) {
    acc = acc + pw;
    pw = pw * n;
  }
  return acc * Rat(Rat(1) / c);
}

GradedElem graded_exp_nilpotent(const GradedElem& a) {
  if (sgn(a.scalar_part()) != 0)
    throw std::invalid_argument("graded_exp_nilpotent: scalar part must vanish");
  GradedElem acc = ring<GradedElem>::one();
  GradedElem term = ring<GradedElem>::one();
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > kMaxDegree + 2) break;
    term = (term * a) * Rat(1, k);
    acc = acc + term;
  }
  return acc;
}

std::string graded_str(const GradedElem& a) {
  if (a.terms.empty()) return "0";
  const auto& T = MonomialTable::get();
  std::string s;
  bool first = true;
  for (const auto& [idx, c] : a.terms) {
    Rat ab = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
      first = false;
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = T.name(idx);
    if (mono == "1") {
      s += ab.get_str();
    } else {
      if (ab != 1) {
        s += ab.get_str();
        s += "*";
      }
      s += mono;
    }
  }
  return s;
}

SPoly operator+(const SPoly& x, const SPoly& y) {
  return SPoly({x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]});
}

SPoly operator-(const SPoly& x, const SPoly& y) {
  return SPoly({x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2], x.a[3] - y.a[3]});
}

SPoly operator-(const SPoly& x) {
  return SPoly({-x.a[0], -x.a[1], -x.a[2], -x.a[3]});
}

SPoly operator*(const SPoly& x, const SPoly& y) {
  SPoly r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) r.a[i + j] += x.a[i] * y.a[j];
  return r;
}

SPoly ring<SPoly>::invert(const SPoly& x) {
  if (sgn(x.a[0]) == 0) throw std::invalid_argument("SPoly: inverting a non-unit");
  Rat i0 = Rat(1) / x.a[0];
  SPoly r;
  r.a[0] = i0;
  for (int k = 1; k < 4; ++k) {
    Rat acc(0);
    for (int j = 1; j <= k; ++j) acc += x.a[j] * r.a[k - j];
    r.a[k] = -i0 * acc;
  }
  return r;
}

namespace {
// factorial-based even expansions: cosh(tX) = sum (t^2 s)^k / (2k)!
SPoly cosh_scaled(const Rat& t) {
  Rat t2 = t * t;
  Rat f2 = 2, f4 = 24, f6 = 720;
  return SPoly({Rat(1), t2 / f2, t2 * t2 / f4, t2 * t2 * t2 / f6});
}
// sinh(tX)/(tX) = sum (t^2 s)^k / (2k+1)!
SPoly sinhc_scaled(const Rat& t) {
  Rat t2 = t * t;
  Rat f3 = 6, f5 = 120, f7 = 5040;
  return SPoly({Rat(1), t2 / f3, t2 * t2 / f5, t2 * t2 * t2 / f7});
}
}  // namespace

SPoly spoly_cosh_full() { return cosh_scaled(Rat(1)); }
SPoly spoly_cosh_half() { return cosh_scaled(Rat(1, 2)); }
SPoly spoly_two_cosh_half() { return ring<SPoly>::scale(spoly_cosh_half(), Rat(2)); }
SPoly spoly_sinhc_half() { return sinhc_scaled(Rat(1, 2)); }
SPoly spoly_ahat_kernel() { return ring<SPoly>::invert(spoly_sinhc_half()); }
SPoly spoly_lhat_kernel() {
  // X/tanh(X/2) = 2 cosh(X/2) / (sinh(X/2)/(X/2))
  return ring<SPoly>::scale(spoly_cosh_half() * spoly_ahat_kernel(), Rat(2));
}

int root_count(RootGroup g) {
  switch (g) {
    case RootGroup::Tangent: return 6;
    case RootGroup::E8_1:
    case RootGroup::E8_2:
    case RootGroup::E8_3: return 8;
    case RootGroup::Xi: return 2;
  }
  throw std::logic_error("root_count: bad group");
}

GradedElem root_power_sum(RootGroup g, int two_j) {
  if (two_j != 2 && two_j != 4 && two_j != 6)
    throw std::invalid_argument("root_power_sum: power must be 2, 4 or 6");
  switch (g) {
    case RootGroup::Tangent:
      return GradedElem::gen(static_cast<Gen>(static_cast<int>(Gen::pX2) + two_j / 2 - 1));
    case RootGroup::E8_1: return GradedElem::gen(e8_powersum_gen(1, two_j));
    case RootGroup::E8_2: return GradedElem::gen(e8_powersum_gen(2, two_j));
    case RootGroup::E8_3: return GradedElem::gen(e8_powersum_gen(3, two_j));
    case RootGroup::Xi: {
      // roots +U and -U: sum = 2 U^{2j}
      GradedElem u = GradedElem::gen(Gen::U);
      return graded_pow(u, two_j) * Rat(2);
    }
  }
  throw std::logic_error("root_power_sum: bad group");
}

GradedSeries symmetrize_sum(const EvenRootSeries& f, RootGroup g) {
  Rat count(root_count(g));
  GradedElem p2 = root_power_sum(g, 2);
  GradedElem p4 = root_power_sum(g, 4);
  GradedElem p6 = root_power_sum(g, 6);
  GradedSeries r(f.order, f.eighth);
  for (int k = 0; k < f.order; ++k) {
    const SPoly& s = f.c[k];
    GradedElem acc = GradedElem::from_rat(s.a[0] * count);
    if (sgn(s.a[1]) != 0) acc = acc + p2 * s.a[1];
    if (sgn(s.a[2]) != 0) acc = acc + p4 * s.a[2];
    if (sgn(s.a[3]) != 0) acc = acc + p6 * s.a[3];
    r.c[k] = acc;
  }
  return r;
}

GradedElem spoly_eval_at_u2(const SPoly& f) {
  GradedElem u2 = graded_pow(GradedElem::gen(Gen::U), 2);
  GradedElem acc = GradedElem::from_rat(f.a[0]);
  GradedElem p = ring<GradedElem>::one();
  for (int k = 1; k < 4; ++k) {
    p = p * u2;
    if (sgn(f.a[k]) != 0) acc = acc + p * f.a[k];
  }
  return acc;
}

GradedSeries symmetrize_prod(const EvenRootSeries& f, RootGroup g) {
  if (g == RootGroup::Xi) {
    GradedSeries ev = qs_map<GradedElem>(f, [](const SPoly& s) { return spoly_eval_at_u2(s); });
    return qs_mul(ev, ev);
  }
  if (f.eighth != 0)
    throw std::invalid_argument("symmetrize_prod: kernel carries a q^{1/8} prefactor");
  Rat c0 = f.c[0].a[0];
  if (sgn(c0) == 0) throw std::invalid_argument("symmetrize_prod: kernel not a unit at the origin");
  EvenRootSeries unitized = (c0 == 1) ? f : qs_scale(f, Rat(1) / c0);
  GradedSeries r = qs_exp(symmetrize_sum(qs_log(unitized), g));
  if (c0 != 1) {
    Rat scale(1);
    for (int i = 0; i < root_count(g); ++i) scale *= c0;
    r = qs_scale(std::move(r), scale);
  }
  return r;
}

GradedElem symmetrize_prod_const(const SPoly& f, RootGroup g) {
  if (g == RootGroup::Xi) {
    GradedElem e = spoly_eval_at_u2(f);
    return e * e;
  }
  Rat c0 = f.a[0];
  if (sgn(c0) == 0) throw std::invalid_argument("symmetrize_prod_const: non-unit kernel");
  SPoly n = ring<SPoly>::scale(f, Rat(1) / c0);
  n.a[0] = 0;
  // log(1+n) = n - n^2/2 + n^3/3 on the nilpotent part
  SPoly n2 = n * n;
  SPoly n3 = n2 * n;
  SPoly lg = n - ring<SPoly>::scale(n2, Rat(1, 2)) + ring<SPoly>::scale(n3, Rat(1, 3));
  GradedElem expo;
  if (sgn(lg.a[1]) != 0) expo = expo + root_power_sum(g, 2) * lg.a[1];
  if (sgn(lg.a[2]) != 0) expo = expo + root_power_sum(g, 4) * lg.a[2];
  if (sgn(lg.a[3]) != 0) expo = expo + root_power_sum(g, 6) * lg.a[3];
  GradedElem r = graded_exp_nilpotent(expo);
  Rat scale(1);
  for (int i = 0; i < root_count(g); ++i) scale *= c0;
  return r * scale;
}

GradedSeries promote(const ScalarSeries& s) {
  return qs_map<GradedElem>(s, [](const Rat& r) { return GradedElem::from_rat(r); });
}

GradedSeries adams(int m, const GradedSeries& s) {
  return qs_map<GradedElem>(s, [m](const GradedElem& x) { return adams(m, x); });
}

GradedSeries degree_component(const GradedSeries& s, int d) {
  return qs_map<GradedElem>(s, [d](const GradedElem& x) { return degree_component(x, d); });
}

GradedSeries eliminate(const GradedSeries& s, Gen var, const GradedElem& repl) {
  return qs_map<GradedElem>(s, [&](const GradedElem& x) { return eliminate(x, var, repl); });
}

}  // namespace e8check
