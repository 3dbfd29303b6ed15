#include "vancalc/doublebox.hpp"

#include <functional>
#include <random>

#include "vancalc/local_models.hpp"
#include "vancalc/sss.hpp"

namespace vancalc {

DbCase parse_db_case(const std::string& s) {
  if (s == "dgt4" || s == "Dgt4") return DbCase::dgt4;
  if (s == "deq4" || s == "Deq4") return DbCase::deq4;
  throw InputError("unknown double-box case '" + s + "' (expected dgt4 or deq4)");
}

std::string db_case_name(DbCase c) { return c == DbCase::dgt4 ? "dgt4" : "deq4"; }

KinematicData sample_kinematics(uint64_t seed, DbCase which) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto rr = [&] {
    int n = num(gen);
    int d = den(gen);
    return rat(n ? n : 1, d);
  };
  KinematicData k;
  k.which = which;
  k.seed = seed;
  k.dim = which == DbCase::dgt4 ? 5 : 4;
  auto vec = [&] {
    std::vector<Rational> v(k.dim);
    for (auto& x : v) x = rr();
    return v;
  };
  if (which == DbCase::dgt4) {
    for (int i = 2; i <= 6; ++i) k.p[i] = vec();
  } else {
    for (int i : {2, 3, 5, 6}) k.p[i] = vec();
    std::array<Rational, 4> al;
    for (auto& a : al) a = rr();
    k.alphas = al;
    k.p[4].assign(k.dim, Rational(0));
    const int idx[4] = {2, 3, 5, 6};
    for (int j = 0; j < 4; ++j)
      for (int c = 0; c < k.dim; ++c) k.p[4][c] += al[j] * k.p[idx[j]][c];
  }
  k.p[1].assign(k.dim, Rational(0));
  for (int i = 2; i <= 6; ++i)
    for (int c = 0; c < k.dim; ++c) k.p[1][c] -= k.p[i][c];
  for (auto& m : k.m2) {
    Rational r = rr();
    m = r * r + 1;
  }
  return k;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

static std::vector<Rational> vsum(const KinematicData& k, int from, int to) {
  std::vector<Rational> v(k.dim);
  for (int i = from; i <= to; ++i)
    for (int c = 0; c < k.dim; ++c) v[c] += k.p[i][c];
  return v;
}

static Rational sq(const std::vector<Rational>& v) { return dot(v, v); }

SymanzikPolys build_symanzik(const KinematicData& k) {
  std::array<Poly, 7> Z;
  for (int i = 0; i < 7; ++i) Z[i] = Poly::var(i);
  const Poly Z012 = Z[0] + Z[1] + Z[2], Z456 = Z[4] + Z[5] + Z[6];
  SymanzikPolys s;
  s.U = Z012 * Z456 + Z[3] * (Z012 + Z456);
  Poly massp, mass;
  for (int i = 0; i < 3; ++i) massp += k.m2[i] * Z[i];
  for (int i = 4; i < 7; ++i) mass += k.m2[i] * Z[i];
  s.Qp = sq(k.p[2]) * (Z[0] * Z[1]) + sq(vsum(k, 2, 3)) * (Z[0] * Z[2]) +
         sq(k.p[3]) * (Z[1] * Z[2]) + Z012 * massp;
  s.Q = sq(k.p[6]) * (Z[4] * Z[5]) + sq(vsum(k, 5, 6)) * (Z[4] * Z[6]) +
        sq(k.p[5]) * (Z[5] * Z[6]) + Z456 * mass;
  for (int i = 0; i < 3; ++i)
    for (int j = 4; j < 7; ++j) s.P += sq(vsum(k, i + 2, 10 - j)) * (Z[i] * Z[j]);
  s.P += Z012 * mass + Z456 * massp + k.m2[3] * s.U;
  s.F = (Z012 + Z[3]) * s.Q + (Z[3] + Z456) * s.Qp + Z[3] * s.P;
  return s;
}

std::vector<std::array<QuadExt, kPolyVars>> node_points(const KinematicData& k) {
  if (!k.alphas) return {};
  const auto& al = *k.alphas;
  const Rational &a2 = al[0], &a3 = al[1], &a5 = al[2], &a6 = al[3];
  const auto &p2 = k.p[2], &p3 = k.p[3], &p5 = k.p[5], &p6 = k.p[6];
  Rational Np = a2 * (1 + a2) * sq(p2) + 2 * a2 * (1 + a3) * dot(p2, p3) + a3 * (1 + a3) * sq(p3);
  Rational N = a5 * (1 + a5) * sq(p5) + 2 * a6 * (1 + a5) * dot(p5, p6) + a6 * (1 + a6) * sq(p6);
  Rational Mp = -a2 * k.m2[0] + (a2 - a3) * k.m2[1] + (1 + a3) * k.m2[2];
  Rational M = -a6 * k.m2[4] + (a6 - a5) * k.m2[5] + (1 + a5) * k.m2[6];
  Rational qa = Np - Mp, qc = N - M, qb = qa + qc + k.m2[3];
  if (qa == 0) throw InconsistencyError("node quadratic degenerates");
  std::vector<std::array<QuadExt, kPolyVars>> out;
  for (const QuadExt& rho : quadratic_roots(qa, qb, qc)) {
    QuadExt one_rho = QuadExt(1) + rho;
    if (one_rho.is_zero()) throw InconsistencyError("node lies at rho = -1");
    out.push_back({QuadExt(-a2) * rho, QuadExt(a2 - a3) * rho, QuadExt(1 + a3) * rho,
                   -rho / one_rho, QuadExt(-a6), QuadExt(a6 - a5), QuadExt(1 + a5)});
  }
  return out;
}

namespace {

// Coordinates of the plane of a conic: (x, t, w) placed at `vars`, zeros elsewhere.
template <class K>
std::array<K, kPolyVars> plane_point(const std::array<int, 3>& vars, const K& x, const K& t,
                                     const K& w) {
  std::array<K, kPolyVars> z;
  for (auto& v : z) v = K(0);
  z[vars[0]] = x;
  z[vars[1]] = t;
  z[vars[2]] = w;
  return z;
}

struct HessianData {
  std::array<std::array<Poly, kPolyVars>, kPolyVars> h;
  explicit HessianData(const std::array<Poly, kPolyVars>& g) {
    for (int i = 0; i < kPolyVars; ++i)
      for (int j = 0; j < kPolyVars; ++j) h[i][j] = g[i].diff(j);
  }
  template <class K>
  long rank_at(const std::array<K, kPolyVars>& z) const {
    Matrix<K> m(kPolyVars, std::vector<K>(kPolyVars));
    for (int i = 0; i < kPolyVars; ++i)
      for (int j = 0; j < kPolyVars; ++j) m[i][j] = h[i][j].eval(z);
    return rank(m);
  }
  // det [[A, 1], [1^T, 0]] with A the block on `normal`
  Rational bordered(const std::array<int, 4>& normal, const std::array<Rational, kPolyVars>& z) const {
    Matrix<Rational> m(5, std::vector<Rational>(5));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m[i][j] = h[normal[i]][normal[j]].eval(z);
      m[i][4] = 1;
      m[4][i] = 1;
    }
    return determinant(m);
  }
};

UPoly univariate(const std::function<Rational(const Rational&)>& f, int deg) {
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= deg; ++i) {
    xs.push_back(i);
    ys.push_back(f(Rational(i)));
  }
  return UPoly::interpolate(xs, ys);
}

// Resultant of f (formal degree 2) and g (formal degree 3).
Rational sylvester_2_3(const UPoly& f, const UPoly& g) {
  auto co = [](const UPoly& p, int i) { return i < int(p.coeffs().size()) ? p.coeffs()[i] : Rational(0); };
  Matrix<Rational> m(5, std::vector<Rational>(5));
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i <= 2; ++i) m[r][r + i] = co(f, 2 - i);
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i <= 3; ++i) m[3 + r][r + i] = co(g, 3 - i);
  return determinant(m);
}

bool proportional(const Poly& r, const Poly& q) {
  if (r.is_zero_poly()) return true;
  if (q.is_zero_poly()) return false;
  const auto& [m, c] = *q.terms().begin();
  Rational f = r.coeff(m) / c;
  return r == f * q;
}

PinchCount count_pinch(const HessianData& H, const Poly& conic, const std::array<int, 4>& normal,
                       const std::array<int, 3>& plane) {
  PinchCount pc;
  auto conic_at = [&](const Rational& t, const Rational& w) {
    return univariate([&](const Rational& x) { return conic.eval(plane_point<Rational>(plane, x, t, w)); }, 2);
  };
  auto cubic_at = [&](const Rational& t, const Rational& w) {
    return univariate(
        [&](const Rational& x) { return H.bordered(normal, plane_point<Rational>(plane, x, t, w)); }, 3);
  };
  std::vector<Rational> ts, rs;
  for (int i = 0; i < 10; ++i) {
    Rational t = rat(i, 3) - 1;
    ts.push_back(t);
    rs.push_back(sylvester_2_3(conic_at(t, 1), cubic_at(t, 1)));
  }
  UPoly R = UPoly::interpolate(ts, rs);
  pc.resultant_degree = R.degree();
  if (R.degree() > 6 || R.is_zero()) return pc;
  UPoly g = UPoly::gcd(R, R.derivative());
  pc.squarefree = g.degree() == 0;
  pc.points = R.degree() - g.degree();
  Rational at_inf = sylvester_2_3(conic_at(1, 0), cubic_at(1, 0));
  auto corner = plane_point<Rational>(plane, 1, 0, 0);
  pc.none_at_infinity =
      at_inf != 0 && (conic.eval(corner) != 0 || H.bordered(normal, corner) != 0);
  // a point of the conic over Q(sqrt d)
  UPoly c = conic_at(rat(1, 3), 1);
  if (c.degree() == 2) {
    auto roots = quadratic_roots(c.coeffs()[2], c.coeffs()[1], c.coeffs()[0]);
    pc.hessian_rank_generic =
        H.rank_at(plane_point<QuadExt>(plane, roots[0], QuadExt(rat(1, 3)), QuadExt(1)));
  }
  return pc;
}

}  // namespace

bool SingularLocusReport::ok() const { return flags.empty(); }

SingularLocusReport verify_singular_locus(const KinematicData& k, const SymanzikPolys& s) {
  SingularLocusReport rep;
  std::array<Poly, kPolyVars> g;
  for (int i = 0; i < kPolyVars; ++i) g[i] = s.F.diff(i);
  rep.partials_vanish_on_C = rep.partials_vanish_on_Cp = true;
  for (int i = 0; i < kPolyVars; ++i) {
    if (!proportional(g[i].restrict_zero({0, 1, 2, 3}), s.Q)) rep.partials_vanish_on_C = false;
    if (!proportional(g[i].restrict_zero({3, 4, 5, 6}), s.Qp)) rep.partials_vanish_on_Cp = false;
  }
  Poly euler;
  for (int i = 0; i < kPolyVars; ++i) euler += Poly::var(i) * g[i];
  rep.euler_identity = euler == Rational(3) * s.F;
  HessianData H(g);
  rep.pinch_C = count_pinch(H, s.Q, {0, 1, 2, 3}, {4, 5, 6});
  rep.pinch_Cp = count_pinch(H, s.Qp, {3, 4, 5, 6}, {0, 1, 2});

  for (const auto& z : node_points(k)) {
    NodeCheck nc;
    nc.coords = z;
    nc.partials_vanish = true;
    for (const auto& gi : g)
      if (!gi.eval(z).is_zero()) nc.partials_vanish = false;
    nc.u_vanishes = s.U.eval(z).is_zero();
    nc.z3_nonzero = !z[3].is_zero();
    nc.hessian_rank = H.rank_at(z);
    rep.nodes.push_back(nc);
  }

  const long expected_nodes = k.which == DbCase::deq4 ? 2 : 0;
  constexpr uint64_t prime = 2147483647ULL;
  for (int d : {5, 6}) {
    auto cols = monomials_of_degree(d);
    std::map<Monomial, size_t> idx;
    for (size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    std::vector<std::vector<uint64_t>> m;
    for (const auto& mon : monomials_of_degree(d - 2))
      for (const auto& gi : g) {
        std::vector<uint64_t> row(cols.size(), 0);
        for (const auto& [e, c] : gi.terms()) {
          Monomial t;
          for (int v = 0; v < kPolyVars; ++v) t[v] = e[v] + mon[v];
          row[idx.at(t)] = reduce_mod_p(c, prime);
        }
        m.push_back(std::move(row));
      }
    rep.hilbert[d] = long(cols.size()) - rank_mod_p(m, prime);
    rep.hilbert_expected[d] = 4L * d + 14 + expected_nodes;
  }
  rep.hilbert_matches = rep.hilbert == rep.hilbert_expected;

  auto flag = [&](bool ok, const std::string& what) {
    if (!ok) rep.flags.push_back(what);
  };
  flag(rep.partials_vanish_on_C, "partials do not vanish on C");
  flag(rep.partials_vanish_on_Cp, "partials do not vanish on C'");
  flag(rep.euler_identity, "Euler identity fails");
  for (const auto* pc : {&rep.pinch_C, &rep.pinch_Cp}) {
    flag(pc->points == 6 && pc->squarefree && pc->none_at_infinity, "pinch count is not 6");
    flag(pc->hessian_rank_generic == 5, "Hessian rank along the conic is not 5");
  }
  flag(long(rep.nodes.size()) == expected_nodes, "unexpected number of nodes");
  for (const auto& n : rep.nodes)
    flag(n.partials_vanish && n.u_vanishes && n.z3_nonzero && n.hessian_rank == 6,
         "node check failed");
  flag(rep.hilbert_matches, "Hilbert function differs from 4d+14+nodes");
  return rep;
}

static std::vector<Rational> solve_square(Matrix<Rational> a, const std::vector<Rational>& b) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (row_reduce(a) != long(n)) throw InconsistencyError("singular linear system");
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

EvReport evaluation_map_rank(const KinematicData& k, const SymanzikPolys& s) {
  EvReport ev;
  const auto S2 = monomials_of_degree(2);
  ev.dim_S2 = long(S2.size());
  std::array<Poly, kPolyVars> g;
  for (int i = 0; i < kPolyVars; ++i) g[i] = s.F.diff(i);
  Matrix<Rational> A, B, J;
  for (const auto& m : monomials_of_degree(2, {0, 1, 2, 3})) A.push_back(coefficient_vector(Poly::monomial(m), S2));
  for (const auto& m : monomials_of_degree(2, {3, 4, 5, 6})) B.push_back(coefficient_vector(Poly::monomial(m), S2));
  for (const auto& gi : g) J.push_back(coefficient_vector(gi, S2));
  auto cat = [](std::initializer_list<const Matrix<Rational>*> parts) {
    Matrix<Rational> m;
    for (const auto* p : parts) m.insert(m.end(), p->begin(), p->end());
    return m;
  };
  ev.dim_0123sq = rank(A);
  ev.dim_3456sq = rank(B);
  ev.dim_overlap = ev.dim_0123sq + ev.dim_3456sq - rank(cat({&A, &B}));
  ev.dim_JF = rank(J);
  Matrix<Rational> AJ = cat({&A, &J}), BJ = cat({&B, &J});
  ev.dim_A_J = row_reduce(AJ);
  ev.dim_B_J = row_reduce(BJ);
  AJ.resize(ev.dim_A_J);
  BJ.resize(ev.dim_B_J);
  ev.dim_A_B_J = rank(cat({&A, &B, &J}));

  // W = (A+J) cap (B+J): x*AJ = y*BJ
  Matrix<Rational> stacked = cat({&AJ, &BJ});
  Matrix<Rational> W;
  for (const auto& v : left_null_space(stacked)) {
    std::vector<Rational> w(S2.size());
    for (long i = 0; i < ev.dim_A_J; ++i)
      for (size_t c = 0; c < S2.size(); ++c) w[c] += v[i] * AJ[i][c];
    W.push_back(w);
  }
  ev.dim_intersection = row_reduce(W);
  W.resize(ev.dim_intersection);

  const auto nodes = node_points(k);
  if (!nodes.empty()) {
    Matrix<QuadExt> vals;
    for (const auto& w : W) {
      std::vector<QuadExt> row;
      for (const auto& z : nodes) {
        QuadExt v(0);
        for (size_t c = 0; c < S2.size(); ++c) {
          if (w[c] == 0) continue;
          QuadExt t(w[c]);
          for (int i = 0; i < kPolyVars; ++i)
            for (int e = 0; e < S2[c][i]; ++e) t *= z[i];
          v += t;
        }
        row.push_back(v);
      }
      vals.push_back(row);
    }
    ev.node_eval_rank = rank(vals);
  }
  ev.dim_ker_ev = ev.dim_intersection - ev.node_eval_rank;
  ev.codomain = (ev.dim_S2 - ev.dim_A_J) + (ev.dim_S2 - ev.dim_B_J) + long(nodes.size());
  ev.a = ev.codomain - (ev.dim_S2 - ev.dim_ker_ev);

  // c-constants: sum c_i dQ'/dZ_i = Z012 and sum c_i dQ/dZ_{i+4} = Z456
  auto constants = [&](const Poly& q, int off) {
    Matrix<Rational> m(3, std::vector<Rational>(3));
    for (int r = 0; r < 3; ++r)
      for (int i = 0; i < 3; ++i) {
        Monomial e{};
        e[off + r] = 1;
        m[r][i] = q.diff(off + i).coeff(e);
      }
    return solve_square(m, {1, 1, 1});
  };
  auto cp = constants(s.Qp, 0), cq = constants(s.Q, 4);
  Poly dpF, dF;
  for (int i = 0; i < 3; ++i) {
    dpF += cp[i] * g[i];
    dF += cq[i] * g[i + 4];
  }
  Poly delta = dpF - dF;
  ev.delta_F = to_string(delta);
  std::vector<Monomial> cross;
  for (int i = 0; i < 3; ++i)
    for (int j = 4; j < 7; ++j) {
      Monomial e{};
      e[i] = 1;
      e[j] = 1;
      cross.push_back(e);
    }
  Matrix<Rational> X;
  for (const auto& gi : g) {
    std::vector<Rational> row;
    for (const auto& e : cross) row.push_back(gi.coeff(e));
    X.push_back(row);
  }
  auto lk = left_null_space(X);
  bool cross_free = true;
  for (const auto& e : cross)
    if (delta.coeff(e) != 0) cross_free = false;
  bool matches = false;
  if (lk.size() == 1) {
    std::vector<Rational> want = {cp[0], cp[1], cp[2], 0, -cq[0], -cq[1], -cq[2]};
    Matrix<Rational> two = {lk[0], want};
    matches = rank(two) == 1;
  }
  ev.delta_unique = cross_free && matches && !delta.is_zero_poly();
  ev.g_ok = (dpF - s.U).uses_only({3, 4, 5, 6});
  ev.gp_ok = (dF - s.U).uses_only({0, 1, 2, 3});
  return ev;
}

DegenerationScenario doublebox_scenario(long rho_d) {
  if (rho_d < 0) throw InputError("rho_d must be >= 0");
  DegenerationScenario sc;
  sc.name = "doublebox";
  sc.n = 5;
  for (const char* name : {"C", "C'"}) {
    CurveStratumConfig c;
    c.name = name;
    c.twist = 2;
    c.tss_sign = -1;
    for (int i = 0; i < 6; ++i) c.punctures.push_back({PunctureKind::pinch, 0, 0});
    sc.strata.push_back(c);
    sc.stratum_nodes.push_back(6);
  }
  SlcType dinf;
  dinf.family = SlcFamily::D_inf;
  WeightedSpectrum pinch = suspend(suspend(suspend(slc_catalog(dinf).sigma2)));
  WeightedSpectrum node = brieskorn_pham({2, 2, 2, 2, 2, 2});
  for (int i = 0; i < 12; ++i) {
    S0Point p;
    p.label = std::string(i < 6 ? "C" : "C'") + " pinch " + std::to_string(i % 6 + 1);
    p.vn = pinch;
    p.vn_1 = brieskorn_pham({2, 2, 2, 2, 2});
    sc.s0_points.push_back(p);
  }
  for (long i = 0; i < rho_d; ++i) {
    S0Point p;
    p.label = "node " + std::to_string(i + 1);
    p.vn = node;
    sc.s0_points.push_back(p);
  }
  sc.total_space_nodes = 12;
  sc.fiber = FiberHodge::cubic_fivefold();
  return sc;
}

DoubleboxReport doublebox_report(DbCase which, uint64_t seed) {
  DoubleboxReport rep;
  rep.which = which;
  rep.seed = seed;
  for (long attempt = 0;; ++attempt) {
    if (attempt == 10) throw InconsistencyError("no generic kinematics after 10 resamples");
    rep.kin = sample_kinematics(seed + attempt, which);
    SymanzikPolys s = build_symanzik(rep.kin);
    try {
      rep.sing = verify_singular_locus(rep.kin, s);
      rep.ev = evaluation_map_rank(rep.kin, s);
    } catch (const InconsistencyError&) {
      continue;
    }
    // structural genericity only; the ranks under study are never used to resample
    if (rep.ev.dim_JF != 7 || !rep.sing.ok()) continue;
    rep.seed_used = seed + attempt;
    rep.resamples = attempt;
    break;
  }
  rep.rho_d = long(rep.sing.nodes.size());
  DegenerationScenario sc = doublebox_scenario(rep.rho_d);
  rep.relations = solve_scenario(sc).relations;
  // b = h^{3,2}(H^5(X0)) as a function of a = rk_delta_5
  for (const auto& r : std::vector<AffineRelation>(rep.relations))
    if (r.quantity == "h^{3,2}(H^5(X0))" && r.param == "rk_delta_5")
      rep.relations.push_back({"b", "a", r.slope, r.intercept});
  sc.constraints.push_back({ConstraintKind::delta_rank, 5, 0, rep.ev.a, 0, "a = rk coker(ev)"});
  rep.scenario = solve_scenario(sc);
  if (rep.scenario.solutions.size() != 1)
    throw InconsistencyError("double-box scenario is not determined by a");
  const VsSolution& vs = rep.scenario.solutions[0].vs;
  const auto& h5 = vs.degrees.at(5).x0;
  rep.h22_x0 = h5.count_pq(2, 2);
  rep.h32_x0 = h5.count_pq(3, 2);
  rep.b = rep.h32_x0;
  rep.h33_x6 = vs.degrees.count(6) ? vs.degrees.at(6).x0.count_pq(3, 3) : 0;
  rep.rank_V = rep.scenario.e2.cell(1, 4).non_unipotent_part().total();
  WeightedSpectrum local = brieskorn_pham({2, 2, 2, 2, 2});
  for (const auto& p : sc.s0_points) local = local + p.vn;
  rep.f_level = f_level(local);
  return rep;
}

}  // namespace vancalc
