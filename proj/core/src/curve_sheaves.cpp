#include "vancalc/curve_sheaves.hpp"

namespace vancalc {

static Rational sign_eig(int s) { return s == -1 ? rat(1, 2) : Rational(0); }

ShriekCohomology shriek_cohomology(const CurveStratumConfig& c) {
  if (c.component_genus != 0)
    throw InputError("shriek_cohomology: only genus-0 strata are supported");
  if (c.tss_sign != 1 && c.tss_sign != -1) throw InputError("tss_sign must be +-1");
  long m_plus = 0, m_minus = 0;
  int product = 1;
  for (const auto& p : c.punctures) {
    if (p.local_monodromy != 1 && p.local_monodromy != -1)
      throw InputError("only +-1 local monodromies are supported");
    product *= p.local_monodromy;
    if (p.kind == PunctureKind::gluing) {
      if (p.local_monodromy != 1) throw InputError("gluing punctures must have monodromy +1");
      continue;
    }
    (p.local_monodromy == 1 ? m_plus : m_minus) += 1;
  }
  if (product != 1)
    throw InputError("monodromy product around '" + c.name + "' is not +1");

  const long m = m_plus + m_minus;
  const int t = c.twist;
  const Rational e = sign_eig(c.tss_sign);
  ShriekCohomology r;
  if (m_minus > 0) {
    // H^1_c: stalks at the +1 punctures (weight 0) and IH^1 of the double cover's odd part
    r.h1 = m - 2;
    if (m_plus) r.H1.add(t, t, e, m_plus);
    long g = (m_minus - 2) / 2;
    if (g) {
      r.H1.add(1 + t, t, e, g);
      r.H1.add(t, 1 + t, e, g);
    }
  } else if (m == 0) {
    r.h0 = 1;
    r.h2 = 1;
    r.H0.add(t, t, e, 1);
    r.H2.add(1 + t, 1 + t, e, 1);
  } else {
    r.h1 = m - 1;
    r.h2 = 1;
    if (m > 1) r.H1.add(t, t, e, m - 1);
    r.H2.add(1 + t, 1 + t, e, 1);
  }
  return r;
}

long branched_cover_genus(long g, long b) {
  if (g < 0 || b < 0) throw InputError("branched_cover_genus: negative input");
  if (b % 2) throw InputError("branched_cover_genus: odd number of branch points");
  long gt = 2 * g - 1 + b / 2;
  if (gt < 0) throw InputError("branched_cover_genus: unbranched cover of P^1 is disconnected");
  return gt;
}

int default_monodromy(PunctureKind kind, int n, int kappa) {
  switch (kind) {
    case PunctureKind::pinch: return -1;
    case PunctureKind::total_space_node: return n % 2 ? -1 : 1;
    case PunctureKind::j_kappa:
      if (kappa < 1) throw InputError("J_kappa puncture needs kappa >= 1");
      return kappa % 2 ? -1 : 1;
    case PunctureKind::gluing: return 1;
  }
  return 1;
}

PunctureKind parse_puncture_kind(const std::string& s) {
  if (s == "pinch") return PunctureKind::pinch;
  if (s == "total_space_node" || s == "node") return PunctureKind::total_space_node;
  if (s == "J_kappa" || s == "j_kappa") return PunctureKind::j_kappa;
  if (s == "gluing") return PunctureKind::gluing;
  throw InputError("unknown puncture kind '" + s + "'");
}

std::string puncture_kind_name(PunctureKind k) {
  switch (k) {
    case PunctureKind::pinch: return "pinch";
    case PunctureKind::total_space_node: return "total_space_node";
    case PunctureKind::j_kappa: return "J_kappa";
    case PunctureKind::gluing: return "gluing";
  }
  return "?";
}

long SheafDescription::total_h1() const {
  long t = 0;
  for (const auto& p : pieces) t += p.cohomology.h1;
  return t;
}

SheafDescription assemble_h_sheaf(std::vector<CurveStratumConfig> strata,
                                  const std::vector<S0Point>& s0, int n) {
  if (n < 1) throw InputError("assemble_h_sheaf: n must be >= 1");
  SheafDescription d;
  for (auto& c : strata) {
    bool glued = false;
    long minus = 0;
    for (auto& p : c.punctures) {
      int want = default_monodromy(p.kind, n, p.kappa);
      if (p.local_monodromy == 0) p.local_monodromy = want;
      else if (p.local_monodromy != want)
        throw InputError("puncture monodromy " + std::to_string(p.local_monodromy) +
                         " disagrees with its kind on '" + c.name + "'");
      if (p.kind == PunctureKind::gluing) glued = true;
      if (p.local_monodromy == -1) ++minus;
    }
    SheafPiece piece;
    piece.support = c.name;
    piece.kind = glued && minus == 0 ? "constant" : "shriek_local_system";
    piece.description = "j_!L(-" + std::to_string(c.twist) + ") with " +
                        std::to_string(c.punctures.size()) + " punctures, " +
                        std::to_string(minus) + " of monodromy -1";
    piece.cohomology = shriek_cohomology(c);
    d.pieces.push_back(piece);
  }
  for (const auto& p : s0) {
    SheafPiece piece;
    piece.support = p.label;
    piece.kind = "skyscraper";
    piece.description = "V^" + std::to_string(n) + " = " + describe(p.vn);
    piece.stalk = p.vn;
    d.pieces.push_back(piece);
  }
  return d;
}

SheafDescription kulikov_sheaf(long F, long E, long V) {
  if (F < 1 || E < 1 || V < 1) throw InputError("Kulikov counts must be positive");
  if (F != E - V + 2) throw InputError("Kulikov configuration violates F = E - V + 2");
  // the dual complex is a triangulation: every triple point bounds three double curves
  if (2 * E != 3 * V) throw InputError("Kulikov configuration is not a triangulation (2E != 3V)");
  SheafDescription d;
  SheafPiece h1;
  h1.support = "sing(X0)";
  h1.kind = "kernel_of_normalization";
  h1.description = "ker(I_* Q(-1) -> i_* Q_S0(-1)) over " + std::to_string(E) + " lines and " +
                   std::to_string(V) + " triple points";
  // H^0 = Q(-1)^{F-1}, H^1 = Q(-1), H^2 = Q(-2)^E (dual graph is a triangulated sphere)
  h1.cohomology.h0 = F - 1;
  h1.cohomology.h1 = 1;
  h1.cohomology.h2 = E;
  if (F > 1) h1.cohomology.H0.add(1, 1, 0, F - 1);
  h1.cohomology.H1.add(1, 1, 0, 1);
  h1.cohomology.H2.add(2, 2, 0, E);
  d.pieces.push_back(h1);
  SheafPiece h2;
  h2.support = "S0";
  h2.kind = "skyscraper";
  h2.description = "Q(-2) at each of " + std::to_string(V) + " triple points";
  h2.stalk.add(2, 4, V);
  d.pieces.push_back(h2);
  return d;
}

}  // namespace vancalc
