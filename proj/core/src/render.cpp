#include "vancalc/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vancalc {

static std::string eig_label(const Rational& e) {
  return e == 0 ? "1" : "e(" + to_string(e) + ")";
}

std::string render_diagram(const HodgeDeligneDiagram& d, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << title << "\n";
  if (d.empty()) {
    os << "  (zero)\n";
    return os.str();
  }
  int pmax = 0, qmax = 0;
  for (const auto& [k, m] : d.entries()) {
    pmax = std::max(pmax, k.p);
    qmax = std::max(qmax, k.q);
  }
  const int wcol = 6;
  for (int q = qmax; q >= 0; --q) {
    os << std::setw(3) << q << " |";
    for (int p = 0; p <= pmax; ++p) {
      long tot = d.count_pq(p, q);
      bool twisted = false;
      for (const auto& [k, m] : d.entries())
        if (k.p == p && k.q == q && k.eig != 0) twisted = true;
      std::string cell = tot ? std::to_string(tot) + (twisted ? "*" : "") : ".";
      os << std::setw(wcol) << cell;
    }
    os << "\n";
  }
  os << "    +" << std::string(wcol * (pmax + 1), '-') << "\n     ";
  for (int p = 0; p <= pmax; ++p) os << std::setw(wcol) << p;
  os << "   p\n";
  for (const auto& [k, m] : d.entries())
    if (k.eig != 0)
      os << "  * (" << k.p << "," << k.q << "): " << m << " x " << eig_label(k.eig) << "\n";
  return os.str();
}

std::string render_spectrum(const WeightedSpectrum& s, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << title << ": ";
  os << describe(s) << "\n";
  return os.str();
}

std::string render_e2(const E2Table& t) {
  std::ostringstream os;
  os << "E2 (n = " << t.n << ")\n";
  for (int j = t.n; j >= t.n - 1; --j) {
    os << "  H^" << j << " |";
    for (int i = 0; i <= 2; ++i) {
      const auto& c = t.cell(i, j);
      std::string s = std::to_string(c.total());
      if (!c.non_unipotent_part().empty())
        s += " (" + std::to_string(c.non_unipotent_part().total()) + " twisted)";
      os << std::setw(18) << s;
    }
    os << "\n";
  }
  os << "       +" << std::string(54, '-') << "\n        ";
  for (int i = 0; i <= 2; ++i) os << std::setw(18) << ("H^" + std::to_string(i));
  os << "\n";
  if (t.d2_rank) os << "  rk d2 = " << *t.d2_rank << "\n";
  for (const auto& [ij, d] : t.cells)
    os << render_diagram(d, "  E2^{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}");
  return os.str();
}

std::string render_solution(const VsSolution& s) {
  std::ostringstream os;
  os << "type " << type_name(s.type);
  for (const auto& [name, v] : s.params) os << ", " << name << " = " << v;
  os << "\n";
  for (const auto& [k, d] : s.degrees) {
    const std::string k_s = std::to_string(k);
    if (!d.van.empty()) os << render_diagram(d.van, "H^" + k_s + "_van");
    os << render_diagram(d.lim, "H^" + k_s + "_lim");
    os << render_diagram(d.x0, "H^" + k_s + "(X0)");
  }
  return os.str();
}

}  // namespace vancalc
