// G_m x| Z/2 with Z/2 acting by inversion: the upper central series climbs
// through mu_2, mu_4, mu_8, ..., reaches G_m at omega and all of G at omega+1.

#include "hyperc/hyperc.hpp"

#include <iostream>

using namespace hyperc;

int main(int argc, char** argv) {
  const int p = argc > 1 ? std::atoi(argv[1]) : 3;
  const AlgGroupModel g = gen::example1(p);
  std::cout << "G = G_m x| Z/2 in characteristic " << p << "\n\n";

  const auto rep = ucs(g);
  for (const auto& s : rep.stages) {
    if (s.ordinal.is_finite() && s.ordinal.t > 5) continue;
    std::cout << "Z_" << s.ordinal.str() << " = " << str(g, s.subgroup);
    if (s.certificate) std::cout << "   (limit: " << to_string(s.certificate->kind) << ")";
    std::cout << "\n";
    if (s.ordinal.is_finite() && s.ordinal.t == 5) std::cout << "...\n";
  }
  std::cout << "series stops at " << rep.terminal.str() << "\n";
  std::cout << "nilpotent: " << (nilpotency_class(g) ? "yes" : "no") << "\n\n";

  // G/Z_omega is Z/2 again, with its own omega-center
  const auto zw = z_omega(g);
  const auto q = quotient(g, zw);
  const auto w = z_omega(q.model);
  std::cout << "Z_omega(G/Z_omega) has order " << order(w)->str() << " and is "
            << (is_unipotent_subgroup(q.model, w) ? "" : "not ") << "unipotent\n";

  std::cout << "\nreport:\n" << emit(Report{"ucs", "ok", encode(g, rep), 0}).substr(0, 400) << "\n...\n";
}
