#pragma once
// Text formats: PBW elements ("F^(3) [H;1] E^(2)", indexed "F2^(2) [H1;1] E1"),
// weights ("(2,-1)"), and module expressions ("tensor(St, twist(nabla(1)))").

#include <string>

#include "frobsplit/gmod.hpp"
#include "frobsplit/hyperalg.hpp"

namespace frob {

std::string render_mono(const PBWMono& m);
std::string render_dist(const DistElem& x);
DistElem parse_dist(const std::string& text, const RootDatum& d);

std::string render_weight(const Weight& w);
Weight parse_weight(const std::string& text, int rank);

// grammar: St | triv | delta(w) | nabla(w) | L(w) | line(w) | twist(M) |
// contract(M) | dual(M) | tensor(M, M) | sum(M, M); w is a comma-separated
// integer list (one entry per factor) or a parenthesized weight
WtModule parse_module_expr(const std::string& text, const RootDatum& d);

}  // namespace frob
