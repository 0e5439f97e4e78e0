#pragma once

#include "idpcheck/io.hpp"
#include "idpcheck/model.hpp"

#include <string>

namespace testkit {

inline idpcheck::SquarefreeIdeal ideal(const std::string& text) { return idpcheck::parse_ideal_text(text).ideal; }

inline idpcheck::SquarefreeIdeal fig1() { return ideal("a*f*h, a*e*f*g*i*j, b*c*h*i*j, d*g*h*i*j"); }
inline idpcheck::SquarefreeIdeal rem32() {
  return ideal("vars: x1 x2 x3 x4 x5 x6 x7\nx1*x2, x1*x3, x2*x3*x7, x4*x5, x4*x6, x5*x6*x7");
}
inline idpcheck::SquarefreeIdeal k24() { return ideal("x1*x2*x3*x4, x5*x6*x7*x8, x1*x5, x2*x6, x3*x7, x4*x8"); }
inline idpcheck::SquarefreeIdeal tri() { return ideal("u*v, u*w, v*w"); }
inline idpcheck::SquarefreeIdeal hex6() { return ideal("a*b, a*c, b*c*d, d*e*f, e*g, f*g"); }
inline idpcheck::SquarefreeIdeal sixtri() { return ideal("a*b, a*c, b*c*d, d*e*f*h, e*g*h, f*g*h"); }
inline idpcheck::SquarefreeIdeal bowtie() { return ideal("u1*u2, u1*u3, u2*u3, u3*u4, u4*u5, u5*u6, u5*u7, u6*u7"); }
inline idpcheck::SquarefreeIdeal bowtie_closed() {
  return ideal("vars: u1 u2 u3 u4 u5 u6 u7 z\nu1*u2, u1*u3, u2*u3, u3*u4, u4*u5, u5*u6, u5*u7, u6*u7, z*u4");
}
inline idpcheck::SquarefreeIdeal solv3() { return ideal("a*f*g, a*b, b*c*f, c*d, d*e*f, e*g"); }
inline const char* kVars14 = "vars: x1 x2 x3 x4 x5 x6 x7 x8 x9 x10 x11 x12 x13 x14\n";
inline idpcheck::SquarefreeIdeal ih1() {
  return ideal(std::string(kVars14) +
               "x1*x2, x1*x3, x2*x3, x3*x6, x6*x7, x7*x13, x12*x13*x14, x11*x12*x14, x10*x11, x9*x10*x14, x8*x9, "
               "x7*x8*x14");
}
inline idpcheck::SquarefreeIdeal ih2() {
  return ideal(std::string(kVars14) +
               "x1*x2, x1*x3, x2*x3, x3*x6, x6*x7, x7*x13, x12*x13*x14, x11*x12*x14, x10*x11, x9*x10*x14, "
               "x8*x9*x14, x7*x8");
}
// BOWTIE with five of its 1-dimensional edges widened by gadget vertices; the
// bow-tie is the minor left after deleting the five gadget edges g1..g5.
inline idpcheck::SquarefreeIdeal bowtie_gadgets() {
  return ideal(
      "vars: u1 u2 u3 u4 u5 u6 u7 g1 g2 g3 g4 g5 h\n"
      "u1*u2, u1*u3, u2*u3, u3*u4, u4*u5, u5*u6, u5*u7, u6*u7, "
      "u1*g1, u2*g2, u4*g3, u6*g4, u7*g5, g1*h, g2*h, g3*h, g4*h, g5*h");
}
inline idpcheck::SquarefreeIdeal c4() { return ideal("x1*x2, x2*x3, x3*x4, x1*x4"); }

}  // namespace testkit
