#ifndef AMBITORIC_SPECFILE_HPP
#define AMBITORIC_SPECFILE_HPP

#include <string>

#include "ambitoric/builder.hpp"

namespace ambitoric {

/// Line-oriented spec file:
///   # comment
///   type: hyperbolic            (parabolic|hyperbolic|elliptic|general)
///   q: q0 q1 q2                 (general only; q1 is HALF the z-coefficient)
///   A: a0 a1 a2 a3 a4           (descending powers, z^4 first)
///   B: b0 b1 b2 b3 b4
///   p: p0 p1 p2                 (optional)
/// Coefficients are exact rationals `n` or `n/d`.
AmbitoricSpec parse_spec_text(const std::string& text);
AmbitoricSpec parse_spec_file(const std::string& path);

std::string serialize_spec(const AmbitoricSpec& spec);

} // namespace ambitoric

#endif
