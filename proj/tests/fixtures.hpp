#pragma once

#include <string>
#include <vector>

#include "martensite/variants.hpp"

namespace fixture {

using martensite::LatticeParams;

inline LatticeParams niti() { return LatticeParams::parse("0.0243,-0.0437,0.0580,0.0427"); }
inline LatticeParams cuzr() { return LatticeParams::parse("0.0348,0.0229,0.1067,0.0929"); }
inline LatticeParams tinicu() { return LatticeParams::parse("0.0232,-0.0410,0.0532,0.0395"); }
// Synthetic parameters on the boundary eps = delta and inside Ib.
inline LatticeParams boundary() { return LatticeParams::parse("0.0243,-0.0437,1/20,1/20"); }
inline LatticeParams regime_ib() { return LatticeParams::parse("0.0243,-0.0437,0.04,0.06"); }

inline std::vector<LatticeParams> materials() { return {niti(), cuzr(), tinicu()}; }

}  // namespace fixture
