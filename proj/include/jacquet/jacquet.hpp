#pragma once

#include <vector>

#include "jacquet/rep_lattice.hpp"

namespace jacquet {

// Jac_{rho|.|^x}, extended linearly. Tempered labels use the four-case description in
// terms of the multiplicity of rho (x) S_{2x+1}; GL pieces are peeled off with Tadic's
// formula restricted to a degree-one left factor.
VirtualGRep jac_rho_x(const VirtualGRep& v, const RhoKey& rho, HalfInt x);
VirtualGRep jac_rho_x(const StandardLabel& lbl, const RhoKey& rho, HalfInt x);
VirtualGRep jac_tempered(const TemperedLabel& t, const RhoKey& rho, HalfInt x);

// Jac_{rho|.|^{x_r}} o ... o Jac_{rho|.|^{x_1}}.
VirtualGRep jac_vector(const VirtualGRep& v, const RhoKey& rho, const std::vector<HalfInt>& xs);

// Drops the memo table (used by tests that compare cold and warm runs).
void clear_jacquet_cache();

}  // namespace jacquet
