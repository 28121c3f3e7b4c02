#pragma once

#include <stdexcept>
#include <vector>

#include "jacquet/matrix.hpp"
#include "jacquet/rep_lattice.hpp"

namespace jacquet {

using KTuple = std::vector<int>;

// Tuples (k_1, ..., k_t) aligned with the sorted a's of the rho-part of phi:
// 0 <= k_i <= a_i, k_{i-1} >= k_i when a_{i-1} = a_i, sum = m. Descending lexicographic order.
std::vector<KTuple> k_sets(const GoodParityParam& phi, const RhoKey& rho, int m);
// (x_1, ..., x_1 - k_1 + 1, ..., x_t, ..., x_t - k_t + 1) with x_i = (a_i - 1)/2.
std::vector<HalfInt> x_of_k(const GoodParityParam& phi, const RhoKey& rho, const KTuple& k);
// Delta_{x(k)}: the product of the runs of x(k) as segments.
GLLabel delta_of_k(const GoodParityParam& phi, const RhoKey& rho, const KTuple& k);

struct JacMatrix {
    std::vector<KTuple> order;
    // entries[k][l] = dim Jac_{x(k)}(Delta_{x(l)})
    RationalMatrix entries;
    RationalMatrix inverse;
};

// Cached per (a's of the rho-part, m). With JACQUET_CACHE_DIR set, matrices are also
// read from and written to JSON files in that directory.
JacMatrix jac_matrix(const GoodParityParam& phi, const RhoKey& rho, int m);

class NonGenericStandard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// mu*_rho of a tempered label of good parity.
VirtualBiRep mu_star_rho(const TemperedLabel& t, const RhoKey& rho);
// mu*_rho of the (semisimplified) standard module of a label.
VirtualBiRep mu_star_rho(const StandardLabel& lbl, const RhoKey& rho);
// Full mu* of the semisimplified standard modules.
VirtualBiRep mu_star_standard(const VirtualGRep& v);
// Full mu* of the irreducible representations named by the labels: each label must be
// tempered or have a generic parameter (so the standard module is irreducible).
VirtualBiRep mu_star_full(const VirtualGRep& v);
// Degree-k piece of mu_star_full.
VirtualBiRep jac_P_k(const VirtualGRep& v, int k);

void clear_matrix_cache();

}  // namespace jacquet
