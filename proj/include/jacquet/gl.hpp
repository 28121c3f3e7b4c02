#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/formal_sum.hpp"
#include "jacquet/half_int.hpp"

namespace jacquet {

enum class Duality { Orthogonal, Symplectic, NotSelfDual };

// An irreducible unitary supercuspidal rho of GL_d, known only through its label,
// its degree and its self-duality type. For a non-self-dual rho, dual_id names the
// contragredient; for a self-dual one dual_id == id.
struct RhoKey {
    std::string id;
    int dim = 1;
    Duality duality = Duality::Orthogonal;
    std::string dual_id;

    static RhoKey make(std::string id, int dim, Duality duality, std::string dual_id = {});
    static RhoKey trivial() { return make("1", 1, Duality::Orthogonal); }

    bool self_dual() const { return duality != Duality::NotSelfDual; }
    RhoKey dual() const;

    friend bool operator==(const RhoKey&, const RhoKey&) = default;
    friend auto operator<=>(const RhoKey&, const RhoKey&) = default;
};

std::string to_string(Duality d);
Duality parse_duality(const std::string& s);

// <rho; x, x-1, ..., y>.
struct Segment {
    RhoKey rho;
    HalfInt x;
    HalfInt y;

    Segment() = default;
    Segment(RhoKey r, HalfInt x_, HalfInt y_);

    int length() const { return static_cast<int>((x - y).to_integer()) + 1; }
    HalfInt center() const { return midpoint(x, y); }
    // [x, y]@rho -> [-y, -x]@rho^vee
    Segment dual() const;
    // "1:[3/2,1/2]"
    std::string str() const;

    friend bool operator==(const Segment&, const Segment&) = default;
    // Normal-form order within one rho: x ascending, then y ascending.
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

// St(rho, a) = [(a-1)/2, -(a-1)/2].
Segment steinberg(const RhoKey& rho, int a);

// A product of segments, stored sorted (rho, then x, then y), which is the
// Omega normal form on each rho-part. The empty label is the unit of GL_0.
class GLLabel {
public:
    GLLabel() = default;
    explicit GLLabel(std::vector<Segment> segs);

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    // Total number of supercuspidal factors.
    int size() const;
    // Size of the rho-part.
    int size(const RhoKey& rho) const;
    // GL rank: sum of dim(rho) * length.
    int gl_dim() const;
    // Flattened exponent vector of the rho-part.
    std::vector<HalfInt> exponents(const RhoKey& rho) const;
    GLLabel dual() const;
    std::string str() const;

    friend GLLabel operator*(const GLLabel& a, const GLLabel& b);
    friend bool operator==(const GLLabel&, const GLLabel&) = default;
    friend auto operator<=>(const GLLabel&, const GLLabel&) = default;

private:
    std::vector<Segment> segs_;
};

using GLSum = FormalSum<GLLabel>;
using GLPair = std::pair<GLLabel, GLLabel>;
using GLTensorSum = FormalSum<GLPair>;

GLLabel normalize_multisegment(std::vector<Segment> segs);

// Jac_{rho|.|^x} on the standard-module basis: remove the head x from one segment
// of the rho-part whose head is x.
GLSum gl_jacquet_delta(const GLLabel& lbl, const RhoKey& rho, HalfInt x);
GLSum gl_jacquet_delta(const GLSum& v, const RhoKey& rho, HalfInt x);

// dim Jac_{rho|.|^{ys}}(lbl). Only the rho-part can be consumed; anything else left over gives 0.
std::int64_t jac_dim(const std::vector<HalfInt>& ys, const GLLabel& lbl, const RhoKey& rho);

// Products in R (x) R, componentwise.
GLTensorSum tensor_multiply(const GLTensorSum& a, const GLTensorSum& b);

// m* on the standard-module basis.
GLTensorSum mstar_gl(const GLLabel& lbl);
// Tadic's M* = (m (x) id) o (vee (x) m*) o s o m*.
GLTensorSum big_mstar(const GLLabel& lbl);
// M* of a single segment via the closed double sum over (k, l).
GLTensorSum big_mstar_segment(const Segment& seg);

}  // namespace jacquet
