#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unfold/rational.hpp"

namespace unfold {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

inline Axis axis_from_name(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    if (s == "z") return Axis::Z;
    throw std::invalid_argument("unknown axis: " + s);
}

struct Cell {
    int x, y, z;
    auto operator<=>(const Cell&) const = default;
};

struct V3 {
    int x, y, z;
    auto operator<=>(const V3&) const = default;
    friend V3 operator+(const V3& a, const V3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend V3 operator-(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

// Point in a slicing plane (world x and z coordinates).
struct XZ {
    int x, z;
    auto operator<=>(const XZ&) const = default;
};

// Error taxonomy shared by the library and the CLI exit codes.
enum class Err : int {
    Parse = 2,
    NonManifold = 3,
    Disconnected = 4,
    GenusTooHigh = 5,
    NoFaceNodeDirection = 6,
    VerificationFailed = 7,
    InternalInvariant = 8,
    GenerationTimeout = 9,
    RefinementExceeded = 10,
};

class UnfoldError : public std::runtime_error {
public:
    UnfoldError(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

// Unit surface face of a voxel solid. `corner` is the lexicographically
// smallest vertex; the face spans +1 along both axes other than `normal`.
struct SurfFace {
    Axis normal;
    int sign; // +1 or -1
    V3 corner;
    auto operator<=>(const SurfFace&) const = default;
};

// The two in-plane axes of a face, in a fixed order (smaller axis first).
inline std::array<Axis, 2> face_axes(Axis normal) {
    switch (normal) {
        case Axis::X: return {Axis::Y, Axis::Z};
        case Axis::Y: return {Axis::X, Axis::Z};
        case Axis::Z: return {Axis::X, Axis::Y};
    }
    return {Axis::X, Axis::Y};
}

inline int coord(const V3& v, Axis a) {
    switch (a) {
        case Axis::X: return v.x;
        case Axis::Y: return v.y;
        case Axis::Z: return v.z;
    }
    return 0;
}

// Axis-aligned rational rectangle in some 2D chart.
struct RatRect {
    RatInterval a; // first chart axis
    RatInterval b; // second chart axis
    Rat area() const { return a.length() * b.length(); }
    bool overlaps_open(const RatRect& o) const {
        return a.overlaps_open(o.a) && b.overlaps_open(o.b);
    }
};

// Planar placement: one of the 8 axis-aligned isometries plus a translation.
// Maps chart point (u,v) to plane point M*(u,v) + t.
struct Isometry {
    // matrix entries in {-1,0,1}: [m00 m01; m10 m11]
    int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Rat tx, ty;

    std::array<Rat, 2> apply(const Rat& u, const Rat& v) const {
        return {Rat(m00) * u + Rat(m01) * v + tx, Rat(m10) * u + Rat(m11) * v + ty};
    }
    bool reflects() const { return m00 * m11 - m01 * m10 < 0; }
};

// Image of an axis-aligned rect under a signed-permutation isometry is again
// an axis-aligned rect.
inline RatRect apply_iso(const Isometry& iso, const RatRect& r) {
    auto p = iso.apply(r.a.lo, r.b.lo);
    auto q = iso.apply(r.a.hi, r.b.hi);
    RatRect out;
    out.a = {Rat::min(p[0], q[0]), Rat::max(p[0], q[0])};
    out.b = {Rat::min(p[1], q[1]), Rat::max(p[1], q[1])};
    return out;
}

} // namespace unfold
