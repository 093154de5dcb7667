#pragma once

#include <cmath>

namespace uavnet {

/// A point or displacement in meters. z is altitude (0 for terrestrial nodes).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    /// Component access by axis index (0=x, 1=y, 2=z).
    double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    double& operator[](int axis) {
        return axis == 0 ? x : (axis == 1 ? y : z);
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

} // namespace uavnet
