#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ledft {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Rotation about z by `angle` radians.
inline Vec3 rotate_z(const Vec3& v, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

// First-order rotation: v + r x v. Valid for small |r|.
inline Vec3 rotate_small(const Vec3& r, const Vec3& v) { return v + cross(r, v); }

using Vec6 = std::array<double, 6>;

struct Mat6 {
    std::array<double, 36> a{};  // row-major

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * 6 + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * 6 + j]; }

    static Mat6 diagonal(const Vec6& d) {
        Mat6 m;
        for (int i = 0; i < 6; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }
};

inline Vec6 operator*(const Mat6& m, const Vec6& v) {
    Vec6 r{};
    for (int i = 0; i < 6; ++i) {
        double s = 0.0;
        for (int j = 0; j < 6; ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

// Eigenvalues of a symmetric 6x6 via cyclic Jacobi. Plenty for SPD and
// condition-number checks on compliance matrices.
inline Vec6 sym_eigenvalues(Mat6 m) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 6; ++p)
            for (int q = p + 1; q < 6; ++q) off += m(p, q) * m(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < 6; ++p) {
            for (int q = p + 1; q < 6; ++q) {
                double apq = m(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < 6; ++k) {
                    double akp = m(k, p), akq = m(k, q);
                    m(k, p) = c * akp - s * akq;
                    m(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 6; ++k) {
                    double apk = m(p, k), aqk = m(q, k);
                    m(p, k) = c * apk - s * aqk;
                    m(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    Vec6 eig;
    for (int i = 0; i < 6; ++i) eig[static_cast<std::size_t>(i)] = m(i, i);
    return eig;
}

}  // namespace ledft
