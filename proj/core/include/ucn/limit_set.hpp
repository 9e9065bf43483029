#pragma once

#include "ucn/lattice.hpp"
#include "ucn/matrix.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace ucn {

// Affine chart of P(V_N) with the hyperplane [u_N^perp] at infinity.
// A rational b_N-orthogonal basis beta_1..beta_{N-1} of u_N^perp is built by
// Gram-Schmidt without normalization; the (negative) squared norms are kept
// exactly, so floats enter only when a point is finally charted. In the
// orthonormalized coordinates the isotropic cone projects to the sphere of
// radius sqrt(N(N-2)/2) about the origin.
class ProjectiveChart {
  public:
    explicit ProjectiveChart(int n); // requires n >= 3

    int rank() const { return n_; }
    double sphere_radius() const { return sphere_radius_; }

    const std::vector<std::vector<BigRational>>& basis() const { return beta_; }
    const std::vector<BigRational>& squared_norms() const { return beta_norm_; }

    // Chart coordinates of [v]; nullopt when b(v, u_N) = 0 (point at infinity).
    std::optional<std::vector<double>> chart_point(std::span<const BigInt> v) const;

    // u_N-coefficient and orthonormal-coordinate components of an arbitrary
    // vector (not projectivized); used for charting circle normals.
    struct Decomposition {
        double u_coeff;
        std::vector<double> x;
    };
    Decomposition decompose(std::span<const BigInt> v) const;

  private:
    int n_;
    double sphere_radius_;
    std::vector<std::vector<BigRational>> beta_;
    std::vector<BigRational> beta_norm_; // b(beta_i, beta_i) < 0
};

struct PointCloud {
    int dim = 0;
    std::vector<std::vector<double>> points;
    long skipped = 0; // orbit images with b(v, u_N) = 0, not chartable
};

// Images of the seed under the dual representation of every reduced word of
// length <= depth, in length-then-lex order, charted. Deterministic.
PointCloud orbit_points(int n, const LatticeClass& seed, int depth);

// Exact circle of the UC(4) packing: a space-like integer normal plus the
// word that produced it and derived floating center/radius in the plane
// picture (stereographic projection of the chart sphere from a pole in a
// circle-free gap).
struct GasketCircle {
    IntVector normal;  // b_4(normal, normal) < 0, exact
    ReducedWord word;  // dual-side word applied to the root
    int root;          // 1..4, which chamber vertex the orbit started from
    int depth;         // word length
    int parent;        // index of the circle this one was reflected from; -1 for roots
    std::array<double, 2> center;
    double radius;
};

// The four root circles with normals c_1..c_4 plus their images under all
// reduced words of length <= depth on the dual side, duplicates removed by
// primitive-normal-up-to-sign comparison. Every non-root circle is exactly
// tangent to its parent and no two circles cross.
std::vector<GasketCircle> gasket_circles(int depth);

enum class CircleRelation { Tangent, Disjoint, Crossing, Identical };

// Exact inversive classification: compare b(x,y)^2 with b(x,x) b(y,y).
CircleRelation tangency(const GasketCircle& a, const GasketCircle& b);
CircleRelation circle_relation(std::span<const BigInt> x, std::span<const BigInt> y);

struct Box2 {
    double xmin, xmax, ymin, ymax;
    double size() const;
};

// Bounding box of the four root circles in the plane picture.
Box2 gasket_root_box();

// Points sampled along every circle boundary at arc spacing <= max_spacing
// (at least 12 per circle). dim = 2.
PointCloud gasket_boundary_cloud(int depth, double max_spacing);

struct DimensionFit {
    double slope;
    std::vector<double> scales;
    std::vector<long> counts; // occupied boxes per scale
    std::size_t point_count;
};

// Least-squares slope of log(count) against log(1/scale) over occupied-box
// counts on uniform grids. Throws DegenerateCloud when all points coincide.
DimensionFit box_counting_dimension(const PointCloud& cloud, std::span<const double> scales);

} // namespace ucn
