#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

// Core vocabulary for central line arrangements in R^2 with multiplicities
// and the charged trigonometric Calogero-Moser particle system they induce.
//
// Convention (double cover): a line through the origin at visual angle
// theta/2 is encoded by a particle angle theta in [0, 2*pi).  Its unit
// normal is alpha = (cos(theta/2), sin(theta/2)) and its spanning vector is
// alpha_perp = (-sin(theta/2), cos(theta/2)).  With unit normals every
// formula below reduces to trigonometry in half-differences (theta_j - theta_i)/2.

namespace cmlocus {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Evaluations with |sin((theta_j - theta_i)/2)| below this threshold raise
// CollisionError instead of returning a huge value, to separate "near the
// chamber boundary" from numerical garbage.
inline constexpr double kCollisionTol = 1e-12;

struct CollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point lies on (or numerically on) one of the lines.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Representative of x modulo 2*pi in [0, 2*pi).
double mod_two_pi(double x);

/// Cyclic list of positive integer multiplicities m_i, n >= 2.
class MultiplicityList {
public:
    explicit MultiplicityList(std::vector<int> m);

    std::size_t size() const { return m_.size(); }
    int operator[](std::size_t i) const { return m_[i]; }
    const std::vector<int>& values() const { return m_; }

    // Index arithmetic mod n; j may be negative.
    int at_cyclic(long j) const;

private:
    std::vector<int> m_;
};

/// Distinct particle angles on the circle, in cyclic order, with positive
/// integer charges.  Immutable once constructed.
class ChargedEnsemble {
public:
    ChargedEnsemble(std::vector<double> thetas, std::vector<int> charges);

    std::size_t size() const { return thetas_.size(); }
    const std::vector<double>& thetas() const { return thetas_; }
    const std::vector<int>& charges() const { return charges_; }

private:
    std::vector<double> thetas_;
    std::vector<int> charges_;
};

/// Charged ensemble together with the multiplicity list it came from;
/// enforces q_i = m_i (m_i + 1).
class Arrangement {
public:
    Arrangement(MultiplicityList mults, std::vector<double> thetas);
    Arrangement(MultiplicityList mults, ChargedEnsemble ensemble);

    std::size_t size() const { return mults_.size(); }
    const MultiplicityList& multiplicities() const { return mults_; }
    const ChargedEnsemble& ensemble() const { return ensemble_; }

    Vec2 normal(std::size_t i) const;
    Vec2 spanning(std::size_t i) const;

private:
    MultiplicityList mults_;
    ChargedEnsemble ensemble_;
};

/// q_i = m_i (m_i + 1).
std::vector<int> charges_from_multiplicities(const MultiplicityList& m);

/// Unit normal (cos(theta/2), sin(theta/2)) of the line encoded by theta.
Vec2 normal_vector(double theta);

/// Spanning vector (-sin(theta/2), cos(theta/2)); orthogonal to the normal.
Vec2 spanning_vector(double theta);

/// Charged trigonometric Calogero-Moser potential
///   mu(E) = sum_{i != j} q_i q_j / sin^2((theta_j - theta_i)/2),
/// a double sum over ordered pairs (each unordered pair counted twice).
double cm_potential(const ChargedEnsemble& e);

/// Force expression at particle i:
///   q_i * sum_{j != i} q_j cos((theta_j - theta_i)/2) / sin^3((theta_j - theta_i)/2).
/// The partial derivative of cm_potential in theta_i is exactly twice this
/// value (the double sum counts each pair twice); the zero sets coincide.
double cm_force(const ChargedEnsemble& e, std::size_t i);

/// Schroedinger potential u(x) = sum_i q_i / <alpha_i, x>^2 (unit normals).
double schrodinger_potential(const Arrangement& a, Vec2 x);

namespace detail {

// x^n for small positive integer n, by repeated multiplication.
inline double ipow(double x, int n) {
    double r = x;
    for (int i = 1; i < n; ++i) r *= x;
    return r;
}

struct TermSum {
    double sum = 0.0;    // signed sum of terms
    double scale = 0.0;  // sum_j q_j / |sin|^{2k+1}: magnitude scale of the sum.
                         // The cosine factors are left out of the scale so a
                         // right-angle pair (cos = 0) cannot zero the denominator.
};

// Shared term kernel of the k-th locus equation at line i:
//   sum_{j != i} q_j cos^{2k-1}(d/2) / sin^{2k+1}(d/2),  d = theta_j - theta_i.
// cm_force (k = 1), the locus residuals and the solver gradient all go
// through this one code path.
TermSum locus_term_sum(const std::vector<double>& thetas,
                       const std::vector<int>& charges, std::size_t i, int k);

// cm_potential on raw angle/charge vectors; requires distinct angles only.
double potential_raw(const std::vector<double>& thetas,
                     const std::vector<int>& charges);

}  // namespace detail

}  // namespace cmlocus
