#pragma once

#include "cmlocus/arrangement.hpp"

// Locus equations for a 2D arrangement, in particle coordinates.  The k-th
// locus residual at line i is
//
//   r_{i,k} = sum_{j != i} q_j cos^{2k-1}((theta_j - theta_i)/2)
//                              / sin^{2k+1}((theta_j - theta_i)/2),
//
// for k = 1..m_i.  A locus configuration has every r_{i,k} = 0; the k = 1
// system alone is the first-locus condition, equivalent to equilibrium of
// the charged ensemble.  Pass/fail verdicts use relative residuals
// |r| / sum_j q_j |sin((theta_j - theta_i)/2)|^{-(2k+1)}, which are
// scale-free in the charges and robust across orders k.

namespace cmlocus {

struct LocusResidual {
    double residual = 0.0;  // signed value of the sum
    double relative = 0.0;  // |residual| over the term-magnitude scale, in [0, 1]
};

struct LineLocusRecord {
    std::size_t index = 0;
    int multiplicity = 0;
    std::vector<double> residuals;  // k = 1..m_i
    std::vector<double> relative;
    bool reflection_invariant = false;
    // Line could not be evaluated: some counterpart sits within the collision
    // threshold.  Such a line fails the verdicts but the rest still report.
    bool collision = false;
};

struct LocusTolerances {
    double first = 1e-9;       // relative residual at k = 1
    double locus = 1e-8;       // relative residual at k >= 2 (worse conditioning)
    double reflection = 1e-9;  // angle matching in reflection checks
};

/// Raw residuals plus verdicts; residuals always accompany the booleans so
/// near-threshold cases stay auditable.
struct LocusReport {
    std::vector<LineLocusRecord> lines;
    bool first_locus_pass = false;
    bool all_locus_pass = false;
    bool coarsely_coxeter = false;
    LocusTolerances tolerance;
};

/// k-th locus residual at line i (1 <= k <= m_i).
LocusResidual locus_residual(const Arrangement& a, std::size_t i, int k);

/// True iff the relative k = 1 residual is below tol at every line.
bool is_first_locus(const Arrangement& a, double tol);

/// Full hierarchy report with per-order tolerances.
LocusReport analyze_locus(const Arrangement& a, const LocusTolerances& tol = {});

/// Single-tolerance variant: all_locus_pass iff every relative residual
/// (all lines, all k = 1..m_i) is below tol.
LocusReport is_locus_configuration(const Arrangement& a, double tol);

/// m_{i+j} = m_{i-j} (mod n) for every i with m_i > 1 and every j.
bool is_coarsely_symmetric(const MultiplicityList& m);

/// Reflection of the arrangement across line i: theta_j -> 2 theta_i - theta_j.
/// Output position i+j carries the original entry i-j (indices mod n), so the
/// image multiplicity list reads m'_{i+j} = m_{i-j} and line i stays fixed in
/// place; the result is again cyclically ordered.
Arrangement reflection_image(const Arrangement& a, std::size_t i);

/// True iff the reflected arrangement equals the original as a multiset of
/// (angle mod 2*pi, multiplicity) pairs, angles matched within tol.
bool is_reflection_invariant(const Arrangement& a, std::size_t i, double tol);

/// Reflection invariance at every line of multiplicity > 1.
bool is_coarsely_coxeter(const Arrangement& a, double tol);

}  // namespace cmlocus
