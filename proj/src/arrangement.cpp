#include "cmlocus/arrangement.hpp"

#include <cmath>
#include <cstdio>

namespace cmlocus {

double mod_two_pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    if (y >= kTwoPi) y = 0.0;  // fmod rounding at the seam
    return y;
}

namespace {

std::string bad(const char* what, const std::string& detail) {
    return std::string(what) + ": " + detail;
}

// Cyclic order of distinct representatives in [0, 2*pi): walking the list
// positionally must give exactly one strict descent and no equal neighbors.
void validate_cyclic_order(const std::vector<double>& thetas) {
    const std::size_t n = thetas.size();
    std::size_t descents = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = thetas[i];
        double b = thetas[(i + 1) % n];
        if (a == b)
            throw std::invalid_argument(
                bad("ChargedEnsemble", "coincident angles at indices " +
                                           std::to_string(i) + " and " +
                                           std::to_string((i + 1) % n)));
        if (b < a) ++descents;
    }
    if (descents != 1)
        throw std::invalid_argument(
            bad("ChargedEnsemble", "angles are not cyclically ordered"));
}

}  // namespace

MultiplicityList::MultiplicityList(std::vector<int> m) : m_(std::move(m)) {
    if (m_.size() < 2)
        throw std::invalid_argument(bad("MultiplicityList", "need n >= 2 entries"));
    for (std::size_t i = 0; i < m_.size(); ++i)
        if (m_[i] < 1)
            throw std::invalid_argument(
                bad("MultiplicityList", "m_" + std::to_string(i) + " = " +
                                            std::to_string(m_[i]) + " < 1"));
}

int MultiplicityList::at_cyclic(long j) const {
    const long n = static_cast<long>(m_.size());
    long r = j % n;
    if (r < 0) r += n;
    return m_[static_cast<std::size_t>(r)];
}

ChargedEnsemble::ChargedEnsemble(std::vector<double> thetas, std::vector<int> charges)
    : thetas_(std::move(thetas)), charges_(std::move(charges)) {
    if (thetas_.size() != charges_.size())
        throw std::invalid_argument(bad("ChargedEnsemble", "angle/charge length mismatch"));
    if (thetas_.size() < 2)
        throw std::invalid_argument(bad("ChargedEnsemble", "need n >= 2 particles"));
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        double t = thetas_[i];
        if (!(t >= 0.0 && t < kTwoPi) || !std::isfinite(t))
            throw std::invalid_argument(
                bad("ChargedEnsemble", "theta_" + std::to_string(i) +
                                           " outside [0, 2*pi)"));
        if (charges_[i] < 1)
            throw std::invalid_argument(
                bad("ChargedEnsemble", "charge q_" + std::to_string(i) + " < 1"));
    }
    validate_cyclic_order(thetas_);
}

Arrangement::Arrangement(MultiplicityList mults, std::vector<double> thetas)
    : mults_(std::move(mults)),
      ensemble_(std::move(thetas), charges_from_multiplicities(mults_)) {}

Arrangement::Arrangement(MultiplicityList mults, ChargedEnsemble ensemble)
    : mults_(std::move(mults)), ensemble_(std::move(ensemble)) {
    if (mults_.size() != ensemble_.size())
        throw std::invalid_argument(bad("Arrangement", "multiplicity/particle count mismatch"));
    for (std::size_t i = 0; i < mults_.size(); ++i) {
        int q = mults_[i] * (mults_[i] + 1);
        if (ensemble_.charges()[i] != q)
            throw std::invalid_argument(
                bad("Arrangement", "charge q_" + std::to_string(i) +
                                       " != m_i (m_i + 1)"));
    }
}

Vec2 Arrangement::normal(std::size_t i) const {
    return normal_vector(ensemble_.thetas()[i]);
}

Vec2 Arrangement::spanning(std::size_t i) const {
    return spanning_vector(ensemble_.thetas()[i]);
}

std::vector<int> charges_from_multiplicities(const MultiplicityList& m) {
    std::vector<int> q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] * (m[i] + 1);
    return q;
}

Vec2 normal_vector(double theta) {
    return {std::cos(0.5 * theta), std::sin(0.5 * theta)};
}

Vec2 spanning_vector(double theta) {
    return {-std::sin(0.5 * theta), std::cos(0.5 * theta)};
}

namespace detail {

TermSum locus_term_sum(const std::vector<double>& thetas,
                       const std::vector<int>& charges, std::size_t i, int k) {
    const std::size_t n = thetas.size();
    TermSum ts;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double h = 0.5 * (thetas[j] - thetas[i]);
        double s = std::sin(h);
        if (std::fabs(s) < kCollisionTol) {
            char msg[96];
            std::snprintf(msg, sizeof(msg),
                          "particles %zu and %zu collide (|sin| < %g)", i, j,
                          kCollisionTol);
            throw CollisionError(msg);
        }
        double c = std::cos(h);
        double denom = ipow(s, 2 * k + 1);
        ts.sum += charges[j] * ipow(c, 2 * k - 1) / denom;
        ts.scale += charges[j] / std::fabs(denom);
    }
    return ts;
}

double potential_raw(const std::vector<double>& thetas,
                     const std::vector<int>& charges) {
    const std::size_t n = thetas.size();
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double s = std::sin(0.5 * (thetas[j] - thetas[i]));
            if (std::fabs(s) < kCollisionTol) {
                char msg[96];
                std::snprintf(msg, sizeof(msg),
                              "particles %zu and %zu collide (|sin| < %g)", i,
                              j, kCollisionTol);
                throw CollisionError(msg);
            }
            mu += charges[i] * charges[j] / (s * s);
        }
    }
    return mu;
}

}  // namespace detail

double cm_potential(const ChargedEnsemble& e) {
    return detail::potential_raw(e.thetas(), e.charges());
}

double cm_force(const ChargedEnsemble& e, std::size_t i) {
    if (i >= e.size())
        throw std::out_of_range("cm_force: particle index out of range");
    return e.charges()[i] *
           detail::locus_term_sum(e.thetas(), e.charges(), i, 1).sum;
}

double schrodinger_potential(const Arrangement& a, Vec2 x) {
    double u = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double p = dot(a.normal(i), x);
        if (std::fabs(p) < kCollisionTol) {
            char msg[96];
            std::snprintf(msg, sizeof(msg),
                          "evaluation point lies on line %zu (|<alpha,x>| < %g)",
                          i, kCollisionTol);
            throw SingularityError(msg);
        }
        u += a.ensemble().charges()[i] / (p * p);
    }
    return u;
}

}  // namespace cmlocus
