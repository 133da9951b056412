#include "cmlocus/locus.hpp"

#include <algorithm>
#include <cmath>

namespace cmlocus {

LocusResidual locus_residual(const Arrangement& a, std::size_t i, int k) {
    if (i >= a.size())
        throw std::out_of_range("locus_residual: line index out of range");
    if (k < 1 || k > a.multiplicities()[i])
        throw std::out_of_range("locus_residual: order k outside 1..m_i");
    detail::TermSum ts = detail::locus_term_sum(a.ensemble().thetas(),
                                                a.ensemble().charges(), i, k);
    LocusResidual r;
    r.residual = ts.sum;
    r.relative = ts.scale > 0.0 ? std::fabs(ts.sum) / ts.scale : 0.0;
    return r;
}

bool is_first_locus(const Arrangement& a, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(locus_residual(a, i, 1).relative < tol)) return false;
    return true;
}

bool is_coarsely_symmetric(const MultiplicityList& m) {
    const long n = static_cast<long>(m.size());
    for (long i = 0; i < n; ++i) {
        if (m[static_cast<std::size_t>(i)] <= 1) continue;
        for (long j = 1; j <= n / 2; ++j)
            if (m.at_cyclic(i + j) != m.at_cyclic(i - j)) return false;
    }
    return true;
}

Arrangement reflection_image(const Arrangement& a, std::size_t i) {
    if (i >= a.size())
        throw std::out_of_range("reflection_image: line index out of range");
    const std::vector<double>& th = a.ensemble().thetas();
    const long n = static_cast<long>(a.size());
    const long li = static_cast<long>(i);
    std::vector<double> img_th(a.size());
    std::vector<int> img_m(a.size());
    for (long j = 0; j < n; ++j) {
        long dst = (li + j) % n;
        long src = ((li - j) % n + n) % n;
        img_th[static_cast<std::size_t>(dst)] =
            mod_two_pi(2.0 * th[i] - th[static_cast<std::size_t>(src)]);
        img_m[static_cast<std::size_t>(dst)] = a.multiplicities()[static_cast<std::size_t>(src)];
    }
    return Arrangement(MultiplicityList(std::move(img_m)), std::move(img_th));
}

namespace {

// Distance on the circle between two representatives.
double circle_dist(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

struct AngleMult {
    double theta;
    int mult;
};

std::vector<AngleMult> sorted_pairs(const Arrangement& a) {
    std::vector<AngleMult> v(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        v[j] = {a.ensemble().thetas()[j], a.multiplicities()[j]};
    std::sort(v.begin(), v.end(),
              [](const AngleMult& p, const AngleMult& q) { return p.theta < q.theta; });
    return v;
}

}  // namespace

bool is_reflection_invariant(const Arrangement& a, std::size_t i, double tol) {
    Arrangement img = reflection_image(a, i);
    std::vector<AngleMult> orig = sorted_pairs(a);
    std::vector<AngleMult> refl = sorted_pairs(img);
    const std::size_t n = orig.size();
    // Sort-then-align: both lists ascend, so the only freedom left is a
    // cyclic shift at the 0/2*pi seam.  Try every shift; angles must match
    // as absolute positions on the circle, multiplicities exactly.
    for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const AngleMult& p = orig[j];
            const AngleMult& q = refl[(j + s) % n];
            ok = p.mult == q.mult && circle_dist(p.theta, q.theta) <= tol;
        }
        if (ok) return true;
    }
    return false;
}

bool is_coarsely_coxeter(const Arrangement& a, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.multiplicities()[i] > 1 && !is_reflection_invariant(a, i, tol))
            return false;
    return true;
}

LocusReport analyze_locus(const Arrangement& a, const LocusTolerances& tol) {
    LocusReport rep;
    rep.tolerance = tol;
    rep.first_locus_pass = true;
    bool higher_pass = true;
    rep.coarsely_coxeter = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        LineLocusRecord rec;
        rec.index = i;
        rec.multiplicity = a.multiplicities()[i];
        try {
            for (int k = 1; k <= rec.multiplicity; ++k) {
                LocusResidual r = locus_residual(a, i, k);
                rec.residuals.push_back(r.residual);
                rec.relative.push_back(r.relative);
                if (k == 1 && !(r.relative < tol.first)) rep.first_locus_pass = false;
                if (k >= 2 && !(r.relative < tol.locus)) higher_pass = false;
            }
        } catch (const CollisionError&) {
            rec.collision = true;
            rep.first_locus_pass = false;
            higher_pass = false;
        }
        rec.reflection_invariant = is_reflection_invariant(a, i, tol.reflection);
        if (rec.multiplicity > 1 && !rec.reflection_invariant)
            rep.coarsely_coxeter = false;
        rep.lines.push_back(std::move(rec));
    }
    rep.all_locus_pass = rep.first_locus_pass && higher_pass;
    return rep;
}

LocusReport is_locus_configuration(const Arrangement& a, double tol) {
    LocusTolerances t;
    t.first = tol;
    t.locus = tol;
    return analyze_locus(a, t);
}

}  // namespace cmlocus
