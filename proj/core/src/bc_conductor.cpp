#include "bcdim/bc_conductor.hpp"

#include <algorithm>

#include "bcdim/errors.hpp"

namespace bcdim {

LocalCharData::LocalCharData(long long cond, bool unit_order_le_2)
    : cond(cond), unit_order_le_2(cond == 0 ? true : unit_order_le_2) {
    if (cond < 0) throw invalid_input("LocalCharData: conductor exponent must be >= 0");
}

Supercuspidal::Supercuspidal(QuadExtClass field, LocalCharData theta)
    : field(field), theta(theta) {
    if (!field.ramified() && theta.cond <= 1 && theta.unit_order_le_2)
        throw invalid_input(
            "Supercuspidal: theta is Galois-invariant on the unramified quadratic");
}

long long bc_char_conductor(const RelQuadExt& ext, const LocalCharData& chi) {
    if (!ext.ramified()) return chi.cond;
    if (chi.cond == 0) return 0;
    if (chi.cond == 1) return chi.unit_order_le_2 ? 0 : 1;
    return ext.e * (chi.cond - 1) + 1;
}

long long bc_ps_conductor(const RelQuadExt& ext, const LocalCharData& chi1,
                          const LocalCharData& chi2) {
    return bc_char_conductor(ext, chi1) + bc_char_conductor(ext, chi2);
}

long long bc_special_conductor(const RelQuadExt& ext, const LocalCharData& chi) {
    const long long c = bc_char_conductor(ext, chi);
    return c == 0 ? 1 : 2 * c;
}

long long ai_conductor(const RelQuadExt& ext, const LocalCharData& theta) {
    return ext.f * (ext.d + theta.cond);
}

long long bc_supercuspidal_conductor(const QuadExtClass& Kp, const QuadExtClass& E,
                                     const LocalCharData& theta) {
    if (Kp.p != E.p)
        throw invalid_input("bc_supercuspidal_conductor: extensions of different primes");
    if (Kp == E) {
        // The base change decomposes as a principal series theta ⊕ theta^sigma;
        // both factors have the conductor of theta.
        return 2 * theta.cond;
    }
    // E*Kp is quadratic over each factor.  The base change is the supercuspidal
    // of Kp induced from theta∘N on E*Kp, so first push theta through the norm
    // of (E*Kp)/E and then apply the conductor-discriminant formula over Kp.
    const CompositumRel rel = compositum_over(E, Kp);
    const LocalCharData theta_up(bc_char_conductor(rel.over_first, theta), false);
    return ai_conductor(rel.over_second, theta_up);
}

long long qp_conductor(const LocalRepType& rep) {
    struct Visitor {
        long long operator()(const PrincipalSeries& r) const {
            return r.chi1.cond + r.chi2.cond;
        }
        long long operator()(const Special& r) const {
            return r.chi.cond == 0 ? 1 : 2 * r.chi.cond;
        }
        long long operator()(const Supercuspidal& r) const {
            return ai_conductor(rel_data(r.field), r.theta);
        }
        long long operator()(const UnramifiedPrincipalSeries&) const { return 0; }
    };
    return std::visit(Visitor{}, rep);
}

long long bc_local_conductor(Splitting splitting, const std::optional<QuadExtClass>& Kp,
                             const LocalRepType& rep) {
    if (splitting != Splitting::Ramified) {
        // Split and inert primes: the completion K_p is Q_p (resp. the
        // unramified quadratic), and the conductor exponent is unchanged.
        return qp_conductor(rep);
    }
    if (!Kp) throw invalid_input("bc_local_conductor: ramified prime needs its completion");

    struct Visitor {
        const QuadExtClass& kp;
        const RelQuadExt ext;

        long long operator()(const PrincipalSeries& r) const {
            return bc_ps_conductor(ext, r.chi1, r.chi2);
        }
        long long operator()(const Special& r) const {
            return bc_special_conductor(ext, r.chi);
        }
        long long operator()(const Supercuspidal& r) const {
            return bc_supercuspidal_conductor(kp, r.field, r.theta);
        }
        long long operator()(const UnramifiedPrincipalSeries&) const { return 0; }
    };
    return std::visit(Visitor{*Kp, rel_data(*Kp)}, rep);
}

BCLevelReport bc_level(const ImagQuadField& K,
                       const std::map<long long, LocalRepType>& local_data) {
    BCLevelReport report;
    for (const auto& [p, rep] : local_data) {
        const Splitting s = splitting_type(K, p);
        std::optional<QuadExtClass> Kp;
        if (s == Splitting::Ramified) Kp = localize(K, p);
        const long long c = bc_local_conductor(s, Kp, rep);
        BCLevelEntry entry{p, s, {}};
        // Split p has two primes above it, each seeing the same component.
        entry.exponents = (s == Splitting::Split) ? std::vector<long long>{c, c}
                                                  : std::vector<long long>{c};
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace bcdim
