#include "tropsa/classify.hpp"

#include "tropsa/error.hpp"
#include "tropsa/examples.hpp"

namespace tropsa {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::GenericNonRealizable: return "generic-non-realizable";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotSuperabundant: return "not-superabundant";
    case Verdict::OutOfScope: return "out-of-scope";
    }
    return "unknown";
}

namespace {

std::optional<std::string> matching_template(const TropicalCurve& c) {
    for (const char* name : {"tuning_fork_r2", "tuning_fork_r3", "phi3_sub", "phi4_sub"}) {
        const auto t = examples::builtin(name);
        if (t.ambient_dim == c.ambient_dim && core_isomorphic(c, t)) return std::string(name);
    }
    return std::nullopt;
}

} // namespace

VerdictReport realizability_verdict(const TropicalCurve& c, const SearchOptions&) {
    VerdictReport v;
    if (c.subcurve) {
        v.reason = "subcurves are not balanced curves and carry no degree";
        return v;
    }
    const auto profile = degree_profile(c);
    if (!profile.standard_degree) {
        v.verdict = Verdict::OutOfScope;
        v.reason = profile.nonstandard_legs.empty()
                       ? "leg counts differ between standard directions; no degree"
                       : std::to_string(profile.nonstandard_legs.size()) + " legs are not standard directions";
        return v;
    }
    if (*profile.standard_degree < 1) {
        v.reason = "curve has no legs";
        return v;
    }
    v.degree = *profile.standard_degree;

    const auto rep = analyze(c);
    v.deformation_dim = rep.actual_dim;
    if (!rep.superabundant) {
        v.verdict = Verdict::NotSuperabundant;
        v.reason = "deformation space has the expected dimension " + std::to_string(rep.expected_dim);
        return v;
    }
    v.core_template = matching_template(c);

    const long g = static_cast<long>(rep.genus);
    const long r = c.ambient_dim;
    const long d = *v.degree;
    if (d <= 2 * g - 2) {
        v.verdict = Verdict::Inconclusive;
        v.reason = "degree " + std::to_string(d) + " does not exceed 2g-2 = " + std::to_string(2 * g - 2) +
                   ", so the moduli dimension formula does not apply";
        if (v.core_template == "tuning_fork_r2")
            v.reason += "; for this genus-2 planar type the realizable locus has dimension 3, equal to the "
                        "deformation dimension " +
                        std::to_string(rep.actual_dim);
        return v;
    }

    v.moduli_dim = moduli_dimension(g, r, d);
    if (*v.moduli_dim < rep.actual_dim) {
        v.verdict = Verdict::GenericNonRealizable;
        v.reason = "moduli dimension " + std::to_string(*v.moduli_dim) + " < deformation dimension " +
                   std::to_string(rep.actual_dim);
    } else {
        v.verdict = Verdict::Inconclusive;
        v.reason = "moduli dimension " + std::to_string(*v.moduli_dim) + " >= deformation dimension " +
                   std::to_string(rep.actual_dim);
    }
    return v;
}

} // namespace tropsa
