#include "tropsa/classify.hpp"

#include "tropsa/error.hpp"

namespace tropsa {

std::string to_string(Genus2Type t) {
    switch (t) {
    case Genus2Type::NotSuperabundant: return "not superabundant";
    case Genus2Type::Planar: return "planar";
    case Genus2Type::Canonical: return "canonical";
    }
    return "unknown";
}

// For genus 2 the planar search is complete: if the core is not a theta, or
// the two lambdas are dependent, some cycle with incidence in {-1,0,1} lies in
// a hyperplane, and coefficient bound 1 already reaches it.
Genus2Classification classify_genus2(const TropicalCurve& c, const SearchOptions& opt) {
    if (genus(c.graph) != 2) fail(ErrorKind::Precondition, "classify_genus2 needs a genus-2 curve");
    Genus2Classification out;
    if (!analyze(c).superabundant) return out;

    out.planar = find_planar_cycle(c, opt.coeff_bound);
    if (out.planar) {
        out.type = Genus2Type::Planar;
        return out;
    }
    try {
        out.normal_form = genus2_normal_form(c);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Precondition)
            fail(ErrorKind::Internal, std::string("superabundant genus-2 curve with no planar cycle: ") + e.what());
        throw;
    }
    out.type = Genus2Type::Canonical;
    return out;
}

} // namespace tropsa
