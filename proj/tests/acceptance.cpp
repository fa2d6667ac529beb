// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include "support.hpp"

#include "tropsa/abundancy.hpp"
#include "tropsa/classify.hpp"
#include "tropsa/error.hpp"
#include "tropsa/examples.hpp"
#include "tropsa/transforms.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace tropsa;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failed;

    void check(bool ok, const std::string& what) {
        if (!ok) failed.push_back(what);
        pass = pass && ok;
    }

    std::string text() const {
        std::string out = detail.str();
        for (const auto& f : failed) out += "; FAILED " + f;
        return out;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------- 1 to 5

Outcome tuning_fork_dims() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto rep = analyze(examples::builtin("tuning_fork_r2"));
    const double s = seconds_since(t0);
    o.check(rep.actual_dim == 3 && rep.expected_dim == 2 && rep.excess == 1 && rep.superabundant, "dimensions");
    o.check(s < 1.0, "time limit");
    o.detail << "actual " << rep.actual_dim << ", expected " << rep.expected_dim << ", excess "
             << rep.excess << " in " << s << " s";
    return o;
}

Outcome phi3_class() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto c = examples::builtin("phi3_sub");
    const auto rep = analyze(c);
    const auto irr = is_irreducible(c);
    const auto ind = is_indecomposable(c);
    const double s = seconds_since(t0);
    o.check(rep.actual_dim == 4 && rep.expected_dim == 3 && rep.excess == 1, "dimensions");
    o.check(irr.value == Tristate::Yes, "irreducible");
    o.check(ind.value == Tristate::Yes, "indecomposable");
    o.check(s < 5.0, "time limit");
    o.detail << "actual " << rep.actual_dim << ", expected " << rep.expected_dim
             << ", irreducible " << to_string(irr.value) << " (" << irr.subsets_checked << " subsets), indecomposable "
             << to_string(ind.value) << " in " << s << " s";
    return o;
}

Outcome phi4_class() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto c = examples::builtin("phi4");
    const auto rep = analyze(c);
    const auto irr = is_irreducible(c);
    const auto ind = is_indecomposable(c);
    const double s = seconds_since(t0);
    o.check(rep.actual_dim == 21 && rep.expected_dim == 20 && rep.excess == 1, "dimensions");
    o.check(irr.value == Tristate::Yes, "irreducible");
    o.check(ind.value == Tristate::No, "decomposable");
    const RationalMatrix l_coords{{1, 0, 0, 0}, {0, 1, 0, 0}};
    o.check(ind.witness && *ind.witness == l_coords, "witness is the L projection");
    o.check(ind.witness_verified, "witness verified");
    o.check(s < 30.0, "time limit");
    o.detail << "actual " << rep.actual_dim << ", expected " << rep.expected_dim
             << ", irreducible " << to_string(irr.value) << " (" << irr.subsets_checked
             << " subsets), indecomposable " << to_string(ind.value) << " via " << ind.method << " in " << s << " s";
    return o;
}

Outcome verdict_fixtures() {
    Outcome o;
    const auto g3 = examples::builtin("fixture_g3_d5");
    const auto v3 = realizability_verdict(g3);
    o.check(is_trivalent(g3) && genus(g3.graph) == 3, "genus-3 fixture is trivalent of genus 3");
    o.check(v3.degree == 5, "genus-3 fixture has degree 5");
    o.check(v3.core_template == "phi3_sub", "genus-3 fixture has the phi3 core");
    o.check(v3.verdict == Verdict::GenericNonRealizable && v3.moduli_dim == 17 && v3.deformation_dim == 18,
            "genus-3 verdict 17 < 18");
    o.detail << "g=3 d=" << v3.degree.value_or(-1) << ": " << to_string(v3.verdict)
             << ", moduli " << v3.moduli_dim.value_or(-1) << " < def " << v3.deformation_dim;

    const auto g4 = examples::builtin("fixture_g4");
    const auto v4 = realizability_verdict(g4);
    o.detail << "; g=4 d=" << v4.degree.value_or(-1) << ": " << to_string(v4.verdict) << ", moduli "
             << v4.moduli_dim.value_or(-1) << " < def " << v4.deformation_dim;
    o.check(v4.core_template == "phi4_sub" && v4.verdict == Verdict::GenericNonRealizable,
            "genus-4 fixture verdict");
    o.check(v4.degree == 7 && v4.moduli_dim == 28 && v4.deformation_dim == 29,
            "genus-4 fixture of degree 7 with moduli 28 < def 29 (the shipped genus-4 fixture has degree " +
                std::to_string(v4.degree.value_or(-1)) + ")");
    return o;
}

Outcome tuning_fork_verdict() {
    Outcome o;
    const auto v = realizability_verdict(examples::builtin("tuning_fork_r2"));
    o.check(v.verdict == Verdict::Inconclusive, "inconclusive");
    o.check(v.degree == 2, "degree 2");
    o.detail << to_string(v.verdict) << ": " << v.reason;
    return o;
}

// ---------------------------------------------------------------- 6

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

Rational nonzero(support::Rng& rng, long span) {
    long x = 0;
    while (x == 0) x = support::uniform(rng, -span, span);
    return Rational(x);
}

// Interior points of one segment: k distinct points from `point`, none equal
// to the endpoints.
std::vector<RationalVector> points(support::Rng& rng, std::size_t k, const std::function<RationalVector()>& point,
                                   const RationalVector& a, const RationalVector& b) {
    std::vector<RationalVector> out;
    while (out.size() < k) {
        auto p = point();
        if (p == a || p == b || (!out.empty() && p == out.back())) continue;
        out.push_back(p);
    }
    (void)rng;
    return out;
}

// Two segments in a common hyperplane through A and B, the third generic.
TropicalCurve planar_theta(support::Rng& rng) {
    const int r = 2 + static_cast<int>(support::uniform(rng, 0, 1));
    RationalVector a(r);
    std::vector<IntegerVector> basis;
    for (int k = 0; k + 1 < r; ++k) basis.push_back(support::random_direction(rng, r, -2, 2));
    auto in_plane = [&] {
        RationalVector p = a;
        for (const auto& u : basis) p = support::add_scaled(p, u, Rational(support::uniform(rng, -4, 4)));
        return p;
    };
    RationalVector b = in_plane();
    std::vector<std::vector<RationalVector>> interior;
    for (int s = 0; s < 2; ++s) interior.push_back(points(rng, support::uniform(rng, 0, 2), in_plane, a, b));
    interior.push_back(points(rng, support::uniform(rng, 1, 2),
                              [&] { return support::random_rational_vector(rng, r, -5, 5); }, a, b));
    return support::theta_through(rng, a, b, interior);
}

// Segments in {x=0}, {y=0}, {x+y=0} (times the remaining coordinates) out of
// A and into B, which differ only in those remaining coordinates.
TropicalCurve normal_theta(support::Rng& rng, int r) {
    RationalVector a(r), b(r);
    for (int i = 2; i < r; ++i) b[i] = support::uniform(rng, -3, 3);
    const std::function<RationalVector()> planes[3] = {
        [&] {
            RationalVector p = support::random_rational_vector(rng, r, -4, 4);
            p[0] = 0;
            return p;
        },
        [&] {
            RationalVector p = support::random_rational_vector(rng, r, -4, 4);
            p[1] = 0;
            return p;
        },
        [&] {
            RationalVector p = support::random_rational_vector(rng, r, -4, 4);
            p[1] = -p[0];
            return p;
        }};
    std::vector<std::vector<RationalVector>> interior;
    for (const auto& plane : planes) interior.push_back(points(rng, support::uniform(rng, 1, 3), plane, a, b));
    return support::theta_through(rng, a, b, interior);
}

TropicalCurve generic_theta(support::Rng& rng) {
    const int r = 2 + static_cast<int>(support::uniform(rng, 0, 1));
    const auto a = support::random_rational_vector(rng, r, -5, 5);
    const auto b = support::random_rational_vector(rng, r, -5, 5);
    auto any = [&] { return support::random_rational_vector(rng, r, -5, 5); };
    std::vector<std::vector<RationalVector>> interior;
    for (int s = 0; s < 3; ++s) interior.push_back(points(rng, support::uniform(rng, 1, 2), any, a, b));
    return support::theta_through(rng, a, b, interior);
}

RationalMatrix matrix_of(const std::vector<RationalVector>& rows) {
    return RationalMatrix::from_rows(rows, rows.size());
}

Outcome genus2_suite() {
    Outcome o;
    support::Rng rng(20240611);
    const int per_branch = 500;
    struct Tally {
        int curves = 0, agree = 0, superabundant = 0, planar = 0, canonical = 0, on_lines = 0;
    };
    Tally branch[3];
    const char* names[3] = {"planar", "canonical", "generic"};

    for (int k = 0; k < 3; ++k) {
        auto& t = branch[k];
        while (t.curves < per_branch) {
            TropicalCurve c;
            if (k == 0) {
                c = planar_theta(rng);
            } else if (k == 1) {
                const int r = 2 + static_cast<int>(support::uniform(rng, 0, 1));
                c = normal_theta(rng, r);
                if (c.graph.vertex_count() == 0) continue;
                const auto q = matrix_of(support::random_invertible(rng, r));
                c = apply_affine(c, {q, support::random_rational_vector(rng, r, -3, 3)}).curve;
            } else {
                c = generic_theta(rng);
            }
            if (c.graph.vertex_count() == 0 || genus(c.graph) != 2) continue;
            ++t.curves;
            const auto rep = analyze(c);
            const auto g2 = classify_genus2(c);
            t.superabundant += rep.superabundant;
            t.agree += (g2.type != Genus2Type::NotSuperabundant) == rep.superabundant;
            t.planar += g2.type == Genus2Type::Planar;
            if (g2.type == Genus2Type::Canonical) {
                ++t.canonical;
                t.on_lines += g2.normal_form && support::on_normal_lines(g2.normal_form->curve);
            }
        }
        o.check(t.agree == t.curves, std::string(names[k]) + " agreement");
        o.check(t.on_lines == t.canonical, std::string(names[k]) + " normal forms on e1, e2, e1+e2");
    }
    // curves built to satisfy either condition must be superabundant
    o.check(branch[0].superabundant == branch[0].curves, "planar constructions superabundant");
    o.check(branch[1].superabundant == branch[1].curves, "canonical constructions superabundant");
    for (int k = 0; k < 3; ++k)
        o.detail << (k ? "; " : "") << names[k] << ": " << branch[k].agree << "/" << branch[k].curves
                 << " agree, " << branch[k].superabundant << " superabundant, " << branch[k].planar << " planar, "
                 << branch[k].canonical << " canonical (" << branch[k].on_lines << " on the lines)";
    return o;
}

// ---------------------------------------------------------------- 7

RationalVector displacement(const TropicalCurve& c, std::size_t e) {
    RationalVector d = to_rational(c.edge_directions[e]);
    for (auto& x : d) x *= *c.edge_lengths[e];
    return d;
}

Outcome transform_suite() {
    Outcome o;
    support::Rng rng(777);
    int pairs = 0, kernel = 0, balanced = 0, images = 0;
    while (pairs < 200) {
        const int r = 2 + pairs % 3;
        const auto c = support::random_curve(rng, r, 3 + pairs % 5, 1 + pairs % 4, pairs % 3 == 0);
        const auto q = matrix_of(support::random_invertible(rng, r));
        const auto img = apply_affine(c, {q, support::random_rational_vector(rng, r, -3, 3)}).curve;
        ++pairs;
        kernel += analyze(img).actual_dim == analyze(c).actual_dim;
        balanced += validate(img).ok();
        bool same = true;
        for (std::size_t e = 0; e < c.graph.edges.size(); ++e) same = same && displacement(img, e) == q.apply(displacement(c, e));
        images += same;
    }
    o.check(kernel == pairs, "kernel dimension");
    o.check(balanced == pairs, "balancing");
    o.check(images == pairs, "displacement images");

    int templates = 0, projected = 0;
    for (const auto& name : examples::builtin_names()) {
        const auto c = examples::builtin(name);
        if (!analyze(c).superabundant) continue;
        ++templates;
        try {
            const bool ok = analyze(project_onto_obstruction(c).image.curve).superabundant;
            projected += ok;
            o.check(ok, "projection of " + name + " superabundant");
        } catch (const Error& e) {
            o.check(false, "projection of " + name + ": " + e.what());
        }
    }
    o.detail << pairs << " pairs: kernel " << kernel << ", balancing " << balanced
             << ", displacements " << images << "; projections superabundant " << projected << "/" << templates;
    return o;
}

// ---------------------------------------------------------------- 8

Outcome oracle_suite() {
    Outcome o;
    support::Rng rng(88);
    long cases = 0, agree = 0, graphs = 0;

    std::vector<std::vector<int>> cycles;
    auto run_case = [&](const TropicalCurve& c) {
        ++cases;
        agree += analyze(c).actual_dim == support::closure_kernel_dim(c, cycles);
    };

    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) slots.push_back({a, b});
        // multisets of slots of size <= 6, as nondecreasing index sequences
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            if (!pick.empty()) {
                ++graphs;
                TropicalCurve base;
                base.subcurve = true;
                for (std::size_t v = 0; v < n; ++v) base.add_vertex("v" + std::to_string(v));
                const auto b = pick.size();
                for (std::size_t e = 0; e < b; ++e)
                    base.add_edge(slots[pick[e]].first, slots[pick[e]].second, IntegerVector(1, 1), Rational(1));
                cycles = support::all_signed_cycles(base.graph);
                base.graph.edges.clear();
                base.edge_directions.clear();
                base.edge_lengths.clear();
                for (int r = 1; r <= 3; ++r) {
                    // exhaustive directions when small, sampled otherwise
                    long per_edge = 1;
                    for (int i = 0; i < r; ++i) per_edge *= 5;
                    --per_edge;
                    long total = 1;
                    for (std::size_t e = 0; e < b; ++e) total = total > 100000 ? total : total * per_edge;
                    const bool exhaustive = total <= 600;
                    const long samples = exhaustive ? total : 3;
                    for (long s = 0; s < samples; ++s) {
                        TropicalCurve c = base;
                        c.ambient_dim = r;
                        long code = s;
                        for (std::size_t e = 0; e < b; ++e) {
                            IntegerVector d(r);
                            if (exhaustive) {
                                long x = code % per_edge + 1; // skip the zero vector
                                code /= per_edge;
                                // x in 1..per_edge, base-5 digits shifted to {-2..2}; zero is 12 for r=2 etc.
                                long zero = 0;
                                for (int i = 0; i < r; ++i) zero = zero * 5 + 2;
                                if (x <= zero) --x;
                                for (int i = 0; i < r; ++i) {
                                    d[i] = x % 5 - 2;
                                    x /= 5;
                                }
                            } else {
                                d = support::random_direction(rng, r, -2, 2);
                            }
                            c.add_edge(slots[pick[e]].first, slots[pick[e]].second, d, Rational(1));
                        }
                        run_case(c);
                    }
                }
            }
            if (pick.size() == 6) return;
            for (std::size_t k = from; k < slots.size(); ++k) {
                pick.push_back(k);
                grow(k);
                pick.pop_back();
            }
        };
        grow(0);
    }
    o.check(agree == cases, "kernel dimension agreement");
    o.detail << agree << "/" << cases << " cases over " << graphs << " graphs";
    return o;
}

// ---------------------------------------------------------------- 9

Outcome invariance_suite() {
    Outcome o;
    support::Rng rng(99);
    std::vector<TropicalCurve> curves;
    for (const auto& name : examples::builtin_names()) curves.push_back(examples::builtin(name));
    for (const auto& name : examples::fixture_names()) curves.push_back(examples::builtin(name));
    const std::size_t templates = curves.size();
    for (int t = 0; t < 200; ++t)
        curves.push_back(support::random_curve(rng, 2 + t % 3, 3 + t % 5, 1 + t % 4, t % 2 == 0));

    int core_ok = 0, sub_ok = 0, basis_ok = 0, superabundant = 0;
    for (const auto& c : curves) {
        const bool flag = analyze(c).superabundant;
        superabundant += flag;
        core_ok += analyze(core_neighbourhood(c)).superabundant == flag;

        auto s = c;
        if (!s.graph.edges.empty()) {
            const auto e = support::uniform(rng, 0, s.graph.edges.size() - 1);
            s = subdivide_edge(s, e, Rational(support::uniform(rng, 1, 6), 7));
        }
        sub_ok += analyze(s).superabundant == flag;

        SpanningTreeChoice choice;
        choice.root = support::uniform(rng, 0, c.graph.vertex_count() - 1);
        choice.edge_order.resize(c.graph.edges.size());
        std::iota(choice.edge_order.begin(), choice.edge_order.end(), 0);
        std::shuffle(choice.edge_order.begin(), choice.edge_order.end(), rng);
        basis_ok += analyze(c, cycle_basis(c.graph, choice)).superabundant == flag;
    }
    const int n = static_cast<int>(curves.size());
    o.check(core_ok == n, "core");
    o.check(sub_ok == n, "subdivision");
    o.check(basis_ok == n, "cycle basis");
    o.detail << n << " curves (" << templates << " templates, " << superabundant
             << " superabundant): core " << core_ok << ", subdivision " << sub_ok << ", basis " << basis_ok;
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"tuning fork dimensions", tuning_fork_dims},
        {"phi3 dimensions and class", phi3_class},
        {"phi4 dimensions and class", phi4_class},
        {"verdict fixtures", verdict_fixtures},
        {"tuning fork verdict", tuning_fork_verdict},
        {"genus-2 classification suite", genus2_suite},
        {"transform invariance suite", transform_suite},
        {"oracle equivalence", oracle_suite},
        {"core/smoothing invariance", invariance_suite},
    };
    int failed = 0;
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failed += !o.pass;
        std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << name << ": "
                  << o.text() << " (" << seconds_since(t0) << " s)" << std::endl;
    }
    std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
