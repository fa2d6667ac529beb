#include "tropsa/examples.hpp"

#include "tropsa/error.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace tropsa::examples {

namespace {

// Builds a curve from vertex positions. Edges get the primitive direction of
// their displacement and its lattice length, unless a (possibly weighted)
// direction is given, in which case the length is displacement / direction.
class Sketch {
public:
    explicit Sketch(int r) { c_.ambient_dim = r; }

    Sketch& at(const std::string& name, std::initializer_list<long> p) {
        const auto v = c_.add_vertex(name);
        RationalVector pos;
        for (long x : p) pos.emplace_back(x);
        if (pos.size() != static_cast<std::size_t>(c_.ambient_dim))
            fail(ErrorKind::Internal, "template vertex " + name + " has wrong dimension");
        if (pos_.empty()) {
            c_.base_vertex = v;
            c_.base_position = pos;
        }
        pos_.push_back(std::move(pos));
        return *this;
    }

    Sketch& edge(const std::string& a, const std::string& b, std::optional<IntegerVector> dir = std::nullopt) {
        const auto ta = index(a), tb = index(b);
        RationalVector d(c_.ambient_dim);
        for (int i = 0; i < c_.ambient_dim; ++i) d[i] = pos_[tb][i] - pos_[ta][i];
        if (!dir) dir = primitive_on_ray(d);
        std::optional<Rational> len;
        for (int i = 0; i < c_.ambient_dim; ++i) {
            if ((*dir)[i] == 0) {
                if (d[i] != 0) fail(ErrorKind::Internal, "template edge " + a + b + " off its direction");
                continue;
            }
            const Rational l = d[i] / Rational((*dir)[i]);
            if (len && *len != l) fail(ErrorKind::Internal, "template edge " + a + b + " off its direction");
            len = l;
        }
        if (!len || *len <= 0) fail(ErrorKind::Internal, "template edge " + a + b + " has no positive length");
        c_.add_edge(ta, tb, *dir, len);
        return *this;
    }

    TropicalCurve done(const std::string& name, bool is_subcurve) {
        c_.subcurve = is_subcurve;
        c_.metadata["template"] = name;
        return c_;
    }

private:
    std::size_t index(const std::string& n) const {
        const auto v = c_.graph.find_vertex(n);
        if (!v) fail(ErrorKind::Internal, "template vertex " + n + " missing");
        return *v;
    }

    TropicalCurve c_;
    std::vector<RationalVector> pos_;
};

// One leg per unbalanced vertex carrying the whole deficit.
TropicalCurve with_deficit_legs(TropicalCurve c, const std::string& name) {
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        auto d = balancing_defect(c, v);
        if (is_zero(d)) continue;
        for (auto& x : d) x = -x;
        c.add_leg(v, d);
    }
    c.subcurve = false;
    c.metadata["template"] = name;
    return c;
}

IntegerVector iv(std::initializer_list<long> xs) { return make_integer_vector(xs); }

TropicalCurve tuning_fork_r2() {
    Sketch s(2);
    s.at("A", {0, 0}).at("B", {0, 0}).at("P1", {1, 0}).at("P2", {0, 1}).at("P3", {-1, -1});
    for (const char* p : {"P1", "P2", "P3"}) s.edge("A", p).edge("B", p);
    return with_deficit_legs(s.done("tuning_fork_r2", true), "tuning_fork_r2");
}

// Segments A -> X_i -> Y_i -> B with directions (rho_i, a_i), (rho_i, c_i),
// (-2 rho_i, b_i); a = (1,-1,0), b = (0,1,-1), c = 1 - a - b.
TropicalCurve tuning_fork_r3() {
    Sketch s(3);
    s.at("A", {0, 0, 0}).at("B", {0, 0, 1});
    s.at("X1", {1, 0, 1}).at("Y1", {2, 0, 1});
    s.at("X2", {0, 1, -1}).at("Y2", {0, 2, 0});
    s.at("X3", {-1, -1, 0}).at("Y3", {-2, -2, 2});
    s.edge("A", "X1").edge("X1", "Y1").edge("Y1", "B", iv({-2, 0, 0}));
    s.edge("A", "X2").edge("X2", "Y2").edge("Y2", "B", iv({0, -2, 1}));
    s.edge("A", "X3").edge("X3", "Y3").edge("Y3", "B", iv({2, 2, -1}));
    return with_deficit_legs(s.done("tuning_fork_r3", true), "tuning_fork_r3");
}

// Planar tuning fork whose weight-2 leg at P1 is replaced by a weight-2 edge
// into a triangle.
TropicalCurve composite_fig3() {
    Sketch s(2);
    s.at("A", {0, 0}).at("B", {0, 0}).at("P1", {1, 0}).at("P2", {0, 1}).at("P3", {-1, -1});
    s.at("T1", {2, 0}).at("T2", {3, 1}).at("T3", {3, -1});
    for (const char* p : {"P1", "P2", "P3"}) s.edge("A", p).edge("B", p);
    s.edge("P1", "T1", iv({2, 0}));
    s.edge("T1", "T2").edge("T1", "T3").edge("T2", "T3");
    return with_deficit_legs(s.done("composite_fig3", true), "composite_fig3");
}

// Genus-3 subcurve in the standard tropical plane; smoothed graph K4 on
// a, c, e, g with one 2-valent vertex on each segment.
TropicalCurve phi3_sub() {
    Sketch s(3);
    s.at("a", {-1, -1, -1}).at("b", {-1, -1, 1}).at("c", {0, 0, 1}).at("d", {-1, 1, -1});
    s.at("e", {0, 1, 0}).at("f", {1, -1, -1}).at("g", {1, 0, 0}).at("h", {0, 1, 1});
    s.at("i", {1, 1, 0}).at("j", {1, 0, 1});
    s.edge("a", "b").edge("b", "c").edge("a", "d").edge("d", "e").edge("a", "f").edge("f", "g");
    s.edge("c", "h").edge("h", "e").edge("e", "i").edge("i", "g").edge("g", "j").edge("j", "c");
    return s.done("phi3_sub", true);
}

// K_{3,3} on {a,c,e} x {b,d,f} in L x Q. Every segment x -> y is four unit
// edges (rho,0,0), (rho,q1), (-rho,q2), (-rho,0,0): up and down a ray of the
// line L in the first two coordinates while crossing the conic Q in the last
// two. rho is fixed by the colour class, (q1, q2) by the endpoint y.
TropicalCurve phi4_sub() {
    Sketch s(4);
    s.at("a", {0, 0, 0, 0}).at("c", {0, 0, 0, 0}).at("e", {0, 0, 0, 0});
    s.at("b", {0, 0, 2, 1}).at("d", {0, 0, -1, 1}).at("f", {0, 0, -1, -2});

    const std::map<std::string, std::pair<std::array<long, 2>, std::array<long, 2>>> conic = {
        {"b", {{1, 0}, {1, 1}}}, {"d", {{0, 1}, {-1, 0}}}, {"f", {{-1, -1}, {0, -1}}}};
    struct Seg {
        const char* x;
        const char* y;
        std::array<long, 2> rho;
    };
    const std::array<long, 2> red{0, 1}, green{1, 0}, blue{-1, -1};
    const Seg segs[] = {{"a", "b", red},   {"c", "f", red},   {"e", "d", red},
                        {"a", "f", green}, {"e", "b", green}, {"c", "d", green},
                        {"a", "d", blue},  {"c", "b", blue},  {"e", "f", blue}};

    TropicalCurve c = s.done("phi4_sub", true);
    for (const auto& sg : segs) {
        const auto& [q1, q2] = conic.at(sg.y);
        const auto [r0, r1] = sg.rho;
        const IntegerVector dirs[4] = {iv({r0, r1, 0, 0}), iv({r0, r1, q1[0], q1[1]}),
                                       iv({-r0, -r1, q2[0], q2[1]}), iv({-r0, -r1, 0, 0})};
        const std::string stem = std::string(sg.x) + sg.y;
        std::size_t prev = *c.graph.find_vertex(sg.x);
        for (int k = 0; k < 4; ++k) {
            const std::size_t next = k == 3 ? *c.graph.find_vertex(sg.y) : c.add_vertex(stem + std::to_string(k + 1));
            c.add_edge(prev, next, dirs[k], Rational(1));
            prev = next;
        }
    }
    return c;
}

TropicalCurve triangle_g3() {
    Sketch s(2);
    s.at("O", {0, 0}).at("P", {4, 0}).at("Q", {0, -4}).at("M", {1, -1});
    s.edge("O", "P").edge("P", "Q").edge("Q", "O").edge("O", "M").edge("P", "M").edge("Q", "M");
    return s.done("triangle_g3", true);
}

TropicalCurve planar_g1() {
    Sketch s(2);
    s.at("A", {0, 0}).at("B", {1, 0});
    s.edge("A", "B").edge("A", "B");
    return with_deficit_legs(s.done("planar_g1", true), "planar_g1");
}

// phi3_sub with vertex a split so every core vertex is trivalent: a keeps
// its edges to d and f and gains an edge to a2, which carries the segment
// through b to c in the same plane.
TropicalCurve fixture_g3_core() {
    Sketch s(3);
    s.at("a", {-1, -1, -1}).at("a2", {-2, -2, -1}).at("b", {-2, -2, 1}).at("c", {0, 0, 1});
    s.at("d", {-1, 1, -1}).at("e", {0, 1, 0}).at("f", {1, -1, -1}).at("g", {1, 0, 0});
    s.at("h", {0, 1, 1}).at("i", {1, 1, 0}).at("j", {1, 0, 1});
    s.edge("a", "a2").edge("a2", "b").edge("b", "c").edge("a", "d").edge("d", "e").edge("a", "f");
    s.edge("f", "g").edge("c", "h").edge("h", "e").edge("e", "i").edge("i", "g").edge("g", "j").edge("j", "c");
    return s.done("fixture_g3_d5", true);
}

long minimal_degree(const TropicalCurve& c) {
    long d = 0;
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        const auto defect = balancing_defect(c, v);
        Integer mx = 0;
        for (const auto& x : defect) mx = std::max(mx, Integer(x));
        // legs sum to -defect; their u-count is max(0, max defect)
        d += mx.get_si();
    }
    return d;
}

TropicalCurve fixture(const std::string& name, TropicalCurve core, long degree) {
    const long base = minimal_degree(core);
    auto c = attach_standard_trees(core, std::max(0L, degree - base));
    c.metadata["template"] = name;
    return c;
}

// Orders legs so no proper tail sums to zero (each tree edge direction is a
// tail sum, and the last two legs share a vertex).
bool order_legs(std::vector<IntegerVector>& legs, std::size_t k, IntegerVector remaining) {
    const std::size_t n = legs.size();
    if (n - k <= 2) return true;
    for (std::size_t i = k; i < n; ++i) {
        if (i > k && legs[i] == legs[k]) continue;
        std::swap(legs[k], legs[i]);
        IntegerVector rest = remaining;
        for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= legs[k][x];
        if (!is_zero(rest) && order_legs(legs, k + 1, rest)) return true;
        std::swap(legs[k], legs[i]);
    }
    return false;
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"tuning_fork_r2", "tuning_fork_r3", "composite_fig3",
                                                   "phi3_sub",       "phi3",           "phi4_sub",
                                                   "phi4",           "triangle_g3",    "planar_g1"};
    return names;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"fixture_g3_d5", "fixture_g4"};
    return names;
}

TropicalCurve builtin(std::string_view name) {
    if (name == "tuning_fork_r2") return tuning_fork_r2();
    if (name == "tuning_fork_r3") return tuning_fork_r3();
    if (name == "composite_fig3") return composite_fig3();
    if (name == "phi3_sub") return phi3_sub();
    if (name == "phi3") return with_deficit_legs(phi3_sub(), "phi3");
    if (name == "phi4_sub") return phi4_sub();
    if (name == "phi4") return with_deficit_legs(phi4_sub(), "phi4");
    if (name == "triangle_g3") return triangle_g3();
    if (name == "planar_g1") return planar_g1();
    if (name == "fixture_g3_d5") return fixture("fixture_g3_d5", fixture_g3_core(), 5);
    if (name == "fixture_g4") return fixture("fixture_g4", phi4_sub(), 7);
    fail(ErrorKind::InvalidInput, "unknown example \"" + std::string(name) + "\"");
}

std::optional<ExpectedFacts> expected_facts(std::string_view name) {
    static const std::map<std::string, ExpectedFacts, std::less<>> facts = {
        {"tuning_fork_r2", {2, 3, 2, true, true, false}},
        {"tuning_fork_r3", {2, 4, 3, true, false, false}},
        {"composite_fig3", {3, 5, 4, false, true, false}},
        {"phi3_sub", {3, 4, 3, true, true, false}},
        {"phi3", {3, 4, 3, true, true, false}},
        {"phi4_sub", {4, 21, 20, true, false, false}},
        {"phi4", {4, 21, 20, true, false, false}},
        {"triangle_g3", {3, 1, 0, std::nullopt, std::nullopt, std::nullopt}},
        {"planar_g1", {1, 1, 0, true, std::nullopt, true}},
    };
    const auto it = facts.find(name);
    if (it == facts.end()) return std::nullopt;
    return it->second;
}

long minimal_leg_count(const IntegerVector& v) {
    Integer sum = 0, mn = 0;
    for (const auto& x : v) {
        sum += x;
        mn = std::min(mn, Integer(x));
    }
    const Integer n = sum + Integer(static_cast<long>(v.size()) + 1) * Integer(-mn);
    return n.get_si();
}

TropicalCurve attach_standard_trees(const TropicalCurve& c, long extra_degree) {
    TropicalCurve out = c;
    out.subcurve = false;
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    auto unit = [&](std::size_t i) {
        IntegerVector e(r);
        if (i < r)
            e[i] = 1;
        else
            for (auto& x : e) x = -1;
        return e;
    };

    bool first = true;
    for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
        IntegerVector need = balancing_defect(c, v);
        for (auto& x : need) x = -x;
        const bool padded = first && extra_degree > 0 && !is_zero(need);
        if (is_zero(need)) continue;
        if (c.graph.valence(v) >= 3)
            fail(ErrorKind::Precondition, "vertex " + c.graph.vertices[v] + " already has valence " +
                                              std::to_string(c.graph.valence(v)) + " and is unbalanced");

        Integer m = 0;
        for (const auto& x : need) m = std::max(m, Integer(-x));
        std::vector<IntegerVector> legs;
        for (long k = 0; k < m.get_si(); ++k) legs.push_back(unit(r));
        for (std::size_t i = 0; i < r; ++i)
            for (long k = 0; k < Integer(need[i] + m).get_si(); ++k) legs.push_back(unit(i));
        if (padded) {
            for (long k = 0; k < extra_degree; ++k)
                for (std::size_t i = 0; i <= r; ++i) legs.push_back(unit(i));
            first = false;
        }

        if (legs.size() == 1) {
            out.add_leg(v, legs.front());
            continue;
        }
        if (!order_legs(legs, 0, need))
            fail(ErrorKind::Internal, "cannot arrange a caterpillar at vertex " + c.graph.vertices[v]);

        // v -> t0 -> t1 -> ... ; t_k carries legs[k], the last carries two
        std::size_t prev = v;
        IntegerVector flow = need;
        for (std::size_t k = 0; k + 1 < legs.size(); ++k) {
            const auto t = out.add_vertex(c.graph.vertices[v] + ".t" + std::to_string(k));
            out.add_edge(prev, t, flow, Rational(1));
            out.add_leg(t, legs[k]);
            for (std::size_t x = 0; x < r; ++x) flow[x] -= legs[k][x];
            prev = t;
            if (k + 2 == legs.size()) out.add_leg(t, legs[k + 1]);
        }
    }
    if (first && extra_degree > 0) fail(ErrorKind::Precondition, "no unbalanced vertex to carry the extra degree");
    return out;
}

} // namespace tropsa::examples
