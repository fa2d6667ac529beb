#include "tropsa/classify.hpp"

#include "tropsa/error.hpp"
#include "tropsa/linalg.hpp"
#include "tropsa/smoothing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace tropsa {

std::string to_string(Tristate t) {
    switch (t) {
    case Tristate::No: return "no";
    case Tristate::Yes: return "yes";
    case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Odometer over [-b, b]^n, skipping zero and vectors whose first nonzero
// entry is negative (they repeat a cycle with opposite orientation).
template <class F>
bool for_each_combination(std::size_t n, int b, F&& visit) {
    std::vector<int> c(n, -b);
    for (;;) {
        auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
        if (first != c.end() && *first > 0 && visit(c)) return true;
        std::size_t i = 0;
        while (i < n && c[i] == b) c[i++] = -b;
        if (i == n) return false;
        ++c[i];
    }
}

std::optional<PlanarWitness> planar_from_edges(const TropicalCurve& core, const std::vector<int>& ev) {
    std::vector<IntegerVector> dirs;
    for (std::size_t e = 0; e < ev.size(); ++e) {
        if (ev[e] < -1 || ev[e] > 1) return std::nullopt;
        if (ev[e] != 0) dirs.push_back(core.edge_directions[e]);
    }
    if (dirs.empty()) return std::nullopt;
    const auto r = static_cast<std::size_t>(core.ambient_dim);
    const auto m = RationalMatrix::from_rows(dirs, r);
    const auto ker = linalg::kernel_basis(m);
    if (ker.empty()) return std::nullopt;
    return PlanarWitness{{}, ev, ker.front()};
}

std::uint64_t pow_saturating(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        v *= base;
    }
    return v;
}

struct SubsetContext {
    TropicalCurve core;
    SegmentDecomposition segs;
    std::size_t genus = 0;
};

SubsetContext subset_context(const TropicalCurve& c) {
    SubsetContext ctx;
    ctx.core = core_neighbourhood(c);
    const auto basis = cycle_basis(ctx.core.graph);
    ctx.segs = smoothing(ctx.core, basis);
    ctx.genus = basis.size();
    return ctx;
}

std::size_t subset_genus(const SubsetContext& ctx, std::uint64_t mask) {
    const auto& g = ctx.core.graph;
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> touched(g.vertex_count(), false);
    std::size_t edges = 0, vertices = 0, merges = 0;
    for (std::size_t j = 0; j < ctx.segs.segments.size(); ++j) {
        if (!(mask >> j & 1)) continue;
        for (const auto& oe : ctx.segs.segments[j].edges) {
            const auto& e = g.edges[oe.edge];
            ++edges;
            for (auto v : {e.tail, e.head})
                if (!touched[v]) {
                    touched[v] = true;
                    ++vertices;
                }
            const auto a = find(e.tail), b = find(e.head);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
    }
    // components = vertices - merges
    return edges + (vertices - merges) - vertices;
}

bool subset_is_witness(const SubsetContext& ctx, std::uint64_t mask) {
    const auto sg = subset_genus(ctx, mask);
    if (sg < 1 || sg >= ctx.genus) return false;
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < ctx.segs.segments.size(); ++j)
        if (mask >> j & 1) ids.push_back(j);
    return analyze(subcurve(ctx.core, ctx.segs, ids)).superabundant;
}

IrreducibilityResult finish_irreducible(const SubsetContext& ctx, std::uint64_t total, std::uint64_t hit) {
    IrreducibilityResult res;
    if (hit == 0) {
        res.value = Tristate::Yes;
        res.subsets_checked = total;
        return res;
    }
    res.value = Tristate::No;
    res.subsets_checked = hit;
    for (std::size_t j = 0; j < ctx.segs.segments.size(); ++j)
        if (hit >> j & 1) res.witness_segments.push_back(j);
    return res;
}

std::optional<IrreducibilityResult> irreducible_precheck(const TropicalCurve& c, const SearchOptions& opt,
                                                         const SubsetContext& ctx, std::uint64_t& total) {
    if (!analyze(c).superabundant)
        fail(ErrorKind::Precondition, "irreducibility is only defined for superabundant curves");
    const auto t = ctx.segs.segments.size();
    if (t >= 63 || (std::uint64_t{1} << t) > opt.subset_cap) {
        IrreducibilityResult res;
        res.value = Tristate::Unknown;
        return res;
    }
    // proper nonempty subsets: masks 1 .. 2^t - 2
    total = (std::uint64_t{1} << t) - 2;
    return std::nullopt;
}

std::size_t span_dim(const std::vector<IntegerVector>& lambdas, std::size_t r) {
    return linalg::row_space_basis(lambdas, r).size();
}

// Tuple sum_t y_t * tuples[t].lambdas
std::vector<IntegerVector> combine(const std::vector<ObstructionTuple>& tuples, const std::vector<Integer>& y) {
    std::vector<IntegerVector> out = tuples.front().lambdas;
    for (auto& l : out)
        for (auto& x : l) x = 0;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (y[t] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t k = 0; k < out[i].size(); ++k) out[i][k] += y[t] * tuples[t].lambdas[i][k];
    }
    return out;
}

// Lambdas of a nonzero left-kernel element orthogonal to x, if any.
std::optional<std::vector<IntegerVector>> orthogonal_element(const std::vector<ObstructionTuple>& tuples,
                                                             const IntegerVector& x) {
    const auto g = tuples.front().lambdas.size();
    RationalMatrix m(g, tuples.size());
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t t = 0; t < tuples.size(); ++t) m(i, t) = dot(tuples[t].lambdas[i], x);
    const auto ker = linalg::kernel_basis(m);
    if (ker.empty()) return std::nullopt;
    return combine(tuples, ker.front());
}

} // namespace

std::optional<PlanarWitness> find_planar_cycle(const TropicalCurve& c, int coeff_bound) {
    const auto core = core_neighbourhood(c);
    const auto basis = cycle_basis(core.graph);
    const auto b = core.graph.edges.size();
    const auto g = basis.size();
    if (g == 0) return std::nullopt;

    std::vector<std::vector<int>> vecs;
    for (const auto& cyc : basis) vecs.push_back(cycle_vector(cyc, b));

    for (std::size_t i = 0; i < g; ++i) {
        if (auto w = planar_from_edges(core, vecs[i])) {
            w->coefficients.assign(g, 0);
            w->coefficients[i] = 1;
            return w;
        }
    }
    const int bound = std::max(1, coeff_bound);
    // keep the search affordable for large genus
    constexpr std::uint64_t kBudget = std::uint64_t{1} << 22;
    if (pow_saturating(3, g) > kBudget) return std::nullopt;
    const int used = pow_saturating(2 * bound + 1, g) > kBudget ? 1 : bound;
    std::optional<PlanarWitness> found;
    for_each_combination(g, used, [&](const std::vector<int>& coef) {
        std::vector<int> ev(b, 0);
        for (std::size_t i = 0; i < g; ++i)
            if (coef[i] != 0)
                for (std::size_t e = 0; e < b; ++e) ev[e] += coef[i] * vecs[i][e];
        if (auto w = planar_from_edges(core, ev)) {
            w->coefficients = coef;
            found = std::move(w);
            return true;
        }
        return false;
    });
    return found;
}

IrreducibilityResult is_irreducible(const TropicalCurve& c, const SearchOptions& opt) {
    const auto ctx = subset_context(c);
    std::uint64_t total = 0;
    if (auto early = irreducible_precheck(c, opt, ctx, total)) return *early;

    std::uint64_t best = 0; // 0 means none found
    const long long hi = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long m = 1; m <= hi; ++m) {
        const auto mask = static_cast<std::uint64_t>(m);
        std::uint64_t seen;
#pragma omp atomic read
        seen = best;
        if (seen != 0 && seen < mask) continue;
        if (!subset_is_witness(ctx, mask)) continue;
#pragma omp critical(tropsa_irreducible_best)
        if (best == 0 || mask < best) {
#pragma omp atomic write
            best = mask;
        }
    }
    return finish_irreducible(ctx, total, best);
}

namespace serial {

IrreducibilityResult is_irreducible(const TropicalCurve& c, const SearchOptions& opt) {
    const auto ctx = subset_context(c);
    std::uint64_t total = 0;
    if (auto early = irreducible_precheck(c, opt, ctx, total)) return *early;
    for (std::uint64_t mask = 1; mask <= total; ++mask)
        if (subset_is_witness(ctx, mask)) return finish_irreducible(ctx, total, mask);
    return finish_irreducible(ctx, total, 0);
}

} // namespace serial

IndecomposabilityResult is_indecomposable(const TropicalCurve& c, const SearchOptions& opt) {
    const auto obs = obstructions(c);
    if (obs.tuples.empty()) fail(ErrorKind::Precondition, "indecomposability is only defined for superabundant curves");
    const auto r = static_cast<std::size_t>(c.ambient_dim);
    const auto& tuples = obs.tuples;

    std::optional<std::vector<IntegerVector>> found;
    IndecomposabilityResult res;

    for (const auto& t : tuples)
        if (span_dim(t.lambdas, r) < r) {
            found = t.lambdas;
            res.method = "basis element";
            break;
        }

    if (!found && tuples.size() == 1) {
        res.value = Tristate::Yes;
        res.method = "one-dimensional obstruction space";
        return res;
    }

    if (!found) {
        // coordinate hyperplanes first, then a box of normals
        for (std::size_t i = 0; i < r && !found; ++i) {
            IntegerVector x(r);
            x[i] = 1;
            found = orthogonal_element(tuples, x);
        }
        if (!found)
            for_each_combination(r, std::max(1, opt.coeff_bound), [&](const std::vector<int>& xs) {
                IntegerVector x(xs.begin(), xs.end());
                found = orthogonal_element(tuples, x);
                return found.has_value();
            });
        if (!found)
            for_each_combination(tuples.size(), std::max(1, opt.coeff_bound), [&](const std::vector<int>& ys) {
                auto l = combine(tuples, std::vector<Integer>(ys.begin(), ys.end()));
                if (span_dim(l, r) < r) found = std::move(l);
                return found.has_value();
            });
        if (found) res.method = "bounded search";
    }

    if (!found) {
        res.value = Tristate::Unknown;
        res.method = "bounded search exhausted";
        return res;
    }

    res.value = Tristate::No;
    const auto rows = linalg::row_space_basis(*found, r);
    res.witness = RationalMatrix::from_rows(rows, r);
    try {
        const AffineMap a{*res.witness, RationalVector(rows.size())};
        const auto img = apply_affine(obs.core, a, ContractedLegs::Drop).curve;
        res.witness_verified = analyze(img).superabundant;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EdgeContracted) throw;
        // some edge collapses; check (I_g x A) K directly
        const auto& k = obs.matrix;
        const auto s = rows.size();
        const auto g = obs.basis.size();
        RationalMatrix pk(g * s, k.cols());
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t col = 0; col < k.cols(); ++col) {
                    Rational v = 0;
                    for (std::size_t x = 0; x < r; ++x) v += rows[a][x] * k(i * r + x, col);
                    pk(i * s + a, col) = v;
                }
        res.witness_verified = linalg::rank(pk) < g * s;
        res.method += ", verified on the projected closure matrix";
    }
    return res;
}

SuperabundanceClass classify(const TropicalCurve& c, const SearchOptions& opt) {
    SuperabundanceClass out;
    out.report = analyze(c);
    if (!out.report.superabundant) return out;
    out.planar = find_planar_cycle(c, opt.coeff_bound);
    out.irreducible = is_irreducible(c, opt);
    out.indecomposable = is_indecomposable(c, opt);
    return out;
}

long moduli_dimension(long g, long r, long d) {
    if (d <= 2 * g - 2)
        fail(ErrorKind::Precondition, "moduli dimension formula needs d > 2g - 2 (d = " + std::to_string(d) +
                                          ", g = " + std::to_string(g) + ")");
    return 3 * g - 3 - r * g + (r + 1) * d;
}

bool core_isomorphic(const TropicalCurve& a, const TropicalCurve& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    std::map<std::vector<IntegerVector>, int> label_ids;

    struct Smoothed {
        std::size_t nodes = 0;
        std::vector<std::vector<std::vector<int>>> between; // sorted labels per node pair
        std::vector<std::size_t> degree;
    };
    auto build = [&](const TropicalCurve& c) {
        const auto core = core_neighbourhood(c);
        const auto segs = smoothing(core);
        Smoothed s;
        std::map<std::size_t, std::size_t> node_of;
        for (auto v : segs.branch_vertices) node_of[v] = s.nodes++;
        std::vector<std::pair<std::size_t, std::size_t>> ends;
        for (const auto& sg : segs.segments) {
            if (sg.closed) {
                const auto n = s.nodes++;
                ends.push_back({n, n});
            } else {
                ends.push_back({node_of.at(sg.start), node_of.at(sg.end)});
            }
        }
        s.between.assign(s.nodes, std::vector<std::vector<int>>(s.nodes));
        s.degree.assign(s.nodes, 0);
        for (std::size_t j = 0; j < segs.segments.size(); ++j) {
            const auto span = segment_span(core, segs.segments[j]);
            const auto [it, _] = label_ids.emplace(span, static_cast<int>(label_ids.size()));
            auto [u, v] = ends[j];
            s.between[u][v].push_back(it->second);
            if (u != v) s.between[v][u].push_back(it->second);
            ++s.degree[u];
            ++s.degree[v];
        }
        for (auto& row : s.between)
            for (auto& cell : row) std::sort(cell.begin(), cell.end());
        return s;
    };
    const auto sa = build(a);
    const auto sb = build(b);
    if (sa.nodes != sb.nodes) return false;

    std::vector<std::size_t> image(sa.nodes);
    std::vector<bool> used(sb.nodes, false);
    auto extend = [&](auto&& self, std::size_t k) -> bool {
        if (k == sa.nodes) return true;
        for (std::size_t t = 0; t < sb.nodes; ++t) {
            if (used[t] || sa.degree[k] != sb.degree[t]) continue;
            image[k] = t;
            bool ok = true;
            for (std::size_t p = 0; p <= k && ok; ++p) ok = sa.between[k][p] == sb.between[t][image[p]];
            if (!ok) continue;
            used[t] = true;
            if (self(self, k + 1)) return true;
            used[t] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

} // namespace tropsa
