#include "cli.hpp"

#include "tropsa/error.hpp"
#include "tropsa/examples.hpp"
#include "tropsa/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace tropsa::cli {

namespace {

struct Globals {
    bool json = false;
    bool strict = false;
    std::uint64_t subset_cap = SearchOptions{}.subset_cap;
    int coeff_bound = SearchOptions{}.coeff_bound;
    std::uint64_t seed = 0;

    SearchOptions search() const { return {subset_cap, coeff_bound}; }
};

class Runner {
public:
    Runner(const Globals& g, std::istream& in, std::ostream& out) : g_(g), in_(in), out_(out) {}

    TropicalCurve load(const std::string& path) {
        std::string text;
        if (path == "-") {
            std::ostringstream ss;
            ss << in_.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(path);
            if (!f) fail(ErrorKind::InvalidInput, path + ": cannot open");
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        TropicalCurve c;
        try {
            c = io::parse(text);
        } catch (const Error& e) {
            fail(e.kind(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
        }
        if (g_.strict) {
            const auto v = validate(c);
            if (!v.ok()) {
                std::string msg = path + ": invalid curve";
                for (const auto& e : v.errors) msg += "\n  " + e;
                fail(ErrorKind::InvalidInput, msg);
            }
        }
        return c;
    }

    void emit(const io::Json& j) { out_ << j.dump(2) << "\n"; }

    // Unknown answers become exit code 2 under --strict.
    int settle(std::initializer_list<std::optional<Tristate>> answers) {
        if (!g_.strict) return kOk;
        for (const auto& a : answers)
            if (a == Tristate::Unknown) return kCapExceeded;
        return kOk;
    }

    int analyze(const std::vector<std::string>& files) {
        io::Json all = io::Json::array();
        int code = kOk;
        for (const auto& f : files) {
            const auto c = load(f);
            const auto cls = classify(c, g_.search());
            std::optional<Tristate> irr, ind;
            if (cls.irreducible) irr = cls.irreducible->value;
            if (cls.indecomposable) ind = cls.indecomposable->value;
            code = std::max(code, settle({irr, ind}));
            if (g_.json) {
                io::Json j;
                j["file"] = f;
                j["report"] = io::to_json(cls.report);
                j["class"] = io::to_json(cls);
                all.push_back(std::move(j));
            } else {
                print_report(f, c, cls);
            }
        }
        if (g_.json) emit(files.size() == 1 ? all[0] : all);
        return code;
    }

    int core(const std::string& file) {
        out_ << io::serialize(core_neighbourhood(load(file)));
        return kOk;
    }

    int smooth(const std::string& file) {
        const auto core = core_neighbourhood(load(file));
        const auto segs = smoothing(core);
        if (g_.json) {
            emit(io::to_json(segs, core));
            return kOk;
        }
        out_ << segs.segments.size() << " segments, " << segs.branch_vertices.size() << " branch vertices\n";
        for (std::size_t s = 0; s < segs.segments.size(); ++s) {
            const auto& sg = segs.segments[s];
            out_ << "  s" << s << ": " << core.graph.vertices[sg.start] << " -> " << core.graph.vertices[sg.end]
                 << (sg.closed ? " (closed)" : "") << ", " << sg.edges.size() << " edges, span";
            for (const auto& v : segment_span(core, sg)) out_ << " " << to_string(v);
            out_ << "\n";
        }
        return kOk;
    }

    int classify2(const std::string& file) {
        const auto g2 = classify_genus2(load(file), g_.search());
        if (g_.json) {
            emit(io::to_json(g2));
            return kOk;
        }
        out_ << "type: " << to_string(g2.type) << "\n";
        if (g2.planar) out_ << "planar cycle normal: " << to_string(g2.planar->normal) << "\n";
        if (g2.normal_form) {
            out_ << "normal form map:\n" << g2.normal_form->map.linear.to_string();
            out_ << "lambdas: " << to_string(g2.normal_form->lambdas[0]) << " "
                 << to_string(g2.normal_form->lambdas[1]) << "\n";
        }
        return kOk;
    }

    int transform(const std::string& file, const std::string& map_file) {
        const auto c = load(file);
        std::ifstream f(map_file);
        if (!f) fail(ErrorKind::InvalidInput, map_file + ": cannot open");
        std::ostringstream ss;
        ss << f.rdbuf();
        const auto img = apply_affine(c, io::parse_affine(ss.str()));
        if (g_.json) {
            io::Json j;
            j["dilation"] = io::to_json(img.dilation, c);
            j["curve"] = io::to_json(img.curve);
            emit(j);
        } else {
            out_ << io::serialize(img.curve);
        }
        return kOk;
    }

    int project(const std::string& file) {
        const auto c = load(file);
        const auto p = project_onto_obstruction(c);
        if (g_.json) {
            io::Json j;
            j["map"] = io::to_json(p.map);
            io::Json ls = io::Json::array();
            for (const auto& l : p.lambdas) ls.push_back(to_string(l));
            j["lambdas"] = std::move(ls);
            j["dilation"] = io::to_json(p.image.dilation, c);
            j["curve"] = io::to_json(p.image.curve);
            emit(j);
            return kOk;
        }
        const auto rep = tropsa::analyze(p.image.curve);
        out_ << "projection to R^" << p.map.linear.rows() << ":\n" << p.map.linear.to_string();
        out_ << "image: actual " << rep.actual_dim << ", expected " << rep.expected_dim
             << (rep.superabundant ? ", superabundant" : ", not superabundant") << "\n";
        return kOk;
    }

    int verdict(const std::string& file) {
        const auto v = realizability_verdict(load(file), g_.search());
        if (g_.json) {
            emit(io::to_json(v));
            return kOk;
        }
        out_ << "verdict: " << to_string(v.verdict) << "\n";
        if (v.degree) out_ << "degree: " << *v.degree << "\n";
        out_ << "deformation dim: " << v.deformation_dim << "\n";
        if (v.moduli_dim) out_ << "moduli dim: " << *v.moduli_dim << "\n";
        if (v.core_template) out_ << "core: " << *v.core_template << "\n";
        out_ << "reason: " << v.reason << "\n";
        return kOk;
    }

    int example(const std::string& name, bool emit_doc) {
        if (name.empty()) {
            for (const auto& n : examples::builtin_names()) out_ << n << "\n";
            for (const auto& n : examples::fixture_names()) out_ << n << "\n";
            return kOk;
        }
        const auto c = examples::builtin(name);
        if (emit_doc) {
            out_ << io::serialize(c);
            return kOk;
        }
        const auto rep = tropsa::analyze(c);
        if (g_.json) {
            io::Json j;
            j["name"] = name;
            j["report"] = io::to_json(rep);
            emit(j);
            return kOk;
        }
        out_ << name << ": " << c.graph.vertex_count() << " vertices, " << c.graph.edges.size() << " edges, "
             << c.graph.legs.size() << " legs in R^" << c.ambient_dim << ", genus " << rep.genus << "\n";
        return kOk;
    }

    int verify(const std::string& file, bool plane) {
        Globals lax = g_;
        lax.strict = false;
        const auto c = Runner(lax, in_, out_).load(file);
        const auto v = validate(c);
        std::optional<bool> in_plane;
        if (plane) in_plane = examples::verify_plane_containment(c);
        if (g_.json) {
            auto j = io::to_json(v, c);
            if (in_plane) j["in_standard_plane"] = *in_plane;
            emit(j);
        } else {
            out_ << (v.ok() ? "valid" : "invalid") << "\n";
            for (const auto& e : v.errors) out_ << "  " << e << "\n";
            if (in_plane) out_ << (*in_plane ? "inside" : "outside") << " the standard tropical plane\n";
        }
        return v.ok() && in_plane.value_or(true) ? kOk : kInvalidInput;
    }

private:
    void print_report(const std::string& file, const TropicalCurve& c, const SuperabundanceClass& cls) {
        const auto& r = cls.report;
        out_ << file << "\n";
        out_ << "  edges " << r.edges << ", legs " << r.legs << ", genus " << r.genus << ", R^" << r.ambient_dim
             << "\n";
        out_ << "  rank K         " << r.rank << "\n";
        out_ << "  actual dim     " << r.actual_dim << "\n";
        out_ << "  expected dim   " << r.expected_dim << "\n";
        out_ << "  excess         " << r.excess << "\n";
        out_ << "  superabundant  " << (r.superabundant ? "yes" : "no") << "\n";
        if (c.has_lengths()) out_ << "  closes up      " << (r.lengths_in_kernel ? "yes" : "no") << "\n";
        if (cls.planar) out_ << "  planar cycle   normal " << to_string(cls.planar->normal) << "\n";
        if (cls.irreducible) out_ << "  irreducible    " << to_string(cls.irreducible->value) << "\n";
        if (cls.indecomposable) {
            out_ << "  indecomposable " << to_string(cls.indecomposable->value);
            if (cls.indecomposable->witness)
                out_ << " (projection with " << cls.indecomposable->witness->rows() << " rows"
                     << (cls.indecomposable->witness_verified ? ", verified" : "") << ")";
            out_ << "\n";
        }
    }

    const Globals& g_;
    std::istream& in_;
    std::ostream& out_;
};

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Precondition:
    case ErrorKind::EdgeContracted: return kInvalidInput;
    case ErrorKind::SearchCapExceeded: return kCapExceeded;
    case ErrorKind::Internal: return kInternal;
    }
    return kInternal;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Superabundance analysis of parametrized tropical curves", "tropsa"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--strict", g.strict, "Validate curves on load; unknown answers exit with code 2");
    app.add_option("--subset-cap", g.subset_cap, "Largest subset enumeration attempted");
    app.add_option("--coeff-bound", g.coeff_bound, "Coefficient box for cycle and kernel searches")
        ->check(CLI::Range(1, 64));
    app.add_option("--seed", g.seed, "Accepted for reproducible runs; the analyses are deterministic");

    std::vector<std::string> files;
    std::string file, map_file, name;
    bool emit_doc = false, plane = false;

    auto* a = app.add_subcommand("analyze", "Dimension report and superabundance class");
    a->add_option("files", files, "Curve documents, - for stdin")->required();
    auto* co = app.add_subcommand("core", "Core neighbourhood as a curve document");
    auto* sm = app.add_subcommand("smooth", "Segments of the core");
    auto* c2 = app.add_subcommand("classify2", "Genus-2 classification and normal form");
    auto* tr = app.add_subcommand("transform", "Image under an affine map");
    tr->add_option("--map", map_file, "Affine map document")->required();
    auto* pr = app.add_subcommand("project", "Projection onto an obstruction");
    auto* ve = app.add_subcommand("verdict", "Realizability verdict");
    auto* vf = app.add_subcommand("verify", "Validation report");
    vf->add_flag("--plane", plane, "Also check containment in the standard tropical plane");
    for (auto* s : {co, sm, c2, tr, pr, ve, vf}) s->add_option("file", file, "Curve document, - for stdin")->required();
    auto* ex = app.add_subcommand("example", "Built-in templates; lists names without an argument");
    ex->add_option("name", name);
    ex->add_flag("--emit", emit_doc, "Print the curve document");
    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kInvalidInput;
    }

    try {
        Runner run(g, in, out);
        if (*a) return run.analyze(files);
        if (*co) return run.core(file);
        if (*sm) return run.smooth(file);
        if (*c2) return run.classify2(file);
        if (*tr) return run.transform(file, map_file);
        if (*pr) return run.project(file);
        if (*ve) return run.verdict(file);
        if (*ex) return run.example(name, emit_doc);
        if (*vf) return run.verify(file, plane);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

} // namespace tropsa::cli
