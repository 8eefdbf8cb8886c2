#include "cli.hpp"

#include "mfc/replay.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace mfc::cli {

namespace {

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    bool verdict = true;
    Json payload;
};

void render_text(const Json& j, std::ostream& os, const std::string& indent) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << indent << k << ":\n";
                render_text(v, os, indent + "  ");
            } else {
                os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
        if (flat) {
            os << indent << j.dump() << "\n";
            return;
        }
        for (auto& v : j) {
            os << indent << "-\n";
            render_text(v, os, indent + "  ");
        }
    } else {
        os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

ModularDatum category(const std::string& id) {
    if (id.empty()) throw UsageFailure("--category is required");
    try {
        return from_category_id(id);
    } catch (const std::invalid_argument& e) {
        throw UsageFailure(e.what());
    } catch (const std::out_of_range&) {
        throw UsageFailure("number out of range in category id '" + id + "'");
    }
}

IntPoly polynomial(const std::string& text) {
    try {
        return IntPoly::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageFailure(e.what());
    }
}

Outcome do_construct(const std::string& id) {
    ModularDatum md = category(id);
    Json j = to_json(md);
    Json dims = Json::array();
    for (auto& d : md.dims()) dims.push_back(describe(d));
    j["dims"] = dims;
    j["global_dimension"] = describe(md.global_dim());
    j["rank"] = md.rank();
    return {true, j};
}

Outcome do_codegrees(const std::string& id) {
    ModularDatum md = category(id);
    auto fs = formal_codegrees(md);
    Json list = Json::array();
    CycNum inv_sum;
    for (auto& f : fs) {
        Json e = describe(f);
        if (auto g = integral_minimal_polynomial(f)) e["minimal_polynomial"] = to_json(*g);
        list.push_back(e);
        inv_sum = inv_sum + f.inverse();
    }
    bool ok = inv_sum.is_one();
    return {ok, Json{{"category", md.name}, {"codegrees", list}, {"class_equation", ok}}};
}

Outcome do_orbits(const std::string& id) {
    ModularDatum md = category(id);
    return {true, Json{{"category", md.name}, {"orbits", galois_orbits(md)}}};
}

Outcome do_check(const std::string& kind, const std::string& id, const std::string& poly, long p) {
    if (kind == "galois-symmetry" || kind == "sl2z" || kind == "verlinde" || kind == "class-equation") {
        ModularDatum md = category(id);
        if (kind == "class-equation") {
            Outcome o = do_codegrees(id);
            return {o.verdict, Json{{"category", md.name}, {"check", kind}, {"verdict", o.verdict}}};
        }
        bool ok = false;
        std::string detail;
        if (kind == "verlinde") {
            try {
                detail = verlinde(md).check_invariants();
                ok = detail.empty();
            } catch (const VerlindeError& e) {
                detail = e.what();
            }
        } else {
            CycNum c = md.cube_root ? *md.cube_root : choose_cube_root(md);
            ok = kind == "sl2z" ? verify_sl2z_relations(md, c) : check_galois_symmetry(md, c);
        }
        Json j{{"category", md.name}, {"check", kind}, {"verdict", ok}};
        if (!detail.empty()) j["detail"] = detail;
        return {ok, j};
    }
    if (kind == "d-number" || kind == "cyclotomic" || kind == "totally-positive" || kind == "irreducible") {
        if (poly.empty()) throw UsageFailure("--poly is required for check " + kind);
        IntPoly g = polynomial(poly);
        Json j{{"polynomial", to_json(g)}, {"check", kind}};
        bool ok = false;
        if (kind == "d-number") {
            ok = is_d_number(g);
        } else if (kind == "totally-positive") {
            ok = all_roots_positive(g);
        } else if (kind == "irreducible") {
            ok = is_irreducible(g);
        } else {
            if (p < 3 || !is_prime(p)) throw UsageFailure("--p must be an odd prime for check cyclotomic");
            j["p"] = p;
            try {
                auto root = cyclotomic_root(g, p);
                ok = root.has_value();
                if (root) j["root"] = describe(*root);
            } catch (const ReducibleError& e) {
                j["detail"] = e.what();
            } catch (const DegreeError& e) {
                j["detail"] = e.what();
            }
        }
        j["verdict"] = ok;
        return {ok, j};
    }
    throw UsageFailure("unknown check '" + kind + "'");
}

Outcome do_replay(const std::string& lemma, int threads) {
    if (lemma.empty() || lemma == "list") {
        Json t = Json::array();
        for (auto& r : replay_table()) t.push_back(Json{{"id", r.id}, {"argument", r.argument}});
        return {true, Json{{"lemmas", t}}};
    }
    bool known = std::any_of(replay_table().begin(), replay_table().end(), [&](auto& r) { return r.id == lemma; });
    if (!known) throw UsageFailure("unknown lemma id '" + lemma + "'");
    ReplayResult r = run_replay(lemma, threads);
    return {r.verdict, Json{{"lemma", lemma}, {"verdict", r.verdict}, {"result", r.payload}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact modular data and classification search toolkit", "mfc"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json", out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "Write the payload to this file");

    std::string cat_id, poly, lemma, check_kind, budget;
    long p = 0, degree = 0, norm_exp = 0;
    int threads = 1;
    bool oracle = false;

    auto add_category = [&](CLI::App* s) { s->add_option("--category", cat_id, "Category id")->required(); };
    auto* construct = app.add_subcommand("construct", "Print a modular datum");
    add_category(construct);
    auto* verl = app.add_subcommand("verlinde", "Fusion rules from the Verlinde formula");
    add_category(verl);
    auto* codeg = app.add_subcommand("codegrees", "Formal codegrees and their minimal polynomials");
    add_category(codeg);
    auto* orbits = app.add_subcommand("orbits", "Galois orbits of simple objects");
    add_category(orbits);

    auto* check = app.add_subcommand("check", "Run a single verification");
    check->add_option("kind", check_kind,
                      "galois-symmetry | sl2z | verlinde | class-equation | d-number | cyclotomic | "
                      "totally-positive | irreducible")
        ->required();
    check->add_option("--category", cat_id, "Category id");
    check->add_option("--poly", poly, "Monic integer polynomial [1,c1,...,cd]");
    check->add_option("--p", p, "Prime for the cyclotomic test");

    auto* search = app.add_subcommand("search", "Formal codegree polynomial search");
    search->add_option("--p", p, "Odd prime");
    search->add_option("--degree", degree, "Polynomial degree");
    search->add_option("--norm-exp", norm_exp, "Exponent m with constant term p^m");
    search->add_option("--budget", budget, "Class equation budget as a rational a/b");
    search->add_option("--dim-norm-exp", "Norm exponent e of the global dimension");
    search->add_flag("--oracle", oracle, "Enumerate the full coefficient box without pruning");
    search->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--replay", lemma, "Run a named replay instead");

    auto* replay = app.add_subcommand("replay", "Replay a documented elimination argument");
    replay->add_option("--lemma", lemma, "Lemma id, or 'list'");
    replay->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    bool list = false;
    replay->add_flag("--list", list, "List lemma ids");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return UsageError;
    }

    Outcome o;
    try {
        if (*construct) o = do_construct(cat_id);
        else if (*verl) {
            ModularDatum md = category(cat_id);
            FusionRing fr = verlinde(md);
            std::string inv = fr.check_invariants();
            o = {inv.empty(), Json{{"category", md.name}, {"fusion_ring", to_json(fr)}}};
            if (!inv.empty()) o.payload["invariant_failure"] = inv;
        } else if (*codeg) o = do_codegrees(cat_id);
        else if (*orbits) o = do_orbits(cat_id);
        else if (*check) o = do_check(check_kind, cat_id, poly, p);
        else if (*replay) o = do_replay(list ? "list" : lemma, threads);
        else if (*search) {
            if (!lemma.empty()) {
                o = do_replay(lemma, threads);
            } else {
                if (p < 3 || !is_prime(p)) throw UsageFailure("--p must be an odd prime");
                if (degree < 1) throw UsageFailure("--degree must be positive");
                if (norm_exp < 1) throw UsageFailure("--norm-exp must be positive");
                CodegreeSearchOptions opt;
                opt.prune = !oracle;
                opt.threads = threads;
                if (!budget.empty()) {
                    try {
                        opt.class_budget = mpq_class(budget);
                        opt.class_budget.canonicalize();
                    } catch (const std::invalid_argument&) {
                        throw UsageFailure("bad --budget '" + budget + "'");
                    }
                }
                if (auto* dn = search->get_option("--dim-norm-exp"); dn->count()) opt.dim_norm_exponent = dn->as<long>();
                SearchCertificate c = codegree_search(p, degree, norm_exp, opt);
                o = {c.verified, to_json(c)};
            }
        }
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return InternalError;
    }

    std::ostringstream body;
    if (format == "json") body << o.payload.dump(2) << "\n";
    else render_text(o.payload, body, "");
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "internal error: cannot write " << out_path << "\n";
            return InternalError;
        }
        f << body.str();
    } else {
        out << body.str();
    }
    return o.verdict ? Ok : VerdictFalse;
}

}  // namespace mfc::cli
