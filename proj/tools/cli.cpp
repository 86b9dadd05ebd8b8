#include "cli.hpp"

#include "json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace pcm::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string p, D = "2", N = "1", d, m = "1";
    int kmax = kDefaultKmax;
    long precision = 0;
    std::string matrix;
    std::vector<std::string> points;
    std::string out;
};

struct Outcome {
    json result;
    std::string summary;
};

Integer prime_arg(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("--p is required");
    Integer p = parse_integer(text);
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("--p must be an odd prime");
    return p;
}

Integer integer_arg(const std::string& text, const char* flag) {
    if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
    return parse_integer(text);
}

void require_builtin_discriminant(const std::string& D) {
    if (parse_integer(D) != 2) {
        throw std::invalid_argument("only the built-in order disc2-maximal (D = 2) is available for this command");
    }
}

Outcome do_classify(const Options& o) {
    Integer p = prime_arg(o.p);
    Matrix2P g = Matrix2P::from_rationals(io::parse_matrix(o.matrix), p, o.precision);
    TransformClass c = classify(g);
    json r{{"matrix", io::to_json(g)},
           {"class", to_string(c)},
           {"discriminant", io::to_json(form_from_matrix(g).discriminant())}};
    return {r, "class: " + to_string(c)};
}

Outcome do_form(const Options& o) {
    Integer p = prime_arg(o.p);
    Matrix2P g = Matrix2P::from_rationals(io::parse_matrix(o.matrix), p, o.precision);
    BinaryFormP f = form_from_matrix(g);
    json r = io::to_json(f);
    r["matrix"] = io::to_json(g);
    return {r, "form [c, d - a, -b] computed"};
}

Outcome do_fixed_points(const Options& o) {
    Integer p = prime_arg(o.p);
    Matrix2P g = Matrix2P::from_rationals(io::parse_matrix(o.matrix), p, o.precision);
    TransformClass c = classify(g);
    json pts = json::array();
    for (const FixedPoint& z : fixed_points(g)) pts.push_back(io::to_json(z));
    json r{{"class", to_string(c)}, {"points", pts}};
    return {r, std::to_string(pts.size()) + " fixed point(s), class " + to_string(c)};
}

struct RepSetup {
    Integer p;
    QuadraticOrder K;
    EichlerOrder O;
    QuadForm f;
    Integer target;
};

RepSetup rep_setup(const Options& o) {
    require_builtin_discriminant(o.D);
    Integer p = prime_arg(o.p);
    QuadraticOrder K = quadratic_order(integer_arg(o.d, "--d"), integer_arg(o.m, "--m"));
    if (K.d >= 0) throw std::invalid_argument("--d must be negative for a definite algebra");
    if (o.kmax < 0) throw std::invalid_argument("--kmax must be non-negative");
    EichlerOrder O = hurwitz_order();
    QuadForm f = ternary_normic_form(prime_suborder(O));
    Integer t = -K.m * K.m * K.field_discriminant;
    return {p, K, O, f, t};
}

Outcome do_reps(const Options& o) {
    RepSetup s = rep_setup(o);
    auto reps = rep_search(s.f, s.target, s.p, o.kmax);
    json list = json::array();
    std::size_t primitive = 0;
    for (const RepTriple& r : reps) {
        list.push_back(io::to_json(r));
        primitive += r.primitive ? 1 : 0;
    }
    json r{{"order", s.O.name()},
           {"ternary_form", s.f.to_string({"X", "Y", "Z"})},
           {"target", io::to_json(s.target)},
           {"complete_up_to_level", o.kmax},
           {"representations", list}};
    return {r, std::to_string(reps.size()) + " representation(s), " + std::to_string(primitive) +
                   " primitive, levels <= " + std::to_string(o.kmax)};
}

Outcome do_embed(const Options& o) {
    RepSetup s = rep_setup(o);
    std::optional<MatrixImmersion> Phi;
    if (s.p % 4 == 1) Phi.emplace(phi_p(s.O.algebra(), s.p, o.precision));
    json list = json::array();
    std::size_t optimal = 0;
    for (const RepTriple& r : rep_search(s.f, s.target, s.p, o.kmax)) {
        Embedding e = rho_star_inverse(r, s.O, s.K, s.p);
        json j = io::to_json(e);
        j["representation"] = io::to_json(r);
        j["optimal_by_intersection"] = optimal_by_intersection(e, s.O, s.p);
        j["round_trip"] = rho_star(e, s.O, s.p) == r;
        if (Phi) {
            Matrix2P g = (*Phi)(e.alpha);
            TransformClass c = classify(g);
            j["form"] = io::to_json(embedding_to_form(e, *Phi));
            j["class"] = to_string(c);
            if (c != TransformClass::EllipticRamified) {
                json pts = json::array();
                for (const FixedPoint& z : fixed_points(g)) pts.push_back(io::to_json(z));
                j["fixed_points"] = pts;
            }
        }
        optimal += e.optimal ? 1 : 0;
        list.push_back(j);
    }
    json r{{"order", s.O.name()}, {"complete_up_to_level", o.kmax}, {"embeddings", list}};
    if (!Phi) r["immersion"] = "unavailable: -1 is not a square mod p, so forms and fixed points are omitted";
    return {r, std::to_string(list.size()) + " embedding(s), " + std::to_string(optimal) + " optimal"};
}

Outcome do_count(const Options& o) {
    CountingInput in{integer_arg(o.D, "--D"), integer_arg(o.N, "--N"), integer_arg(o.d, "--d"),
                     integer_arg(o.m, "--m"), integer_arg(o.p, "--p")};
    NuReport nu = nu_counts(in);
    Integer cp = cm_p(in), ci = cm_inf(in);
    FormClassNumbers h = form_class_numbers(in);
    json r = io::to_json(nu);
    r["cm_p"] = io::to_json(cp);
    r["cm_inf"] = io::to_json(ci);
    r["h_p"] = io::to_json(h.h_p);
    r["h_inf"] = io::to_json(h.h_inf);
    r["existence_criterion"] = existence_criterion(in);
    return {r, "cm_p = " + to_string(cp) + ", cm_inf = " + to_string(ci)};
}

json point_json(const CMPoint& pt, const Integer& d) {
    json j{{"display", pt.display(d)}, {"exact_basis", "1, i, sqrt(d), i*sqrt(d)"}};
    j["exact"] = json::array({io::to_json(pt.exact[0]), io::to_json(pt.exact[1]), io::to_json(pt.exact[2]),
                              io::to_json(pt.exact[3])});
    j["value"] = io::to_json(pt.value);
    return j;
}

Outcome do_family2p(const Options& o) {
    Integer p = prime_arg(o.p);
    Integer d = integer_arg(o.d, "--d"), m = integer_arg(o.m, "--m");
    if (o.kmax < 0) throw std::invalid_argument("--kmax must be non-negative");
    FamilyContext ctx(p, o.precision);
    auto pairs = family_cm_points(d, m, o.kmax, ctx);
    EquivalenceSearcher searcher(ctx.order(), ctx.immersion(), o.kmax);
    ClassFiltering f = filter_classes(pairs, searcher);

    json triples = json::array();
    for (const CMPair& pr : pairs) {
        triples.push_back({{"representation", io::to_json(pr.rep)},
                           {"abc", io::to_json(pr.abc)},
                           {"primitive", pr.abc.primitive(p)},
                           {"form", io::to_json(pr.form)},
                           {"points", json::array({point_json(pr.plus, d), point_json(pr.minus, d)})}});
    }
    json classes = json::array();
    for (std::size_t c = 0; c < f.representatives.size(); ++c) {
        const ClassMember& rep = f.representatives[c];
        const CMPair& pr = pairs[rep.pair_index];
        json members = json::array();
        for (const ClassMember& mbr : f.members) {
            if (mbr.class_index != c) continue;
            const CMPoint& pt = mbr.plus ? pairs[mbr.pair_index].plus : pairs[mbr.pair_index].minus;
            members.push_back({{"pair", mbr.pair_index},
                               {"point", mbr.plus ? "plus" : "minus"},
                               {"display", pt.display(d)},
                               {"witness", io::to_json(*mbr.witness)},
                               {"witness_level", mbr.witness_level}});
        }
        classes.push_back({{"representative",
                            {{"pair", rep.pair_index},
                             {"point", rep.plus ? "plus" : "minus"},
                             {"display", (rep.plus ? pr.plus : pr.minus).display(d)}}},
                           {"members", members}});
    }
    json r{{"eps", io::to_json(ctx.eps())},
           {"i_p", io::to_json(ctx.i_p())},
           {"order", ctx.order().name()},
           {"triples", triples},
           {"classes", classes},
           {"classes_complete_up_to_level", o.kmax}};
    CountingInput in{2, 1, d, m, p};
    try {
        r["cm_p"] = io::to_json(cm_p(in));
    } catch (const std::invalid_argument& e) {
        r["cm_p"] = nullptr;
        r["cm_p_note"] = e.what();
    }
    return {r, std::to_string(pairs.size()) + " primitive triple(s), " + std::to_string(classes.size()) +
                   " class(es) found with witnesses up to level " + std::to_string(o.kmax)};
}

Outcome do_equiv(const Options& o) {
    Integer p = prime_arg(o.p);
    if (o.points.empty() || o.points.size() > 2) {
        throw std::invalid_argument("equiv takes one --point (conjugate check) or two (equivalence search)");
    }
    if (o.kmax < 0) throw std::invalid_argument("--kmax must be non-negative");
    FamilyContext ctx(p, o.precision);
    std::vector<QuadExt> zs;
    for (const std::string& s : o.points) {
        QuadExt z = io::parse_point(s, p, o.precision);
        if (z.in_base()) throw std::invalid_argument("points must lie in Q_{p^2} \\ Q_p (nonzero y)");
        zs.push_back(z);
    }
    EquivalenceSearcher searcher(ctx.order(), ctx.immersion(), o.kmax);
    json r{{"search_space_size", searcher.space().elements().size()}, {"kmax", o.kmax}};
    if (zs.size() == 1) {
        ConjugateCheck c = conjugate_class_check(zs[0], searcher);
        r["conjugate_check"] = io::to_json(c);
        return {r, c.distinct ? "no witness maps z to conj(z) up to the bound"
                              : "z and conj(z) are equivalent, witness found"};
    }
    EquivalenceVerdict v = searcher.find(zs[0], zs[1]);
    r["equivalence"] = io::to_json(v);
    return {r, v.equivalent ? "equivalent" : "no witness up to level " + std::to_string(o.kmax)};
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--precision", o.precision, "working p-adic precision (digits)");
    sub->add_option("--out", o.out, "write the JSON document to this file");
}

json config_json(const std::string& cmd, const Options& o) {
    json c{{"precision", o.precision}, {"kmax", o.kmax}};
    auto put = [&](const char* k, const std::string& v) {
        if (!v.empty()) c[k] = v;
    };
    if (cmd == "count") {
        put("D", o.D);
        put("N", o.N);
    }
    if (cmd != "classify" && cmd != "form" && cmd != "fixed-points" && cmd != "equiv" && cmd != "selftest") {
        put("d", o.d);
        put("m", o.m);
    }
    put("p", o.p);
    put("matrix", o.matrix);
    if (!o.points.empty()) c["points"] = o.points;
    return c;
}

}  // namespace

long default_precision() {
    const char* env = std::getenv("PCM_PRECISION");
    if (env == nullptr || *env == '\0') return kDefaultPrecision;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw std::invalid_argument("PCM_PRECISION must be a positive integer");
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic binary quadratic forms and CM points on Shimura curves"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, CLI::App*> subs;
    subs["classify"] = app.add_subcommand("classify", "classify a PGL2(Q_p) matrix");
    subs["form"] = app.add_subcommand("form", "binary form f_gamma of a matrix");
    subs["fixed-points"] = app.add_subcommand("fixed-points", "fixed points of a matrix in P1(Q_{p^2})");
    subs["reps"] = app.add_subcommand("reps", "Z[1/p]-representations of -m^2 D_K by the ternary normic form");
    subs["embed"] = app.add_subcommand("embed", "optimal embeddings and their p-adic forms");
    subs["count"] = app.add_subcommand("count", "nu counts, cm_p and cm_inf");
    subs["family2p"] = app.add_subcommand("family2p", "CM points of the discriminant-2p family");
    subs["equiv"] = app.add_subcommand("equiv", "bounded Gamma_{p,+} equivalence search");
    subs["selftest"] = app.add_subcommand("selftest", "replay worked examples and invariant grids");
    for (const auto& [name, sub] : subs) add_common(sub, o);
    for (const char* n : {"classify", "form", "fixed-points"}) {
        subs[n]->add_option("--p", o.p, "prime")->required();
        subs[n]->add_option("--matrix", o.matrix, "entries a,b,c,d (rationals)")->required();
    }
    for (const char* n : {"reps", "embed", "family2p"}) {
        subs[n]->add_option("--p", o.p, "prime")->required();
        subs[n]->add_option("--d", o.d, "square-free d < 0")->required();
        subs[n]->add_option("--m", o.m, "conductor");
        subs[n]->add_option("--kmax", o.kmax, "largest p-power level searched");
    }
    for (const char* n : {"reps", "embed"}) subs[n]->add_option("--D", o.D, "algebra discriminant (2 only)");
    subs["count"]->add_option("--D", o.D, "discriminant of the definite algebra")->required();
    subs["count"]->add_option("--N", o.N, "square-free level");
    subs["count"]->add_option("--d", o.d, "square-free d < 0")->required();
    subs["count"]->add_option("--m", o.m, "conductor");
    subs["count"]->add_option("--p", o.p, "prime, inert in K")->required();
    subs["equiv"]->add_option("--p", o.p, "prime = 1 mod 4")->required();
    subs["equiv"]->add_option("--point", o.points, "point as JSON {\"x\":..., \"y\":...}")->required();
    subs["equiv"]->add_option("--kmax", o.kmax, "largest p-power level searched");

    std::string command;
    json doc;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (const auto& [name, sub] : subs) {
            if (sub->parsed()) command = name;
        }
        doc["command"] = command;
        if (o.precision == 0) o.precision = default_precision();
        if (o.precision < 1) throw std::invalid_argument("--precision must be positive");
        doc["config"] = config_json(command, o);

        static const std::map<std::string, std::function<Outcome(const Options&)>> handlers = {
            {"classify", do_classify}, {"form", do_form},         {"fixed-points", do_fixed_points},
            {"reps", do_reps},         {"embed", do_embed},       {"count", do_count},
            {"family2p", do_family2p}, {"equiv", do_equiv}};
        Outcome result;
        if (command == "selftest") {
            json st = selftest(o.precision);
            result = {st, std::string(st["passed"].get<bool>() ? "selftest passed" : "selftest FAILED")};
        } else {
            result = handlers.at(command)(o);
        }
        doc["result"] = result.result;
        int code = 0;
        if (command == "selftest" && !result.result["passed"].get<bool>()) code = 1;
        std::string text = doc.dump(2) + "\n";
        if (!o.out.empty()) {
            std::ofstream f(o.out);
            if (!f) throw std::invalid_argument("cannot write --out file " + o.out);
            f << text;
        } else {
            out << text;
        }
        err << command << ": " << result.summary << "\n";
        return code;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        json j{{"error", {{"kind", "validation"}, {"message", e.what()}}}};
        out << j.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        doc["error"] = {{"kind", "precision"}, {"message", e.what()}};
        out << doc.dump(2) << "\n";
        err << "precision exhausted: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        doc["error"] = {{"kind", "validation"}, {"message", e.what()}};
        out << doc.dump(2) << "\n";
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        doc["error"] = {{"kind", "validation"}, {"message", e.what()}};
        out << doc.dump(2) << "\n";
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pcm::cli
