#include "tanalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "tanalg/derivations.hpp"
#include "tanalg/errors.hpp"
#include "tanalg/expr_io.hpp"
#include "tanalg/lie.hpp"
#include "tanalg/session.hpp"

namespace tanalg {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct CliOptions {
    MonomialOrder order = MonomialOrder::grevlex;
    int degree_bound = 4;
    int depth = 2;
    bool json = false;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Builds the text and JSON renderings of one task report side by side, so
// both stay deterministic and in schema order {task, inputs, result,
// certificate?, provenance}.
class Report {
public:
    Report(const std::string& verb, const std::vector<std::string>& args) {
        j_["task"] = verb;
        j_["inputs"] = args;
        std::string head = "task " + verb;
        if (!args.empty()) head += " " + join(args, " ");
        lines_.push_back(std::move(head));
    }

    void add(const std::string& key, const std::string& value) {
        result_[key] = value;
        lines_.push_back(key + ": " + value);
    }

    void add_bool(const std::string& key, bool v) {
        result_[key] = v;
        lines_.push_back(key + ": " + (v ? "true" : "false"));
    }

    void add_tristate(const std::string& key, const std::optional<bool>& v) {
        if (v) {
            add_bool(key, *v);
        } else {
            result_[key] = nullptr;
            lines_.push_back(key + ": undecided");
        }
    }

    void add_int(const std::string& key, long v) {
        result_[key] = v;
        lines_.push_back(key + ": " + std::to_string(v));
    }

    void add_list(const std::string& key, const std::vector<std::string>& items) {
        result_[key] = items;
        lines_.push_back(key + ": " + (items.empty() ? "0" : join(items, "; ")));
    }

    void add_links(const std::vector<Variety>& links) {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < links.size(); ++i) {
            arr.push_back(render_basis(links[i].ideal));
            lines_.push_back("link-" + std::to_string(i) + ": " +
                             render_joined(links[i].ideal));
        }
        result_["links"] = std::move(arr);
    }

    void set_certificate(const Certificate& c) {
        ordered_json j;
        const char* verdict = c.verdict == Certificate::Verdict::pass         ? "pass"
                              : c.verdict == Certificate::Verdict::fail       ? "fail"
                                                                              : "inconclusive";
        j["verdict"] = verdict;
        lines_.push_back(std::string("certificate: ") + verdict);
        if (c.witness) {
            j["witness"] = render(*c.witness);
            lines_.push_back("witness: " + render(*c.witness));
        }
        j["degree-bound"] = c.degree_bound;
        j["depth"] = c.depth;
        j["k-ideal"] = c.k_ideal;
        j["probes"] = c.probe_count;
        lines_.push_back("bounds: degree-bound=" + std::to_string(c.degree_bound) +
                         " depth=" + std::to_string(c.depth) +
                         " k-ideal=" + std::to_string(c.k_ideal) +
                         " probes=" + std::to_string(c.probe_count));
        j["detail"] = c.detail;
        lines_.push_back("detail: " + c.detail);
        if (c.counterexample) {
            ordered_json ce;
            ce["start"] = render(c.counterexample->start);
            ce["path"] = c.counterexample->probe_path;
            ce["escaped"] = render(c.counterexample->escaped);
            j["counterexample"] = std::move(ce);
            std::string path;
            for (size_t i = 0; i < c.counterexample->probe_path.size(); ++i) {
                if (i) path += ",";
                path += std::to_string(c.counterexample->probe_path[i]);
            }
            lines_.push_back("counterexample: start=" + render(c.counterexample->start) +
                             " path=" + path + " escaped=" + render(c.counterexample->escaped));
        }
        if (!c.ideal_evidence.empty()) {
            int refuted = 0;
            std::vector<std::string> unrefuted;
            for (const auto& rec : c.ideal_evidence) {
                if (rec.refuted)
                    ++refuted;
                else
                    unrefuted.push_back(render(rec.candidate));
            }
            j["ideal-candidates"] = c.ideal_evidence.size();
            j["ideal-refuted"] = refuted;
            j["ideal-unrefuted"] = unrefuted;
            lines_.push_back("ideal-candidates: " + std::to_string(c.ideal_evidence.size()) +
                             " refuted=" + std::to_string(refuted) +
                             " unrefuted=" + (unrefuted.empty() ? "none" : join(unrefuted, "; ")));
        }
        certificate_ = std::move(j);
    }

    void warn(const std::string& w) { warnings_.push_back(w); }

    void finish(const CliOptions& opts, std::ostream& out) {
        j_["result"] = std::move(result_);
        if (!certificate_.is_null()) j_["certificate"] = std::move(certificate_);
        ordered_json prov;
        prov["order"] = order_name(opts.order);
        prov["d"] = opts.degree_bound;
        prov["k"] = opts.depth;
        prov["warnings"] = warnings_;
        j_["provenance"] = std::move(prov);
        if (opts.json) {
            out << j_.dump(2) << "\n";
            return;
        }
        for (const auto& l : lines_) out << l << "\n";
        out << "provenance: order=" << order_name(opts.order) << " d=" << opts.degree_bound
            << " k=" << opts.depth << "\n";
        for (const auto& w : warnings_) out << "warning: " << w << "\n";
    }

private:
    ordered_json j_;
    ordered_json result_ = ordered_json::object();
    ordered_json certificate_;
    std::vector<std::string> lines_;
    std::vector<std::string> warnings_;
};

[[noreturn]] void bad_input(const std::string& msg, int line = 0) {
    throw ParseError(msg, 0, line, 1);
}

const Ideal& want_ideal(const Session& s, const std::string& name, int line) {
    const Ideal* I = s.find_ideal(name);
    if (!I) bad_input("unknown ideal '" + name + "'", line);
    return *I;
}

Variety want_variety(const Session& s, const std::string& name, int line) {
    return make_variety(want_ideal(s, name, line));
}

VarietyFamily want_family(const Session& s, const std::vector<std::string>& names, int line) {
    std::vector<Variety> members;
    members.reserve(names.size());
    for (const auto& n : names) members.push_back(want_variety(s, n, line));
    return make_family(std::move(members));
}

VField want_field(const Session& s, const std::string& arg, int line) {
    if (!arg.empty() && arg[0] == '[') return parse_field(arg, s.ring);
    const VField* f = s.find_field(arg);
    if (!f) bad_input("unknown field '" + arg + "'", line);
    return *f;
}

const VfModule& want_module(const Session& s, const std::string& name, int line) {
    const VfModule* M = s.find_module(name);
    if (!M) bad_input("unknown module '" + name + "'", line);
    return *M;
}

const AutoMap& want_auto(const Session& s, const std::string& name, int line) {
    const AutoMap* A = s.find_auto(name);
    if (!A) bad_input("unknown automorphism '" + name + "'", line);
    return *A;
}

AmbientKind want_ambient(const std::vector<std::string>& args, size_t idx, int line) {
    if (args.size() <= idx) return AmbientKind::full;
    if (args[idx] == "full") return AmbientKind::full;
    if (args[idx] == "origin" || args[idx] == "at_origin") return AmbientKind::at_origin;
    bad_input("ambient must be 'full' or 'origin', got '" + args[idx] + "'", line);
}

void check_arity(const TaskDirective& t, size_t min_args, size_t max_args) {
    if (t.args.size() < min_args || t.args.size() > max_args)
        bad_input("verb '" + t.verb + "' takes " + std::to_string(min_args) +
                      (max_args == min_args ? "" : ".." + (max_args == SIZE_MAX
                                                               ? std::string("n")
                                                               : std::to_string(max_args))) +
                      " arguments, got " + std::to_string(t.args.size()),
                  t.line);
}

void execute_task(const Session& s, const CliOptions& opts, const TaskDirective& t,
                  std::ostream& out) {
    Report rep(t.verb, t.args);
    int line = t.line;

    if (t.verb == "tangent") {
        check_arity(t, 1, 1);
        VfModule M = tangent_algebra(want_variety(s, t.args[0], line));
        rep.add_list("generators", render_basis(M));
    } else if (t.verb == "family") {
        check_arity(t, 1, SIZE_MAX);
        VfModule M = tangent_family(want_family(s, t.args, line));
        rep.add_list("generators", render_basis(M));
    } else if (t.verb == "integral") {
        check_arity(t, 1, 1);
        const VfModule& M = want_module(s, t.args[0], line);
        Ideal I = integral_ideal(M);
        RadicalResult rad = radical_policy(I);
        rep.add_list("integral", render_basis(I));
        rep.add_list("radical", render_basis(rad.radical));
        rep.add_bool("radical-exact", rad.exact);
    } else if (t.verb == "sing") {
        check_arity(t, 1, 1);
        std::vector<std::string> warnings;
        Variety S = singular_locus(want_variety(s, t.args[0], line), &warnings);
        rep.add_list("singular-locus", render_basis(S.ideal));
        rep.add_bool("empty", S.is_empty());
        rep.add_bool("radical-exact", S.radical_exact);
        for (const auto& w : warnings) rep.warn(w);
    } else if (t.verb == "chain") {
        check_arity(t, 1, 1);
        SingChain c = sing_chain(want_variety(s, t.args[0], line));
        rep.add_int("k-max", c.k_max);
        rep.add_links(c.links);
    } else if (t.verb == "recover") {
        check_arity(t, 1, 1);
        RecoveryReport r = recovery_check(want_variety(s, t.args[0], line));
        const char* verdict = r.verdict == RecoveryReport::Verdict::equal ? "equal"
                              : r.verdict == RecoveryReport::Verdict::containment_only
                                  ? "containment-only"
                                  : "not-equal";
        rep.add("verdict", verdict);
        rep.add_list("integral", render_basis(r.integral));
        rep.add_list("radical", render_basis(r.radical));
        rep.add_bool("radical-exact", r.radical_exact);
        rep.add_bool("integral-in-ix", r.integral_in_ix);
        rep.add_tristate("ix-in-radical", r.ix_in_radical);
    } else if (t.verb == "stability") {
        check_arity(t, 1, 1);
        rep.add_bool("stable", sing_stability_check(want_variety(s, t.args[0], line)));
    } else if (t.verb == "irredundant") {
        check_arity(t, 1, SIZE_MAX);
        IrredundancyReport r = irredundancy_check(want_family(s, t.args, line));
        for (size_t i = 0; i < t.args.size(); ++i)
            rep.add_bool("needed-" + t.args[i], r.needed[i]);
        rep.add_bool("irredundant", r.irredundant);
    } else if (t.verb == "bracket") {
        check_arity(t, 2, 2);
        rep.add("bracket",
                render(bracket(want_field(s, t.args[0], line), want_field(s, t.args[1], line))));
    } else if (t.verb == "closure") {
        check_arity(t, 1, 1);
        rep.add_bool("closed", bracket_closure_check(want_module(s, t.args[0], line)));
    } else if (t.verb == "balanced") {
        check_arity(t, 1, 2);
        const VfModule& M = want_module(s, t.args[0], line);
        VfModule ambient = ambient_algebra(s.ring, want_ambient(t.args, 1, line));
        rep.set_certificate(balanced_certificate(M, ambient, opts.degree_bound));
    } else if (t.verb == "visible") {
        check_arity(t, 1, 2);
        const VfModule& M = want_module(s, t.args[0], line);
        VisibilityReport r = visibility_diagnostic(M, want_ambient(t.args, 1, line));
        rep.add_list("integral", render_basis(r.integral));
        rep.add_list("xa", render_basis(r.xa.ideal));
        rep.add_bool("xa-radical-exact", r.xa.radical_exact);
        rep.add_bool("equals-tangent-algebra", r.a_equals_tangent_of_xa);
        rep.add_bool("proper", r.xa_proper);
        rep.add_tristate("smooth", r.xa_smooth);
        rep.add_tristate("isolated-singularity", r.isolated_singularity);
        rep.add_bool("contained-in-ambient", r.contained_in_ambient);
        rep.add("verdict", r.verdict);
    } else if (t.verb == "conjugate") {
        check_arity(t, 3, 3);
        bool ok = conjugation_check(want_auto(s, t.args[0], line),
                                    want_variety(s, t.args[1], line),
                                    want_variety(s, t.args[2], line));
        rep.add_bool("conjugate", ok);
    } else if (t.verb == "lambda") {
        check_arity(t, 3, 3);
        Poly f = parse_poly(t.args[0], s.ring);
        VField r = lambda_apply(f, want_auto(s, t.args[1], line), want_field(s, t.args[2], line));
        rep.add("lambda", render(r));
    } else if (t.verb == "extract") {
        check_arity(t, 4, SIZE_MAX);
        const AutoMap& phi = want_auto(s, t.args[0], line);
        Poly f = parse_poly(t.args[1], s.ring);
        std::vector<VField> probes;
        for (size_t i = 2; i < t.args.size(); ++i) probes.push_back(want_field(s, t.args[i], line));
        ExtractResult r = lambda_factor_extract(phi, f, probes);
        if (r.ok()) {
            rep.add("status", "ok");
            rep.add("factor", render(*r.factor));
        } else {
            rep.add("status", "extraction-failure");
            rep.add("reason", r.failure);
        }
    } else if (t.verb == "gb") {
        check_arity(t, 1, 1);
        rep.add_list("basis", render_basis(want_ideal(s, t.args[0], line)));
    } else if (t.verb == "nf") {
        check_arity(t, 2, 2);
        Poly f = parse_poly(t.args[0], s.ring);
        rep.add("normal-form", render(want_ideal(s, t.args[1], line).reduce(f)));
    } else if (t.verb == "member") {
        check_arity(t, 2, 2);
        if (!t.args[0].empty() && t.args[0][0] == '[') {
            VField v = parse_field(t.args[0], s.ring);
            rep.add_bool("member", want_module(s, t.args[1], line).contains(v));
        } else {
            Poly f = parse_poly(t.args[0], s.ring);
            rep.add_bool("member", want_ideal(s, t.args[1], line).contains(f));
        }
    } else {
        bad_input("unknown task verb '" + t.verb + "'", line);
    }
    rep.finish(opts, out);
}

void run_session_tasks(const Session& s, const CliOptions& opts, std::ostream& out) {
    bool first = true;
    for (const auto& t : s.tasks) {
        if (!first) out << "\n";
        first = false;
        execute_task(s, opts, t, out);
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad_input("cannot read file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- corpus runner ----

struct CorpusRow {
    std::string name;
    bool pass = false;
    bool seeded = false;
    double ms = 0.0;
    std::string note;
};

CorpusRow run_corpus_item(const fs::path& session_path, const fs::path& golden_path,
                          bool seed, const CliOptions& opts) {
    CorpusRow row;
    row.name = session_path.stem().string();
    auto t0 = std::chrono::steady_clock::now();
    try {
        Session s = parse_session(read_file(session_path), opts.order);
        std::ostringstream got;
        run_session_tasks(s, opts, got);
        if (seed) {
            std::ofstream g(golden_path, std::ios::binary);
            g << got.str();
            row.pass = true;
            row.seeded = true;
        } else if (!fs::exists(golden_path)) {
            row.note = "missing golden";
        } else if (read_file(golden_path) != got.str()) {
            row.note = "output differs from golden";
        } else {
            row.pass = true;
        }
    } catch (const std::exception& e) {
        row.note = e.what();
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    return row;
}

int run_corpus(const std::string& dir, const std::string& filter, bool seed,
               const CliOptions& opts, std::ostream& out, std::ostream& err) {
    fs::path root(dir);
    if (!fs::is_directory(root)) {
        err << "error: corpus directory '" << dir << "' not found\n";
        return 2;
    }
    std::vector<fs::path> sessions;
    for (const auto& entry : fs::directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".session")
            sessions.push_back(entry.path());
    std::sort(sessions.begin(), sessions.end());
    if (!filter.empty()) {
        std::erase_if(sessions, [&](const fs::path& p) {
            return p.stem().string().find(filter) == std::string::npos;
        });
    }
    if (sessions.empty()) {
        out << "0 items\n";
        return 0;
    }

    size_t workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("TANALG_WORKERS")) {
        long w = std::strtol(env, nullptr, 10);
        if (w >= 1) workers = static_cast<size_t>(w);
    }
    workers = std::max<size_t>(1, std::min(workers, sessions.size()));

    std::vector<CorpusRow> rows(sessions.size());
    std::vector<std::future<void>> futures;
    std::atomic<size_t> next{0};
    for (size_t w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= sessions.size()) return;
                fs::path golden = sessions[i];
                golden.replace_extension(".golden");
                rows[i] = run_corpus_item(sessions[i], golden, seed, opts);
            }
        }));
    for (auto& f : futures) f.get();

    int failed = 0;
    for (const auto& row : rows) {
        const char* status = row.seeded ? "SEED" : row.pass ? "PASS" : "FAIL";
        out << status << "  " << row.name << "  "
            << static_cast<long>(row.ms + 0.5) << "ms";
        if (!row.note.empty()) out << "  (" << row.note << ")";
        out << "\n";
        if (!row.pass) ++failed;
    }
    out << rows.size() << " items, " << (rows.size() - static_cast<size_t>(failed))
        << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

struct VerbSpec {
    const char* name;
    size_t min_args;
    size_t max_args;
    const char* help;
};

constexpr VerbSpec kVerbs[] = {
    {"tangent", 1, 1, "tangent algebra of a variety"},
    {"family", 1, SIZE_MAX, "tangent algebra of a variety family"},
    {"integral", 1, 1, "integral ideal and radical of a module"},
    {"sing", 1, 1, "singular locus"},
    {"chain", 1, 1, "iterated singular loci"},
    {"recover", 1, 1, "recovery of X from its tangent algebra"},
    {"stability", 1, 1, "tangency stability against the singular locus"},
    {"irredundant", 1, SIZE_MAX, "irredundancy of a variety family"},
    {"bracket", 2, 2, "Lie bracket of two fields"},
    {"closure", 1, 1, "bracket closure of a module"},
    {"balanced", 1, 2, "balanced-subalgebra certificate [ambient]"},
    {"visible", 1, 2, "maximal-visible shape diagnostic [ambient]"},
    {"conjugate", 3, 3, "conjugation check PHI X Y"},
    {"lambda", 3, 3, "lambda operator F PHI D"},
    {"extract", 4, SIZE_MAX, "factor extraction PHI F PROBES..."},
    {"gb", 1, 1, "reduced Groebner basis of an ideal"},
    {"nf", 2, 2, "normal form F IDEAL"},
    {"member", 2, 2, "membership F IDEAL or [..] MODULE"},
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tangent algebras of variety germs and their Lie certificates"};
    app.require_subcommand(1);

    std::string order_name_opt = "grevlex";
    CliOptions opts;
    std::string format = "text";

    struct SubState {
        CLI::App* sub = nullptr;
        std::string session;
        std::vector<std::string> args;
    };
    std::vector<SubState> subs(std::size(kVerbs));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order_name_opt, "monomial order")
            ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
        sub->add_option("--degree-bound", opts.degree_bound, "probe degree bound")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--depth", opts.depth, "bracket depth")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    for (size_t i = 0; i < std::size(kVerbs); ++i) {
        subs[i].sub = app.add_subcommand(kVerbs[i].name, kVerbs[i].help);
        subs[i].sub->add_option("session", subs[i].session, "session file")->required();
        subs[i].sub->add_option("args", subs[i].args, kVerbs[i].help);
        add_common(subs[i].sub);
    }

    std::string run_session;
    CLI::App* run_sub = app.add_subcommand("run", "execute the task directives of a session");
    run_sub->add_option("session", run_session, "session file")->required();
    add_common(run_sub);

    std::string corpus_dir = "corpus";
    std::string corpus_filter;
    bool seed_corpus = false;
    CLI::App* corpus_sub = app.add_subcommand("corpus", "run the bundled example corpus");
    corpus_sub->add_option("--dir", corpus_dir, "corpus directory");
    corpus_sub->add_option("--filter", corpus_filter, "only items whose name contains this");
    corpus_sub->add_flag("--seed-corpus", seed_corpus, "write golden files instead of comparing");
    add_common(corpus_sub);

    std::vector<const char*> argv;
    argv.push_back("tanalg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to out and exits cleanly
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto parsed_order = order_from_name(order_name_opt);
    opts.order = *parsed_order; // validated by CLI11
    opts.json = format == "json";

    try {
        if (app.got_subcommand(corpus_sub))
            return run_corpus(corpus_dir, corpus_filter, seed_corpus, opts, out, err);

        if (app.got_subcommand(run_sub)) {
            Session s = parse_session(read_file(run_session), opts.order);
            run_session_tasks(s, opts, out);
            return 0;
        }

        for (size_t i = 0; i < std::size(kVerbs); ++i) {
            if (!app.got_subcommand(subs[i].sub)) continue;
            Session s = parse_session(read_file(subs[i].session), opts.order);
            TaskDirective t{kVerbs[i].name, subs[i].args, 0};
            if (t.args.size() < kVerbs[i].min_args || t.args.size() > kVerbs[i].max_args)
                bad_input("wrong number of arguments for '" + std::string(kVerbs[i].name) + "'");
            execute_task(s, opts, t, out);
            return 0;
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (line " << e.line << ", col " << e.column
            << ", offset " << e.offset << ")\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tanalg
