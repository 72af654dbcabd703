// obn: batch front-end over graph6 / edge-list streams.
//
// Subcommands: bn, obn, bounds, invariants, reduce, gapsearch, selftest.
// Line-per-graph inputs stream through a worker pool whose output keeps the
// input order, so external generators can pipe straight in.

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "obn/obn.hpp"
#include "obn/report.hpp"

using json = nlohmann::json;

namespace {

struct CommonOptions {
    std::string input = "-";
    std::string format = "graph6"; // graph6 | edgelist | digraph-arclist
    bool json_output = false;
    bool keep_going = false;
    int jobs = 1;
    int budget_edges = 24;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool graph_input = true) {
    cmd->add_option("input", opt.input, "input file ('-' for stdin)");
    if (graph_input)
        cmd->add_option("--format", opt.format, "input format")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_flag("--json", opt.json_output, "one JSON record per line");
    cmd->add_flag("--keep-going", opt.keep_going, "report per-line errors and continue");
    cmd->add_option("--jobs", opt.jobs, "worker threads across input lines")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-edges", opt.budget_edges,
                    "edge budget for the exhaustive orientation search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed for sampled modes");
}

int default_budget_edges() {
    if (const char* env = std::getenv("OBN_BUDGET_EDGES")) {
        int value = std::atoi(env);
        if (value > 0)
            return value;
    }
    return 24;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> read_graph_lines(const std::string& path) {
    std::istringstream in(read_all(path));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty() && line[0] != '#')
            lines.push_back(line);
    }
    return lines;
}

struct LineOutcome {
    std::string text;
    bool failed = false;
};

/// Runs `work` over every line, in parallel when jobs > 1, printing results
/// in input order as soon as each contiguous prefix is done.
int for_each_line(const std::vector<std::string>& lines, const CommonOptions& opt,
                  const std::function<LineOutcome(const std::string&)>& work,
                  int* failures_out = nullptr) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::vector<LineOutcome> results(lines.size());
    std::vector<char> done(lines.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::size_t flushed = 0;
    int failures = 0;

    auto runner = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size() || abort.load())
                return;
            LineOutcome out = work(lines[i]);
            std::lock_guard<std::mutex> lock(mu);
            if (out.failed && !opt.keep_going)
                abort.store(true);
            results[i] = std::move(out);
            done[i] = 1;
            cv.notify_all();
        }
    };

    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(lines.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back(runner);

    {
        std::unique_lock<std::mutex> lock(mu);
        while (flushed < lines.size()) {
            cv.wait(lock, [&] { return flushed == lines.size() || done[flushed]; });
            while (flushed < lines.size() && done[flushed]) {
                std::cout << results[flushed].text << '\n';
                if (results[flushed].failed)
                    ++failures;
                if (results[flushed].failed && !opt.keep_going) {
                    flushed = lines.size();
                    abort.store(true);
                    break;
                }
                ++flushed;
            }
            if (abort.load())
                break;
        }
    }
    for (auto& t : pool)
        t.join();
    if (failures_out)
        *failures_out = failures;
    if (failures > 0 && !opt.keep_going)
        return 2;
    return 0;
}

void print_keep_going_summary(const CommonOptions& opt, std::size_t lines, int failures) {
    if (!opt.keep_going)
        return;
    if (opt.json_output) {
        json summary{{"schema", obn::kReportSchema},
                     {"summary", true},
                     {"lines", lines},
                     {"errors", failures}};
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << "processed " << lines << " lines, " << failures << " errors\n";
    }
}

obn::Graph parse_line(const std::string& line, const std::string& format) {
    if (format == "edgelist")
        return obn::parse_edge_list(line);
    return obn::parse_graph6(line);
}

/// For edge-list input the whole file is one graph; re-pack it as a single
/// "line" so the streaming loop handles both formats uniformly.
std::vector<std::string> load_units(const CommonOptions& opt) {
    if (opt.format == "edgelist")
        return {read_all(opt.input)};
    return read_graph_lines(opt.input);
}

json error_record(const std::string& line, const std::exception& e) {
    return {{"schema", obn::kReportSchema}, {"input", line}, {"error", e.what()}};
}

// ---------------------------------------------------------------------------

int cmd_bn(const CommonOptions& opt) {
    // digraph input: one orientation per file
    obn::Orientation o = obn::parse_orientation(read_all(opt.input));
    obn::BnResult r = obn::burning_number(o);
    if (opt.json_output) {
        json rec{{"schema", obn::kReportSchema},
                 {"n", o.graph().n()},
                 {"m", o.graph().m()},
                 {"mask", o.mask()},
                 {"bn", r.value},
                 {"schedule", r.schedule.fires},
                 {"optimality_certified", r.optimality_certified}};
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << "bn = " << r.value << "  schedule =";
        for (int w : r.schedule.fires)
            std::cout << ' ' << w;
        std::cout << '\n';
    }
    return 0;
}

struct ObnFlags {
    bool force_exact = false;
    bool ke_only = false;
    int decision_b = -1;
};

int cmd_obn(const CommonOptions& opt, const ObnFlags& flags) {
    obn::ExactOptions solver_opts;
    solver_opts.budget_edges = opt.budget_edges;
    auto lines = load_units(opt);
    int failures = 0;
    int rc = for_each_line(lines, opt, [&](const std::string& line) -> LineOutcome {
        try {
            obn::Graph g = parse_line(line, opt.format);
            if (flags.ke_only && !obn::is_konig_egervary(g))
                throw std::invalid_argument("--ke-only: graph is not König–Egerváry");
            if (flags.decision_b >= 0) {
                obn::ObnDecision d = obn::obn_decision(g, flags.decision_b, false, solver_opts);
                if (opt.json_output) {
                    json rec{{"schema", obn::kReportSchema},
                             {"input", line},
                             {"n", g.n()},
                             {"m", g.m()},
                             {"b", flags.decision_b},
                             {"satisfied", d.satisfied},
                             {"explored", d.explored}};
                    if (d.witness)
                        rec["witness_mask"] = d.witness->mask();
                    return {rec.dump(), false};
                }
                std::ostringstream out;
                out << line << "  obn >= " << flags.decision_b << ": "
                    << (d.satisfied ? "yes" : "no");
                return {out.str(), false};
            }
            obn::ObnResult r = flags.force_exact ? obn::obn_exact(g, solver_opts)
                                                 : obn::solve(g, solver_opts);
            if (opt.json_output) {
                json rec = obn::obn_report(g, r);
                rec["schema"] = obn::kReportSchema;
                rec["input"] = line;
                return {rec.dump(), false};
            }
            std::ostringstream out;
            out << line << "  obn = " << r.value << "  method = " << obn::to_string(r.method)
                << "  witness_mask = " << r.witness.mask();
            return {out.str(), false};
        } catch (const std::exception& e) {
            return {opt.json_output ? error_record(line, e).dump()
                                    : "error: " + std::string(e.what()),
                    true};
        }
    }, &failures);
    print_keep_going_summary(opt, lines.size(), failures);
    return rc;
}

int cmd_bounds(const CommonOptions& opt) {
    auto lines = load_units(opt);
    int failures = 0;
    int rc = for_each_line(lines, opt, [&](const std::string& line) -> LineOutcome {
        try {
            obn::Graph g = parse_line(line, opt.format);
            if (opt.json_output) {
                json rec = obn::bounds_report(g);
                rec["schema"] = obn::kReportSchema;
                rec["input"] = line;
                return {rec.dump(), false};
            }
            obn::ObnBracket br = obn::bracket(g);
            std::ostringstream out;
            out << line << "  bracket = [" << br.lower << "," << br.upper << "]  ("
                << br.lower_note << " / " << br.upper_note << ")";
            return {out.str(), false};
        } catch (const std::exception& e) {
            return {opt.json_output ? error_record(line, e).dump()
                                    : "error: " + std::string(e.what()),
                    true};
        }
    }, &failures);
    print_keep_going_summary(opt, lines.size(), failures);
    return rc;
}

int cmd_invariants(const CommonOptions& opt) {
    auto lines = load_units(opt);
    int failures = 0;
    int rc = for_each_line(lines, opt, [&](const std::string& line) -> LineOutcome {
        try {
            obn::Graph g = parse_line(line, opt.format);
            if (opt.json_output) {
                json rec = obn::invariants_report(g);
                rec["schema"] = obn::kReportSchema;
                rec["input"] = line;
                return {rec.dump(), false};
            }
            obn::InvariantReport inv = obn::compute_invariants(g);
            std::ostringstream out;
            out << line << "  alpha=" << inv.alpha.size << " nu=" << inv.matching.size
                << " cc=" << inv.clique_cover.size << " omega=" << inv.omega.size
                << " chi=" << inv.chi.count << " vc=" << inv.vc.size << " cvd=" << inv.cvd.size
                << " ell=" << inv.longest_path.length;
            return {out.str(), false};
        } catch (const std::exception& e) {
            return {opt.json_output ? error_record(line, e).dump()
                                    : "error: " + std::string(e.what()),
                    true};
        }
    }, &failures);
    print_keep_going_summary(opt, lines.size(), failures);
    return rc;
}

struct ReduceFlags {
    std::string kind = "is";
    int k = 1;
    std::string parts_spec; // "0,1;2,3"
    bool check = false;
    std::string out_prefix;
};

std::vector<std::vector<int>> parse_parts(const std::string& spec) {
    std::vector<std::vector<int>> parts;
    std::istringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> part;
        std::istringstream items(group);
        std::string item;
        while (std::getline(items, item, ','))
            part.push_back(std::stoi(item));
        parts.push_back(std::move(part));
    }
    return parts;
}

int cmd_reduce(const CommonOptions& opt, const ReduceFlags& flags) {
    obn::Graph g = opt.format == "edgelist" ? obn::parse_edge_list(read_all(opt.input))
                                            : obn::parse_graph6(read_graph_lines(opt.input).at(0));
    obn::ReductionInstance ri =
        flags.kind == "is" ? obn::reduce_is(g, flags.k)
                           : obn::reduce_mcis(g, parse_parts(flags.parts_spec));

    std::string edge_list = obn::write_edge_list(ri.target);
    std::string sidecar = obn::reduction_sidecar(ri).dump(2) + "\n";
    if (flags.out_prefix.empty()) {
        std::cout << edge_list;
        std::cout << sidecar;
    } else {
        std::ofstream(flags.out_prefix + ".edges") << edge_list;
        std::ofstream(flags.out_prefix + ".json") << sidecar;
    }
    if (flags.check) {
        obn::ExactOptions solver_opts;
        solver_opts.budget_edges = opt.budget_edges;
        bool ok = obn::check_equivalence(ri, solver_opts);
        std::cout << (ok ? "equivalent" : "NOT EQUIVALENT") << '\n';
        return ok ? 0 : 2;
    }
    return 0;
}

int cmd_gapsearch(const CommonOptions& opt) {
    obn::ExactOptions solver_opts;
    solver_opts.budget_edges = opt.budget_edges;
    std::mutex mu;
    int max_gap = 0;
    std::vector<std::string> witnesses;
    auto lines = load_units(opt);
    int failures = 0;
    int rc = for_each_line(lines, opt, [&](const std::string& line) -> LineOutcome {
        try {
            obn::Graph g = parse_line(line, opt.format);
            obn::ObnResult r = obn::solve(g, solver_opts);
            int alpha = obn::max_independent_set(g).size;
            int gap = r.value - alpha;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (gap > max_gap) {
                    max_gap = gap;
                    witnesses.clear();
                }
                if (gap == max_gap && witnesses.size() < 16)
                    witnesses.push_back(line);
            }
            if (opt.json_output) {
                json rec{{"schema", obn::kReportSchema}, {"input", line},   {"n", g.n()},
                         {"m", g.m()},                   {"obn", r.value}, {"alpha", alpha},
                         {"gap", gap},                   {"method", obn::to_string(r.method)}};
                return {rec.dump(), false};
            }
            std::ostringstream out;
            out << line << "  obn = " << r.value << "  alpha = " << alpha << "  gap = " << gap;
            return {out.str(), false};
        } catch (const std::exception& e) {
            return {opt.json_output ? error_record(line, e).dump()
                                    : "error: " + std::string(e.what()),
                    true};
        }
    }, &failures);
    if (max_gap > 2)
        std::cerr << "*** GAP EXCEEDS 2: a graph with obn - alpha = " << max_gap
                  << " — check the records above ***\n";
    if (opt.json_output) {
        json summary{{"schema", obn::kReportSchema},
                     {"summary", true},
                     {"max_gap", max_gap},
                     {"exceeds_two", max_gap > 2},
                     {"errors", failures},
                     {"witnesses", witnesses}};
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << "max gap = " << max_gap << (max_gap > 2 ? "  (EXCEEDS 2)" : "") << '\n';
    }
    return rc;
}

int selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << what << '\n';
        if (!ok)
            ++failures;
    };

    using namespace obn;
    {
        const int expect[] = {1, 2, 2, 2, 3};
        bool ok = true;
        for (int n = 1; n <= 5; ++n)
            ok = ok && obn_exact(complete_graph(n)).value == expect[n - 1];
        check(ok, "complete-graph ladder K1..K5 = 1,2,2,2,3");
    }
    {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < 5; ++i) {
            arcs.emplace_back(i, (i + 1) % 5);
            arcs.emplace_back(i, (i + 2) % 5);
        }
        Orientation fig = orientation_from_arcs(complete_graph(5), arcs);
        bool ok = burning_number(fig).value == 3;
        for (int w0 = 0; w0 < 5 && ok; ++w0)
            for (int w1 = 0; w1 < 5 && ok; ++w1)
                ok = !verify_schedule(fig, {{w0, w1}});
        check(ok, "regular K5 orientation needs 3 fires; all 25 length-2 schedules fail");
    }
    {
        bool ok = true;
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            Orientation o = orientation_from_bits(path_graph(4), mask);
            auto [v0, v2] = p4_fires(o);
            ok = ok && verify_schedule(o, {{v0, v0, v2}});
        }
        check(ok, "all 8 P4 orientations burn with radii 0 and 2");
    }
    {
        bool ok = ke_obn(star_graph(9)).value == 9 && ke_obn(matching_graph(4)).value == 5 &&
                  obn_exact(matching_graph(3)).value == 4;
        check(ok, "KE values: K_{1,9} -> 9, 4P2 -> 5, 3P2 -> 4");
    }
    {
        bool ok = true;
        for (int n = 1; n <= 4 && ok; ++n) {
            Graph g = complete_graph(n);
            ObnBracket br = bracket(g);
            int exact = obn_exact(g).value;
            ok = br.lower <= exact && exact <= br.upper;
        }
        check(ok, "bracket soundness on K1..K4");
    }
    std::cout << (failures == 0 ? "selftest: all checks passed" : "selftest: FAILURES") << '\n';
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orientable burning number toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    opt.budget_edges = default_budget_edges();
    ObnFlags obn_flags;
    ReduceFlags reduce_flags;

    CLI::App* bn = app.add_subcommand("bn", "burning number of a digraph file");
    bn->add_option("input", opt.input, "orientation file ('-' for stdin)");
    bn->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"digraph-arclist"}));
    bn->add_flag("--json", opt.json_output, "JSON output");

    CLI::App* obn_cmd = app.add_subcommand("obn", "orientable burning number per input graph");
    add_common(obn_cmd, opt);
    obn_cmd->add_flag("--exact", obn_flags.force_exact, "force the exhaustive search");
    obn_cmd->add_flag("--ke-only", obn_flags.ke_only, "refuse non-König–Egerváry graphs");
    obn_cmd->add_option("--decision", obn_flags.decision_b, "decide obn >= B instead");

    CLI::App* bounds = app.add_subcommand("bounds", "bracket and individual bounds per graph");
    add_common(bounds, opt);

    CLI::App* invariants = app.add_subcommand("invariants", "exact invariants per graph");
    add_common(invariants, opt);

    CLI::App* reduce = app.add_subcommand("reduce", "emit hardness-gadget instances");
    add_common(reduce, opt);
    reduce->add_option("--kind", reduce_flags.kind, "is | mcis")
        ->check(CLI::IsMember({"is", "mcis"}));
    reduce->add_option("--k", reduce_flags.k, "solution size (is)");
    reduce->add_option("--parts", reduce_flags.parts_spec, "clique partition, e.g. 0,1;2,3 (mcis)");
    reduce->add_flag("--check", reduce_flags.check, "run the equivalence check");
    reduce->add_option("--out", reduce_flags.out_prefix, "write <prefix>.edges and <prefix>.json");

    CLI::App* gap = app.add_subcommand("gapsearch", "survey obn - alpha over a graph stream");
    add_common(gap, opt);

    app.add_subcommand("selftest", "run the built-in sanity checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bn->parsed())
            return cmd_bn(opt);
        if (obn_cmd->parsed())
            return cmd_obn(opt, obn_flags);
        if (bounds->parsed())
            return cmd_bounds(opt);
        if (invariants->parsed())
            return cmd_invariants(opt);
        if (reduce->parsed())
            return cmd_reduce(opt, reduce_flags);
        if (gap->parsed())
            return cmd_gapsearch(opt);
        return selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
