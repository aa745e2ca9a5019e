#include "cli.hpp"

#include "copwin/engine.hpp"
#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/io.hpp"
#include "copwin/orders.hpp"
#include "copwin/retractions.hpp"
#include "copwin/search.hpp"
#include "copwin/solver.hpp"
#include "copwin/strategies.hpp"
#include "copwin/timing.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace copwin::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph, order, transcript, retraction, family, out, flavor;
    std::string cop = "s_star";
    std::string robber = "greedy";
    std::string criterion;
    std::string bound = "default";
    std::string format = "text";
    std::string h_prefix;
    std::vector<int> ray_path, exempt;
    int n = 0, radius = 0, degree = 3;
    int horizon = 0;
    double p = 0.3;
    std::optional<std::uint64_t> seed;
    std::optional<int> robber_start;
    bool table = false, dot = false, shifted = false;
};

std::ifstream open_input(const std::string& path, const char* what) {
    if (path.empty())
        throw UsageError(std::string("missing --") + what);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return in;
}

Graph load_graph(const Options& o) {
    auto in = open_input(o.graph, "graph");
    Graph g = read_graph(in);
    if (!g.connected())
        throw UsageError("graph in " + o.graph + " is not connected");
    return g;
}

Order load_order(const Options& o, const Graph& g) {
    auto in = open_input(o.order, "order");
    std::optional<Flavor> flavor;
    if (!o.flavor.empty())
        flavor = parse_flavor(o.flavor);
    Order order = read_order(in, flavor);
    if (order.size() != g.order())
        throw UsageError("order covers " + std::to_string(order.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    return order;
}

// ---------------------------------------------------------------------------
// generate

std::uint64_t require_seed(const Options& o) {
    if (!o.seed)
        throw UsageError("family " + o.family + " is random and needs --seed");
    return *o.seed;
}

Family make_family(const Options& o) {
    const std::string& f = o.family;
    if (f == "path")
        return path_graph(o.n);
    if (f == "cycle")
        return cycle_graph(o.n);
    if (f == "complete")
        return complete_graph(o.n);
    if (f == "star")
        return star_graph(o.n);
    if (f == "petersen")
        return Family{petersen_graph(), std::nullopt, {}, {}, {}};
    if (f == "h_block")
        return h_block();
    if (f == "ab_graph")
        return ab_graph(o.n);
    if (f == "ray")
        return ray_dismantling(o.radius);
    if (f == "ray_ball" || f == "t5_of_h") {
        Ball b = ball(f == "ray_ball" ? ray() : t5_of_h(), o.radius);
        return Family{std::move(b.graph), std::move(b.hint), {}, {}, {}};
    }
    if (f == "random_constructible")
        return random_constructible(o.n, require_seed(o));
    if (f == "random_connected")
        return Family{random_connected(o.n, o.p, require_seed(o)), std::nullopt, {}, {}, {}};
    if (f == "tree") {
        TreeBall t = leafless_tree_ball(o.degree, o.radius);
        return Family{std::move(t.graph), std::move(t.bfs_order), {}, {}, {}};
    }
    throw UsageError("unknown family '" + f + "'");
}

int run_generate(const Options& o, std::ostream& out) {
    Family fam = make_family(o);
    if (o.out.empty()) {
        if (o.dot)
            write_dot(out, fam.graph);
        else
            write_graph(out, fam.graph);
        return 0;
    }
    auto write_file = [](const std::string& path, auto&& body) {
        std::ofstream f(path);
        if (!f)
            throw UsageError("cannot write " + path);
        body(f);
    };
    write_file(o.out + ".graph", [&](std::ostream& s) { write_graph(s, fam.graph); });
    out << o.out << ".graph\n";
    if (fam.order) {
        write_file(o.out + ".order", [&](std::ostream& s) { write_order(s, *fam.order); });
        out << o.out << ".order\n";
    }
    if (!fam.retraction.empty()) {
        write_file(o.out + ".retraction", [&](std::ostream& s) {
            for (Vertex v : fam.retraction)
                s << v << '\n';
        });
        out << o.out << ".retraction\n";
    }
    if (o.dot) {
        write_file(o.out + ".dot", [&](std::ostream& s) { write_dot(s, fam.graph); });
        out << o.out << ".dot\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// order / solve

int run_order(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    const bool dismantling = o.flavor == "dismantling";
    if (!o.flavor.empty())
        parse_flavor(o.flavor);
    auto order = dismantling ? find_dismantling_order(g) : find_dominating_order(g);
    if (!order) {
        out << (dismantling ? "not dismantlable\n" : "not constructible\n");
        return 0;
    }
    write_order(out, *order);
    return 0;
}

int run_solve(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    GameStateTable t(g);
    out << (t.cop_win() ? "cop-win" : "robber-win") << '\n';
    if (t.cop_win())
        out << "# cop start " << t.cop_start() << '\n';
    if (o.table) {
        out << "# cop robber steps_cop_to_move steps_robber_to_move\n";
        for (Vertex c = 0; c < static_cast<Vertex>(g.order()); ++c)
            for (Vertex r = 0; r < static_cast<Vertex>(g.order()); ++r)
                out << c << ' ' << r << ' ' << t.steps(c, r, Side::cop_to_move) << ' '
                    << t.steps(c, r, Side::robber_to_move) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// strategies

struct CopBundle {
    std::shared_ptr<const RetractionFamily> family;
    std::unique_ptr<CopStrategy> cop;
};

CopBundle make_cop(const Options& o, const Graph& g) {
    CopBundle b;
    if (o.cop == "optimal") {
        b.cop = std::make_unique<OptimalCop>(std::make_shared<GameStateTable>(g));
        return b;
    }
    Order order = load_order(o, g);
    if (o.cop == "protective") {
        if (order.flavor() != Flavor::constructing)
            throw UsageError("protective needs a constructing order");
        order = naturalize_order(g, order).order;
    }
    b.family = std::make_shared<RetractionFamily>(order);
    if (o.cop == "s_star")
        b.cop = std::make_unique<SStarCop>(g, b.family);
    else if (o.cop == "recursive")
        b.cop = std::make_unique<RecursiveSCop>(g, b.family);
    else if (o.cop == "protective")
        b.cop = std::make_unique<ProtectiveCop>(b.family);
    else if (o.cop == "dismantable")
        b.cop = std::make_unique<DismantableCop>(g, b.family);
    else
        throw UsageError("unknown cop strategy '" + o.cop + "'");
    return b;
}

std::vector<Vertex> default_ray(const Graph& g, Vertex from) {
    auto d = g.distances_from(from);
    Vertex far = from;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(far)])
            far = v;
    // Walk back from the farthest vertex along decreasing distance.
    std::vector<Vertex> path{far};
    while (path.back() != from) {
        for (Vertex w : g.open_neighbors(path.back()))
            if (d[static_cast<std::size_t>(w)] == d[static_cast<std::size_t>(path.back())] - 1) {
                path.push_back(w);
                break;
            }
    }
    // Run away from the cop's start.
    return path.size() > 1 ? std::vector<Vertex>(path.begin(), path.end() - 1) : path;
}

std::unique_ptr<RobberPolicy> make_robber(const Options& o, const Graph& g, const CopStrategy& cop) {
    const std::string& k = o.robber;
    if (k == "stationary")
        return std::make_unique<StationaryRobber>(o.robber_start);
    if (k == "greedy")
        return std::make_unique<DistanceGreedyRobber>();
    if (k == "ray") {
        std::vector<Vertex> path(o.ray_path.begin(), o.ray_path.end());
        if (path.empty())
            path = default_ray(g, cop.start());
        return std::make_unique<RayRunner>(std::move(path));
    }
    if (k == "h_evader")
        return std::make_unique<HCycleEvader>(HLayout::from_labels(g, o.h_prefix));
    if (k == "adversarial")
        return std::make_unique<AdversarialRobber>(std::make_shared<GameStateTable>(g));
    if (k.rfind("script:", 0) == 0) {
        auto in = open_input(k.substr(7), "robber script");
        return std::make_unique<ScriptedRobber>(read_vertex_list(in));
    }
    throw UsageError("unknown robber policy '" + k + "'");
}

Round horizon_for(const Options& o, const Graph& g, const CopBundle& b) {
    if (o.horizon > 0)
        return o.horizon;
    return b.family ? default_horizon(g, *b.family) : 10 * static_cast<Round>(g.order()) * static_cast<Round>(g.order());
}

// ---------------------------------------------------------------------------
// simulate / verify / timing / play

int run_simulate(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    CopBundle b = make_cop(o, g);
    auto robber = make_robber(o, g, *b.cop);
    PlayOptions po;
    po.max_rounds = horizon_for(o, g, b);
    if (o.robber_start)
        po.robber_start = *o.robber_start;
    Transcript t = play(g, *b.cop, *robber, po);
    std::ostringstream body;
    if (o.format == "json")
        write_transcript_json(body, t);
    else if (o.format == "text")
        write_transcript_text(body, t);
    else
        throw UsageError("unknown format '" + o.format + "'");
    if (o.out.empty()) {
        out << body.str();
    } else {
        std::ofstream f(o.out);
        if (!f)
            throw UsageError("cannot write " + o.out);
        f << body.str();
        out << to_string(t.outcome) << ' ' << t.last_round << '\n';
    }
    return 0;
}

Transcript load_transcript(const Options& o, const Graph& g) {
    auto in = open_input(o.transcript, "transcript");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream s(text);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Transcript stored = read_transcript_json(s);
        // Recompute positions and visits from the moves; keep the annotations.
        Transcript t = rebuild_transcript(stored.moves, g);
        if (stored.outcome == Outcome::fault) {
            t.outcome = Outcome::fault;
            t.fault = stored.fault;
        }
        t.stages = std::move(stored.stages);
        t.invariant_violations = std::move(stored.invariant_violations);
        return t;
    }
    return read_transcript_text(s, g);
}

std::vector<int> load_bound(const Options& o, const Graph& g) {
    if (o.bound == "default") {
        if (o.order.empty())
            throw UsageError("--bound default needs --order to compute depths");
        return default_weak_bound(RetractionFamily(load_order(o, g)));
    }
    auto in = open_input(o.bound, "bound");
    auto values = read_vertex_list(in);
    if (values.size() == 1)
        return std::vector<int>(g.order(), values[0]);
    if (values.size() != g.order())
        throw UsageError("bound file must hold one value or one per vertex");
    return std::vector<int>(values.begin(), values.end());
}

int run_verify(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    int status = 0;
    auto report = [&](const std::string& what, bool ok, const std::string& detail) {
        out << what << ": " << (ok ? "ok" : "violation");
        if (!ok && !detail.empty())
            out << " (" << detail << ")";
        out << '\n';
        if (!ok)
            status = 1;
    };

    std::optional<Order> order;
    if (!o.order.empty()) {
        order = load_order(o, g);
        std::vector<Vertex> exempt(o.exempt.begin(), o.exempt.end());
        CheckResult r = order->flavor() == Flavor::constructing ? verify_dominating_order(g, *order)
                                                                : verify_dismantling_order(g, *order, exempt);
        std::string where = r ? "" : "rank " + std::to_string(r.rank) + ": " + r.message;
        report(std::string(to_string(order->flavor())) + " order", r.ok, where);
        if (o.shifted) {
            RetractionFamily fam(*order);
            try {
                CheckResult s = check_shifted_edge_property(fam, g);
                report("shifted-edge property", s.ok, s.message);
            } catch (const NonTotalRetraction& e) {
                report("shifted-edge property", false, e.what());
            }
        }
    }

    if (!o.retraction.empty()) {
        auto in = open_input(o.retraction, "retraction");
        auto f = read_vertex_list(in);
        if (f.size() != g.order())
            throw UsageError("retraction must list one image per vertex");
        std::vector<Vertex> target;
        for (Vertex v = 0; v < static_cast<Vertex>(f.size()); ++v)
            if (f[static_cast<std::size_t>(v)] == v)
                target.push_back(v);
        CheckResult r = check_retraction(g, f, target);
        report("retraction", r.ok, r.message);
    }

    if (!o.transcript.empty()) {
        Transcript t = load_transcript(o, g);
        if (t.outcome == Outcome::fault) {
            report("transcript", false, t.fault);
            return status;
        }
        report("transcript invariants", t.invariant_violations.empty(),
               t.invariant_violations.empty() ? "" : t.invariant_violations.front());
        const std::string c = o.criterion.empty() ? "classic" : o.criterion;
        if (c == "classic") {
            report("criterion classic", evaluate_classic(t), "no capture");
        } else if (c == "weak") {
            WeakVerdict w = evaluate_weak(t, load_bound(o, g));
            report("criterion weak", w.ok,
                   w.ok ? "" : "vertex " + g.name(w.offender) + " visited " + std::to_string(w.visits) + " > " +
                                   std::to_string(w.bound));
        } else if (c == "cweak") {
            CweakVerdict w = evaluate_cweak(t);
            report("criterion cweak", w.ok, "robber revisits at round " + std::to_string(w.fresh_from));
        } else {
            throw UsageError("unknown criterion '" + c + "'");
        }
    } else if (!o.criterion.empty()) {
        throw UsageError("--criterion needs --transcript");
    }

    if (o.order.empty() && o.retraction.empty() && o.transcript.empty())
        throw UsageError("verify needs --order, --retraction or --transcript");
    return status;
}

int run_timing(const Options& o, std::ostream& out) {
    Graph g = load_graph(o);
    CopBundle b = make_cop(o, g);
    Round h = o.horizon > 0 ? o.horizon : 4 * static_cast<Round>(g.order());
    TimingProfile p = estimate_timing(g, *b.cop, h);
    write_timing(out, p);
    return 0;
}

int run_play(const Options& o, std::istream& in, std::ostream& out) {
    Graph g = load_graph(o);
    CopBundle b = make_cop(o, g);
    const Round horizon = horizon_for(o, g, b);
    auto ask = [&](Vertex from, Round round) -> std::optional<Vertex> {
        while (true) {
            out << "round " << round << ", your move";
            if (from != kNoVertex)
                out << " from " << g.name(from);
            out << ": " << std::flush;
            std::string token;
            if (!(in >> token))
                return std::nullopt;
            std::istringstream s(token);
            Vertex v;
            if (!(s >> v) || !g.contains(v) || (from != kNoVertex && !g.adjacent(from, v))) {
                out << "illegal move " << token << '\n';
                continue;
            }
            return v;
        }
    };

    Vertex c = b.cop->start();
    out << "round 0: cop starts at " << g.name(c) << '\n';
    auto r = ask(kNoVertex, 1);
    if (!r)
        return 0;
    if (*r == c) {
        out << "captured at round 1\n";
        return 0;
    }
    for (Round round = 2; round <= horizon; ++round) {
        if (round % 2 == 0) {
            Vertex next = b.cop->move(c, *r, round);
            if (!g.adjacent(c, next))
                throw StrategyError("cop strategy produced an illegal move");
            c = next;
            out << "round " << round << ": cop moves to " << g.name(c) << '\n';
        } else {
            r = ask(*r, round);
            if (!r)
                return 0;
        }
        if (c == *r) {
            out << "captured at round " << round << '\n';
            return 0;
        }
    }
    out << "horizon reached at round " << horizon << '\n';
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cops and robbers on reflexive graphs", "copwin"};
    app.require_subcommand(1);
    Options o;

    auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", o.graph, "Graph file")->required(); };
    auto order_opt = [&](CLI::App* s) {
        s->add_option("--order", o.order, "Order file");
        s->add_option("--flavor", o.flavor, "constructing or dismantling (default: from the file)");
    };
    auto strategy_opts = [&](CLI::App* s) {
        s->add_option("--cop", o.cop, "s_star|recursive|protective|dismantable|optimal");
        s->add_option("--robber", o.robber, "stationary|greedy|ray|h_evader|adversarial|script:<file>");
        s->add_option("--robber-start", o.robber_start, "Robber start vertex");
        s->add_option("--ray", o.ray_path, "Vertex sequence for the ray robber");
        s->add_option("--h-prefix", o.h_prefix, "Label prefix of the H copy for h_evader");
        s->add_option("--horizon", o.horizon, "Last round played");
        s->add_option("--seed", o.seed, "Random seed");
    };

    auto* gen = app.add_subcommand("generate", "Emit a named graph family");
    gen->add_option("--family", o.family,
                    "path|cycle|complete|star|petersen|h_block|ab_graph|ray|ray_ball|t5_of_h|"
                    "random_constructible|random_connected|tree")
        ->required();
    gen->add_option("--n", o.n, "Size parameter");
    gen->add_option("--radius", o.radius, "Ball radius");
    gen->add_option("--degree", o.degree, "Tree degree");
    gen->add_option("--p", o.p, "Extra edge probability");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--out", o.out, "Output prefix");
    gen->add_flag("--dot", o.dot, "Also emit DOT");

    auto* ord = app.add_subcommand("order", "Find a dominating or dismantling order");
    graph_opt(ord);
    ord->add_option("--flavor", o.flavor, "constructing (default) or dismantling");

    auto* solve = app.add_subcommand("solve", "Decide cop-win by retrograde analysis");
    graph_opt(solve);
    solve->add_flag("--table", o.table, "Dump the state table");

    auto* sim = app.add_subcommand("simulate", "Play one game");
    graph_opt(sim);
    order_opt(sim);
    strategy_opts(sim);
    sim->add_option("--format", o.format, "text or json");
    sim->add_option("--out", o.out, "Transcript file");

    auto* ver = app.add_subcommand("verify", "Check orders, retractions and transcripts");
    graph_opt(ver);
    order_opt(ver);
    ver->add_option("--exempt", o.exempt, "Cut vertices skipped by the dismantling check");
    ver->add_flag("--shifted", o.shifted, "Also check the shifted-edge property");
    ver->add_option("--retraction", o.retraction, "Vertex map file");
    ver->add_option("--transcript", o.transcript, "Transcript file (text or JSON)");
    ver->add_option("--criterion", o.criterion, "classic|weak|cweak");
    ver->add_option("--bound", o.bound, "default or a file of visit bounds");

    auto* tim = app.add_subcommand("timing", "Timing profile of a cop strategy");
    graph_opt(tim);
    order_opt(tim);
    tim->add_option("--cop", o.cop, "Cop strategy (default protective)");
    tim->add_option("--horizon", o.horizon, "Horizon (default 4n)");

    auto* ply = app.add_subcommand("play", "Play the robber interactively");
    graph_opt(ply);
    order_opt(ply);
    ply->add_option("--cop", o.cop, "Cop strategy");
    ply->add_option("--horizon", o.horizon, "Last round played");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (tim->parsed() && tim->count("--cop") == 0)
            o.cop = "protective";
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_generate(o, out);
        if (ord->parsed())
            return run_order(o, out);
        if (solve->parsed())
            return run_solve(o, out);
        if (sim->parsed())
            return run_simulate(o, out);
        if (ver->parsed())
            return run_verify(o, out);
        if (tim->parsed())
            return run_timing(o, out);
        if (ply->parsed())
            return run_play(o, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace copwin::cli
