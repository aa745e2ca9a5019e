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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace copwin;

namespace {

py::dict check_to_dict(const CheckResult& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["rank"] = r.rank;
    d["vertex"] = r.vertex;
    d["message"] = r.message;
    return d;
}

py::dict family_to_dict(Family f) {
    py::dict d;
    d["graph"] = std::move(f.graph);
    d["order"] = f.order ? py::cast(std::move(*f.order)) : py::none();
    d["exempt"] = f.exempt;
    d["retraction"] = f.retraction;
    d["retract_target"] = f.retract_target;
    return d;
}

std::unique_ptr<RobberPolicy> robber_from_name(const std::string& kind, const Graph& g,
                                               std::optional<Vertex> start) {
    if (kind == "stationary")
        return std::make_unique<StationaryRobber>(start);
    if (kind == "greedy")
        return std::make_unique<DistanceGreedyRobber>();
    if (kind == "adversarial")
        return std::make_unique<AdversarialRobber>(std::make_shared<GameStateTable>(g));
    if (kind == "h_evader")
        return std::make_unique<HCycleEvader>(HLayout::from_labels(g));
    throw DomainError("unknown robber policy '" + kind + "'");
}

Transcript simulate(const Graph& g, const std::optional<Order>& order, const std::string& cop_kind,
                    const std::string& robber_kind, Round horizon, std::optional<Vertex> robber_start) {
    std::shared_ptr<const RetractionFamily> fam;
    std::unique_ptr<CopStrategy> cop;
    if (cop_kind == "optimal") {
        cop = std::make_unique<OptimalCop>(std::make_shared<GameStateTable>(g));
    } else {
        if (!order)
            throw DomainError("cop strategy '" + cop_kind + "' needs an order");
        Order o = cop_kind == "protective" ? naturalize_order(g, *order).order : *order;
        fam = std::make_shared<RetractionFamily>(o);
        if (cop_kind == "s_star")
            cop = std::make_unique<SStarCop>(g, fam);
        else if (cop_kind == "recursive")
            cop = std::make_unique<RecursiveSCop>(g, fam);
        else if (cop_kind == "protective")
            cop = std::make_unique<ProtectiveCop>(fam);
        else if (cop_kind == "dismantable")
            cop = std::make_unique<DismantableCop>(g, fam);
        else
            throw DomainError("unknown cop strategy '" + cop_kind + "'");
    }
    auto robber = robber_from_name(robber_kind, g, robber_kind == "stationary" ? robber_start : std::nullopt);
    PlayOptions po;
    po.max_rounds = horizon;
    if (robber_start)
        po.robber_start = robber_start;
    return play(g, *cop, *robber, po);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cops and robbers on finite reflexive graphs";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<StrategyError>(m, "StrategyError", PyExc_RuntimeError);
    py::register_exception<TheoremContradiction>(m, "TheoremContradiction", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
                 return Graph(n, edges, std::move(labels));
             }),
             py::arg("order"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("order", &Graph::order)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("name", &Graph::name)
        .def("find", &Graph::find)
        .def("connected", &Graph::connected)
        .def("distances_from", &Graph::distances_from)
        .def("__len__", &Graph::order)
        .def("to_text", [](const Graph& g) {
            std::ostringstream s;
            write_graph(s, g);
            return s.str();
        })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream s(text);
            return read_graph(s);
        });

    py::enum_<Flavor>(m, "Flavor")
        .value("constructing", Flavor::constructing)
        .value("dismantling", Flavor::dismantling);

    py::class_<Order>(m, "Order")
        .def(py::init<Flavor, std::vector<Vertex>, std::vector<Vertex>>(), py::arg("flavor"), py::arg("sequence"),
             py::arg("delta"))
        .def_property_readonly("flavor", &Order::flavor)
        .def_property_readonly("sequence",
                               [](const Order& o) { return std::vector<Vertex>(o.sequence().begin(), o.sequence().end()); })
        .def_property_readonly("delta",
                               [](const Order& o) { return std::vector<Vertex>(o.delta_map().begin(), o.delta_map().end()); })
        .def("rank", &Order::rank)
        .def("terminal", &Order::terminal)
        .def("__len__", &Order::size)
        .def("to_text", [](const Order& o) {
            std::ostringstream s;
            write_order(s, o);
            return s.str();
        });

    m.def("dominates", &dominates);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<Vertex>& s) {
        Subgraph sub = induced_subgraph(g, s);
        return py::make_tuple(std::move(sub.graph), std::move(sub.to_parent));
    });
    m.def("find_dominating_order", &find_dominating_order);
    m.def("find_dismantling_order", &find_dismantling_order);
    m.def("verify_order", [](const Graph& g, const Order& o, const std::vector<Vertex>& exempt) {
        return check_to_dict(o.flavor() == Flavor::constructing ? verify_dominating_order(g, o)
                                                                 : verify_dismantling_order(g, o, exempt));
    }, py::arg("graph"), py::arg("order"), py::arg("exempt") = std::vector<Vertex>{});
    m.def("naturalize_order", [](const Graph& g, const Order& o) {
        NaturalizedOrder n = naturalize_order(g, o);
        return py::make_tuple(std::move(n.order), std::move(n.level));
    });
    m.def("depth_table", [](const Order& o) { return depth_table(o).depth; });

    py::class_<RetractionFamily, std::shared_ptr<RetractionFamily>>(m, "RetractionFamily")
        .def(py::init<Order>())
        .def("rho", &RetractionFamily::rho)
        .def("map", &RetractionFamily::map)
        .def("total_at", &RetractionFamily::total_at)
        .def_property_readonly("min_rank", &RetractionFamily::min_rank)
        .def_property_readonly("max_rank", &RetractionFamily::max_rank);
    m.def("check_retraction", [](const Graph& g, const std::vector<Vertex>& f, const std::vector<Vertex>& target) {
        return check_to_dict(check_retraction(g, f, target));
    });
    m.def("check_shifted_edge_property", [](const RetractionFamily& f, const Graph& g) {
        return check_to_dict(check_shifted_edge_property(f, g));
    });

    m.def("decide_cop_win", &decide_cop_win);

    py::enum_<Outcome>(m, "Outcome")
        .value("capture", Outcome::capture)
        .value("horizon", Outcome::horizon)
        .value("fault", Outcome::fault);

    py::class_<Transcript>(m, "Transcript")
        .def_readonly("outcome", &Transcript::outcome)
        .def_readonly("last_round", &Transcript::last_round)
        .def_readonly("fault", &Transcript::fault)
        .def_readonly("cop", &Transcript::cop)
        .def_readonly("robber", &Transcript::robber)
        .def_readonly("visit_counts", &Transcript::visit_counts)
        .def_readonly("invariant_violations", &Transcript::invariant_violations)
        .def_property_readonly("stages", [](const Transcript& t) {
            std::vector<Rank> s;
            for (const auto& mark : t.stages)
                s.push_back(mark.stage);
            return s;
        })
        .def_property_readonly("captured", &Transcript::captured)
        .def("to_json", [](const Transcript& t) {
            std::ostringstream s;
            write_transcript_json(s, t);
            return s.str();
        });

    m.def("simulate", &simulate, py::arg("graph"), py::arg("order") = std::nullopt, py::arg("cop") = "s_star",
          py::arg("robber") = "greedy", py::arg("horizon") = 0, py::arg("robber_start") = std::nullopt);
    m.def("evaluate_classic", &evaluate_classic);
    m.def("evaluate_weak", [](const Transcript& t, const std::vector<int>& bound) {
        WeakVerdict w = evaluate_weak(t, bound);
        return py::make_tuple(w.ok, w.offender);
    });
    m.def("evaluate_cweak", [](const Transcript& t) { return evaluate_cweak(t).ok; });

    m.def("adversarial_search",
          [](const Graph& g, Round horizon, const std::vector<Vertex>& forbidden, int revisit_window,
             const std::vector<Vertex>& cop_allowed) {
              SearchOptions so;
              so.horizon = horizon;
              so.cop_allowed = cop_allowed;
              return std::string(to_string(adversarial_search(g, Objective{forbidden, revisit_window}, so).verdict));
          },
          py::arg("graph"), py::arg("horizon"), py::arg("forbidden") = std::vector<Vertex>{},
          py::arg("revisit_window") = 0, py::arg("cop_allowed") = std::vector<Vertex>{});

    m.def("estimate_timing", [](const Graph& g, const Order& o, Round horizon) {
        auto fam = std::make_shared<RetractionFamily>(o);
        ProtectiveCop cop(fam);
        TimingProfile p = estimate_timing(g, cop, horizon);
        py::dict d;
        d["t_r_lower"] = p.t_r_lower;
        d["t_c"] = p.t_c;
        d["t_c_max"] = p.t_c_max;
        d["total"] = p.total();
        d["order"] = p.total() ? py::cast(order_from_protective(g, p)) : py::none();
        return d;
    });

    m.def("path_graph", [](int n) { return family_to_dict(path_graph(n)); });
    m.def("cycle_graph", [](int n) { return family_to_dict(cycle_graph(n)); });
    m.def("complete_graph", [](int n) { return family_to_dict(complete_graph(n)); });
    m.def("star_graph", [](int n) { return family_to_dict(star_graph(n)); });
    m.def("petersen_graph", &petersen_graph);
    m.def("h_block", [] { return family_to_dict(h_block()); });
    m.def("ab_graph", [](int n) { return family_to_dict(ab_graph(n)); });
    m.def("ray_dismantling", [](int r) { return family_to_dict(ray_dismantling(r)); });
    m.def("random_constructible", [](int n, std::uint64_t seed) { return family_to_dict(random_constructible(n, seed)); });
    m.def("random_connected", &random_connected);
    m.def("t5_of_h_ball", [](int radius) {
        Ball b = ball(t5_of_h(), radius);
        return py::make_tuple(std::move(b.graph), b.hint ? py::cast(std::move(*b.hint)) : py::none(), b.keys);
    });
}
