#include "copwin/io.hpp"

#include "copwin/errors.hpp"

#include "json.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace copwin {

namespace {

using nlohmann::json;

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

bool is_comment(const std::string& line) {
    auto p = line.find_first_not_of(" \t");
    return p != std::string::npos && line[p] == '#';
}

template <class T>
T parse_number(const std::string& token, const char* what) {
    std::istringstream s(token);
    T value{};
    if (!(s >> value) || !s.eof())
        throw DomainError(std::string("expected ") + what + ", got '" + token + "'");
    return value;
}

Player parse_player(const std::string& s) {
    if (s == "cop")
        return Player::cop;
    if (s == "robber")
        return Player::robber;
    throw DomainError("unknown player '" + s + "'");
}

Outcome parse_outcome(const std::string& s) {
    for (Outcome o : {Outcome::capture, Outcome::horizon, Outcome::fault})
        if (s == to_string(o))
            return o;
    throw DomainError("unknown outcome '" + s + "'");
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<std::pair<Vertex, std::string>> named;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line))
            continue;
        std::istringstream s(line);
        if (is_comment(line)) {
            std::string hash, word, name;
            Vertex v;
            if (s >> hash >> word && word == "label" && s >> v >> name)
                named.emplace_back(v, name);
            continue;
        }
        std::vector<std::string> tokens;
        for (std::string tok; s >> tok;)
            tokens.push_back(tok);
        if (!n) {
            if (tokens.size() != 1)
                throw DomainError("line " + std::to_string(lineno) + ": expected the vertex count");
            long long count = parse_number<long long>(tokens[0], "vertex count");
            if (count < 1)
                throw DomainError("graph must have at least one vertex");
            n = static_cast<std::size_t>(count);
            continue;
        }
        if (tokens.size() != 2)
            throw DomainError("line " + std::to_string(lineno) + ": expected an edge 'u v'");
        Vertex u = parse_number<Vertex>(tokens[0], "vertex id");
        Vertex v = parse_number<Vertex>(tokens[1], "vertex id");
        if (u < 0 || u >= v || static_cast<std::size_t>(v) >= *n)
            throw DomainError("line " + std::to_string(lineno) + ": edge must satisfy 0 <= u < v < n");
        edges.emplace_back(u, v);
    }
    if (!n)
        throw DomainError("empty graph file");
    std::vector<std::string> labels;
    if (!named.empty()) {
        labels.resize(*n);
        for (std::size_t v = 0; v < *n; ++v)
            labels[v] = std::to_string(v);
        for (auto& [v, name] : named) {
            if (v < 0 || static_cast<std::size_t>(v) >= *n)
                throw DomainError("label for unknown vertex " + std::to_string(v));
            labels[static_cast<std::size_t>(v)] = name;
        }
    }
    return Graph(*n, edges, std::move(labels));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    if (g.has_labels())
        for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
            out << "# label " << v << ' ' << g.name(v) << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        out << "  " << v << " [label=\"" << g.name(v) << "\"];\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "constructing")
        return Flavor::constructing;
    if (s == "dismantling")
        return Flavor::dismantling;
    throw DomainError("unknown order flavour '" + s + "'");
}

Order read_order(std::istream& in, std::optional<Flavor> flavor) {
    std::string line;
    std::vector<Vertex> sequence;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    bool have_order = false;
    std::optional<Flavor> declared;
    while (std::getline(in, line)) {
        if (is_blank(line))
            continue;
        std::istringstream s(line);
        std::string head;
        s >> head;
        if (is_comment(line)) {
            std::string word, value;
            if (head == "#" && s >> word >> value && word == "flavor")
                declared = parse_flavor(value);
            continue;
        }
        if (head == "order") {
            have_order = true;
            for (std::string tok; s >> tok;)
                sequence.push_back(parse_number<Vertex>(tok, "vertex id"));
        } else if (head == "delta") {
            for (std::string tok; s >> tok;) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw DomainError("delta entry '" + tok + "' is not of the form v:d");
                pairs.emplace_back(parse_number<Vertex>(tok.substr(0, colon), "vertex id"),
                                   parse_number<Vertex>(tok.substr(colon + 1), "vertex id"));
            }
        } else {
            throw DomainError("unexpected line in order file: " + line);
        }
    }
    if (!have_order || sequence.empty())
        throw DomainError("order file has no 'order' line");
    const std::size_t n = sequence.size();
    std::vector<Vertex> delta(n, kNoVertex);
    std::vector<Rank> rank(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = sequence[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || rank[static_cast<std::size_t>(v)] >= 0)
            throw DomainError("order is not a permutation of 0.." + std::to_string(n - 1));
        rank[static_cast<std::size_t>(v)] = static_cast<Rank>(i);
    }
    for (auto [v, d] : pairs) {
        if (v < 0 || d < 0 || static_cast<std::size_t>(v) >= n || static_cast<std::size_t>(d) >= n)
            throw DomainError("delta entry out of range: " + std::to_string(v) + ":" + std::to_string(d));
        delta[static_cast<std::size_t>(v)] = d;
    }
    Flavor f = Flavor::constructing;
    if (flavor)
        f = *flavor;
    else if (declared)
        f = *declared;
    else if (!pairs.empty())
        f = rank[static_cast<std::size_t>(pairs.front().second)] < rank[static_cast<std::size_t>(pairs.front().first)]
                ? Flavor::constructing
                : Flavor::dismantling;
    return Order(f, std::move(sequence), std::move(delta));
}

void write_order(std::ostream& out, const Order& order) {
    out << "# flavor " << to_string(order.flavor()) << '\n';
    out << "order";
    for (Vertex v : order.sequence())
        out << ' ' << v;
    out << "\ndelta";
    for (Vertex v : order.sequence())
        if (order.has_delta(v))
            out << ' ' << v << ':' << order.delta(v);
    out << '\n';
}

void write_transcript_text(std::ostream& out, const Transcript& t) {
    for (const Move& m : t.moves)
        out << m.round << ' ' << to_string(m.player) << ' ' << m.vertex << '\n';
    out << "# outcome " << to_string(t.outcome) << ' ' << t.last_round << '\n';
    if (!t.fault.empty())
        out << "# fault " << t.fault << '\n';
}

Transcript rebuild_transcript(const std::vector<Move>& moves, const Graph& g) {
    Transcript t;
    t.moves = moves;
    t.visit_counts.assign(g.order(), 0);
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const Move& m = moves[i];
        if (m.round != static_cast<Round>(i))
            throw DomainError("move " + std::to_string(i) + " has round " + std::to_string(m.round));
        Player expected = i % 2 == 0 ? Player::cop : Player::robber;
        if (m.player != expected)
            throw DomainError("round " + std::to_string(i) + " belongs to the " + to_string(expected));
        g.require(m.vertex);
        Vertex c = m.player == Player::cop ? m.vertex : t.cop.back();
        Vertex r = m.player == Player::robber ? m.vertex : (t.robber.empty() ? kNoVertex : t.robber.back());
        Vertex from = m.player == Player::cop ? (t.cop.empty() ? kNoVertex : t.cop.back())
                                              : (t.robber.empty() ? kNoVertex : t.robber.back());
        if (from != kNoVertex && !g.adjacent(from, m.vertex))
            throw DomainError("round " + std::to_string(i) + ": illegal move " + std::to_string(from) + " -> " +
                              std::to_string(m.vertex));
        if (m.player == Player::robber && m.vertex != from)
            ++t.visit_counts[static_cast<std::size_t>(m.vertex)];
        t.cop.push_back(c);
        t.robber.push_back(r);
        if (c == r) {
            if (i + 1 != moves.size())
                throw DomainError("moves continue after the capture at round " + std::to_string(i));
            t.outcome = Outcome::capture;
        }
    }
    t.last_round = moves.empty() ? -1 : moves.back().round;
    return t;
}

Transcript read_transcript_text(std::istream& in, const Graph& g) {
    std::vector<Move> moves;
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank(line) || is_comment(line))
            continue;
        std::istringstream s(line);
        std::string round, player, vertex, extra;
        if (!(s >> round >> player >> vertex) || (s >> extra))
            throw DomainError("expected 'round player vertex', got: " + line);
        moves.push_back(Move{parse_number<Round>(round, "round"), parse_player(player),
                             parse_number<Vertex>(vertex, "vertex id")});
    }
    return rebuild_transcript(moves, g);
}

void write_transcript_json(std::ostream& out, const Transcript& t) {
    json j;
    j["outcome"] = to_string(t.outcome);
    j["last_round"] = t.last_round;
    if (!t.fault.empty())
        j["fault"] = t.fault;
    json moves = json::array();
    for (const Move& m : t.moves)
        moves.push_back({m.round, to_string(m.player), m.vertex});
    j["moves"] = std::move(moves);
    j["visit_counts"] = t.visit_counts;
    json stages = json::array();
    for (const StageMark& s : t.stages)
        stages.push_back({{"round", s.round}, {"robber", s.robber}, {"k", s.k}, {"stage", s.stage}});
    j["stage_annotations"] = std::move(stages);
    j["invariant_violations"] = t.invariant_violations;
    out << j.dump(1) << '\n';
}

Transcript read_transcript_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed transcript JSON: ") + e.what());
    }
    try {
        Transcript t;
        t.outcome = parse_outcome(j.at("outcome").get<std::string>());
        t.last_round = j.at("last_round").get<Round>();
        t.fault = j.value("fault", std::string{});
        for (const auto& m : j.at("moves")) {
            Move mv{m.at(0).get<Round>(), parse_player(m.at(1).get<std::string>()), m.at(2).get<Vertex>()};
            Vertex c = mv.player == Player::cop ? mv.vertex : (t.cop.empty() ? kNoVertex : t.cop.back());
            Vertex r = mv.player == Player::robber ? mv.vertex : (t.robber.empty() ? kNoVertex : t.robber.back());
            t.moves.push_back(mv);
            t.cop.push_back(c);
            t.robber.push_back(r);
        }
        t.visit_counts = j.at("visit_counts").get<std::vector<int>>();
        for (const auto& s : j.value("stage_annotations", json::array()))
            t.stages.push_back(StageMark{s.at("round").get<Round>(), s.at("robber").get<Vertex>(),
                                         s.at("k").get<int>(), s.at("stage").get<Rank>()});
        t.invariant_violations = j.value("invariant_violations", std::vector<std::string>{});
        return t;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed transcript JSON: ") + e.what());
    }
}

void write_timing(std::ostream& out, const TimingProfile& p) {
    out << "# horizon " << p.horizon << '\n';
    out << "# vertex t_r_lower t_r_open t_c t_c_max\n";
    for (std::size_t v = 0; v < p.t_c.size(); ++v)
        out << v << ' ' << p.t_r_lower[v] << ' ' << static_cast<int>(p.t_r_open[v]) << ' ' << p.t_c[v] << ' '
            << p.t_c_max[v] << '\n';
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
    std::vector<Vertex> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream s(line.substr(0, line.find('#')));
        for (std::string tok; s >> tok;)
            out.push_back(parse_number<Vertex>(tok, "vertex id"));
    }
    return out;
}

} // namespace copwin
