#pragma once

#include "copwin/engine.hpp"
#include "copwin/graph.hpp"
#include "copwin/order.hpp"
#include "copwin/timing.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace copwin {

/// Graph text format: the vertex count on the first line, then one `u v`
/// edge per line with u < v. Lines starting with `#` are comments; a comment
/// of the form `# label <v> <name>` names vertex v.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// `dot` output, using labels when present.
void write_dot(std::ostream& out, const Graph& g);

/// Order file: `order v0 v1 ...` then `delta v:d ...`. The flavour is
/// `flavor` when given, else a `# flavor <name>` comment, else the direction
/// of the first delta pair (constructing if none).
Order read_order(std::istream& in, std::optional<Flavor> flavor = std::nullopt);
void write_order(std::ostream& out, const Order& order);

Flavor parse_flavor(const std::string& s);

/// One move per line: `round player vertex`, plus `# outcome ...` comments.
void write_transcript_text(std::ostream& out, const Transcript& t);
/// Reads the move lines and recomputes positions, visit counts and outcome.
Transcript read_transcript_text(std::istream& in, const Graph& g);

void write_transcript_json(std::ostream& out, const Transcript& t);
Transcript read_transcript_json(std::istream& in);

/// Rebuilds positions, visits and outcome from a move list. Throws
/// DomainError when rounds or players do not alternate as the rules require.
Transcript rebuild_transcript(const std::vector<Move>& moves, const Graph& g);

void write_timing(std::ostream& out, const TimingProfile& p);

/// Whitespace-separated vertex ids (comments allowed), e.g. a robber script.
std::vector<Vertex> read_vertex_list(std::istream& in);

} // namespace copwin
