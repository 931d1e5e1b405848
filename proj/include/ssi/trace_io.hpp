#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssi/solver.hpp"
#include "ssi/trace.hpp"

namespace ssi {

struct TraceHeader
{
    std::string game;
    std::string algorithm;
    std::string rule;
    std::optional<std::uint64_t> seed;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    friend bool operator==(const TraceHeader &, const TraceHeader &) = default;
};

struct TraceRow
{
    std::size_t iteration = 0;
    Player owner = Player::Even;
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    friend bool operator==(const TraceRow &, const TraceRow &) = default;
};

struct TraceFooter
{
    std::size_t iterations = 0;
    bool optimal = false;
    friend bool operator==(const TraceFooter &, const TraceFooter &) = default;
};

/// Flat, serialisable form of a solver run: one row per switched edge.
struct TraceFile
{
    TraceHeader header;
    std::vector<TraceRow> rows;
    TraceFooter footer;
    friend bool operator==(const TraceFile &, const TraceFile &) = default;

    /// Throws InputError if the footer count disagrees with the rows.
    void check() const
    {
        std::set<std::size_t> distinct;
        for (const auto &r : rows) distinct.insert(r.iteration);
        if (distinct.size() != footer.iterations) {
            throw InputError("trace footer claims " + std::to_string(footer.iterations) + " iterations, rows have " +
                             std::to_string(distinct.size()));
        }
    }
};

inline TraceFile make_trace_file(TraceHeader header, const IterationTrace &trace, bool optimal)
{
    TraceFile f{std::move(header), {}, {trace.switching_iterations(), optimal}};
    for (const auto &it : trace.iterations) {
        for (const auto &sw : it.switched) f.rows.push_back({it.index, sw.owner, sw.edge.from, sw.edge.to});
    }
    return f;
}

namespace detail {

inline std::string header_fields(const TraceHeader &h)
{
    std::ostringstream os;
    os << "game=" << h.game << " algorithm=" << h.algorithm << " rule=" << h.rule
       << " seed=" << (h.seed ? std::to_string(*h.seed) : std::string()) << " nodes=" << h.nodes
       << " edges=" << h.edges;
    return os.str();
}

inline std::vector<std::pair<std::string, std::string>> split_fields(std::string_view s)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw InputError("malformed trace field '" + tok + "'");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

inline std::size_t to_size(const std::string &s)
{
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used != s.size()) throw InputError("bad number '" + s + "'");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error &) {
        throw InputError("bad number '" + s + "'");
    }
}

} // namespace detail

/**
 * CSV with fixed columns iteration,owner,from,to. Header and footer
 * metadata travel in '#' comment lines before and after the table.
 */
inline std::string to_csv(const TraceFile &f)
{
    std::ostringstream os;
    os << "# " << detail::header_fields(f.header) << '\n';
    os << "iteration,owner,from,to\n";
    for (const auto &r : f.rows) os << r.iteration << ',' << index_of(r.owner) << ',' << r.from << ',' << r.to << '\n';
    os << "# iterations=" << f.footer.iterations << " optimal=" << (f.footer.optimal ? "true" : "false") << '\n';
    return os.str();
}

inline TraceFile trace_from_csv(std::string_view text)
{
    TraceFile f;
    std::istringstream is{std::string(text)};
    std::string line;
    int comments = 0;
    bool columns = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto fields = detail::split_fields(std::string_view(line).substr(1));
            if (comments++ == 0) {
                for (auto &[k, v] : fields) {
                    if (k == "game") f.header.game = v;
                    else if (k == "algorithm") f.header.algorithm = v;
                    else if (k == "rule") f.header.rule = v;
                    else if (k == "seed") f.header.seed = v.empty() ? std::nullopt : std::optional(detail::to_size(v));
                    else if (k == "nodes") f.header.nodes = detail::to_size(v);
                    else if (k == "edges") f.header.edges = detail::to_size(v);
                }
            } else {
                for (auto &[k, v] : fields) {
                    if (k == "iterations") f.footer.iterations = detail::to_size(v);
                    else if (k == "optimal") f.footer.optimal = v == "true";
                }
            }
            continue;
        }
        if (!columns) {
            if (line != "iteration,owner,from,to") throw InputError("unexpected trace columns '" + line + "'");
            columns = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 4) throw InputError("trace row needs 4 cells: '" + line + "'");
        const auto owner = detail::to_size(cells[1]);
        if (owner > 1) throw InputError("trace owner must be 0 or 1");
        f.rows.push_back({detail::to_size(cells[0]), owner ? Player::Odd : Player::Even,
                          static_cast<NodeId>(detail::to_size(cells[2])), static_cast<NodeId>(detail::to_size(cells[3]))});
    }
    return f;
}

inline nlohmann::json to_json(const TraceFile &f)
{
    nlohmann::json j;
    j["header"] = {{"game", f.header.game},     {"algorithm", f.header.algorithm}, {"rule", f.header.rule},
                   {"seed", nullptr},           {"nodes", f.header.nodes},         {"edges", f.header.edges}};
    if (f.header.seed) j["header"]["seed"] = *f.header.seed;
    j["rows"] = nlohmann::json::array();
    for (const auto &r : f.rows) {
        j["rows"].push_back({{"iteration", r.iteration}, {"owner", index_of(r.owner)}, {"from", r.from}, {"to", r.to}});
    }
    j["footer"] = {{"iterations", f.footer.iterations}, {"optimal", f.footer.optimal}};
    return j;
}

inline TraceFile trace_from_json(const nlohmann::json &j)
{
    try {
        TraceFile f;
        const auto &h = j.at("header");
        f.header.game = h.at("game").get<std::string>();
        f.header.algorithm = h.at("algorithm").get<std::string>();
        f.header.rule = h.at("rule").get<std::string>();
        if (!h.at("seed").is_null()) f.header.seed = h.at("seed").get<std::uint64_t>();
        f.header.nodes = h.at("nodes").get<std::size_t>();
        f.header.edges = h.at("edges").get<std::size_t>();
        for (const auto &r : j.at("rows")) {
            f.rows.push_back({r.at("iteration").get<std::size_t>(),
                              r.at("owner").get<int>() ? Player::Odd : Player::Even, r.at("from").get<NodeId>(),
                              r.at("to").get<NodeId>()});
        }
        f.footer.iterations = j.at("footer").at("iterations").get<std::size_t>();
        f.footer.optimal = j.at("footer").at("optimal").get<bool>();
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed trace JSON: ") + e.what());
    }
}

} // namespace ssi
