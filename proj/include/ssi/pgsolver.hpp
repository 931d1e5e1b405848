#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/strategy.hpp"

namespace ssi {

namespace detail {

class PgScanner
{
public:
    explicit PgScanner(std::string_view text, std::size_t first_line = 1) : text_(text), line_(first_line) {}

    struct Pos
    {
        std::size_t line = 1, column = 1;
    };

    void skip_space()
    {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
    }

    bool at_end()
    {
        skip_space();
        return i_ >= text_.size();
    }

    Pos pos() const { return {line_, col_}; }

    char peek()
    {
        skip_space();
        return i_ < text_.size() ? text_[i_] : '\0';
    }

    [[noreturn]] void fail(const std::string &msg, Pos p) const { throw ParseError(msg, p.line, p.column); }
    [[noreturn]] void fail(const std::string &msg) const { fail(msg, pos()); }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'" + found());
        }
        advance();
    }

    bool accept(char c)
    {
        if (peek() != c) return false;
        advance();
        return true;
    }

    bool accept_word(std::string_view w)
    {
        skip_space();
        if (text_.substr(i_, w.size()) != w) return false;
        const std::size_t end = i_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        for (std::size_t k = 0; k < w.size(); ++k) advance();
        return true;
    }

    template <class Int>
    Int integer(const char *what)
    {
        skip_space();
        const std::size_t start = i_;
        if (i_ < text_.size() && text_[i_] == '-') ++i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        Int value{};
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + i_, value);
        if (ec != std::errc() || ptr != text_.data() + i_ || i_ == start) {
            i_ = start;
            fail(std::string("expected ") + what + found());
        }
        col_ += i_ - start;
        return value;
    }

    std::string quoted()
    {
        expect('"');
        std::string out;
        for (;;) {
            if (i_ >= text_.size()) fail("unterminated label");
            char c = text_[i_];
            advance();
            if (c == '"') return out;
            if (c == '\\') {
                if (i_ >= text_.size()) fail("unterminated label");
                c = text_[i_];
                advance();
            }
            out += c;
        }
    }

private:
    std::string found()
    {
        if (i_ >= text_.size()) return ", found end of input";
        return std::string(", found '") + text_[i_] + "'";
    }

    void advance()
    {
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    std::size_t line_, col_ = 1;
};

} // namespace detail

/**
 * Parses the PGSolver text format:
 *
 *     parity <max-id>;
 *     <id> <priority> <owner> <succ>,<succ>,... ["<label>"];
 *
 * The header is optional; statements may span or share lines. Ids must
 * cover 0..max densely. The sink is set when some node has only a
 * self-loop and the strictly lowest priority.
 */
inline ParityGame parse_pgsolver(std::string_view text)
{
    detail::PgScanner sc(text);
    if (sc.at_end()) sc.fail("empty input, expected a parity game", {1, 1});

    std::optional<long long> declared_max;
    detail::PgScanner::Pos header_pos = sc.pos();
    if (sc.accept_word("parity")) {
        declared_max = sc.integer<long long>("maximum node id");
        if (*declared_max < 0) sc.fail("maximum node id must be nonnegative", header_pos);
        sc.expect(';');
    }

    struct Decl
    {
        NodeRecord rec;
        std::vector<std::pair<long long, detail::PgScanner::Pos>> succ;
        detail::PgScanner::Pos pos;
    };
    std::map<long long, Decl> decls;
    while (!sc.at_end()) {
        Decl d;
        d.pos = sc.pos();
        const long long id = sc.integer<long long>("node id");
        if (id < 0) sc.fail("node id must be nonnegative", d.pos);
        if (declared_max && id > *declared_max) {
            sc.fail("node id " + std::to_string(id) + " exceeds declared maximum " + std::to_string(*declared_max), d.pos);
        }
        d.rec.priority = sc.integer<Priority>("priority");
        const auto owner_pos = sc.pos();
        const int owner = sc.integer<int>("owner");
        if (owner != 0 && owner != 1) sc.fail("owner must be 0 or 1", owner_pos);
        d.rec.owner = owner == 0 ? Player::Even : Player::Odd;
        if (sc.peek() != ';' && sc.peek() != '"') {
            do {
                auto p = sc.pos();
                d.succ.emplace_back(sc.integer<long long>("successor id"), p);
            } while (sc.accept(','));
        }
        if (sc.peek() == '"') d.rec.label = sc.quoted();
        sc.expect(';');
        if (decls.contains(id)) sc.fail("duplicate node id " + std::to_string(id), d.pos);
        decls.emplace(id, std::move(d));
    }

    const long long max_id = declared_max ? *declared_max : decls.rbegin()->first;
    for (long long v = 0; v <= max_id; ++v) {
        if (!decls.contains(v)) sc.fail("node " + std::to_string(v) + " is not declared", header_pos);
    }
    std::vector<NodeRecord> nodes;
    std::vector<std::vector<NodeId>> succ;
    for (auto &[id, d] : decls) {
        if (d.succ.empty()) sc.fail("node " + std::to_string(id) + " has no successors", d.pos);
        std::vector<NodeId> out;
        for (auto [w, p] : d.succ) {
            if (w < 0 || w > max_id) sc.fail("successor " + std::to_string(w) + " of node " + std::to_string(id) +
                                                 " is not a declared node", p);
            out.push_back(static_cast<NodeId>(w));
        }
        d.rec.id = static_cast<NodeId>(id);
        nodes.push_back(std::move(d.rec));
        succ.push_back(std::move(out));
    }
    ParityGame g(std::move(nodes), std::move(succ));
    return with_sink(g, find_sink_candidate(g));
}

/// Canonical PGSolver text: ascending ids, successors in adjacency order.
inline std::string write_pgsolver(const ParityGame &g)
{
    std::ostringstream os;
    os << "parity " << (g.size() == 0 ? 0 : g.size() - 1) << ";\n";
    for (NodeId v = 0; v < g.size(); ++v) {
        os << v << ' ' << g.priority(v) << ' ' << index_of(g.owner(v)) << ' ';
        const auto succ = g.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) os << (i ? "," : "") << succ[i];
        if (const auto &label = g.label(v)) {
            os << " \"";
            for (char c : *label) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << '"';
        }
        os << ";\n";
    }
    return os.str();
}

/// Strategy file: one "<node-id> <successor-id>" pair per line, '#' comments allowed.
inline Strategy parse_strategy(std::string_view text, const ParityGame &g, Player p)
{
    std::map<NodeId, NodeId> choices;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        detail::PgScanner sc(line, line_no);
        if (sc.at_end()) continue;
        const auto node_pos = sc.pos();
        const auto v = sc.integer<long long>("node id");
        const auto w = sc.integer<long long>("successor id");
        if (!sc.at_end()) sc.fail("trailing characters");
        if (v < 0 || w < 0 || v >= static_cast<long long>(g.size()) || w >= static_cast<long long>(g.size())) {
            sc.fail("node id out of range", node_pos);
        }
        if (g.owner(static_cast<NodeId>(v)) != p) {
            sc.fail("node " + std::to_string(v) + " is not owned by this player", node_pos);
        }
        if (!choices.emplace(static_cast<NodeId>(v), static_cast<NodeId>(w)).second) {
            sc.fail("duplicate choice for node " + std::to_string(v), node_pos);
        }
    }
    return make_strategy(g, p, choices);
}

inline std::string write_strategy(const Strategy &s)
{
    std::ostringstream os;
    for (NodeId v = 0; v < s.size(); ++v) {
        if (s.defined_at(v)) os << v << ' ' << s[v] << '\n';
    }
    return os.str();
}

} // namespace ssi
