#include "rrg/codec.hpp"

#include <algorithm>

#include <json.hpp>

namespace rrg {

namespace {

constexpr const char* kG6Header = ">>graph6<<";
constexpr const char* kD6Header = ">>digraph6<<";

void append_number(std::string& out, long long n) {
    if (n < 0) throw std::invalid_argument("g6: negative order");
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("g6: order too large");
    }
}

/// Reads the order and returns the index of the first payload byte.
long long read_number(const std::string& s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError(ParseError::Kind::BadHeader, "length header truncated");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError(ParseError::Kind::BadByte, "byte out of range in length header");
        return c - 63;
    };
    if (pos >= s.size()) throw ParseError(ParseError::Kind::BadHeader, "empty input");
    if (byte(pos) != 63) return byte(pos++);
    ++pos;
    if (pos < s.size() && byte(pos) == 63)
        throw ParseError(ParseError::Kind::BadHeader, "orders above 258047 not supported");
    long long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte(pos++);
    return n;
}

struct BitWriter {
    std::string& out;
    int filled = 0;
    int current = 0;

    void push(bool b) {
        current = (current << 1) | int(b);
        if (++filled == 6) {
            out.push_back(char(current + 63));
            filled = 0;
            current = 0;
        }
    }

    void flush() {
        if (filled > 0) {
            current <<= (6 - filled);
            out.push_back(char(current + 63));
            filled = 0;
            current = 0;
        }
    }
};

struct BitReader {
    const std::string& s;
    std::size_t pos;
    int left = 0;
    int current = 0;

    bool pull() {
        if (left == 0) {
            if (pos >= s.size()) throw ParseError(ParseError::Kind::BadLength, "payload truncated");
            int c = static_cast<unsigned char>(s[pos++]);
            if (c < 63 || c > 126) throw ParseError(ParseError::Kind::BadByte, "byte out of range in payload");
            current = c - 63;
            left = 6;
        }
        --left;
        return (current >> left) & 1;
    }

    void finish() const {
        if (pos != s.size())
            throw ParseError(ParseError::Kind::TrailingGarbage, "trailing bytes after payload");
    }
};

std::string strip_header(const std::string& text, const char* header) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(header, 0) == 0) s = s.substr(std::string(header).size());
    return s;
}

} // namespace

std::string emit_g6(const Graph& g) {
    std::string out;
    append_number(out, g.n());
    BitWriter w{out};
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) w.push(g.adjacent(u, v));
    w.flush();
    return out;
}

Graph parse_g6(const std::string& text) {
    std::string s = strip_header(text, kG6Header);
    std::size_t pos = 0;
    long long n = read_number(s, pos);
    if (n > 100000) throw ParseError(ParseError::Kind::BadHeader, "graph too large");
    BitReader r{s, pos};
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (r.pull()) edges.emplace_back(u, v);
    // drain the padding of the last byte
    while (r.left > 0) r.pull();
    r.finish();
    return Graph(int(n), edges);
}

std::string emit_d6(const Digraph& d) {
    std::string out = "&";
    append_number(out, d.n());
    BitWriter w{out};
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v) w.push(d.has_arc(u, v));
    w.flush();
    return out;
}

Digraph parse_d6(const std::string& text) {
    std::string s = strip_header(text, kD6Header);
    if (s.empty() || s[0] != '&')
        throw ParseError(ParseError::Kind::BadHeader, "digraph6 must start with '&'");
    std::size_t pos = 1;
    long long n = read_number(s, pos);
    if (n > 100000) throw ParseError(ParseError::Kind::BadHeader, "digraph too large");
    BitReader r{s, pos};
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (r.pull()) arcs.emplace_back(u, v);
    while (r.left > 0) r.pull();
    r.finish();
    return Digraph(int(n), arcs, /*allow_loops=*/true);
}

std::string emit_system(const RelSystem& s) {
    nlohmann::json j;
    j["n"] = s.n();
    j["colours"] = s.colours();
    nlohmann::json arcs = nlohmann::json::object();
    for (int c = 0; c < s.colour_count(); ++c) {
        nlohmann::json list = nlohmann::json::array();
        for (auto [u, v] : s.arcs(c)) list.push_back({u, v});
        arcs[s.colours()[c]] = std::move(list);
    }
    j["arcs"] = std::move(arcs);
    return j.dump();
}

RelSystem parse_system(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::BadJson, e.what());
    }
    try {
        int n = j.at("n").get<int>();
        auto colours = j.at("colours").get<std::vector<std::string>>();
        std::map<std::string, std::vector<Arc>> arcs;
        for (const auto& [colour, list] : j.at("arcs").items()) {
            std::vector<Arc>& got = arcs[colour];
            for (const auto& pair : list) {
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError(ParseError::Kind::BadJson, "arc must be a [u,v] pair");
                got.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
        }
        return RelSystem(n, std::move(colours), arcs);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::BadJson, e.what());
    }
}

} // namespace rrg
