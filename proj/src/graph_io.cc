/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/graph.hh>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

using namespace boxcol;

namespace
{
    auto strip_comment(string line) -> string
    {
        if (auto p = line.find('#') ; p != string::npos)
            line.erase(p);
        return line;
    }

    auto is_blank(const string & s) -> bool
    {
        return s.find_first_not_of(" \t\r\n") == string::npos;
    }

    constexpr int graph6_bias = 63;
}

auto boxcol::read_edge_list(std::istream & in) -> Graph
{
    string line;
    long long n = -1, m = -1;
    vector<Edge> edges;
    size_t line_number = 0;

    while (std::getline(in, line)) {
        ++line_number;
        line = strip_comment(line);
        if (is_blank(line))
            continue;

        std::istringstream fields{ line };
        long long a, b;
        if (! (fields >> a >> b))
            throw GraphError{ "line " + to_string(line_number) + ": expected two integers" };
        string rest;
        if (fields >> rest)
            throw GraphError{ "line " + to_string(line_number) + ": trailing text '" + rest + "'" };
        if (a < 0 || b < 0)
            throw GraphError{ "line " + to_string(line_number) + ": negative value" };

        if (n < 0) {
            n = a;
            m = b;
        }
        else
            edges.push_back({ size_t(a), size_t(b) });
    }

    if (n < 0)
        throw GraphError{ "edge list has no header line" };
    if (edges.size() != size_t(m))
        throw GraphError{ "header promises " + to_string(m) + " edges, found " + to_string(edges.size()) };

    return Graph{ size_t(n), edges };
}

auto boxcol::write_edge_list(std::ostream & out, const Graph & g) -> void
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto boxcol::parse_graph6(string_view line) -> Graph
{
    constexpr string_view header = ">>graph6<<";
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    while (! line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);

    size_t pos = 0;
    auto next = [&] () -> size_t {
        if (pos >= line.size())
            throw GraphError{ "graph6 string is truncated" };
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < graph6_bias || c > 126)
            throw GraphError{ "graph6 byte out of range" };
        return size_t(c - graph6_bias);
    };

    size_t n;
    if (line.empty())
        throw GraphError{ "empty graph6 string" };
    if (line[0] != '~')
        n = next();
    else if (line.size() > 1 && line[1] != '~') {
        ++pos;
        n = (next() << 12) | (next() << 6) | next();
    }
    else {
        pos += 2;
        n = 0;
        for (int i = 0 ; i < 6 ; ++i)
            n = (n << 6) | next();
    }

    vector<Edge> edges;
    size_t bits = 0;
    int k = 0;
    for (Vertex j = 1 ; j < n ; ++j)
        for (Vertex i = 0 ; i < j ; ++i) {
            if (k == 0) {
                bits = next();
                k = 6;
            }
            --k;
            if ((bits >> k) & 1)
                edges.push_back({ i, j });
        }

    if (pos != line.size())
        throw GraphError{ "graph6 string has trailing bytes" };

    return Graph{ n, edges };
}

auto boxcol::to_graph6(const Graph & g) -> string
{
    size_t n = g.vertex_count();
    string result;
    if (n <= 62)
        result.push_back(char(n + graph6_bias));
    else if (n <= 258047) {
        result.push_back('~');
        for (int shift : { 12, 6, 0 })
            result.push_back(char(((n >> shift) & 0x3f) + graph6_bias));
    }
    else {
        result += "~~";
        for (int shift : { 30, 24, 18, 12, 6, 0 })
            result.push_back(char(((n >> shift) & 0x3f) + graph6_bias));
    }

    int bits = 0, k = 0;
    for (Vertex j = 1 ; j < n ; ++j)
        for (Vertex i = 0 ; i < j ; ++i) {
            bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++k == 6) {
                result.push_back(char(bits + graph6_bias));
                bits = k = 0;
            }
        }
    if (k > 0)
        result.push_back(char((bits << (6 - k)) + graph6_bias));

    return result;
}

auto boxcol::read_graph6_stream(std::istream & in) -> vector<Graph>
{
    vector<Graph> result;
    string line;
    while (std::getline(in, line)) {
        if (is_blank(line))
            continue;
        result.push_back(parse_graph6(line));
    }
    return result;
}

auto boxcol::read_graph(std::istream & in, GraphFormat format) -> Graph
{
    switch (format) {
        case GraphFormat::edge_list:
            return read_edge_list(in);
        case GraphFormat::graph6: {
            auto graphs = read_graph6_stream(in);
            if (graphs.size() != 1)
                throw GraphError{ "expected exactly one graph6 line, got " + to_string(graphs.size()) };
            return graphs.front();
        }
    }
    throw GraphError{ "unknown graph format" };
}

auto boxcol::read_graph_file(const string & filename, GraphFormat format) -> Graph
{
    std::ifstream in{ filename };
    if (! in)
        throw GraphError{ "cannot open '" + filename + "'" };
    return read_graph(in, format);
}
