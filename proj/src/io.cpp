#include "ggl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ggl {

namespace {

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream is(path, mode);
    if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
    return is;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream os(path, mode);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    return os;
}

// Next whitespace-delimited PGM token, skipping '#' comment lines.
std::string pgm_token(std::istream& is) {
    std::string tok;
    int c;
    while ((c = is.get()) != EOF) {
        if (c == '#') {
            while ((c = is.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw std::runtime_error("PGM: unexpected end of header");
    return tok;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(what) + ": bad integer '" + s + "'");
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_pgm(std::ostream& os, const GridFunction& u, bool binary, int maxval) {
    if (maxval < 1 || maxval > 255)
        throw std::invalid_argument("write_pgm: maxval must lie in [1,255]");
    int n = u.side();
    os << (binary ? "P5" : "P2") << '\n' << n << ' ' << n << '\n' << maxval << '\n';
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double v = std::min(1.0, std::max(0.0, u.value(i, j)));
            int p = static_cast<int>(std::lround(v * maxval));
            if (binary)
                os.put(static_cast<char>(p));
            else
                os << p << (i + 1 == n ? '\n' : ' ');
        }
    }
}

void write_pgm(const std::string& path, const GridFunction& u, bool binary, int maxval) {
    auto os = open_out(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
    write_pgm(os, u, binary, maxval);
}

GridFunction read_pgm(std::istream& is) {
    std::string magic = pgm_token(is);
    if (magic != "P2" && magic != "P5")
        throw std::runtime_error("PGM: unsupported magic '" + magic + "'");
    int w = parse_int(pgm_token(is), "PGM width");
    int h = parse_int(pgm_token(is), "PGM height");
    int maxval = parse_int(pgm_token(is), "PGM maxval");
    if (w != h) throw std::runtime_error("PGM: only square grids are supported");
    if (w <= 0) throw std::runtime_error("PGM: bad dimensions");
    if (maxval < 1 || maxval > 65535) throw std::runtime_error("PGM: bad maxval");
    GridFunction u(w);
    if (magic == "P2") {
        for (int j = 0; j < h; ++j)
            for (int i = 0; i < w; ++i) {
                int p = parse_int(pgm_token(is), "PGM pixel");
                u.set(i, j, static_cast<double>(p) / maxval);
            }
    } else {
        // single whitespace byte separates the header from raster data
        int bytes = maxval > 255 ? 2 : 1;
        for (int j = 0; j < h; ++j)
            for (int i = 0; i < w; ++i) {
                int p = is.get();
                if (bytes == 2) p = (p << 8) | is.get();
                if (!is) throw std::runtime_error("PGM: truncated raster");
                u.set(i, j, static_cast<double>(p) / maxval);
            }
    }
    return u;
}

GridFunction read_pgm(const std::string& path) {
    auto is = open_in(path, std::ios::in | std::ios::binary);
    return read_pgm(is);
}

void write_grid_csv(std::ostream& os, const GridFunction& u) {
    int n = u.side();
    os << "grid N=" << n << '\n';
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            os << format_double(u.value(i, j)) << (i + 1 == n ? '\n' : ',');
}

void write_grid_csv(const std::string& path, const GridFunction& u) {
    auto os = open_out(path);
    write_grid_csv(os, u);
}

GridFunction read_grid_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("grid N=", 0) != 0)
        throw std::runtime_error("grid CSV: expected header 'grid N=<int>'");
    int n = parse_int(trim(header.substr(7)), "grid CSV N");
    GridFunction u(n);
    for (int j = 0; j < n; ++j) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("grid CSV: missing row");
        std::istringstream row(line);
        std::string cell;
        for (int i = 0; i < n; ++i) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("grid CSV: short row");
            u.set(i, j, std::stod(cell));
        }
    }
    return u;
}

GridFunction read_grid_csv(const std::string& path) {
    auto is = open_in(path);
    return read_grid_csv(is);
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
    os << "graph m=" << g.size() << '\n';
    for (const auto& [i, j, w] : g.edges())
        os << (i + 1) << ' ' << (j + 1) << ' ' << format_double(w) << '\n';
}

void write_graph(const std::string& path, const WeightedGraph& g) {
    auto os = open_out(path);
    write_graph(os, g);
}

WeightedGraph read_graph(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || trim(header).rfind("graph m=", 0) != 0)
        throw std::runtime_error("graph file: expected header 'graph m=<int>'");
    int m = parse_int(trim(trim(header).substr(8)), "graph m");
    WeightedGraph g(m);
    std::string line;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream row(line);
        int i = 0, j = 0;
        double w = 0.0;
        if (!(row >> i >> j >> w))
            throw std::runtime_error("graph file: bad edge line " + std::to_string(lineno));
        if (i < 1 || i > m || j < 1 || j > m)
            throw std::runtime_error("graph file: vertex index out of range on line " +
                                     std::to_string(lineno));
        if (j <= i)
            throw std::runtime_error(
                "graph file: edges must be listed once as 'i j w' with i < j (line " +
                std::to_string(lineno) + ")");
        if (!(w > 0.0))
            throw std::runtime_error("graph file: weight must be positive on line " +
                                     std::to_string(lineno));
        try {
            g.add_edge(i - 1, j - 1, w);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("graph file: " + std::string(e.what()) + " on line " +
                                     std::to_string(lineno));
        }
    }
    return g;
}

WeightedGraph read_graph(const std::string& path) {
    auto is = open_in(path);
    return read_graph(is);
}

void write_vertex_csv(std::ostream& os, const VertexFunction& u) {
    for (double x : u) os << format_double(x) << '\n';
}

VertexFunction read_vertex_csv(std::istream& is, int expected_m) {
    VertexFunction u;
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty()) continue;
        u.push_back(std::stod(line));
    }
    if (expected_m >= 0 && static_cast<int>(u.size()) != expected_m)
        throw std::runtime_error("vertex CSV: expected " + std::to_string(expected_m) +
                                 " values, got " + std::to_string(u.size()));
    return u;
}

VertexFunction read_vertex_csv(const std::string& path, int expected_m) {
    auto is = open_in(path);
    return read_vertex_csv(is, expected_m);
}

std::map<std::string, std::string> read_config(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not of the form 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config: empty key on line " +
                                                  std::to_string(lineno));
        if (!kv.emplace(key, value).second)
            throw std::runtime_error("config: duplicate key '" + key + "'");
    }
    return kv;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    auto is = open_in(path);
    return read_config(is);
}

}  // namespace ggl
