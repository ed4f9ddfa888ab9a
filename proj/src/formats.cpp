#include "finegeo/formats.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace finegeo {

namespace {

void write_comment(std::ostream& os, const std::string& comment)
{
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) {
        os << "# " << line << '\n';
    }
}

// Next non-blank, non-comment line; nullopt at end of input.
std::optional<std::string> next_line(std::istream& is)
{
    std::string line;
    while (std::getline(is, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return line;
    }
    return std::nullopt;
}

std::string require_line(std::istream& is, const char* what)
{
    auto line = next_line(is);
    if (!line) {
        throw InvalidInput(std::string("unexpected end of input while reading ") + what);
    }
    return *line;
}

std::vector<std::string> split(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::size_t parse_count(const std::string& tok)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidInput("expected a non-negative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(std::stoull(tok));
}

BitVector parse_bits(const std::string& line, std::size_t d)
{
    const auto toks = split(line);
    if (toks.size() != d) {
        throw InvalidInput("expected " + std::to_string(d) + " bits, got '" + line + "'");
    }
    BitVector v(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (toks[i] != "0" && toks[i] != "1") {
            throw InvalidInput("bits must be 0 or 1, got '" + toks[i] + "'");
        }
        v.set(i, toks[i] == "1");
    }
    return v;
}

Curve2 read_curve_after_count(std::istream& is, std::size_t count)
{
    if (count == 0) {
        throw InvalidInput("curve must have at least one vertex");
    }
    std::vector<Point2> pts;
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto toks = split(require_line(is, "curve vertex"));
        if (toks.size() != 2) {
            throw InvalidInput("curve vertex needs two coordinates");
        }
        pts.push_back({Rat::parse(toks[0]), Rat::parse(toks[1])});
    }
    return Curve2(std::move(pts));
}

template <typename T, typename Reader>
T load(const std::filesystem::path& path, Reader reader)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path.string() + "'");
    }
    return reader(in);
}

} // namespace

void write_instance(std::ostream& os, const OvInstance& inst, const std::string& comment)
{
    write_comment(os, comment);
    os << inst.a().size() << ' ' << inst.b().size() << ' ' << inst.dim() << '\n';
    for (const auto* side : {&inst.a(), &inst.b()}) {
        for (const auto& v : *side) {
            os << v.to_string() << '\n';
        }
    }
}

OvInstance read_instance(std::istream& is)
{
    const auto header = split(require_line(is, "instance header"));
    if (header.size() != 3) {
        throw InvalidInput("instance header must be 'n_A n_B d'");
    }
    const std::size_t n_a = parse_count(header[0]);
    const std::size_t n_b = parse_count(header[1]);
    const std::size_t d = parse_count(header[2]);
    if (d == 0) {
        throw InvalidInput("instance dimension must be at least 1");
    }
    std::vector<BitVector> a;
    std::vector<BitVector> b;
    for (std::size_t k = 0; k < n_a; ++k) {
        a.push_back(parse_bits(require_line(is, "A vector"), d));
    }
    for (std::size_t k = 0; k < n_b; ++k) {
        b.push_back(parse_bits(require_line(is, "B vector"), d));
    }
    return OvInstance(std::move(a), std::move(b));
}

void write_curve(std::ostream& os, const Curve2& curve)
{
    os << curve.size() << '\n';
    for (const auto& p : curve) {
        os << p.x << ' ' << p.y << '\n';
    }
}

Curve2 read_curve(std::istream& is)
{
    const auto toks = split(require_line(is, "curve length"));
    if (toks.size() != 1) {
        throw InvalidInput("curve must start with its vertex count");
    }
    return read_curve_after_count(is, parse_count(toks[0]));
}

void write_curves(std::ostream& os, const std::vector<Curve2>& curves, const std::string& comment)
{
    write_comment(os, comment);
    for (const auto& c : curves) {
        write_curve(os, c);
    }
}

std::vector<Curve2> read_curves(std::istream& is)
{
    std::vector<Curve2> out;
    while (auto line = next_line(is)) {
        const auto toks = split(*line);
        if (toks.size() != 1) {
            throw InvalidInput("curve must start with its vertex count");
        }
        out.push_back(read_curve_after_count(is, parse_count(toks[0])));
    }
    return out;
}

void write_points(std::ostream& os, const std::vector<PointD>& points, const std::string& comment)
{
    write_comment(os, comment);
    os << points.size() << ' ' << (points.empty() ? 0 : points.front().dim()) << '\n';
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            os << (i == 0 ? "" : " ") << p[i];
        }
        os << '\n';
    }
}

std::vector<PointD> read_points(std::istream& is)
{
    const auto header = split(require_line(is, "point set header"));
    if (header.size() != 2) {
        throw InvalidInput("point set header must be 'count d'");
    }
    const std::size_t count = parse_count(header[0]);
    const std::size_t d = parse_count(header[1]);
    std::vector<PointD> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto toks = split(require_line(is, "point"));
        if (toks.size() != d) {
            throw InvalidInput("point has the wrong number of coordinates");
        }
        std::vector<Rat> c;
        for (const auto& t : toks) {
            c.push_back(Rat::parse(t));
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

OvInstance load_instance(const std::filesystem::path& path)
{
    return load<OvInstance>(path, [](std::istream& in) { return read_instance(in); });
}

std::vector<Curve2> load_curves(const std::filesystem::path& path)
{
    return load<std::vector<Curve2>>(path, [](std::istream& in) { return read_curves(in); });
}

} // namespace finegeo
