#include "zoo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace vkdim::tools {

namespace {

std::vector<std::string> numbered(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

SimplicialComplex points(std::size_t n) { return SimplicialComplex(numbered(n), {}); }

SimplicialComplex simplex(int k)
{
    if (k < 0) throw ZooError("simplex(k) needs k >= 0");
    std::vector<VertexRank> all(static_cast<std::size_t>(k + 1));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexRank>(i);
    return SimplicialComplex(numbered(all.size()), {Simplex::from_sorted(all)});
}

SimplicialComplex path(std::size_t n)
{
    if (n == 0) throw ZooError("path(n) needs n >= 1");
    std::vector<Simplex> edges;
    for (VertexRank i = 0; i + 1 < n; ++i) edges.push_back(Simplex{i, i + 1});
    return SimplicialComplex(numbered(n), edges);
}

SimplicialComplex cycle(std::size_t n)
{
    if (n < 3) throw ZooError("cycle(n) needs n >= 3");
    std::vector<Simplex> edges;
    for (VertexRank i = 0; i < n; ++i) edges.push_back(Simplex({i, static_cast<VertexRank>((i + 1) % n)}));
    return SimplicialComplex(numbered(n), edges);
}

SimplicialComplex star_graph(std::size_t leaves)
{
    std::vector<Simplex> edges;
    for (VertexRank i = 1; i <= leaves; ++i) edges.push_back(Simplex{0, i});
    return SimplicialComplex(numbered(leaves + 1), edges);
}

SimplicialComplex tree(std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw ZooError("tree(n, seed) needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Simplex> edges;
    for (VertexRank i = 1; i < n; ++i) {
        edges.push_back(Simplex{static_cast<VertexRank>(uniform_below(rng, i)), i});
    }
    return SimplicialComplex(numbered(n), edges);
}

SimplicialComplex random_flag(std::size_t n, double p, std::uint64_t seed)
{
    if (n == 0) throw ZooError("random_flag(n, p, seed) needs n >= 1");
    if (p < 0 || p > 1) throw ZooError("random_flag probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    Graph g{numbered(n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
        }
    }
    return flag_completion(g);
}

SimplicialComplex join_all(const std::vector<SimplicialComplex>& factors)
{
    if (factors.empty()) throw ZooError("join needs at least one factor");
    SimplicialComplex out = prefix_labels(factors[0], "1:");
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = join(out, prefix_labels(factors[i], std::to_string(i + 1) + ":"));
    }
    return out;
}

struct Arg {
    std::optional<SimplicialComplex> complex;
    std::string text;
};

class Parser {
public:
    Parser(const std::string& s, std::uint64_t seed) : s_(s), seed_(seed) {}

    SimplicialComplex parse()
    {
        SimplicialComplex k = expression();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return k;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ZooError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string token()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '.' || s_[pos_] == '-')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a name or number");
        return s_.substr(start, pos_ - start);
    }

    Arg argument()
    {
        skip();
        const std::size_t start = pos_;
        std::string t = token();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            pos_ = start;
            return {expression(), t};
        }
        if (std::isalpha(static_cast<unsigned char>(t[0]))) return {build(t, {}), t};
        return {std::nullopt, t};
    }

    SimplicialComplex expression()
    {
        const std::string name = token();
        std::vector<Arg> args;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
            } else {
                while (true) {
                    args.push_back(argument());
                    skip();
                    if (pos_ < s_.size() && s_[pos_] == ',') {
                        ++pos_;
                        continue;
                    }
                    if (pos_ < s_.size() && s_[pos_] == ')') {
                        ++pos_;
                        break;
                    }
                    fail("expected ',' or ')'");
                }
            }
        }
        return build(name, args);
    }

    static long long integer(const Arg& a, const std::string& name)
    {
        long long v = 0;
        const auto* end = a.text.data() + a.text.size();
        auto [p, ec] = std::from_chars(a.text.data(), end, v);
        if (a.complex || ec != std::errc{} || p != end) {
            throw ZooError(name + " expects an integer argument, got '" + a.text + "'");
        }
        return v;
    }

    static std::uint64_t count(const Arg& a, const std::string& name)
    {
        std::uint64_t v = 0;
        const auto* end = a.text.data() + a.text.size();
        auto [p, ec] = std::from_chars(a.text.data(), end, v);
        if (a.complex || ec != std::errc{} || p != end) {
            throw ZooError(name + " expects a nonnegative integer, got '" + a.text + "'");
        }
        return v;
    }

    static double real(const Arg& a, const std::string& name)
    {
        try {
            std::size_t used = 0;
            const double v = std::stod(a.text, &used);
            if (a.complex || used != a.text.size()) throw ZooError("");
            return v;
        } catch (const std::exception&) {
            throw ZooError(name + " expects a real argument, got '" + a.text + "'");
        }
    }

    static const SimplicialComplex& complex(const Arg& a, const std::string& name)
    {
        if (!a.complex) throw ZooError(name + " expects a complex argument, got '" + a.text + "'");
        return *a.complex;
    }

    void arity(const std::string& name, const std::vector<Arg>& args, std::size_t lo, std::size_t hi) const
    {
        if (args.size() < lo || args.size() > hi) {
            throw ZooError(name + " takes " + std::to_string(lo) +
                           (lo == hi ? "" : " to " + std::to_string(hi)) + " arguments");
        }
    }

    SimplicialComplex build(const std::string& name, const std::vector<Arg>& args)
    {
        if (name == "simplex") {
            arity(name, args, 1, 1);
            return simplex(static_cast<int>(integer(args[0], name)));
        }
        if (name == "points") {
            arity(name, args, 1, 1);
            return points(count(args[0], name));
        }
        if (name == "path") {
            arity(name, args, 1, 1);
            return path(count(args[0], name));
        }
        if (name == "cycle") {
            arity(name, args, 1, 1);
            return cycle(count(args[0], name));
        }
        if (name == "star") {
            arity(name, args, 1, 1);
            return star_graph(count(args[0], name));
        }
        if (name == "tree") {
            arity(name, args, 1, 2);
            return tree(count(args[0], name), args.size() > 1 ? count(args[1], name) : seed_);
        }
        if (name == "random_flag") {
            arity(name, args, 2, 3);
            return random_flag(count(args[0], name), real(args[1], name),
                               args.size() > 2 ? count(args[2], name) : seed_);
        }
        if (name == "octahedron_boundary") {
            arity(name, args, 1, 1);
            const long long k = integer(args[0], name);
            if (k < 0) throw ZooError("octahedron_boundary(k) needs k >= 0");
            return join_all(std::vector<SimplicialComplex>(static_cast<std::size_t>(k + 1), points(2)));
        }
        if (name == "join") {
            if (args.empty()) throw ZooError("join needs at least one factor");
            std::vector<SimplicialComplex> factors;
            for (const Arg& a : args) factors.push_back(complex(a, name));
            return join_all(factors);
        }
        if (name == "cone") {
            arity(name, args, 1, 1);
            return vkdim::cone(prefix_labels(complex(args[0], name), "1:"), "apex");
        }
        if (name == "suspension") {
            arity(name, args, 1, 1);
            return vkdim::suspension(prefix_labels(complex(args[0], name), "1:"), "north", "south");
        }
        throw ZooError("unknown generator '" + name + "'");
    }

    const std::string& s_;
    std::uint64_t seed_;
    std::size_t pos_ = 0;
};

}  // namespace

SimplicialComplex generate(const std::string& expression, std::uint64_t default_seed)
{
    return Parser(expression, default_seed).parse();
}

std::string make_expression(const std::string& name, const std::vector<std::string>& params)
{
    if (params.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i];
    }
    return out + ")";
}

const std::vector<ZooEntry>& zoo_catalog()
{
    using P = Provenance;
    static const std::vector<ZooEntry> entries = {
        {"points(2)", true, 1, P::trivial, 2, P::theorem},
        {"points(3)", true, 2, P::trivial, 2, P::theorem},
        {"simplex(0)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"simplex(1)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"simplex(2)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"path(3)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"path(4)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"tree(6, 1)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"star(3)", true, 0, P::trivial, std::nullopt, P::trivial},
        {"cycle(3)", false, 1, P::trivial, std::nullopt, P::trivial},
        {"cycle(4)", true, 1, P::trivial, 4, P::theorem},
        {"cycle(5)", true, 1, P::trivial, 4, P::theorem},
        {"cycle(6)", true, 1, P::trivial, 4, P::theorem},
        {"octahedron_boundary(1)", true, 1, P::trivial, 4, P::theorem},
        {"octahedron_boundary(2)", true, 1, P::derived, 6, P::theorem},
        {"suspension(cycle(5))", true, 1, P::derived, 6, P::theorem},
        {"join(points(2), points(3))", true, 2, P::derived, 4, P::theorem},
        {"join(points(3), points(3))", true, 4, P::derived, 4, P::theorem},
        {"cone(cycle(4))", true, 0, P::trivial, std::nullopt, P::trivial},
        {"random_flag(7, 0.5, 3)", true, std::nullopt, P::derived, std::nullopt, P::derived},
        {"random_flag(8, 0.4, 11)", true, std::nullopt, P::derived, std::nullopt, P::derived},
    };
    return entries;
}

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::theorem: return "theorem";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
    }
    return "?";
}

}  // namespace vkdim::tools
