#include <charconv>
#include <regex>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "primeweb/errors.hpp"
#include "primeweb/web/w3_system.hpp"

namespace primeweb::web {

namespace {

// Shortest text that reads back to the same double.
std::string num(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

double to_double(const std::string& s) {
    double x = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw DomainError("malformed number '" + s + "'");
    return x;
}

std::uint64_t to_u64(const std::string& s) {
    std::uint64_t x = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw DomainError("malformed integer '" + s + "'");
    return x;
}

std::string point_on_line(std::size_t i, const RayLine& l) {
    return fmt::format("exp(alpha[{0}]*theta[{0}] + beta[{0}])*(({1})*cos(theta[{0}]) + ({2})*sin(theta[{0}]))", i,
                       num(l.a), num(l.b));
}

}  // namespace

std::string export_model(const W3System& sys) {
    const std::size_t n = sys.segments.size();
    std::string out;
    out += fmt::format("# W3-system: k0 {} segments {} unknowns {} equations {} inequalities {}\n", sys.k0, n,
                       sys.unknowns(), sys.equations.size(), sys.inequalities.size());
    for (const auto& s : sys.segments)
        out += fmt::format("# segment {} prime {} ray {} depth {}\n", s.index, s.prime, s.generator, s.depth);
    for (const auto& l : sys.lines)
        out += fmt::format("# line {} {} {} {}\n", l.generator, num(l.a), num(l.b), num(l.c));
    out += fmt::format("\nparam n := {};\nvar alpha {{1..n}} >= 0;\nvar theta {{1..n}};\nvar beta {{1..n}};\n", n);
    out += "minimize feasibility: 0;\n\n";
    for (const auto& e : sys.equations) {
        const std::size_t i = e.segment;
        switch (e.kind) {
            case EquationKind::start_exponent: out += "subject to start_exponent: beta[1] = 0;\n"; break;
            case EquationKind::continuity:
                out += fmt::format(
                    "subject to continuity_{0}: alpha[{0}]*theta[{0}] + beta[{0}] - alpha[{1}]*theta[{0}] - beta[{1}] = 0;\n",
                    i, i + 1);
                break;
            case EquationKind::arc_length: {
                const std::string start = i == 1 ? "1" : fmt::format("exp(alpha[{0}]*theta[{1}])", i, i - 1);
                out += fmt::format(
                    "subject to arc_{0}: sqrt(1 + 1/alpha[{0}]^2)*exp(beta[{0}])*(exp(alpha[{0}]*theta[{0}]) - {1}) = {2};\n",
                    i, start, num(e.rhs));
                break;
            }
            case EquationKind::on_ray: {
                const auto& l = sys.line(e.generator);
                out += fmt::format("subject to on_ray_{}: {} = {};  # ray {}\n", i, point_on_line(i, l), num(l.c),
                                   e.generator);
                break;
            }
        }
    }
    out += "\n";
    for (const auto& q : sys.inequalities) {
        const auto& l = sys.line(q.ray);
        out += fmt::format("subject to separate_{}_{}: ({})*({} - ({})) >= {};\n", q.ray, q.other, q.sign,
                           point_on_line(q.segment, l), num(l.c), num(q.margin));
    }
    out += "\n";
    for (std::size_t i = 0; i < sys.initial.alpha.size(); ++i)
        out += fmt::format("let alpha[{0}] := {1};\nlet theta[{0}] := {2};\nlet beta[{0}] := {3};\n", i + 1,
                           num(sys.initial.alpha[i]), num(sys.initial.theta[i]), num(sys.initial.beta[i]));
    return out;
}

W3System parse_model(std::string_view text) {
    static const std::regex header(R"(# W3-system: k0 (\d+) segments (\d+) unknowns (\d+) equations (\d+) inequalities (\d+))");
    static const std::regex segment(R"(# segment (\d+) prime (\d+) ray (\d+) depth (\d+))");
    static const std::regex line(R"(# line (\d+) (\S+) (\S+) (\S+))");
    static const std::regex start(R"(subject to start_exponent: beta\[1\] = 0;)");
    static const std::regex continuity(R"(subject to continuity_(\d+): .* = 0;)");
    static const std::regex arc(R"(subject to arc_(\d+): .* = (\S+);)");
    static const std::regex on_ray(R"(subject to on_ray_(\d+): .* = (\S+);  # ray (\d+))");
    static const std::regex separate(
        R"(subject to separate_(\d+)_(\d+): \((-?\d+)\)\*\(exp\(alpha\[(\d+)\]\*.* - \((\S+)\)\) >= (\S+);)");
    static const std::regex let(R"(let (alpha|theta|beta)\[(\d+)\] := (\S+);)");

    W3System sys;
    std::size_t expected[5] = {0, 0, 0, 0, 0};
    bool seen_header = false;
    std::istringstream in{std::string(text)};
    std::string s;
    std::smatch m;
    std::size_t lineno = 0;
    while (std::getline(in, s)) {
        ++lineno;
        if (std::regex_match(s, m, header)) {
            seen_header = true;
            for (int k = 0; k < 5; ++k) expected[k] = to_u64(m[k + 1]);
            sys.k0 = static_cast<std::uint32_t>(expected[0]);
        } else if (std::regex_match(s, m, segment)) {
            sys.segments.push_back({to_u64(m[1]), to_u64(m[2]), to_u64(m[3]), static_cast<std::uint32_t>(to_u64(m[4]))});
        } else if (std::regex_match(s, m, line)) {
            sys.lines.push_back({to_u64(m[1]), to_double(m[2]), to_double(m[3]), to_double(m[4])});
        } else if (std::regex_match(s, m, start)) {
            sys.equations.push_back({EquationKind::start_exponent, 1, 0.0, 0});
        } else if (std::regex_match(s, m, continuity)) {
            sys.equations.push_back({EquationKind::continuity, to_u64(m[1]), 0.0, 0});
        } else if (std::regex_match(s, m, arc)) {
            sys.equations.push_back({EquationKind::arc_length, to_u64(m[1]), to_double(m[2]), 0});
        } else if (std::regex_match(s, m, on_ray)) {
            sys.equations.push_back({EquationKind::on_ray, to_u64(m[1]), 0.0, to_u64(m[3])});
        } else if (std::regex_match(s, m, separate)) {
            sys.inequalities.push_back({to_u64(m[1]), to_u64(m[2]), to_u64(m[4]), std::stoi(m[3]), to_double(m[6])});
        } else if (std::regex_match(s, m, let)) {
            const std::size_t i = to_u64(m[2]);
            auto& v = m[1] == "alpha" ? sys.initial.alpha : m[1] == "theta" ? sys.initial.theta : sys.initial.beta;
            if (i != v.size() + 1) throw DomainError(fmt::format("line {}: initial values out of order", lineno));
            v.push_back(to_double(m[3]));
        } else if (s.rfind("subject to", 0) == 0 || s.rfind("# segment", 0) == 0 || s.rfind("# line", 0) == 0) {
            throw DomainError(fmt::format("line {}: unrecognised statement", lineno));
        }
    }
    if (!seen_header) throw DomainError("missing W3-system header");
    if (sys.segments.size() != expected[1] || sys.unknowns() != expected[2] || sys.equations.size() != expected[3] ||
        sys.inequalities.size() != expected[4])
        throw DomainError("statement counts do not match the header");
    return sys;
}

}  // namespace primeweb::web
