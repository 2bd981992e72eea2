#pragma once

// Circuit text format:
//   circuit v1 | vcircuit v1 dim <m>
//   gate <id> input <nat> | input <c1>,...,<cm> | input inf
//   gate <id> union|inter|add|mul|div|sub <p1> <p2>
//   gate <id> comp <p>
//   output <id>
// '#' starts a comment; blank lines are ignored; LF line endings.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "setcirc/circuit.hpp"

namespace setcirc {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#')
            break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline bool op_from_keyword(std::string_view kw, Op& op)
{
    static constexpr Op all[] = {Op::union_, Op::inter, Op::comp, Op::add, Op::mul, Op::div, Op::sub};
    for (Op candidate : all)
        if (kw == op_keyword(candidate)) {
            op = candidate;
            return true;
        }
    return false;
}

inline GateId parse_id(const Token& t, std::size_t line)
{
    auto n = parse_natural(t.text);
    if (!n)
        throw ParseError(Errc::syntax, line, t.column, "expected gate id, got '" + std::string(t.text) + "'");
    auto v = to_u64(*n);
    if (!v)
        throw ParseError(Errc::syntax, line, t.column, "gate id out of range");
    return *v;
}

} // namespace detail

/// Parses and validates circuit text. Throws ParseError with line/column on any problem.
inline Circuit parse_circuit(std::string_view text)
{
    using detail::Token;
    std::vector<Gate> gates;
    std::vector<std::size_t> gate_line;
    std::vector<std::size_t> gate_pred_column;
    std::size_t dim = 0;
    bool have_header = false;
    std::optional<GateId> output;
    std::size_t output_line = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        auto toks = detail::tokenize_line(line);
        if (toks.empty())
            continue;
        auto fail = [&](const Token& t, const std::string& msg) -> ParseError {
            return ParseError(Errc::syntax, line_no, t.column, msg);
        };

        if (!have_header) {
            if (toks[0].text == "circuit") {
                if (toks.size() != 2 || toks[1].text != "v1")
                    throw fail(toks.size() > 1 ? toks[1] : toks[0], "expected 'circuit v1'");
            } else if (toks[0].text == "vcircuit") {
                if (toks.size() != 4 || toks[1].text != "v1" || toks[2].text != "dim")
                    throw fail(toks.size() > 1 ? toks[1] : toks[0], "expected 'vcircuit v1 dim <m>'");
                auto m = parse_natural(toks[3].text);
                if (!m || *m < 1 || *m > 1'000'000)
                    throw fail(toks[3], "dimension must be a natural number >= 1");
                dim = static_cast<std::size_t>(*m);
            } else {
                throw fail(toks[0], "expected header 'circuit v1' or 'vcircuit v1 dim <m>'");
            }
            have_header = true;
            continue;
        }
        if (output)
            throw fail(toks[0], "content after output line");

        if (toks[0].text == "output") {
            if (toks.size() != 2)
                throw fail(toks[0], "expected 'output <id>'");
            output = detail::parse_id(toks[1], line_no);
            output_line = line_no;
            continue;
        }
        if (toks[0].text != "gate")
            throw fail(toks[0], "expected 'gate' or 'output', got '" + std::string(toks[0].text) + "'");
        if (toks.size() < 3)
            throw fail(toks.back(), "incomplete gate line");

        Gate g;
        g.id = detail::parse_id(toks[1], line_no);
        std::size_t pred_column = toks[2].column;
        if (toks[2].text == "input") {
            if (toks.size() != 4)
                throw fail(toks[2], "expected exactly one input label");
            g.op = Op::input;
            if (dim == 0) {
                auto n = parse_natural(toks[3].text);
                if (!n)
                    throw fail(toks[3], "expected natural number label, got '" + std::string(toks[3].text) + "'");
                g.value = *n;
            } else {
                auto v = parse_ext_vector(toks[3].text);
                if (!v)
                    throw fail(toks[3], "expected vector label like 1,0 or inf");
                if (!v->infinite && v->dim() != dim)
                    throw ParseError(Errc::dimension_mismatch, line_no, toks[3].column,
                                     "label has " + std::to_string(v->dim()) + " coordinates, expected " +
                                         std::to_string(dim));
                g.vvalue = *v;
            }
        } else {
            if (!detail::op_from_keyword(toks[2].text, g.op))
                throw fail(toks[2], "unknown gate kind '" + std::string(toks[2].text) + "'");
            if (toks.size() - 3 != op_arity(g.op))
                throw ParseError(Errc::arity_mismatch, line_no, toks[2].column,
                                 std::string(op_keyword(g.op)) + " takes " + std::to_string(op_arity(g.op)) +
                                     " predecessor(s)");
            for (std::size_t k = 3; k < toks.size(); ++k)
                g.preds.push_back(detail::parse_id(toks[k], line_no));
            pred_column = toks[3].column;
        }
        gates.push_back(std::move(g));
        gate_line.push_back(line_no);
        gate_pred_column.push_back(pred_column);
    }

    if (!have_header)
        throw ParseError(Errc::syntax, 1, 1, "empty document");
    if (!output)
        throw ParseError(Errc::missing_output, line_no, 1, "no 'output <id>' line");

    try {
        return Circuit(std::move(gates), *output, dim);
    } catch (const ValidationError& e) {
        if (auto i = e.gate_index())
            throw ParseError(e.code(), gate_line[*i], gate_pred_column[*i], e.detail());
        throw ParseError(e.code(), output_line, 1, e.detail());
    }
}

/// Canonical text: stored gate order, single spaces, lowercase keywords, trailing LF.
inline std::string serialize_circuit(const Circuit& c)
{
    std::ostringstream out;
    if (c.is_vector())
        out << "vcircuit v1 dim " << c.dim() << '\n';
    else
        out << "circuit v1\n";
    for (const auto& g : c.gates()) {
        out << "gate " << g.id << ' ' << op_keyword(g.op);
        if (g.op == Op::input)
            out << ' ' << (c.is_vector() ? to_string(g.vvalue) : to_string(g.value));
        for (GateId p : g.preds)
            out << ' ' << p;
        out << '\n';
    }
    out << "output " << c.output() << '\n';
    return out.str();
}

} // namespace setcirc
