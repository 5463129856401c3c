#pragma once

// Text formats:
//
//   .lin     c <comment>
//            p lin <n> <m>
//            <weight> <rhs> <v1> ... <vr> 0     (m lines, variables 1-based)
//
//   .cnf     DIMACS CNF with uniform clause width; clauses may span lines.
//
//   result   json (stable field order, the machine contract) or text.
//
// Parsers report every malformed construct as a distinct diagnostic with a
// 1-based line number.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxlin/cnf.hpp"
#include "maxlin/decide.hpp"
#include "maxlin/system.hpp"

namespace maxlin {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(std::move(t));
    return tokens;
}

inline bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == 'c';
    }
    return true;  // blank
}

inline std::uint64_t parse_u64(const std::string& token, std::size_t line,
                               const std::string& what) {
    if (token.empty() || token[0] == '-' || token[0] == '+')
        throw ParseError(line, what + " must be a nonnegative integer, got '" + token + "'");
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9')
            throw ParseError(line, what + " must be a nonnegative integer, got '" + token +
                                       "'");
        std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
            throw ParseError(line, what + " out of range: '" + token + "'");
        value = value * 10 + digit;
    }
    return value;
}

inline std::int64_t parse_i64(const std::string& token, std::size_t line,
                              const std::string& what) {
    bool neg = !token.empty() && token[0] == '-';
    std::uint64_t mag = parse_u64(neg ? token.substr(1) : token, line, what);
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError(line, what + " out of range: '" + token + "'");
    return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

}  // namespace detail

inline LinearSystem parse_lin(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t declared_m = 0, records = 0;
    LinearSystem system;

    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        std::vector<std::string> tok = detail::tokenize(line);

        if (!have_header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "lin")
                throw ParseError(lineno, "malformed header, expected 'p lin <n> <m>'");
            std::uint64_t n = detail::parse_u64(tok[2], lineno, "variable count");
            declared_m = detail::parse_u64(tok[3], lineno, "equation count");
            system = LinearSystem(n);
            have_header = true;
            continue;
        }

        if (records == declared_m)
            throw ParseError(lineno, "more equation records than the declared " +
                                         std::to_string(declared_m));
        if (tok.size() < 3)
            throw ParseError(lineno, "equation record needs '<weight> <rhs> <vars...> 0'");

        Weight weight = detail::parse_u64(tok[0], lineno, "weight");
        if (weight == 0) throw ParseError(lineno, "weight must be positive");
        if (weight > kMaxTotalWeight) throw ParseError(lineno, "weight out of range");

        bool rhs;
        if (tok[1] == "0")
            rhs = false;
        else if (tok[1] == "1")
            rhs = true;
        else
            throw ParseError(lineno, "right-hand side must be 0 or 1, got '" + tok[1] + "'");

        BitVec lhs(system.n_vars());
        bool terminated = false;
        std::size_t i = 2;
        for (; i < tok.size(); ++i) {
            if (tok[i] == "0") {
                terminated = true;
                ++i;
                break;
            }
            std::uint64_t v = detail::parse_u64(tok[i], lineno, "variable index");
            if (v < 1 || v > system.n_vars())
                throw ParseError(lineno, "variable index " + tok[i] + " out of range 1.." +
                                             std::to_string(system.n_vars()));
            if (lhs.test(v - 1))
                throw ParseError(lineno, "duplicate variable " + tok[i] + " in left-hand side");
            lhs.set(v - 1);
        }
        if (!terminated) throw ParseError(lineno, "missing 0 terminator");
        if (i != tok.size()) throw ParseError(lineno, "trailing tokens after 0 terminator");
        if (lhs.none()) throw ParseError(lineno, "empty left-hand side");

        try {
            system.add_equation(WeightedEquation(std::move(lhs), rhs, weight));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        ++records;
    }

    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p lin' header");
    if (records != declared_m)
        throw ParseError(lineno, "declared " + std::to_string(declared_m) +
                                     " equations but found " + std::to_string(records));
    return system;
}

inline std::string serialize_lin(const LinearSystem& system,
                                 const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p lin " << system.n_vars() << " " << system.size() << "\n";
    for (const auto& eq : system.equations()) {
        out << eq.weight << " " << (eq.rhs ? 1 : 0);
        eq.lhs.for_each_set([&](std::size_t v) { out << " " << v + 1; });
        out << " 0\n";
    }
    return out.str();
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, declared_m = 0;
    std::optional<CnfFormula> formula;
    std::optional<std::size_t> width;
    Clause current;
    std::size_t clauses = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        std::vector<std::string> tok = detail::tokenize(line);

        if (!have_header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "cnf")
                throw ParseError(lineno, "malformed header, expected 'p cnf <n> <m>'");
            n = detail::parse_u64(tok[2], lineno, "variable count");
            declared_m = detail::parse_u64(tok[3], lineno, "clause count");
            have_header = true;
            continue;
        }

        for (const std::string& t : tok) {
            std::int64_t lit = detail::parse_i64(t, lineno, "literal");
            if (lit == 0) {
                if (clauses == declared_m)
                    throw ParseError(lineno, "more clauses than the declared " +
                                                 std::to_string(declared_m));
                if (current.size() < 2)
                    throw ParseError(lineno, "clause width must be at least 2");
                if (!width) {
                    width = current.size();
                    try {
                        formula.emplace(n, *width);
                    } catch (const Error& e) {
                        throw ParseError(lineno, e.what());
                    }
                } else if (current.size() != *width) {
                    throw ParseError(lineno, "clause width " +
                                                 std::to_string(current.size()) +
                                                 " differs from " + std::to_string(*width));
                }
                try {
                    formula->add_clause(std::move(current));
                } catch (const Error& e) {
                    throw ParseError(lineno, e.what());
                }
                current = Clause{};
                ++clauses;
                continue;
            }
            std::uint64_t v = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
            if (v > n)
                throw ParseError(lineno, "literal " + t + " out of range, " +
                                             std::to_string(n) + " variables declared");
            current.push_back(Literal{static_cast<std::uint32_t>(v - 1), lit > 0});
        }
    }

    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(lineno, "unterminated clause at end of input");
    if (clauses != declared_m)
        throw ParseError(lineno, "declared " + std::to_string(declared_m) +
                                     " clauses but found " + std::to_string(clauses));
    if (!formula) {  // no clause to infer the width from
        if (n < 2)
            throw ParseError(lineno == 0 ? 1 : lineno,
                             "empty formula needs at least two variables");
        formula.emplace(n, 2);
    }
    return *formula;
}

inline std::string serialize_dimacs(const CnfFormula& f,
                                    const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p cnf " << f.n_vars() << " " << f.size() << "\n";
    for (const Clause& clause : f.clauses()) {
        for (const Literal& lit : clause)
            out << (lit.positive ? "" : "-") << lit.var + 1 << " ";
        out << "0\n";
    }
    return out.str();
}

// --- result documents ------------------------------------------------------

enum class ResultFormat { Json, Text };

struct ResultDocument {
    Verdict verdict;
    std::uint64_t k = 0;
    double time_ms = 0.0;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

// Fixed tags of the result format.
inline std::string to_string(DecidedBy d) {
    switch (d) {
        case DecidedBy::MarkingRun: return "algorithm_a";
        case DecidedBy::BruteForce: return "brute_force";
        case DecidedBy::ZeroExcessGreedy: return "k_zero_greedy";
    }
    return "unknown";
}

inline DecidedBy decided_by_from_string(const std::string& s) {
    if (s == "algorithm_a") return DecidedBy::MarkingRun;
    if (s == "brute_force") return DecidedBy::BruteForce;
    if (s == "k_zero_greedy") return DecidedBy::ZeroExcessGreedy;
    throw ParseError(1, "unknown strategy tag '" + s + "'");
}

inline std::string serialize_result(const ResultDocument& doc, ResultFormat format) {
    const Verdict& v = doc.verdict;
    if (format == ResultFormat::Json) {
        nlohmann::ordered_json j;
        j["answer"] = v.yes ? "yes" : "no";
        j["k"] = doc.k;
        if (v.certificate_excess2) j["excess2_optimum"] = *v.certificate_excess2;
        if (v.witness) j["witness"] = v.witness->to_string();
        j["strategy"] = to_string(v.decided_by);
        j["marks"] = v.stats.iterations;
        j["equations_deleted"] = v.stats.equations_deleted;
        j["residual_size"] = v.stats.residual_size;
        j["time_ms"] = doc.time_ms;
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "answer: " << (v.yes ? "yes" : "no") << "\n";
    out << "k: " << doc.k << "\n";
    if (v.certificate_excess2) out << "excess2_optimum: " << *v.certificate_excess2 << "\n";
    if (v.witness) out << "witness: " << v.witness->to_string() << "\n";
    out << "strategy: " << to_string(v.decided_by) << "\n";
    out << "marks: " << v.stats.iterations << "\n";
    out << "equations_deleted: " << v.stats.equations_deleted << "\n";
    out << "residual_size: " << v.stats.residual_size << "\n";
    out << "time_ms: " << doc.time_ms << "\n";
    return out.str();
}

inline ResultDocument parse_result(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid result json: ") + e.what());
    }
    try {
        ResultDocument doc;
        const std::string answer = j.at("answer").get<std::string>();
        if (answer != "yes" && answer != "no")
            throw ParseError(1, "answer must be yes or no");
        doc.verdict.yes = answer == "yes";
        doc.k = j.at("k").get<std::uint64_t>();
        if (j.contains("excess2_optimum"))
            doc.verdict.certificate_excess2 = j["excess2_optimum"].get<std::int64_t>();
        if (j.contains("witness"))
            doc.verdict.witness = Assignment::from_string(j["witness"].get<std::string>());
        if (doc.verdict.yes && !doc.verdict.witness)
            throw ParseError(1, "yes result lacks a witness");
        if (!doc.verdict.yes && !doc.verdict.certificate_excess2)
            throw ParseError(1, "no result lacks excess2_optimum");
        doc.verdict.decided_by =
            decided_by_from_string(j.at("strategy").get<std::string>());
        doc.verdict.stats.iterations = j.at("marks").get<std::size_t>();
        doc.verdict.stats.equations_deleted = j.at("equations_deleted").get<std::size_t>();
        doc.verdict.stats.residual_size = j.at("residual_size").get<std::size_t>();
        doc.time_ms = j.at("time_ms").get<double>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid result json: ") + e.what());
    }
}

}  // namespace maxlin
