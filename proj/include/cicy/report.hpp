#pragma once

// JSON / CSV / markdown renderings of certificates and node-table reports.
// Counts are always decimal strings. Output contains nothing run-dependent.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <cicy/certifier.hpp>

namespace cicy::report {

using json = nlohmann::ordered_json;

enum class output_format { json, csv, markdown };

inline std::optional<output_format> parse_format(std::string_view s)
{
    if (s == "json") return output_format::json;
    if (s == "csv") return output_format::csv;
    if (s == "markdown") return output_format::markdown;
    return std::nullopt;
}

inline json embedding_json(const embedding_row& row)
{
    return {{"cicy", row.cicy.to_string()}, {"k3", cicy_type::join_degrees(row.k3_degrees, ',')}, {"n", row.n}};
}

inline json route_json(const route_trace& r)
{
    json j{{"route", to_string(r.route)}, {"riemann_roch", r.riemann_roch}};
    if (r.lemma2) {
        j["lemma2"] = {{"status", to_string(r.lemma2->status)}, {"degree_bound", r.lemma2->degree_bound}};
    } else {
        j["lemma2"] = nullptr;
    }
    return j;
}

inline json to_json(const certificate& c)
{
    json stated{{"accept", c.stated.accept}, {"reason", c.stated.reason}, {"clauses", json::array()}};
    for (const auto& cl : c.stated.clauses) {
        stated["clauses"].push_back({{"name", cl.name}, {"holds", cl.holds}});
    }

    const auto& dv = c.derived;
    json derived{{"accept", dv.accept},
                 {"reason", dv.reason},
                 {"ell", dv.ell},
                 {"embedding", dv.chosen ? embedding_json(*dv.chosen) : json(nullptr)},
                 {"count", dv.count ? json(dv.count->str()) : json(nullptr)},
                 {"rows", json::array()},
                 {"viable", json::array()},
                 {"assumed_by_citation", assumed_by_citation()}};
    for (const auto& e : dv.rows) {
        derived["rows"].push_back({{"embedding", embedding_json(e.row)},
                                   {"m", e.m},
                                   {"knutsen",
                                    {{"exists", e.knutsen.exists},
                                     {"clause", to_string(e.knutsen.clause)},
                                     {"extrapolated", e.knutsen.extrapolated}}},
                                   {"enough_nodes", e.enough_nodes},
                                   {"nonspeciality", route_json(e.route)},
                                   {"viable", e.viable},
                                   {"failures", e.failures}});
    }
    for (const auto& row : dv.viable) {
        derived["viable"].push_back(embedding_json(row));
    }

    json warnings = json::array();
    json codes = json::array();
    for (const auto& w : c.warnings) {
        warnings.push_back(w.message);
        codes.push_back(w.code);
    }

    return {{"input", {{"type", c.type.to_string()}, {"d", c.d}, {"g", c.g}}},
            {"certified", c.certified()},
            {"stated", std::move(stated)},
            {"derived", std::move(derived)},
            {"count", c.count() ? json(c.count()->str()) : json(nullptr)},
            {"warnings", std::move(warnings)},
            {"warning_codes", std::move(codes)}};
}

// ---------------------------------------------------------------------------
// Flat rows shared by csv and markdown.

using table_rows = std::vector<std::vector<std::string>>;

inline std::vector<std::string> certificate_columns()
{
    return {"d", "g", "stated", "derived", "embedding", "n", "count", "warnings"};
}

inline std::vector<std::string> certificate_row(const certificate& c)
{
    std::string codes;
    for (const auto& w : c.warnings) {
        codes += (codes.empty() ? "" : ";") + w.code;
    }
    const auto& chosen = c.derived.chosen;
    return {std::to_string(c.d),
            std::to_string(c.g),
            c.stated.accept ? "accept" : "reject",
            c.derived.accept ? "accept" : "reject",
            chosen ? cicy_type::join_degrees(chosen->k3_degrees, '-') : "",
            chosen ? std::to_string(chosen->n) : "",
            c.count() ? c.count()->str() : "",
            codes};
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header, const table_rows& rows)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
}

inline void write_markdown(std::ostream& os, const std::vector<std::string>& header, const table_rows& rows)
{
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (const auto& c : cells) {
            os << ' ' << c << " |";
        }
        os << '\n';
    };
    line(header);
    os << '|';
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << "---|";
    }
    os << '\n';
    for (const auto& r : rows) {
        line(r);
    }
}

inline void write_certificates(std::ostream& os, output_format fmt, cicy_type t, std::int64_t d_max,
                               std::int64_t g_max, const std::vector<certificate>& certs)
{
    if (fmt == output_format::json) {
        json j{{"type", t.to_string()}, {"d_max", d_max}, {"g_max", g_max}, {"certificates", json::array()}};
        for (const auto& c : certs) {
            j["certificates"].push_back(to_json(c));
        }
        os << j.dump(2) << '\n';
        return;
    }
    table_rows rows;
    for (const auto& c : certs) {
        rows.push_back(certificate_row(c));
    }
    if (fmt == output_format::csv) {
        write_csv(os, certificate_columns(), rows);
    } else {
        write_markdown(os, certificate_columns(), rows);
    }
}

/// Without checks: the tabulated rows. With checks: adds computed_n and agree.
inline void write_node_table(std::ostream& os, output_format fmt, const std::vector<node_check>* checks)
{
    const auto& table = node_table();
    if (fmt == output_format::json) {
        json j{{"rows", json::array()}};
        bool all_agree = true;
        for (std::size_t i = 0; i < table.size(); ++i) {
            auto row = embedding_json(table[i]);
            if (checks) {
                row["computed_n"] = (*checks)[i].computed_n.str();
                row["agree"] = (*checks)[i].agree;
                all_agree = all_agree && (*checks)[i].agree;
            }
            j["rows"].push_back(std::move(row));
        }
        if (checks) {
            j["all_agree"] = all_agree;
        }
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::string> header{"cicy", "k3", "n"};
    if (checks) {
        header.insert(header.end(), {"computed_n", "agree"});
    }
    table_rows rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        std::vector<std::string> r{cicy_type::join_degrees(table[i].cicy.degrees(), '-'),
                                   cicy_type::join_degrees(table[i].k3_degrees, '-'), std::to_string(table[i].n)};
        if (checks) {
            r.push_back((*checks)[i].computed_n.str());
            r.push_back((*checks)[i].agree ? "yes" : "no");
        }
        rows.push_back(std::move(r));
    }
    if (fmt == output_format::csv) {
        write_csv(os, header, rows);
    } else {
        write_markdown(os, header, rows);
    }
}

} // namespace cicy::report
