#pragma once

// Command-line driver. Kept in the library so that tests can run it against
// string streams; tools/cicy_rigid.cpp only forwards argv.
//
// Exit codes: 0 success / certified, 1 rejected, 2 invalid input,
// 3 node-table verification mismatch.

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cicy/certifier.hpp>
#include <cicy/report.hpp>

namespace cicy::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_rejected = 1,
    exit_invalid = 2,
    exit_mismatch = 3,
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigid curves on complete intersection Calabi-Yau threefolds", "cicy_rigid"};
    app.require_subcommand(1);

    std::string type_text;
    std::string format_text = "json";
    std::int64_t d = 0;
    std::int64_t g = 0;
    std::int64_t d_max = 0;
    std::int64_t g_max = 0;
    std::int64_t n = 0;
    std::int64_t ell = 0;
    bool verify = false;

    auto* certify_cmd = app.add_subcommand("certify", "Certify one (type, d, g)");
    certify_cmd->add_option("--type", type_text, "Family: 5, 4,2, 3,3, 3,2,2 or 2,2,2,2")->required();
    certify_cmd->add_option("--d", d, "Degree")->required();
    certify_cmd->add_option("--g", g, "Genus")->required();
    certify_cmd->add_option("--format", format_text, "Output format (json)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Certify every (d, g) in a region");
    enumerate_cmd->add_option("--type", type_text, "Family")->required();
    enumerate_cmd->add_option("--d-max", d_max, "Largest degree")->required();
    enumerate_cmd->add_option("--g-max", g_max, "Largest genus")->required();
    enumerate_cmd->add_option("--format", format_text, "json, csv or markdown");

    auto* table_cmd = app.add_subcommand("table", "Print the node table");
    table_cmd->add_flag("--verify", verify, "Cross-check node counts by Thom-Porteous");
    table_cmd->add_option("--format", format_text, "json, csv or markdown");

    auto* excess_cmd = app.add_subcommand("excess", "Excess-bundle count for n nodes on P^ell");
    excess_cmd->add_option("--n", n, "Number of nodes")->required();
    excess_cmd->add_option("--ell", ell, "Dimension of the linear system")->required();
    excess_cmd->add_option("--format", format_text, "Output format (json)");

    // CLI11 wants argv[0]-less arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    const auto format = report::parse_format(format_text);
    if (!format) {
        err << "error: unknown format '" << format_text << "'\n";
        return exit_invalid;
    }

    try {
        if (certify_cmd->parsed()) {
            if (*format != report::output_format::json) {
                err << "error: certify only supports --format json\n";
                return exit_invalid;
            }
            const auto t = cicy_type::parse(type_text);
            if (d < 0 || g < 0) {
                err << "error: d and g must be nonnegative\n";
                return exit_invalid;
            }
            const auto cert = certify(t, d, g);
            out << report::to_json(cert).dump(2) << '\n';
            return cert.certified() ? exit_ok : exit_rejected;
        }

        if (enumerate_cmd->parsed()) {
            const auto t = cicy_type::parse(type_text);
            const auto certs = enumerate(t, d_max, g_max);
            report::write_certificates(out, *format, t, d_max, g_max, certs);
            return exit_ok;
        }

        if (table_cmd->parsed()) {
            if (!verify) {
                report::write_node_table(out, *format, nullptr);
                return exit_ok;
            }
            const auto checks = verify_node_table();
            report::write_node_table(out, *format, &checks);
            bool all_agree = true;
            for (const auto& c : checks) {
                if (!c.agree) {
                    all_agree = false;
                    err << "mismatch: " << c.row.label() << " table n=" << c.paper_n
                        << " computed n=" << c.computed_n.str() << '\n';
                }
            }
            return all_agree ? exit_ok : exit_mismatch;
        }

        if (excess_cmd->parsed()) {
            if (*format != report::output_format::json) {
                err << "error: excess only supports --format json\n";
                return exit_invalid;
            }
            const excess_problem p(n, ell);
            report::json j{{"n", n},
                           {"ell", ell},
                           {"excess_count", excess_count(p).str()},
                           {"rigid_count", rigid_count(n, ell).str()}};
            out << j.dump(2) << '\n';
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

} // namespace cicy::cli
