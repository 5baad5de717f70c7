// Command line front end: verify identities from the registry, expand named
// series, and list what is available.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "qseries/format.hpp"
#include "qseries/registry.hpp"

namespace {

using namespace qseries;

int cmd_verify(const std::string& identity, bool all, long long k, bool has_k,
               const std::string& z, long long order, int jobs) {
    if (all) {
        return run_all(order, jobs, std::cout);
    }
    if (identity.empty()) {
        std::cerr << "verify: need --identity <id> or --all\n";
        return 2;
    }
    const IdentityRecord& rec = lookup(identity);
    // restrict the default grid by the provided parameters (deduplicated)
    std::vector<Params> grid;
    for (const auto& g : rec.grid) {
        Params p = g;
        if (has_k) {
            auto it = p.find("k");
            if (it != p.end() && it->second != std::to_string(k)) continue;
            p["k"] = std::to_string(k);
        }
        if (!z.empty()) p["z"] = QMonomial::parse(z).str();
        if (std::find(grid.begin(), grid.end(), p) == grid.end()) grid.push_back(std::move(p));
    }
    if (grid.empty()) throw BadParamsError("no grid point matches the given parameters");
    bool any_failed = false;
    for (const auto& g : grid) {
        Verdict v = check(rec, g, order);
        std::cout << verdict_line(v) << "\n";
        if (v.attached) std::cout << format_text(*v.attached);
        std::cerr << "# " << v.id << " took " << v.wall_seconds << " s\n";
        if (v.status == VerdictStatus::failed) any_failed = true;
    }
    return any_failed ? 1 : 0;
}

int cmd_expand(const std::string& series, long long k, bool has_k, long long order,
               const std::string& format) {
    Params p;
    if (has_k) p["k"] = std::to_string(k);
    LaurentSeries s = expand_series(series, p, order);
    if (format == "json")
        std::cout << format_json(s) << "\n";
    else
        std::cout << format_text(s);
    return 0;
}

int cmd_list(bool identities, bool series) {
    if (!identities && !series) identities = series = true;
    if (identities) {
        for (const auto& r : registry()) {
            std::cout << r.id << "\t" << r.grid.size() << " grid point"
                      << (r.grid.size() == 1 ? "" : "s") << ", default order " << r.default_order
                      << (r.diff_only ? ", difference emitter" : "") << "\t[" << r.citation
                      << "]\n";
        }
    }
    if (series) {
        for (const auto& s : series_catalog()) std::cout << s << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine and identity verifier"};
    app.require_subcommand(1);

    std::string identity, z, series, format = "text";
    long long order = 0, k = 0;
    bool all = false;
    int jobs = 1;

    auto* verify = app.add_subcommand("verify", "verify an identity (or all of them)");
    verify->add_option("--identity", identity, "identity id from the registry");
    verify->add_flag("--all", all, "verify every registry record at its default grid");
    verify->add_option("--k", k, "restrict/instantiate the k parameter");
    verify->add_option("--z", z, "z monomial, e.g. q^3, -q^3, -1, q^-2");
    verify->add_option("--order", order, "truncation order (0 = record default)");
    verify->add_option("--jobs", jobs, "parallel workers for --all");

    auto* expand = app.add_subcommand("expand", "print the q-expansion of a named series");
    expand->add_option("--series", series, "series id")->required();
    expand->add_option("--k", k, "k parameter where applicable");
    expand->add_option("--order", order, "truncation order")->required();
    expand->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    bool list_identities = false, list_series = false;
    auto* list = app.add_subcommand("list", "list identities and series");
    list->add_flag("--identities", list_identities, "list identity records");
    list->add_flag("--series", list_series, "list expandable series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(identity, all, k, verify->count("--k") > 0, z, order, jobs);
        if (expand->parsed())
            return cmd_expand(series, k, expand->count("--k") > 0, order, format);
        if (list->parsed()) return cmd_list(list_identities, list_series);
    } catch (const qseries::UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qseries::UnknownSeriesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qseries::BadParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qseries::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
