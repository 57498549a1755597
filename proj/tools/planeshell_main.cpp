#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "planeshell/certify.hpp"

namespace ps = planeshell;
using nlohmann::json;

namespace {

void print_certificate_summary(const ps::OrderAnalysis& a) {
    std::printf("order %-16s ring %-4s  |S1| %-5zu axis %-5zu balanced %-6zu %s\n",
                a.order->name().c_str(), ps::ring_tag_name(a.order->ring()),
                a.unit.elements.size(), a.axis.elements.size(), a.balanced.elements.size(),
                a.pass ? "pass" : "FAIL");
    std::printf("  root system %-8s doubling %-8s no-splitting %s  fibration base %ld fiber %ld %s\n",
                ps::composite_label(a.unit_report.components).c_str(), a.doubling.label.c_str(),
                a.no_splitting ? "yes" : "NO", a.fibration.base_size, a.fibration.fiber_size,
                a.fibration.constant ? "constant" : "NON-CONSTANT");
}

void print_table(const ps::Table1Result& res) {
    std::printf("%-16s %6s %10s %6s %12s %9s %5s  %s\n", "order", "|S1|", "root", "axis",
                "axis root", "|D|", "ok", "fibration");
    for (const ps::Table1Row& r : res.rows) {
        std::printf("%-16s %6ld %10s %6ld %12s %9ld %5s  %s\n", r.name.c_str(), r.shell,
                    r.unit_label.c_str(), r.axis, r.doubling_label.c_str(), r.balanced,
                    (r.match && r.pass) ? "yes" : "NO", r.fibration_kind.c_str());
        if (!r.match) {
            std::printf("  expected |S1| %ld axis %ld |D| %ld\n", r.expect_shell, r.expect_axis,
                        r.expect_balanced);
        }
    }
}

int run_certify(const std::string& order, const ps::CertifyOptions& opts, const std::string& out,
                bool as_json) {
    ps::OrderAnalysis a = ps::analyze_order(order, opts);
    json cert = ps::certificate(a);
    if (as_json) {
        std::cout << ps::canonical_dump(cert) << "\n";
    } else {
        print_certificate_summary(a);
    }
    ps::RunInfo info = ps::write_run({cert}, out);
    if (!as_json) {
        std::printf("wrote %s (digest %s)\n", info.files.front().c_str(),
                    ps::certificate_digest(cert).c_str());
    }
    return a.pass ? 0 : 1;
}

int run_table1(const ps::CertifyOptions& opts, const std::string& out, bool as_json) {
    ps::Table1Result res = ps::run_table1(opts);
    if (as_json) {
        json arr = json::array();
        for (const json& c : res.certificates) arr.push_back(c);
        std::cout << ps::canonical_dump(arr) << "\n";
    } else {
        print_table(res);
    }
    ps::RunInfo info = ps::write_run(res.certificates, out);
    if (!as_json) {
        std::printf("%s; certificates in %s\n",
                    res.all_match ? "all rows match" : "ROW MISMATCH", info.directory.c_str());
    }
    return (res.all_match && res.all_pass) ? 0 : 1;
}

int run_scan(long max_m, bool as_json) {
    ps::CertifyOptions opts;
    const ps::Order& icosian = ps::builtin("icosian");
    ps::Shell h4 = ps::enumerate_shell(icosian, ps::GoldenScalar::one(icosian.ring()));
    ps::ObstructionSummary s = ps::rank_obstruction_scan(max_m, ps::shell_vector_set(h4));
    if (as_json) {
        json j;
        j["max_m"] = s.max_m;
        j["admissible_m"] = s.admissible_m;
        j["noncrystallographic_m"] = s.noncrystallographic_m;
        j["pentagon_cartan"] = s.pentagon_cartan ? s.pentagon_cartan->key() : "";
        j["h3_verified"] = s.h3_verified;
        j["h4_verified"] = s.h4_verified;
        j["rank_list"] = s.rank_list;
        j["no_rank_ge5"] = s.no_rank_ge5;
        std::cout << ps::canonical_dump(j) << "\n";
    } else {
        std::printf("dihedral scan up to m = %ld\n", s.max_m);
        std::printf("  admissible m:");
        for (long m : s.admissible_m) {
            std::printf(" %ld%s", m, ps::dihedral_admissible(m).crystallographic ? "(cryst)" : "");
        }
        std::printf("\n  non-crystallographic admissible:");
        for (long m : s.noncrystallographic_m) std::printf(" %ld", m);
        if (s.pentagon_cartan) {
            std::printf("  (Cartan value %s)", s.pentagon_cartan->key().c_str());
        }
        std::printf("\n  H3 subsystem verified: %s, H4 shell verified: %s\n",
                    s.h3_verified ? "yes" : "NO", s.h4_verified ? "yes" : "NO");
        std::printf("  indecomposable non-crystallographic ranks: {");
        for (size_t i = 0; i < s.rank_list.size(); ++i) {
            std::printf("%s%d", i ? ", " : "", s.rank_list[i]);
        }
        std::printf("}\n  no indecomposable non-crystallographic rank >= 5: %s\n",
                    s.no_rank_ge5 ? "confirmed" : "NOT CONFIRMED");
    }
    bool ok = s.noncrystallographic_m == std::vector<long>{5} && s.no_rank_ge5;
    return ok ? 0 : 1;
}

int run_fibration(const std::string& order_name, const ps::CertifyOptions& opts, bool as_json) {
    const ps::Order& order = ps::builtin(order_name);
    ps::Shell unit = ps::enumerate_shell(order, ps::GoldenScalar::one(order.ring()), opts.threads);
    ps::FibrationProfile prof = ps::fibration_profile(unit, opts.threads);
    ps::LoopReport loop = ps::loop_checks(unit, opts.exhaustive_moufang);
    bool ok = prof.closed && prof.constant &&
              prof.base_size == static_cast<long>(unit.elements.size()) && loop.all();
    if (as_json) {
        json j;
        j["order"] = order_name;
        j["base_size"] = prof.base_size;
        j["fiber_size"] = prof.fiber_size;
        j["constant"] = prof.constant;
        j["closed"] = prof.closed;
        j["total_pairs"] = prof.total_pairs;
        j["closure"] = loop.closure;
        j["unit_member"] = loop.unit_member;
        j["inverse_property"] = loop.inverse_property;
        j["moufang"] = loop.moufang;
        j["moufang_exhaustive"] = loop.moufang_exhaustive;
        j["moufang_triples"] = loop.moufang_triples;
        j["artin"] = loop.artin;
        j["pass"] = ok;
        std::cout << ps::canonical_dump(j) << "\n";
    } else {
        std::printf("%s: base %ld, fiber %ld, %s, %ld pairs\n", order_name.c_str(),
                    prof.base_size, prof.fiber_size,
                    prof.constant ? "constant" : "NON-CONSTANT", prof.total_pairs);
        std::printf("loop checks: closure %d unit %d inverse %d moufang %d (%ld triples%s) artin %d\n",
                    loop.closure, loop.unit_member, loop.inverse_property, loop.moufang,
                    loop.moufang_triples, loop.moufang_exhaustive ? ", exhaustive" : ", sampled",
                    loop.artin);
    }
    return ok ? 0 : 1;
}

int run_shell(const std::string& order_name, long level, const ps::CertifyOptions& opts,
              bool as_json) {
    const ps::Order& order = ps::builtin(order_name);
    ps::Shell shell =
        ps::enumerate_shell(order, ps::GoldenScalar::integer(level, order.ring()), opts.threads);
    auto profile = ps::shell_profile(shell);
    if (as_json) {
        json j;
        j["order"] = order_name;
        j["level"] = level;
        j["cardinality"] = static_cast<long>(shell.elements.size());
        j["digest"] = ps::element_list_digest(shell.elements);
        json prof = json::array();
        for (const auto& p : profile) {
            json e;
            e["type"] = p.type;
            e["count"] = p.count;
            prof.push_back(std::move(e));
        }
        j["profile"] = std::move(prof);
        std::cout << ps::canonical_dump(j) << "\n";
    } else {
        std::printf("%s shell at level %ld: %zu elements, %zu coordinate types\n",
                    order_name.c_str(), level, shell.elements.size(), profile.size());
        for (const auto& p : profile) {
            std::printf("  count %-6ld type [", p.count);
            for (size_t i = 0; i < p.type.size(); ++i) {
                std::printf("%s%s", i ? ", " : "", p.type[i].c_str());
            }
            std::printf("]\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral plane workbench: exact shells, root systems, fibrations, certificates"};
    app.require_subcommand(1);

    ps::CertifyOptions opts;
    std::string out_dir = "certs";
    bool as_json = false;
    app.add_option("--threads", opts.threads, "worker threads for enumerations and sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "output directory for certificate runs");
    app.add_flag("--json", as_json, "print canonical JSON instead of tables");
    app.add_flag("--with-hybrids", opts.with_hybrids, "include the hybrid orders in table1");

    std::string order_name;
    auto* certify = app.add_subcommand("certify", "full pipeline and certificate for one order");
    certify->add_option("order", order_name, "order name")->required();
    certify->add_flag("--exhaustive", opts.exhaustive_moufang,
                      "exhaustive Moufang triples even for large shells");

    auto* table1 = app.add_subcommand("table1", "recompute and diff the synoptic table");

    long max_m = 10000;
    auto* scan = app.add_subcommand("scan-obstruction", "dihedral admissibility and rank scan");
    scan->add_option("--max-m", max_m, "scan bound")->check(CLI::Range(6L, 100000000L));

    auto* fib = app.add_subcommand("fibration", "fibration profile and loop checks for one order");
    fib->add_option("order", order_name, "order name")->required();
    fib->add_flag("--exhaustive", opts.exhaustive_moufang,
                  "exhaustive Moufang triples even for large shells");

    long level = 1;
    auto* shell = app.add_subcommand("shell", "enumerate one norm shell");
    shell->add_option("order", order_name, "order name")->required();
    shell->add_option("--level", level, "norm level")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(certify)) return run_certify(order_name, opts, out_dir, as_json);
        if (app.got_subcommand(table1)) return run_table1(opts, out_dir, as_json);
        if (app.got_subcommand(scan)) return run_scan(max_m, as_json);
        if (app.got_subcommand(fib)) return run_fibration(order_name, opts, as_json);
        if (app.got_subcommand(shell)) return run_shell(order_name, level, opts, as_json);
    } catch (const ps::UnknownOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
