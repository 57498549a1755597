#include "planeshell/certify.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>

#include "planeshell/sha256.hpp"

namespace planeshell {

using nlohmann::json;

namespace {

long to_long(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of range");
    return v.get_si();
}

json ring_value(const GoldenScalar& v) {
    auto [a, b] = v.ring_pair();
    return json::array({to_long(a, "ring value"), to_long(b, "ring value")});
}

json element_coords(const AlgebraElement& x) {
    json arr = json::array();
    for (const GoldenScalar& c : x.coords()) arr.push_back(c.field_string());
    return arr;
}

std::string iso_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string dir_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

const std::map<std::string, std::array<long, 3>>& expected_table() {
    static const std::map<std::string, std::array<long, 3>> table = {
        {"Z", {2, 4, 4}},
        {"gaussian", {4, 8, 16}},
        {"eisenstein", {6, 12, 36}},
        {"hamilton", {8, 16, 64}},
        {"hurwitz", {24, 48, 576}},
        {"cayley_graves", {16, 32, 256}},
        {"coxeter_dickson", {240, 480, 57600}},
        {"cyclotomic10", {10, 20, 100}},
        {"icosian", {120, 240, 14400}},
        {"hybrid_2A2", {12, 24, 144}},
        {"hybrid_4A2", {24, 48, 576}},
        {"hybrid_2D4", {48, 96, 2304}},
    };
    return table;
}

std::string fibration_kind(const std::string& name) {
    static const std::map<std::string, std::string> kinds = {
        {"Z", "real"},
        {"gaussian", "complex"},
        {"eisenstein", "complex"},
        {"hamilton", "quaternionic"},
        {"hurwitz", "quaternionic"},
        {"cayley_graves", "alternative"},
        {"coxeter_dickson", "Moufang"},
        {"cyclotomic10", "complex/golden"},
        {"icosian", "quaternionic/golden"},
        {"hybrid_2A2", "quaternionic"},
        {"hybrid_4A2", "alternative"},
        {"hybrid_2D4", "alternative"},
    };
    auto it = kinds.find(name);
    return it == kinds.end() ? "?" : it->second;
}

}  // namespace

std::array<long, 3> expected_cardinalities(const std::string& name) {
    auto it = expected_table().find(name);
    if (it == expected_table().end()) throw UnknownOrderError("no expected row for " + name);
    return it->second;
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string element_list_digest(const std::vector<AlgebraElement>& elements) {
    json arr = json::array();
    for (const AlgebraElement& x : elements) arr.push_back(element_coords(x));
    return sha256_hex(canonical_dump(arr));
}

OrderAnalysis analyze_order(const std::string& order_name, const CertifyOptions& opts) {
    const Order& order = builtin(order_name);
    OrderAnalysis a;
    a.order = &order;
    a.axioms = verify_order_axioms(order);
    a.unit = enumerate_shell(order, GoldenScalar::one(order.ring()), opts.threads);
    a.profile = shell_profile(a.unit);
    a.shell_digest = element_list_digest(a.unit.elements);
    a.basis_digest = element_list_digest(order.basis());
    a.unit_report = verify_root_shell(shell_vector_set(a.unit));

    a.axis = axis_shell(order, a.unit);
    a.plane_level1 = enumerate_plane_shell(order, GoldenScalar::one(order.ring()), opts.threads);
    a.no_splitting = no_splitting_check(a.plane_level1, a.axis);
    a.axis_report = verify_root_shell(plane_vector_set(a.axis));
    a.doubling = doubling_report(order, a.unit, a.axis);
    a.balanced = balanced_shell(order, a.unit);
    const long unit_card = static_cast<long>(a.unit.elements.size());
    a.hull_axis = hull_vertex_checks(a.axis, unit_card);
    a.hull_balanced = hull_vertex_checks(a.balanced, unit_card);
    a.swap_axis = swap_check(a.axis);
    a.swap_balanced = swap_check(a.balanced);

    a.equator = equator_restriction(a.unit);
    a.fibration = fibration_profile(a.unit, opts.threads);
    a.loop = loop_checks(a.unit, opts.exhaustive_moufang);
    if (unit_card <= 24) {
        for (const AlgebraElement& u : a.unit.elements) {
            for (const AlgebraElement& v : a.unit.elements) {
                ++a.norm_identity_pairs;
                if (!norm_identity_check(u, v)) ++a.norm_identity_failures;
            }
        }
    }

    bool components_known = true;
    for (const ComponentInfo& c : a.unit_report.components) {
        if (c.label == "unknown") components_known = false;
    }
    bool fibration_ok = a.fibration.closed && a.fibration.constant &&
                        a.fibration.base_size == unit_card &&
                        a.fibration.fiber_size == unit_card &&
                        a.fibration.total_pairs == unit_card * unit_card;
    a.pass = a.axioms.all() && a.unit_report.all_axioms() && components_known &&
             a.no_splitting && a.axis_report.all_axioms() && a.doubling.ok &&
             a.hull_axis.ok() && a.hull_balanced.ok() && a.swap_axis && a.swap_balanced &&
             a.equator.ok() && fibration_ok && a.loop.all() && a.norm_identity_failures == 0;
    return a;
}

json certificate(const OrderAnalysis& a) {
    const Order& order = *a.order;
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["pass"] = a.pass;

    json ord;
    ord["name"] = order.name();
    ord["ring"] = ring_tag_name(order.ring());
    ord["ring_rank"] = order.ring_rank();
    ord["z_rank"] = order.z_rank();
    ord["basis_digest"] = a.basis_digest;
    json gram = json::array();
    for (const auto& row : order.gram()) {
        json r = json::array();
        for (const GoldenScalar& v : row) r.push_back(ring_value(v));
        gram.push_back(std::move(r));
    }
    ord["gram"] = std::move(gram);
    json ax;
    ax["unit_member"] = a.axioms.unit_member;
    ax["conj_stable"] = a.axioms.conj_stable;
    ax["mult_closed"] = a.axioms.mult_closed;
    ax["norms_in_ring"] = a.axioms.norms_in_ring;
    ax["polar_in_ring"] = a.axioms.polar_in_ring;
    ax["products_checked"] = a.axioms.products_checked;
    ord["axioms"] = std::move(ax);
    cert["order"] = std::move(ord);

    json shell;
    shell["cardinality"] = static_cast<long>(a.unit.elements.size());
    shell["level"] = ring_value(a.unit.level);
    shell["digest"] = a.shell_digest;
    json profile = json::array();
    for (const ProfileEntry& p : a.profile) {
        json e;
        e["type"] = p.type;
        e["count"] = p.count;
        profile.push_back(std::move(e));
    }
    shell["profile"] = std::move(profile);
    cert["shell"] = std::move(shell);

    json rs;
    rs["r1"] = a.unit_report.r1_central_symmetry;
    rs["r2"] = a.unit_report.r2_single_sphere;
    rs["r3"] = a.unit_report.r3_reflection_closed;
    rs["r4"] = a.unit_report.r4_cartan_in_ring;
    rs["rank"] = a.unit_report.rank;
    rs["crystallographic"] = a.unit_report.crystallographic;
    json values = json::array();
    for (const GoldenScalar& v : a.unit_report.cartan_value_set) values.push_back(v.field_string());
    rs["cartan_values"] = std::move(values);
    json comps = json::array();
    for (const ComponentInfo& c : a.unit_report.components) {
        json e;
        e["rank"] = c.rank;
        e["cardinality"] = c.cardinality;
        e["label"] = c.label;
        comps.push_back(std::move(e));
    }
    rs["components"] = std::move(comps);
    rs["label"] = composite_label(a.unit_report.components);
    cert["rootshell"] = std::move(rs);

    json plane;
    plane["axis_cardinality"] = static_cast<long>(a.axis.elements.size());
    plane["plane_shell_cardinality"] = static_cast<long>(a.plane_level1.elements.size());
    plane["balanced_cardinality"] = static_cast<long>(a.balanced.elements.size());
    plane["no_splitting"] = a.no_splitting;
    plane["axis_root_axioms_ok"] = a.axis_report.all_axioms();
    plane["doubling_label"] = a.doubling.label;
    plane["doubling_ok"] = a.doubling.ok;
    plane["hull_axis_ok"] = a.hull_axis.ok();
    plane["hull_balanced_ok"] = a.hull_balanced.ok();
    plane["swap_axis"] = a.swap_axis;
    plane["swap_balanced"] = a.swap_balanced;
    cert["plane"] = std::move(plane);

    json fib;
    fib["base_size"] = a.fibration.base_size;
    fib["fiber_size"] = a.fibration.fiber_size;
    fib["constant"] = a.fibration.constant;
    fib["closed"] = a.fibration.closed;
    fib["total_pairs"] = a.fibration.total_pairs;
    fib["equator_pairs"] = a.equator.pairs;
    fib["equator_failures"] = a.equator.failures;
    fib["equator_image_size"] = a.equator.image_size;
    fib["closure"] = a.loop.closure;
    fib["unit_member"] = a.loop.unit_member;
    fib["inverse_property"] = a.loop.inverse_property;
    fib["moufang"] = a.loop.moufang;
    fib["artin"] = a.loop.artin;
    fib["moufang_exhaustive"] = a.loop.moufang_exhaustive;
    fib["moufang_triples"] = a.loop.moufang_triples;
    fib["pair_checks"] = a.loop.pair_checks;
    fib["norm_identity_pairs"] = a.norm_identity_pairs;
    fib["norm_identity_failures"] = a.norm_identity_failures;
    cert["fibration"] = std::move(fib);

    json meta;
    meta["timestamp"] = iso_timestamp();
    meta["tool_version"] = kToolVersion;
    cert["meta"] = std::move(meta);
    return cert;
}

std::string certificate_digest(const json& cert) {
    json stripped = cert;
    stripped.erase("meta");
    return sha256_hex(canonical_dump(stripped));
}

RunInfo write_run(const std::vector<json>& certs, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::string stamp = dir_timestamp();
    fs::path dir = fs::path(out_dir) / ("run-" + stamp);
    for (int i = 2; fs::exists(dir); ++i) {
        dir = fs::path(out_dir) / ("run-" + stamp + "-" + std::to_string(i));
    }
    fs::create_directories(dir);

    RunInfo info;
    info.directory = dir.string();
    std::map<std::string, std::string> manifest;  // file -> digest, sorted
    for (const json& cert : certs) {
        std::string name = cert.at("order").at("name").get<std::string>();
        std::string file = name + ".cert.json";
        std::ofstream out(dir / file, std::ios::binary);
        out << canonical_dump(cert) << "\n";
        if (!out) throw std::runtime_error("failed to write " + (dir / file).string());
        manifest[file] = certificate_digest(cert);
        info.files.push_back((dir / file).string());
    }
    fs::path manifest_path = dir / "MANIFEST.sha256";
    std::ofstream mout(manifest_path, std::ios::binary);
    for (const auto& [file, digest] : manifest) {
        mout << digest << "  " << file << "\n";
    }
    if (!mout) throw std::runtime_error("failed to write manifest");
    info.manifest_path = manifest_path.string();
    return info;
}

Table1Result run_table1(const CertifyOptions& opts) {
    Table1Result result;
    result.all_match = true;
    result.all_pass = true;
    for (const std::string& name : builtin_names(opts.with_hybrids)) {
        OrderAnalysis a = analyze_order(name, opts);
        Table1Row row;
        row.name = name;
        row.shell = static_cast<long>(a.unit.elements.size());
        row.axis = static_cast<long>(a.axis.elements.size());
        row.balanced = static_cast<long>(a.balanced.elements.size());
        auto expect = expected_cardinalities(name);
        row.expect_shell = expect[0];
        row.expect_axis = expect[1];
        row.expect_balanced = expect[2];
        row.unit_label = composite_label(a.unit_report.components);
        row.doubling_label = a.doubling.label;
        row.fibration_kind = fibration_kind(name);
        row.match = row.shell == row.expect_shell && row.axis == row.expect_axis &&
                    row.balanced == row.expect_balanced;
        row.pass = a.pass;
        result.all_match = result.all_match && row.match;
        result.all_pass = result.all_pass && row.pass;
        result.certificates.push_back(certificate(a));
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace planeshell
