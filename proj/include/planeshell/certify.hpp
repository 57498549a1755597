#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "planeshell/fibration.hpp"
#include "planeshell/planes.hpp"
#include "planeshell/rootshell.hpp"

namespace planeshell {

inline constexpr const char* kSchemaVersion = "planeshell-cert/1";
inline constexpr const char* kToolVersion = "planeshell 0.1.0";

struct CertifyOptions {
    int threads = 1;
    bool exhaustive_moufang = false;
    bool with_hybrids = false;
};

/// Everything computed by the per-order pipeline, reused by the certificate
/// writer, the synoptic table and the acceptance suite.
struct OrderAnalysis {
    const Order* order = nullptr;
    AxiomReport axioms;
    Shell unit;
    std::vector<ProfileEntry> profile;
    std::string shell_digest;
    std::string basis_digest;
    RootShellReport unit_report;

    PlaneShell axis;
    PlaneShell plane_level1;
    PlaneShell balanced;
    bool no_splitting = false;
    RootShellReport axis_report;
    DoublingReport doubling;
    HullReport hull_axis;
    HullReport hull_balanced;
    bool swap_axis = false;
    bool swap_balanced = false;

    EquatorReport equator;
    FibrationProfile fibration;
    LoopReport loop;
    long norm_identity_pairs = 0;     // balanced pairs checked when |U| <= 24
    long norm_identity_failures = 0;

    bool pass = false;
};

OrderAnalysis analyze_order(const std::string& order_name, const CertifyOptions& opts);

/// Canonical certificate including the meta block.
nlohmann::json certificate(const OrderAnalysis& a);

/// Canonical serialization: UTF-8, lexicographically sorted keys, no
/// insignificant whitespace, decimal integers.
std::string canonical_dump(const nlohmann::json& j);

/// SHA-256 of the canonical serialization with the meta block removed.
std::string certificate_digest(const nlohmann::json& cert);

/// Digest of a canonically serialized list of elements.
std::string element_list_digest(const std::vector<AlgebraElement>& elements);

struct RunInfo {
    std::string directory;
    std::string manifest_path;
    std::vector<std::string> files;
};

/// Writes <name>.cert.json files plus MANIFEST.sha256 ("<digest>  <file>"
/// per line, sorted) into a fresh timestamped directory under out_dir.
RunInfo write_run(const std::vector<nlohmann::json>& certs, const std::string& out_dir);

struct Table1Row {
    std::string name;
    long shell = 0, axis = 0, balanced = 0;
    long expect_shell = 0, expect_axis = 0, expect_balanced = 0;
    std::string unit_label, doubling_label, fibration_kind;
    bool match = false;
    bool pass = false;
};

struct Table1Result {
    std::vector<Table1Row> rows;
    std::vector<nlohmann::json> certificates;
    bool all_match = false;
    bool all_pass = false;
};

/// Recomputes the synoptic-table columns for the nine printed rows (plus the
/// hybrids when requested) and diffs them against the embedded expected
/// values.
Table1Result run_table1(const CertifyOptions& opts);

/// Expected (|S_1|, |axis|, |balanced|) for a built-in order.
std::array<long, 3> expected_cardinalities(const std::string& name);

}  // namespace planeshell
