// sdcyclic: construct, count, enumerate and verify self-dual cyclic codes of
// length 2^s n over F_{2^m} + u F_{2^m}, plus their binary-side Gray images.
// Thin shell over the shared C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfdualcyclic.h"

namespace {

struct CommonArgs {
    std::uint32_t m = 1, n = 1, s = 1;
    std::uint64_t modulus = 0;
    std::string out_path;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_out = true) {
    cmd->add_option("--m", args.m, "field degree m of F_{2^m} (1..16)")->required();
    cmd->add_option("--n", args.n, "odd co-length n")->required();
    cmd->add_option("--s", args.s, "2-adic exponent s >= 1 (length 2^s n)")->required();
    cmd->add_option("--modulus", args.modulus,
                    "field modulus bitmask over F_2 (default: built-in table)");
    if (with_out) cmd->add_option("--out", args.out_path, "write output to this file");
    cmd->add_flag("--quiet", args.quiet, "suppress informational notes");
}

int emit_error(const std::string& name, const std::string& message) {
    nlohmann::ordered_json err;
    err["error"] = name;
    err["message"] = message;
    std::cerr << err.dump() << "\n";
    return 2;
}

int emit_status(sdc_status st) {
    return emit_error(sdc_status_name(st), sdc_last_error());
}

bool validate_common(const CommonArgs& args) {
    std::vector<std::string> bad;
    if (args.m < 1 || args.m > 16) bad.push_back("--m must lie in 1..16");
    if (args.n < 1 || args.n % 2 == 0) bad.push_back("--n must be odd and positive");
    if (args.s < 1) bad.push_back("--s must be >= 1");
    if (bad.empty()) return true;
    std::string all;
    for (const auto& b : bad) {
        if (!all.empty()) all += "; ";
        all += b;
    }
    emit_error("FlagValidation", all);
    return false;
}

struct SystemHandle {
    sdc_system* sys = nullptr;
    ~SystemHandle() { sdc_system_close(sys); }
};

struct CString {
    char* str = nullptr;
    ~CString() { sdc_free_string(str); }
};

bool open_system(const CommonArgs& args, SystemHandle& handle, int& rc) {
    if (!validate_common(args)) {
        rc = 2;
        return false;
    }
    const sdc_status st = sdc_system_open(args.m, args.n, args.s, args.modulus, &handle.sys);
    if (st != SDC_OK) {
        rc = emit_status(st);
        return false;
    }
    return true;
}

int write_output(const CommonArgs& args, const std::string& text) {
    if (args.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) return emit_error("IoError", "cannot open " + args.out_path);
    out << text;
    return out ? 0 : emit_error("IoError", "short write to " + args.out_path);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string record_csv_line(const nlohmann::json& rec) {
    std::ostringstream line;
    line << rec["index"].get<std::uint64_t>() << ",";
    std::string choices;
    for (const auto& c : rec["choices"]) {
        if (!choices.empty()) choices += ";";
        choices += "j=" + std::to_string(c["j"].get<unsigned>());
        choices += " case=" + c["case"].get<std::string>();
        for (const auto& [key, value] : c["params"].items())
            choices += " " + key + "=" + value.dump();
        if (!c["b_poly"].is_null())
            choices += " b=" + c["b_poly"].get<std::string>();
    }
    line << csv_escape(choices) << ",";
    std::string gens;
    for (const auto& g : rec["generators"]) {
        if (!gens.empty()) gens += ";";
        gens += g["a_poly"].get<std::string>() + "|" + g["b_poly"].get<std::string>();
    }
    line << csv_escape(gens);
    return line.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual cyclic codes over F_{2^m} + u F_{2^m} of length 2^s n"};
    app.require_subcommand(1);

    CommonArgs factor_args;
    auto* factor_cmd = app.add_subcommand("factor",
        "factor x^n - 1, classify reciprocal mates, emit idempotents (JSON)");
    add_common(factor_cmd, factor_args);

    CommonArgs omega_args;
    std::uint32_t omega_j = 2, omega_nu = 1;
    bool omega_json = false;
    auto* omega_cmd = app.add_subcommand("omega",
        "list Omega_{j,nu} with digit trails and W-sets");
    add_common(omega_cmd, omega_args);
    omega_cmd->add_option("--j", omega_j, "self-reciprocal factor index (2..rho)")->required();
    omega_cmd->add_option("--nu", omega_nu, "level nu (1..2^(s-1))")->required();
    omega_cmd->add_flag("--json", omega_json, "emit JSON instead of text");

    CommonArgs count_args;
    std::string count_mode = "both";
    bool count_json = false;
    auto* count_cmd = app.add_subcommand("count", "count the self-dual cyclic codes");
    add_common(count_cmd, count_args);
    count_cmd->add_option("--mode", count_mode, "closed-form | enumerate | both")
        ->check(CLI::IsMember({"closed-form", "enumerate", "both"}));
    count_cmd->add_flag("--json", count_json, "wrap the count in a JSON object");

    CommonArgs enum_args;
    std::string enum_format = "json";
    std::uint64_t enum_start = 0, enum_limit = UINT64_MAX;
    auto* enum_cmd = app.add_subcommand("enumerate",
        "stream every code record (JSON lines or CSV)");
    add_common(enum_cmd, enum_args);
    enum_cmd->add_option("--format", enum_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enum_cmd->add_option("--start", enum_start, "first record index");
    enum_cmd->add_option("--limit", enum_limit, "maximum number of records");

    CommonArgs verify_args;
    std::int64_t verify_sample = -1;
    bool verify_all = false;
    std::uint32_t verify_threads = 0;
    auto* verify_cmd = app.add_subcommand("verify",
        "self-duality sweep: dimension + pairwise orthogonality (JSON report)");
    add_common(verify_cmd, verify_args);
    auto* sample_opt =
        verify_cmd->add_option("--sample", verify_sample, "verify this many sampled codes");
    verify_cmd->add_flag("--all", verify_all, "verify every code (default)")
        ->excludes(sample_opt);
    verify_cmd->add_option("--threads", verify_threads,
                           "worker threads (default: SDC_THREADS or hardware)");

    CommonArgs gray_args;
    std::uint64_t gray_index = 0;
    auto* gray_cmd = app.add_subcommand("gray",
        "generator matrix of the Gray image of one code");
    add_common(gray_cmd, gray_args);
    gray_cmd->add_option("--index", gray_index, "record index")->required();

    CommonArgs weights_args;
    std::uint64_t weights_index = 0;
    std::uint32_t weights_cap = 24;
    auto* weights_cmd = app.add_subcommand("weights",
        "Lee weight histogram of one code, cross-checked on the Gray side");
    add_common(weights_cmd, weights_args);
    weights_cmd->add_option("--index", weights_index, "record index")->required();
    weights_cmd->add_option("--max-dim", weights_cap,
                            "refuse walks beyond this many bits (default 24)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit_error("FlagValidation", e.what());
        return 1;
    }

    int rc = 0;
    if (factor_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(factor_args, h, rc)) return rc;
        CString text;
        const sdc_status st = sdc_factor_json(h.sys, &text.str);
        if (st != SDC_OK) return emit_status(st);
        return write_output(factor_args, text.str);
    }

    if (omega_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(omega_args, h, rc)) return rc;
        CString text;
        const sdc_status st = omega_json
                                  ? sdc_omega_json(h.sys, omega_j, omega_nu, &text.str)
                                  : sdc_omega_text(h.sys, omega_j, omega_nu, &text.str);
        if (st != SDC_OK) return emit_status(st);
        return write_output(omega_args, text.str);
    }

    if (count_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(count_args, h, rc)) return rc;
        int mode = SDC_COUNT_BOTH;
        if (count_mode == "closed-form") mode = SDC_COUNT_CLOSED_FORM;
        else if (count_mode == "enumerate") mode = SDC_COUNT_ENUMERATE;
        CString text;
        const sdc_status st = sdc_count_decimal(h.sys, mode, &text.str);
        if (st != SDC_OK) return emit_status(st);
        if (count_json) {
            nlohmann::ordered_json out;
            out["m"] = count_args.m;
            out["n"] = count_args.n;
            out["s"] = count_args.s;
            out["mode"] = count_mode;
            out["count"] = std::string(text.str);
            return write_output(count_args, out.dump(2) + "\n");
        }
        return write_output(count_args, std::string(text.str) + "\n");
    }

    if (enum_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(enum_args, h, rc)) return rc;
        std::ostringstream body;
        sdc_stream* stream = nullptr;
        sdc_status st = sdc_stream_open(h.sys, enum_start, &stream);
        if (st != SDC_OK) return emit_status(st);
        std::unique_ptr<sdc_stream, decltype(&sdc_stream_close)> guard(stream,
                                                                       &sdc_stream_close);
        if (enum_format == "csv") body << "index,choices,generators\n";
        for (std::uint64_t got = 0; got < enum_limit; ++got) {
            CString line;
            st = sdc_stream_next_json(stream, &line.str);
            if (st == SDC_ERR_END_OF_STREAM) break;
            if (st != SDC_OK) return emit_status(st);
            if (enum_format == "json") {
                body << line.str << "\n";
            } else {
                body << record_csv_line(nlohmann::json::parse(line.str)) << "\n";
            }
        }
        return write_output(enum_args, body.str());
    }

    if (verify_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(verify_args, h, rc)) return rc;
        const std::int64_t sample = sample_opt->count() ? verify_sample : -1;
        CString text;
        const sdc_status st = sdc_verify_json(h.sys, sample, verify_threads, &text.str);
        if (st != SDC_OK) return emit_status(st);
        return write_output(verify_args, text.str);
    }

    if (gray_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(gray_args, h, rc)) return rc;
        CString text;
        const sdc_status st = sdc_gray_text(h.sys, gray_index, &text.str);
        if (st != SDC_OK) return emit_status(st);
        return write_output(gray_args, text.str);
    }

    if (weights_cmd->parsed()) {
        SystemHandle h;
        if (!open_system(weights_args, h, rc)) return rc;
        CString text;
        const sdc_status st = sdc_weights_json(h.sys, weights_index, weights_cap, &text.str);
        if (st != SDC_OK) return emit_status(st);
        return write_output(weights_args, text.str);
    }

    return 0;
}
