// Command-line front end. Everything goes through the C API in minfact.h;
// this translation unit never touches the C++ core directly.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minfact.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 1;

int max_n_cap() {
    const char* env = std::getenv("MINFACT_MAX_N");
    if (!env || !*env) return 9;
    return std::max(1, std::atoi(env));
}

struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw CLI::ValidationError("--output", "cannot open " + path);
        os = &file;
    }
};

std::vector<int32_t> parse_type(const std::string& s) {
    std::vector<int32_t> a;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        a.push_back(std::atoi(item.c_str()));
    }
    return a;
}

int implied_n(const std::vector<int32_t>& a) {
    int n = 1;
    for (int ai : a) n += ai - 1;
    return n;
}

[[noreturn]] void die_api(const char* what) {
    std::cerr << what << ": " << mf_last_error() << "\n";
    std::exit(kExitUsage);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    mf_free(s);
    return out;
}

// Text renderings of the JSON wire forms, for --format text.
std::string partition_text(const nlohmann::json& p) {
    std::string out;
    for (size_t b = 0; b < p.at("blocks").size(); ++b) {
        if (b) out += "|";
        const auto& blk = p.at("blocks")[b];
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blk[i].get<int>());
        }
    }
    return out;
}

std::string item_text(const nlohmann::json& j) {
    if (j.contains("chain")) {
        std::string out;
        for (size_t i = 0; i < j.at("chain").size(); ++i) {
            if (i) out += " < ";
            out += partition_text(j.at("chain")[i]);
        }
        return out;
    }
    if (j.contains("factors")) {
        std::string out;
        for (const auto& f : j.at("factors")) {
            // recover the cycle from the image table
            std::vector<int> images = f.at("images").get<std::vector<int>>();
            std::vector<bool> seen(images.size() + 1, false);
            std::string cyc;
            for (size_t s = 1; s <= images.size(); ++s) {
                if (seen[s] || images[s - 1] == static_cast<int>(s)) continue;
                cyc += "(";
                int x = static_cast<int>(s);
                bool first = true;
                while (!seen[x]) {
                    seen[x] = true;
                    cyc += (first ? "" : " ") + std::to_string(x);
                    first = false;
                    x = images[x - 1];
                }
                cyc += ")";
            }
            out += cyc.empty() ? "(id)" : cyc;
        }
        return out;
    }
    if (j.contains("parent")) {
        std::string out;
        const auto& pm = j.at("parent");
        for (int i = 1; i <= static_cast<int>(pm.size()); ++i) {
            if (i > 1) out += " ";
            out += std::to_string(i) + ":" + std::to_string(pm.at(std::to_string(i)).get<int>());
        }
        return out;
    }
    return j.dump();
}

int run_enumerate(const std::string& kind, const std::vector<int32_t>& a, int n, int k,
                  const std::string& format, long long limit, Out& out) {
    mf_enum* e = nullptr;
    mf_status st;
    if (kind == "chains")
        st = mf_enum_chains(a.data(), a.size(), &e);
    else if (kind == "factorizations")
        st = mf_enum_factorizations(a.data(), a.size(), &e);
    else if (kind == "andre")
        st = mf_enum_andre(n, &e);
    else if (kind == "cayley")
        st = mf_enum_cayley(n, &e);
    else
        st = mf_enum_final(n, k, &e);
    if (st != MF_OK) die_api("enumerate");
    long long produced = 0;
    while (limit < 0 || produced < limit) {
        char* line = nullptr;
        int rc = mf_enum_next(e, &line);
        if (rc < 0) {
            mf_enum_close(e);
            die_api("enumerate");
        }
        if (rc == 0) break;
        std::string item = take(line);
        if (format == "text")
            *out.os << item_text(nlohmann::json::parse(item)) << "\n";
        else
            *out.os << item << "\n";
        ++produced;
    }
    mf_enum_close(e);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification of minimal cycle factorizations,\n"
                 "noncrossing partition chains, and their weight generating functions."};
    app.require_subcommand(1);
    const int cap = max_n_cap();

    std::string a_str, format = "json", output, chain_arg, gamma_arg, checks;
    int n = 0, k = 0, bar = 0, max_n = 7;
    long long limit = -1;
    int parallel = static_cast<int>(std::thread::hardware_concurrency());
    if (parallel < 1) parallel = 1;
    bool invert = false, verify_all = false;

    auto add_common = [&](CLI::App* cmd, bool needs_obj) {
        if (needs_obj) {
            cmd->add_option("--a", a_str, "factorization type, e.g. 2,2,3");
            cmd->add_option("--n", n, "ground size");
            cmd->add_option("--k", k, "final-chain length");
        }
        cmd->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--output", output, "write to this file instead of stdout");
    };

    auto* enumerate = app.add_subcommand("enumerate", "stream objects, one per line");
    std::string kind;
    enumerate->add_option("kind", kind, "chains|factorizations|andre|cayley|final")
        ->required()
        ->check(CLI::IsMember({"chains", "factorizations", "andre", "cayley", "final"}));
    enumerate->add_option("--limit", limit, "stop after this many items");
    add_common(enumerate, true);

    auto* wsum = app.add_subcommand("wsum", "exact weighted sum as a polynomial");
    std::string wkind;
    wsum->add_option("kind", wkind, "chains|andre|cayley|final")
        ->required()
        ->check(CLI::IsMember({"chains", "andre", "cayley", "final"}));
    wsum->add_option("--parallel", parallel, "worker threads (chains only; same bytes out)");
    add_common(wsum, true);
    std::string wformat_default = "text";

    auto* psi = app.add_subcommand("psi", "apply the merge bijection to a chain");
    psi->add_option("--chain", chain_arg, "chain JSON, @file, or - for stdin");
    psi->add_flag("--invert", invert, "reconstruct the chain from (gamma, bar)");
    psi->add_option("--gamma", gamma_arg, "image chain JSON (with --invert)");
    psi->add_option("--bar", bar, "bar position (with --invert)");
    psi->add_option("--a", a_str, "original type (with --invert)");
    psi->add_option("--output", output, "write to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_flag("--all", verify_all, "run every check family (default)");
    verify->add_option("--check", checks, "comma-separated family names");
    verify->add_option("--max-n", max_n, "main exhaustive bound (default 7)");
    verify->add_option("--parallel", parallel, "worker threads (timing only, same bytes out)");
    verify->add_option("--output", output, "write to this file instead of stdout");

    auto* exportc = app.add_subcommand("export", "chain-count table as CSV");
    exportc->add_option("--max-n", max_n, "largest ground size (default 7)");
    exportc->add_option("--out,--output", output, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : kExitUsage;
    }

    Out out;
    try {
        out.open(output);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    auto read_arg_or_stream = [](const std::string& arg) -> std::string {
        if (arg == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        if (!arg.empty() && arg[0] == '@') {
            std::ifstream f(arg.substr(1));
            std::ostringstream ss;
            ss << f.rdbuf();
            return ss.str();
        }
        return arg;
    };

    std::vector<int32_t> a = parse_type(a_str);

    if (enumerate->parsed() || wsum->parsed()) {
        const std::string& which = enumerate->parsed() ? kind : wkind;
        bool takes_type = which == "chains" || which == "factorizations";
        if (takes_type && a.empty()) {
            std::cerr << "--a is required for " << which << "\n";
            return kExitUsage;
        }
        if (!takes_type && which != "final" && n == 0) {
            std::cerr << "--n is required for " << which << "\n";
            return kExitUsage;
        }
        if (which == "final" && (n == 0 || k == 0)) {
            std::cerr << "--n and --k are required for final\n";
            return kExitUsage;
        }
        int effective_n = takes_type ? implied_n(a) : n;
        if (effective_n > cap) {
            std::cerr << "n = " << effective_n << " exceeds MINFACT_MAX_N = " << cap << "\n";
            return kExitUsage;
        }
    }

    if (enumerate->parsed())
        return run_enumerate(kind, a, n, k, format, limit, out);

    if (wsum->parsed()) {
        if (!wsum->count("--format")) format = wformat_default;
        char* poly = nullptr;
        mf_status st;
        if (wkind == "chains")
            st = mf_wsum_chains(a.data(), a.size(), parallel, &poly);
        else if (wkind == "andre")
            st = mf_wsum_andre(n, &poly);
        else if (wkind == "cayley")
            st = mf_wsum_cayley(n, &poly);
        else
            st = mf_wsum_final(n, k, &poly);
        if (st != MF_OK) die_api("wsum");
        std::string poly_json = take(poly);
        if (format == "text") {
            char* text = nullptr;
            if (mf_poly_text(poly_json.c_str(), &text) != MF_OK) die_api("wsum");
            *out.os << take(text) << "\n";
        } else {
            *out.os << poly_json << "\n";
        }
        return 0;
    }

    if (psi->parsed()) {
        if (invert) {
            if (gamma_arg.empty() || bar == 0 || a.empty()) {
                std::cerr << "--invert needs --gamma, --bar and --a\n";
                return kExitUsage;
            }
            char* res = nullptr;
            std::string gamma = read_arg_or_stream(gamma_arg);
            if (mf_psi_invert(gamma.c_str(), bar, a.data(), a.size(), &res) != MF_OK)
                die_api("psi");
            *out.os << take(res) << "\n";
            return 0;
        }
        if (chain_arg.empty()) {
            std::cerr << "psi needs --chain\n";
            return kExitUsage;
        }
        char* res = nullptr;
        std::string chain = read_arg_or_stream(chain_arg);
        if (mf_psi_apply(chain.c_str(), &res) != MF_OK) die_api("psi");
        *out.os << take(res) << "\n";
        return 0;
    }

    if (verify->parsed()) {
        (void)verify_all;  // the full battery is already the default
        if (max_n > cap) {
            std::cerr << "--max-n exceeds MINFACT_MAX_N = " << cap << "\n";
            return kExitUsage;
        }
        char* report = nullptr;
        mf_status st = mf_verify_run(checks.empty() ? nullptr : checks.c_str(), max_n,
                                     parallel, &report);
        if (st != MF_OK && st != MF_EFAIL) die_api("verify");
        *out.os << take(report);
        return st == MF_EFAIL ? kExitCheckFailed : 0;
    }

    if (exportc->parsed()) {
        if (max_n > cap) {
            std::cerr << "--max-n exceeds MINFACT_MAX_N = " << cap << "\n";
            return kExitUsage;
        }
        *out.os << "n,r,a,count,formula_count,match\n";
        for (int nn = 2; nn <= max_n; ++nn) {
            // compositions of nn-1 into parts >= 1, each part + 1 = a_i
            std::vector<int32_t> cur;
            std::function<void(int)> rec = [&](int remaining) {
                if (remaining == 0) {
                    char* cnt = nullptr;
                    if (mf_count_chains(cur.data(), cur.size(), &cnt) != MF_OK)
                        die_api("export");
                    std::string count = take(cnt);
                    unsigned long long formula = 1;
                    for (size_t i = 1; i < cur.size(); ++i) formula *= nn;
                    std::string a_text = "(";
                    for (size_t i = 0; i < cur.size(); ++i)
                        a_text += (i ? "," : "") + std::to_string(cur[i]);
                    a_text += ")";
                    *out.os << nn << "," << cur.size() << ",\"" << a_text << "\"," << count
                            << "," << formula << ","
                            << (count == std::to_string(formula) ? "yes" : "no") << "\n";
                    return;
                }
                for (int step = 1; step <= remaining; ++step) {
                    cur.push_back(step + 1);
                    rec(remaining - step);
                    cur.pop_back();
                }
            };
            rec(nn - 1);
        }
        return 0;
    }

    return kExitUsage;
}
