#include "minfact.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "json.hpp"
#include "minfact/chains.hpp"
#include "minfact/json_io.hpp"
#include "minfact/psi.hpp"
#include "minfact/trees.hpp"
#include "minfact/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mf_status set_error(mf_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Maps C++ failures onto the C status codes.
template <typename Fn>
mf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        return set_error(MF_EPARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(MF_EINVAL, e.what());
    } catch (const std::logic_error& e) {
        return set_error(MF_EINTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(MF_EINTERNAL, e.what());
    }
}

std::vector<int> type_vector(const int32_t* a, size_t len) {
    if (!a || len == 0) throw std::invalid_argument("factorization type is empty");
    return std::vector<int>(a, a + len);
}

mf_status emit(char** out, const std::string& s) {
    if (!out) return set_error(MF_EINVAL, "null output pointer");
    *out = dup_string(s);
    return MF_OK;
}

}  // namespace

extern "C" {

const char* mf_version(void) { return "1.0.0"; }

const char* mf_last_error(void) { return g_last_error.c_str(); }

void mf_free(char* s) { std::free(s); }

mf_status mf_type_product_rhs(const int32_t* a, size_t len, char** out_json) {
    return guarded([&] {
        return emit(out_json, minfact::to_json(minfact::type_product_rhs(type_vector(a, len))).dump());
    });
}

mf_status mf_hook_rhs(int32_t n, char** out_json) {
    return guarded([&] { return emit(out_json, minfact::to_json(minfact::hook_rhs(n)).dump()); });
}

mf_status mf_final_chain_rhs(int32_t n, int32_t k, char** out_json) {
    return guarded(
        [&] { return emit(out_json, minfact::to_json(minfact::final_chain_rhs(n, k)).dump()); });
}

mf_status mf_wsum_chains(const int32_t* a, size_t len, int32_t threads, char** out_json) {
    return guarded([&] {
        minfact::FactorizationType t(type_vector(a, len));
        return emit(out_json, minfact::to_json(minfact::weighted_sum(t, threads)).dump());
    });
}

mf_status mf_wsum_andre(int32_t n, char** out_json) {
    return guarded(
        [&] { return emit(out_json, minfact::to_json(minfact::andre_weighted_sum(n)).dump()); });
}

mf_status mf_wsum_cayley(int32_t n, char** out_json) {
    return guarded(
        [&] { return emit(out_json, minfact::to_json(minfact::cayley_weighted_sum(n)).dump()); });
}

mf_status mf_wsum_final(int32_t n, int32_t k, char** out_json) {
    return guarded(
        [&] { return emit(out_json, minfact::to_json(minfact::final_weighted_sum(n, k)).dump()); });
}

mf_status mf_poly_text(const char* poly_json, char** out_text) {
    return guarded([&] {
        if (!poly_json) throw std::invalid_argument("null polynomial");
        auto p = minfact::poly_from_json(nlohmann::json::parse(poly_json));
        return emit(out_text, p.text());
    });
}

mf_status mf_count_chains(const int32_t* a, size_t len, char** out_count) {
    return guarded([&] {
        minfact::FactorizationType t(type_vector(a, len));
        return emit(out_count, minfact::count_chains(t).get_str());
    });
}

struct mf_enum {
    std::variant<minfact::ChainEnumerator, minfact::FinalChainEnumerator,
                 minfact::AndreEnumerator, minfact::CayleyEnumerator>
        it;
    bool factorizations = false;  // chains rendered as factor tuples
    int n = 0, k = 0;
};

mf_status mf_enum_chains(const int32_t* a, size_t len, mf_enum** out) {
    return guarded([&] {
        minfact::FactorizationType t(type_vector(a, len));
        if (!out) return set_error(MF_EINVAL, "null output pointer");
        *out = new mf_enum{minfact::ChainEnumerator(t), false, t.n, 0};
        return MF_OK;
    });
}

mf_status mf_enum_factorizations(const int32_t* a, size_t len, mf_enum** out) {
    mf_status st = mf_enum_chains(a, len, out);
    if (st == MF_OK) (*out)->factorizations = true;
    return st;
}

mf_status mf_enum_andre(int32_t n, mf_enum** out) {
    return guarded([&] {
        if (!out) return set_error(MF_EINVAL, "null output pointer");
        *out = new mf_enum{minfact::AndreEnumerator(n), false, n, 0};
        return MF_OK;
    });
}

mf_status mf_enum_cayley(int32_t n, mf_enum** out) {
    return guarded([&] {
        if (!out) return set_error(MF_EINVAL, "null output pointer");
        *out = new mf_enum{minfact::CayleyEnumerator(n), false, n, 0};
        return MF_OK;
    });
}

mf_status mf_enum_final(int32_t n, int32_t k, mf_enum** out) {
    return guarded([&] {
        if (!out) return set_error(MF_EINVAL, "null output pointer");
        *out = new mf_enum{minfact::FinalChainEnumerator(n, k), false, n, k};
        return MF_OK;
    });
}

int mf_enum_next(mf_enum* e, char** out_json) {
    if (!e || !out_json) {
        set_error(MF_EINVAL, "null handle or output pointer");
        return -MF_EINVAL;
    }
    mf_status st = guarded([&] {
        std::string line;
        bool more = std::visit(
            [&](auto& it) {
                using T = std::decay_t<decltype(it)>;
                if (!it.next()) return false;
                if constexpr (std::is_same_v<T, minfact::ChainEnumerator>) {
                    if (e->factorizations) {
                        auto f = minfact::chain_to_factorization(it.chain());
                        line = minfact::to_json(f, e->n).dump();
                    } else {
                        line = minfact::to_json(it.chain()).dump();
                    }
                } else if constexpr (std::is_same_v<T, minfact::FinalChainEnumerator>) {
                    line = minfact::final_chain_to_json(e->n, e->k, it.chain()).dump();
                } else {
                    line = minfact::to_json(it.tree()).dump();
                }
                return true;
            },
            e->it);
        if (!more) {
            *out_json = nullptr;
            return MF_OK;
        }
        return emit(out_json, line);
    });
    if (st != MF_OK) return -st;
    return *out_json ? 1 : 0;
}

void mf_enum_close(mf_enum* e) { delete e; }

mf_status mf_psi_apply(const char* chain_json, char** out_json) {
    return guarded([&] {
        if (!chain_json) throw std::invalid_argument("null chain");
        minfact::Chain chain = minfact::chain_from_json(nlohmann::json::parse(chain_json));
        minfact::PsiResult res = minfact::psi(chain);
        nlohmann::json j{{"case", res.case_id},
                         {"gamma", minfact::to_json(res.gamma)},
                         {"bar", res.bar},
                         {"sigma", minfact::to_json(res.sigma)}};
        return emit(out_json, j.dump());
    });
}

mf_status mf_psi_invert(const char* gamma_json, int32_t bar, const int32_t* a, size_t len,
                        char** out_chain_json) {
    return guarded([&] {
        if (!gamma_json) throw std::invalid_argument("null gamma");
        minfact::Chain gamma = minfact::chain_from_json(nlohmann::json::parse(gamma_json));
        minfact::FactorizationType t(type_vector(a, len));
        minfact::Chain chain = minfact::psi_inverse(gamma, bar, t);
        return emit(out_chain_json, minfact::to_json(chain).dump());
    });
}

mf_status mf_verify_run(const char* checks, int32_t max_n, int32_t threads,
                        char** out_report) {
    return guarded([&] {
        minfact::BatteryOptions opt;
        if (max_n > 0) opt.max_n = max_n;
        if (threads > 0) opt.threads = threads;
        std::vector<std::string> names;
        if (checks && *checks) {
            std::string all(checks);
            size_t at = 0;
            while (at != std::string::npos) {
                size_t comma = all.find(',', at);
                names.push_back(all.substr(at, comma == std::string::npos ? comma : comma - at));
                at = comma == std::string::npos ? comma : comma + 1;
            }
        } else {
            names = minfact::check_names();
        }
        auto reports = minfact::run_checks(names, opt);
        std::string out;
        bool any_fail = false;
        for (const auto& r : reports) {
            out += minfact::report_json(r);
            out += "\n";
            any_fail = any_fail || !r.pass;
        }
        mf_status st = emit(out_report, out);
        if (st != MF_OK) return st;
        if (any_fail) return set_error(MF_EFAIL, "verification found a failing check");
        return MF_OK;
    });
}

mf_status mf_verify_names(char** out_names_json) {
    return guarded([&] {
        nlohmann::json j = minfact::check_names();
        return emit(out_names_json, j.dump());
    });
}

}  // extern "C"
