#include "minfact/json_io.hpp"

#include <sstream>

namespace minfact {

using nlohmann::json;

json to_json(const Permutation& p) {
    return json{{"n", p.size()}, {"images", p.images()}};
}

Permutation perm_from_json(const json& j) {
    std::vector<int> images = j.at("images").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(images.size()))
        throw std::invalid_argument("permutation: n does not match images");
    return Permutation(std::move(images));
}

json to_json(const NCPartition& p) {
    return json{{"ground", p.ground()}, {"blocks", p.blocks()}};
}

NCPartition partition_from_json(const json& j) {
    return NCPartition(j.at("ground").get<std::vector<int>>(),
                       j.at("blocks").get<std::vector<std::vector<int>>>());
}

json to_json(const Chain& c) {
    FactorizationType t = type_of(c);
    json parts = json::array();
    for (const auto& p : c.partitions) parts.push_back(to_json(p));
    return json{{"a", t.parts}, {"n", t.n}, {"chain", parts}};
}

Chain chain_from_json(const json& j) {
    Chain c;
    for (const auto& pj : j.at("chain")) c.partitions.push_back(partition_from_json(pj));
    if (c.partitions.empty()) throw std::invalid_argument("empty chain");
    if (j.contains("a")) {
        FactorizationType stated(j.at("a").get<std::vector<int>>());
        std::string why;
        if (!validate_chain(c, stated, &why))
            throw std::invalid_argument("chain does not match its stated type: " + why);
    }
    return c;
}

json to_json(const Factorization& f, int n) {
    std::vector<int> a;
    for (const auto& z : f.factors) {
        auto c = cycle_of(z);
        a.push_back(c ? static_cast<int>(c->size()) : 1);
    }
    json factors = json::array();
    for (const auto& z : f.factors) factors.push_back(to_json(z));
    return json{{"a", a}, {"n", n}, {"factors", factors}};
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json vars = json::object();
        for (const auto& [v, e] : m.exponents()) vars[std::to_string(v)] = e;
        terms.push_back(json{{"coeff", c.get_str()}, {"vars", vars}});
    }
    return terms;
}

Polynomial poly_from_json(const json& j) {
    Polynomial out;
    for (const auto& term : j) {
        std::vector<std::pair<int, int>> exps;
        for (const auto& [k, v] : term.at("vars").items())
            exps.emplace_back(std::stoi(k), v.get<int>());
        BigInt c(term.at("coeff").get<std::string>());
        out += Polynomial(Monomial(std::move(exps)), c);
    }
    return out;
}

namespace {

json parent_map_to_json(int n, const std::vector<int>& parent) {
    json pm = json::object();
    for (int i = 1; i < n; ++i) pm[std::to_string(i)] = parent[i];
    return json{{"n", n}, {"parent", pm}};
}

}  // namespace

json to_json(const AndreTree& t) { return parent_map_to_json(t.n, t.parent); }
json to_json(const CayleyTree& t) { return parent_map_to_json(t.n, t.parent); }

json final_chain_to_json(int n, int k, const std::vector<NCPartition>& chain) {
    json parts = json::array();
    for (const auto& p : chain) parts.push_back(to_json(p));
    return json{{"n", n}, {"k", k}, {"chain", parts}};
}

std::string text_of(const NCPartition& p) {
    std::ostringstream os;
    for (size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) os << "|";
        for (size_t i = 0; i < p.blocks()[b].size(); ++i) {
            if (i) os << ",";
            os << p.blocks()[b][i];
        }
    }
    return os.str();
}

std::string text_of(const Chain& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.partitions.size(); ++i) {
        if (i) os << " < ";
        os << text_of(c.partitions[i]);
    }
    return os.str();
}

std::string text_of(const Factorization& f) {
    std::ostringstream os;
    for (const auto& z : f.factors) {
        auto c = cycle_of(z);
        os << "(";
        if (c) {
            for (size_t i = 0; i < c->size(); ++i) {
                if (i) os << " ";
                os << (*c)[i];
            }
        } else {
            os << "id";
        }
        os << ")";
    }
    return os.str();
}

}  // namespace minfact
