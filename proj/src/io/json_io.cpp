#include "curvedop/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace curvedop {

Json module_to_json(const GrDgModule& m) {
    Json j;
    j["basis"] = Json::array();
    for (const BasisElement& e : m.basis())
        j["basis"].push_back({{"label", e.label}, {"degree", e.degree}, {"weight", e.weight}});
    j["d"] = Json::array();
    for (int col = 0; col < m.dim(); ++col)
        for (const auto& [row, c] : m.d_column(col))
            j["d"].push_back({{"from", m.element(col).label},
                              {"to", m.element(row).label},
                              {"coeff", format_rational(c)}});
    return j;
}

GrDgModule module_from_json(const Json& j) {
    std::vector<BasisElement> basis;
    for (const Json& e : j.at("basis")) {
        BasisElement b;
        b.label = e.at("label").get<std::string>();
        b.degree = e.at("degree").get<int>();
        b.weight = e.at("weight").get<int>();
        if (b.weight < 0)
            throw std::invalid_argument("negative weight in module basis");
        basis.push_back(std::move(b));
    }
    GrDgModule m(std::move(basis));
    if (j.contains("d")) {
        for (const Json& e : j.at("d")) {
            int from = m.index_of(e.at("from").get<std::string>());
            int to = m.index_of(e.at("to").get<std::string>());
            if (from < 0 || to < 0)
                throw std::invalid_argument("unknown label in predifferential");
            m.add_d(from, to, parse_rational(e.at("coeff").get<std::string>()));
        }
    }
    return m;
}

Json key_to_json(const GeneratorKey& k) {
    Json j;
    j["family"] = family_name(k.family);
    switch (k.family) {
        case Family::SCLIE:
            j["n"] = k.n;
            break;
        case Family::CUAS:
            j["n"] = k.n;
            j["T"] = k.extra;
            break;
        case Family::CCX:
            j["ks"] = k.extra;
            break;
    }
    return j;
}

GeneratorKey key_from_json(const Json& j) {
    Family f = family_from_name(j.at("family").get<std::string>());
    switch (f) {
        case Family::SCLIE:
            return GeneratorKey::sclie(j.at("n").get<int>());
        case Family::CUAS: {
            std::vector<int> T;
            if (j.contains("T"))
                T = j.at("T").get<std::vector<int>>();
            return GeneratorKey::cuas(j.at("n").get<int>(), std::move(T));
        }
        case Family::CCX:
            return GeneratorKey::ccx(j.at("ks").get<std::vector<int>>());
    }
    throw std::invalid_argument("bad family");
}

Json algebra_to_json(const AlgebraStructure& alg) {
    Json j;
    j["family"] = family_name(alg.family);
    j["module"] = module_to_json(alg.module);
    j["ops"] = Json::array();
    for (const auto& [key, t] : alg.ops) {
        Json op;
        op["key"] = key_to_json(key);
        op["tensor"] = Json::array();
        for (const auto& [in, outsum] : t.entries) {
            for (const auto& [out, c] : outsum) {
                Json entry;
                entry["inputs"] = Json::array();
                for (int v : in)
                    entry["inputs"].push_back(alg.module.element(v).label);
                entry["output"] = alg.module.element(out).label;
                entry["coeff"] = format_rational(c);
                op["tensor"].push_back(std::move(entry));
            }
        }
        j["ops"].push_back(std::move(op));
    }
    return j;
}

AlgebraStructure algebra_from_json(const Json& j) {
    AlgebraStructure alg;
    alg.family = family_from_name(j.at("family").get<std::string>());
    alg.module = module_from_json(j.at("module"));
    for (const Json& op : j.at("ops")) {
        GeneratorKey key = key_from_json(op.at("key"));
        if (key.family != alg.family)
            throw std::invalid_argument("operation key family mismatch");
        SparseTensor t;
        t.arity = key.slots();
        t.degree = key.degree() - 1;
        for (const Json& e : op.at("tensor")) {
            std::vector<int> in;
            for (const Json& lbl : e.at("inputs")) {
                int idx = alg.module.index_of(lbl.get<std::string>());
                if (idx < 0)
                    throw std::invalid_argument("unknown input label");
                in.push_back(idx);
            }
            int out = alg.module.index_of(e.at("output").get<std::string>());
            if (out < 0)
                throw std::invalid_argument("unknown output label");
            t.add(in, out, parse_rational(e.at("coeff").get<std::string>()));
        }
        alg.set_op(key, std::move(t));
    }
    return alg;
}

Json coefficients_to_json(const ModuleCoefficients& mc, const AlgebraStructure& base) {
    Json j;
    j["module"] = module_to_json(mc.module);
    j["action"] = Json::array();
    for (const auto& [key, entries] : mc.action) {
        Json op;
        op["key"] = key_to_json(key);
        op["tensor"] = Json::array();
        for (const ActionEntry& e : entries) {
            for (const auto& [out, c] : e.output) {
                Json entry;
                entry["inputs"] = Json::array();
                for (std::size_t i = 0; i < e.inputs.size(); ++i) {
                    if (static_cast<int>(i) == e.mslot)
                        entry["inputs"].push_back(mc.module.element(e.inputs[i]).label);
                    else
                        entry["inputs"].push_back(base.module.element(e.inputs[i]).label);
                }
                entry["mslot"] = e.mslot;
                entry["output"] = mc.module.element(out).label;
                entry["coeff"] = format_rational(c);
                op["tensor"].push_back(std::move(entry));
            }
        }
        j["action"].push_back(std::move(op));
    }
    return j;
}

ModuleCoefficients coefficients_from_json(const Json& j, const AlgebraStructure& base) {
    ModuleCoefficients mc;
    mc.base = &base;
    mc.module = module_from_json(j.at("module"));
    if (j.contains("action")) {
        for (const Json& op : j.at("action")) {
            GeneratorKey key = key_from_json(op.at("key"));
            std::map<std::pair<std::vector<int>, int>, FormalSum<int>> grouped;
            for (const Json& e : op.at("tensor")) {
                int mslot = e.at("mslot").get<int>();
                std::vector<int> in;
                int i = 0;
                for (const Json& lbl : e.at("inputs")) {
                    int idx = (i == mslot) ? mc.module.index_of(lbl.get<std::string>())
                                           : base.module.index_of(lbl.get<std::string>());
                    if (idx < 0)
                        throw std::invalid_argument("unknown label in action entry");
                    in.push_back(idx);
                    ++i;
                }
                grouped[{in, mslot}].add(mc.module.index_of(e.at("output").get<std::string>()),
                                         parse_rational(e.at("coeff").get<std::string>()));
            }
            for (auto& [k, out] : grouped)
                mc.action[key].push_back({k.first, k.second, out});
        }
    }
    return mc;
}

Json truncation_to_json(const Truncation& t) {
    Json j;
    j["max_weight"] = t.max_weight;
    j["max_length"] = t.max_length;
    j["max_k"] = t.max_k;
    return j;
}

Json bar_complex_to_json(const AlgebraStructure& alg, const BarComplex& cx) {
    Json j;
    j["basis"] = Json::array();
    for (const BarWord& w : cx.basis) {
        Json e;
        e["key"] = key_to_json(w.key);
        e["letters"] = Json::array();
        for (int a : w.letters)
            e["letters"].push_back(alg.module.element(a).label);
        e["degree"] = w.degree(alg.module);
        e["weight"] = w.weight(alg.module);
        j["basis"].push_back(std::move(e));
    }
    auto matrix_to_triplets = [](const SparseMatrix& m) {
        Json t = Json::array();
        for (const auto& [rc, v] : m.entries())
            t.push_back({{"row", rc.first}, {"col", rc.second}, {"coeff", format_rational(v)}});
        return t;
    };
    j["d_b"] = matrix_to_triplets(cx.d_b);
    j["theta_insertion"] = matrix_to_triplets(cx.theta_insertion);
    j["interior_flags"] = cx.interior;
    return j;
}

std::string digest(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

AlgebraStructure load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open algebra file: " + path);
    Json j = Json::parse(in);
    return algebra_from_json(j);
}

ModuleCoefficients load_coefficients(const std::string& path, const AlgebraStructure& base) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open module file: " + path);
    Json j = Json::parse(in);
    return coefficients_from_json(j, base);
}

}  // namespace curvedop
