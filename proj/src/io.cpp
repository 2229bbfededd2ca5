#include "majo/io.hpp"

#include <fstream>
#include <stdexcept>

namespace majo {

using nlohmann::json;

Rat rat_from_json(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_float()) {
        // Exact binary value of the double; prefer strings for exactness.
        Rat r(j.get<double>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("expected a rational (string or number), got: " + j.dump());
}

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("expected a matrix (array of arrays)");
    Mat m(j.size(), j[0].size());
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t k = 0; k < m.cols; ++k) m(i, k) = rat_from_json(j[i][k]);
    }
    return m;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols; ++k) row.push_back(rat_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<Rat> vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a vector (array)");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

json vec_to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

json perm_to_json(const Perm& p) {
    json out = json::array();
    for (std::size_t v : p) out.push_back(v);
    return out;
}

Perm perm_from_json(const json& j) {
    Perm p;
    for (const auto& e : j) p.push_back(e.get<std::size_t>());
    if (!is_permutation(p)) throw std::invalid_argument("proof: invalid permutation");
    return p;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace

ParsedObject parse_object_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("data"))
        throw std::invalid_argument("object file needs {\"kind\": ..., \"data\": ...}");
    std::string kind = j["kind"].get<std::string>();
    const json& data = j["data"];
    if (kind == "dice") return ProbVector(vec_from_json(data));
    if (kind == "joint") return JointDistribution(mat_from_json(data));
    if (kind == "channel") return ChannelMatrix(mat_from_json(data));
    if (kind == "game") {
        if (data.is_array() && !data.empty() && data[0].is_array()) return mat_from_json(data);
        return ParsedObject(SubDistribution(vec_from_json(data)));
    }
    throw std::invalid_argument("unknown object kind: " + kind);
}

ParsedObject parse_object(const std::string& path) { return parse_object_json(load_json(path)); }

json object_to_json(const ParsedObject& obj) {
    json j;
    if (const auto* p = std::get_if<ProbVector>(&obj)) {
        j["kind"] = "dice";
        j["data"] = vec_to_json(p->p);
    } else if (const auto* t = std::get_if<SubDistribution>(&obj)) {
        j["kind"] = "game";
        j["data"] = vec_to_json(t->t);
    } else if (const auto* jd = std::get_if<JointDistribution>(&obj)) {
        j["kind"] = "joint";
        j["data"] = mat_to_json(jd->P);
    } else if (const auto* ch = std::get_if<ChannelMatrix>(&obj)) {
        j["kind"] = "channel";
        j["data"] = mat_to_json(ch->P);
    } else {
        j["kind"] = "game";
        j["data"] = mat_to_json(std::get<Mat>(obj));
    }
    return j;
}

json proof_to_json(const Proof& p) {
    json j;
    if (const auto* cp = std::get_if<CondProof>(&p)) {
        j["relation"] = "conditional";
        if (const auto* w = std::get_if<CondWitness>(&cp->proof)) {
            j["kind"] = "witness";
            json terms = json::array();
            for (const auto& t : w->terms)
                terms.push_back({{"S", mat_to_json(t.S)}, {"V", perm_to_json(t.V)}});
            j["terms"] = std::move(terms);
        } else {
            j["kind"] = "distinguishing-game";
            j["game"] = mat_to_json(std::get<DistinguishingCondGame>(cp->proof).game.T);
        }
    } else {
        const auto& hp = std::get<ChanProof>(p);
        j["relation"] = "channel";
        if (const auto* w = std::get_if<ChanWitness>(&hp.proof)) {
            j["kind"] = "witness";
            json terms = json::array();
            for (const auto& t : w->terms)
                terms.push_back({{"V", perm_to_json(t.V)}, {"S", mat_to_json(t.S)}});
            j["terms"] = std::move(terms);
        } else {
            j["kind"] = "distinguishing-game";
            j["game"] = mat_to_json(std::get<DistinguishingChanGame>(hp.proof).game.T);
        }
    }
    return j;
}

Proof proof_from_json(const json& j) {
    std::string relation = j.at("relation").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (relation == "conditional") {
        CondProof cp;
        if (kind == "witness") {
            CondWitness w;
            for (const auto& t : j.at("terms"))
                w.terms.push_back({mat_from_json(t.at("S")), perm_from_json(t.at("V"))});
            cp.proof = std::move(w);
        } else if (kind == "distinguishing-game") {
            cp.proof = DistinguishingCondGame{CondGameSpec(mat_from_json(j.at("game")))};
        } else {
            throw std::invalid_argument("unknown proof kind: " + kind);
        }
        return cp;
    }
    if (relation == "channel") {
        ChanProof hp;
        if (kind == "witness") {
            ChanWitness w;
            for (const auto& t : j.at("terms"))
                w.terms.push_back({perm_from_json(t.at("V")), mat_from_json(t.at("S"))});
            hp.proof = std::move(w);
        } else if (kind == "distinguishing-game") {
            hp.proof = DistinguishingChanGame{ChanGameSpec(mat_from_json(j.at("game")))};
        } else {
            throw std::invalid_argument("unknown proof kind: " + kind);
        }
        return hp;
    }
    throw std::invalid_argument("unknown proof relation: " + relation);
}

Proof load_proof(const std::string& path) { return proof_from_json(load_json(path)); }

void save_proof(const Proof& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << proof_to_json(p).dump(2) << "\n";
}

}  // namespace majo
