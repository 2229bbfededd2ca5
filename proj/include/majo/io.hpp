#ifndef MAJO_IO_HPP
#define MAJO_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "majo/channel.hpp"
#include "majo/conditional.hpp"
#include "majo/linalg.hpp"

namespace majo {

// {"kind": "dice"|"joint"|"channel"|"game", "data": vector-or-matrix}.
// Rationals are strings ("2/3"), decimal strings ("0.25", converted via an
// exact power-of-ten denominator), or JSON integers.
using ParsedObject = std::variant<ProbVector, SubDistribution, JointDistribution, ChannelMatrix, Mat>;

ParsedObject parse_object(const std::string& path);
ParsedObject parse_object_json(const nlohmann::json& j);

Rat rat_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);
Mat mat_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const Mat& m);

nlohmann::json object_to_json(const ParsedObject& obj);

// Proof files. Witness matrices refer to the sorted (normalized) forms of
// the inputs; the verifier re-normalizes the inputs the same way.
struct CondProof {
    std::variant<CondWitness, DistinguishingCondGame> proof;
};
struct ChanProof {
    std::variant<ChanWitness, DistinguishingChanGame> proof;
};
using Proof = std::variant<CondProof, ChanProof>;

nlohmann::json proof_to_json(const Proof& p);
Proof proof_from_json(const nlohmann::json& j);
Proof load_proof(const std::string& path);
void save_proof(const Proof& p, const std::string& path);

}  // namespace majo

#endif
