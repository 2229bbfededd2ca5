#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "majo/channel.hpp"
#include "majo/conditional.hpp"
#include "majo/entropy.hpp"
#include "majo/io.hpp"
#include "majo/majorization.hpp"
#include "majo/sim.hpp"

namespace {

using nlohmann::json;
using namespace majo;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

template <typename T>
T load_as(const std::string& path, const char* what) {
    ParsedObject obj = parse_object(path);
    if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
    throw std::invalid_argument(path + ": expected a " + std::string(what) + " object");
}

Mat load_game_matrix(const std::string& path) {
    ParsedObject obj = parse_object(path);
    if (auto* m = std::get_if<Mat>(&obj)) return std::move(*m);
    if (auto* t = std::get_if<SubDistribution>(&obj)) {
        Mat col(t->dim(), 1);
        for (std::size_t i = 0; i < t->dim(); ++i) col(i, 0) = t->t[i];
        return col;
    }
    throw std::invalid_argument(path + ": expected a game object");
}

std::uint64_t parse_seed(const std::string& s) {
    return std::stoull(s, nullptr, 0);  // accepts decimal and 0x-prefixed hex
}

void emit(bool as_json, const json& machine, const std::string& human) {
    if (as_json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

int run_check_maj(const std::string& a_path, const std::string& b_path, bool as_json) {
    ProbVector a = load_as<ProbVector>(a_path, "dice");
    ProbVector b = load_as<ProbVector>(b_path, "dice");
    auto violation = majorization_violation(a, b);
    if (!violation) {
        emit(as_json, {{"verdict", true}}, "holds: " + a_path + " majorizes " + b_path);
        return kExitHolds;
    }
    std::size_t w = *violation;
    json out = {{"verdict", false},
                {"violating_w", w},
                {"kyfan_first", rat_to_string(ky_fan(a, w))},
                {"kyfan_second", rat_to_string(ky_fan(b, w))}};
    emit(as_json, out,
         "does not hold: the w=" + std::to_string(w) + " game distinguishes (" +
             rat_to_string(ky_fan(b, w)) + " > " + rat_to_string(ky_fan(a, w)) + ")");
    return kExitFails;
}

int run_check_cmaj(const std::string& p_path, const std::string& q_path,
                   const std::string& proof_path, bool as_json) {
    JointDistribution p = load_as<JointDistribution>(p_path, "joint");
    JointDistribution q = load_as<JointDistribution>(q_path, "joint");
    CondMajResult res = cond_majorizes(p, q);
    if (!proof_path.empty()) save_proof(CondProof{res.proof}, proof_path);
    if (res.verdict) {
        emit(as_json, {{"verdict", true}, {"terms", std::get<CondWitness>(res.proof).terms.size()}},
             "holds: " + p_path + " conditionally majorizes " + q_path);
        return kExitHolds;
    }
    emit(as_json, {{"verdict", false}},
         "does not hold: a distinguishing conditional game exists" +
             std::string(proof_path.empty() ? "" : " (written to " + proof_path + ")"));
    return kExitFails;
}

int run_check_chmaj(const std::string& m_path, const std::string& n_path,
                    const std::string& proof_path, bool as_json) {
    ChannelMatrix m = load_as<ChannelMatrix>(m_path, "channel");
    ChannelMatrix n = load_as<ChannelMatrix>(n_path, "channel");
    ChanMajResult res = chan_majorizes(m, n);
    if (!proof_path.empty()) save_proof(ChanProof{res.proof}, proof_path);
    if (res.verdict) {
        emit(as_json, {{"verdict", true}, {"terms", std::get<ChanWitness>(res.proof).terms.size()}},
             "holds: " + n_path + " simulates " + m_path);
        return kExitHolds;
    }
    emit(as_json, {{"verdict", false}},
         "does not hold: a distinguishing channel game exists" +
             std::string(proof_path.empty() ? "" : " (written to " + proof_path + ")"));
    return kExitFails;
}

int run_entropy(const std::string& path, bool as_json) {
    ChannelMatrix n = load_as<ChannelMatrix>(path, "channel");
    ChannelEntropyResult res = channel_entropy(n);
    emit(as_json, {{"bits", res.bits}, {"minimizing_input", res.minimizing_input}},
         std::to_string(res.bits) + " bits, minimizing input " +
             std::to_string(res.minimizing_input));
    return kExitHolds;
}

struct GameArgs {
    std::string obj_path, game_path;
    bool dice = false, joint = false, channel = false;
};

void require_family(const GameArgs& a) {
    if (!a.dice && !a.joint && !a.channel)
        throw std::invalid_argument("one of --dice/--joint/--channel is required");
}

int run_payoff(const GameArgs& a, bool as_json) {
    require_family(a);
    Mat t = load_game_matrix(a.game_path);
    Rat value;
    if (a.dice) {
        ProbVector p = load_as<ProbVector>(a.obj_path, "dice");
        if (t.cols != 1) throw std::invalid_argument("dice games take a vector game");
        value = game_payoff(p, SubDistribution(t.col(0)));
    } else if (a.joint) {
        value = cond_payoff(load_as<JointDistribution>(a.obj_path, "joint"), CondGameSpec(t)).value;
    } else {
        value = chan_payoff(load_as<ChannelMatrix>(a.obj_path, "channel"), ChanGameSpec(t)).value;
    }
    emit(as_json, {{"payoff", rat_to_string(value)}, {"payoff_approx", rat_to_double(value)}},
         rat_to_string(value) + " (= " + std::to_string(rat_to_double(value)) + ")");
    return kExitHolds;
}

int run_simulate(const GameArgs& a, std::uint64_t trials, const std::string& seed_str,
                 bool as_json) {
    require_family(a);
    SimConfig cfg{trials, parse_seed(seed_str)};
    Mat t = load_game_matrix(a.game_path);
    SimResult res;
    if (a.dice) {
        ProbVector p = load_as<ProbVector>(a.obj_path, "dice");
        if (t.cols != 1) throw std::invalid_argument("dice games take a vector game");
        res = simulate_dice_game(p, SubDistribution(t.col(0)), cfg);
    } else if (a.joint) {
        res = simulate_cond_game(load_as<JointDistribution>(a.obj_path, "joint"), CondGameSpec(t),
                                 cfg);
    } else {
        res = simulate_chan_game(load_as<ChannelMatrix>(a.obj_path, "channel"), ChanGameSpec(t),
                                 cfg);
    }
    emit(as_json,
         {{"wins", res.wins},
          {"trials", res.trials},
          {"estimate", res.estimate},
          {"std_error", res.std_error}},
         std::to_string(res.wins) + "/" + std::to_string(res.trials) +
             " wins, estimate = " + std::to_string(res.estimate) +
             " +- " + std::to_string(res.std_error));
    return kExitHolds;
}

int run_verify_proof(const std::string& proof_path, const std::string& a_path,
                     const std::string& b_path, bool as_json) {
    Proof proof = load_proof(proof_path);
    bool ok = false;
    std::string detail;
    if (const auto* cp = std::get_if<CondProof>(&proof)) {
        JointDistribution p = load_as<JointDistribution>(a_path, "joint");
        JointDistribution q = load_as<JointDistribution>(b_path, "joint");
        if (const auto* w = std::get_if<CondWitness>(&cp->proof)) {
            ok = verify_cond_witness(*w, p, q);
            detail = "conditional witness";
        } else {
            ok = verify_cond_distinguishing(std::get<DistinguishingCondGame>(cp->proof), p, q);
            detail = "distinguishing conditional game";
        }
    } else {
        const auto& hp = std::get<ChanProof>(proof);
        ChannelMatrix m = load_as<ChannelMatrix>(a_path, "channel");
        ChannelMatrix n = load_as<ChannelMatrix>(b_path, "channel");
        if (const auto* w = std::get_if<ChanWitness>(&hp.proof)) {
            ok = verify_chan_witness(*w, m, n);
            detail = "channel witness";
        } else {
            ok = verify_chan_distinguishing(std::get<DistinguishingChanGame>(hp.proof), m, n);
            detail = "distinguishing channel game";
        }
    }
    emit(as_json, {{"verified", ok}, {"proof", detail}},
         detail + (ok ? ": verified" : ": VERIFICATION FAILED"));
    return ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact majorization pre-orders from games of chance"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON on stdout");

    std::string a_path, b_path, proof_path;
    auto* maj = app.add_subcommand("check-maj", "does the first dice majorize the second?");
    maj->add_option("first", a_path)->required();
    maj->add_option("second", b_path)->required();

    auto* cmaj = app.add_subcommand("check-cmaj", "does P conditionally majorize Q?");
    cmaj->add_option("P", a_path)->required();
    cmaj->add_option("Q", b_path)->required();
    cmaj->add_option("--proof", proof_path, "write the witness/certificate here");

    auto* chmaj = app.add_subcommand("check-chmaj", "is M channel-majorized by N?");
    chmaj->add_option("M", a_path)->required();
    chmaj->add_option("N", b_path)->required();
    chmaj->add_option("--proof", proof_path, "write the witness/certificate here");

    auto* ent = app.add_subcommand("entropy", "channel entropy in bits");
    ent->add_option("N", a_path)->required();

    GameArgs ga;
    std::uint64_t trials = 100000;
    std::string seed_str = "0";
    auto add_game_opts = [&](CLI::App* sub) {
        sub->add_option("object", ga.obj_path)->required();
        sub->add_option("--game", ga.game_path)->required();
        auto* d = sub->add_flag("--dice", ga.dice);
        auto* j = sub->add_flag("--joint", ga.joint);
        auto* c = sub->add_flag("--channel", ga.channel);
        d->excludes(j)->excludes(c);
        j->excludes(c);
    };
    auto* pay = app.add_subcommand("payoff", "analytic optimal win probability");
    add_game_opts(pay);
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo estimate of the payoff");
    add_game_opts(sim);
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed_str, "decimal or 0x-prefixed hex");

    std::string verify_proof_path;
    auto* ver = app.add_subcommand("verify-proof", "re-verify a stored proof against its inputs");
    ver->add_option("proof", verify_proof_path)->required();
    ver->add_option("first", a_path)->required();
    ver->add_option("second", b_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (maj->parsed()) return run_check_maj(a_path, b_path, as_json);
        if (cmaj->parsed()) return run_check_cmaj(a_path, b_path, proof_path, as_json);
        if (chmaj->parsed()) return run_check_chmaj(a_path, b_path, proof_path, as_json);
        if (ent->parsed()) return run_entropy(a_path, as_json);
        if (pay->parsed()) return run_payoff(ga, as_json);
        if (sim->parsed()) return run_simulate(ga, trials, seed_str, as_json);
        if (ver->parsed()) return run_verify_proof(verify_proof_path, a_path, b_path, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
