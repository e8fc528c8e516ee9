#include "qsr/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace qsr {

using nlohmann::json;

namespace {

json component_to_json(const RealComponent& c) {
    std::string bits;
    for (std::int32_t e = c.digits.hi; e >= c.digits.lo; --e)
        bits += static_cast<char>('0' + c.digits.bit(e));
    return json{{"sign", std::string(1, sign_char(c.sign))},
                {"lo", c.digits.lo},
                {"hi", c.digits.hi},
                {"bits", bits}};
}

RealComponent component_from_json(const json& j) {
    const std::string sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-")
        throw std::invalid_argument("state record: sign must be \"+\" or \"-\"");
    DigitString d;
    d.lo = j.at("lo").get<std::int32_t>();
    d.hi = j.at("hi").get<std::int32_t>();
    const std::string bits = j.at("bits").get<std::string>();
    if (d.lo > d.hi || bits.size() != static_cast<std::size_t>(d.hi - d.lo + 1))
        throw std::invalid_argument("state record: bits length does not match [lo,hi]");
    d.bits.assign(bits.size(), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c != '0' && c != '1') throw std::invalid_argument("state record: bits must be over {0,1}");
        std::int32_t e = d.hi - static_cast<std::int32_t>(i);
        d.bits[static_cast<std::size_t>(e - d.lo)] = static_cast<std::uint8_t>(c - '0');
    }
    if (!d.well_formed())
        throw std::invalid_argument("state record: interval must contain exponent 0");
    return RealComponent{sign == "+" ? Sign::plus : Sign::minus, d};
}

json site_to_json(LatticeSite s) { return json{{"m", s.m}, {"h", s.h}}; }

LatticeSite site_from_json(const json& j) {
    return LatticeSite{j.at("m").get<std::int64_t>(), j.at("h").get<std::int64_t>()};
}

json state_to_json_obj(const StringState& s) {
    return json{{"re", component_to_json(s.re)},
                {"im", component_to_json(s.im)},
                {"site", site_to_json(s.site)}};
}

StringState state_from_json_obj(const json& j) {
    return StringState{component_from_json(j.at("re")), component_from_json(j.at("im")),
                       site_from_json(j.at("site"))};
}

// "01..." -> cyclic pattern "01"; "011" -> zero-extended pattern.
BitSpec bitspec_from_string(std::string s) {
    bool repeat = false;
    if (s.size() >= 3 && s.ends_with("...")) {
        repeat = true;
        s.resize(s.size() - 3);
    }
    return bits_pattern(std::move(s), repeat);
}

}  // namespace

std::string to_json(const StringState& s) { return state_to_json_obj(s).dump(); }

StringState state_from_json(std::string_view text) {
    return state_from_json_obj(json::parse(text));
}

std::string to_json(const Superposition& s) {
    json terms = json::array();
    for (const Term& t : s.terms())
        terms.push_back(json{{"state", state_to_json_obj(t.state)},
                             {"amp", json::array({t.amp.real(), t.amp.imag()})}});
    return json{{"site", site_to_json(s.site())}, {"terms", terms}}.dump();
}

Superposition superposition_from_json(std::string_view text) {
    json j = json::parse(text);
    LatticeSite site = site_from_json(j.at("site"));
    std::vector<Term> terms;
    for (const json& t : j.at("terms")) {
        const json& amp = t.at("amp");
        terms.push_back(Term{state_from_json_obj(t.at("state")),
                             Amplitude{amp.at(0).get<double>(), amp.at(1).get<double>()}});
    }
    return Superposition(std::move(terms), site);
}

std::string to_json(const Mixture& m) {
    json outcomes = json::array();
    for (const Mixture::Outcome& o : m.outcomes)
        outcomes.push_back(json{{"state", state_to_json_obj(o.state)},
                                {"compact", format_compact(o.state)},
                                {"p", o.probability}});
    return json{{"outcomes", outcomes}}.dump();
}

std::string to_json(const CauchyVerdict& v) {
    json j{{"status", to_string(v.status)}};
    if (!v.witness.empty()) {
        json w = json::array();
        for (auto [ell, h] : v.witness) w.push_back(json{{"ell", ell}, {"h", h}});
        j["witness"] = w;
    }
    if (v.refutation)
        j["refutation"] = json{{"ell", v.refutation->ell},
                               {"j", v.refutation->j},
                               {"k", v.refutation->k},
                               {"P", v.refutation->probability}};
    return j.dump();
}

std::string to_json(const OrderVerdict& v) {
    json j{{"status", v.status == OrderVerdict::Status::certified   ? "certified"
                      : v.status == OrderVerdict::Status::supported ? "supported"
                                                                    : "not_found"}};
    if (v.witness) j["witness"] = json{{"ell", v.witness->ell}, {"h", v.witness->h}};
    return j.dump();
}

StateSequence sequence_from_spec_json(std::string_view text) {
    json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    LatticeSite site{};
    if (j.contains("site")) site = site_from_json(j.at("site"));

    if (kind == "constant")
        return constant_seq(parse_compact(j.at("value").get<std::string>(), site));

    if (kind == "frozen_prefix") {
        BitSpec s = bitspec_from_string(j.at("s").get<std::string>());
        const std::string tail = j.value("tail", "plain");
        if (tail == "plain")
            return frozen_prefix_seq(std::move(s), FrozenTail::plain_superposition, site);
        if (tail == "bell")
            return frozen_prefix_seq(std::move(s), FrozenTail::bell_real_imag, site);
        throw std::invalid_argument("sequence spec: tail must be \"plain\" or \"bell\"");
    }

    if (kind == "bell_pair")
        return bell_pair_seq(bitspec_from_string(j.at("s").get<std::string>()),
                             bitspec_from_string(j.value("t", "0")), site);

    if (kind == "gaussian") {
        GaussianParams p;
        p.center = bitspec_from_string(j.at("center").get<std::string>());
        StringState sigma = parse_compact(j.at("sigma").get<std::string>());
        p.sigma = sigma.re;
        p.u = j.value("u", 0);
        if (j.contains("grid_bits_cap")) p.grid_bits_cap = j.at("grid_bits_cap").get<int>();
        return gaussian_seq(std::move(p), site);
    }

    throw std::invalid_argument("sequence spec: unknown kind \"" + kind + "\"");
}

}  // namespace qsr
