#include "demos.hpp"

#include "qsr/json_io.hpp"
#include "qsr/oracle.hpp"

#include <json.hpp>

#include <sstream>

namespace qsr::cli {

void DemoReport::check(std::string label, bool passed, std::string detail) {
    ok = ok && passed;
    note(std::move(label), std::string(passed ? "pass" : "FAIL") +
                               (detail.empty() ? "" : " (" + detail + ")"));
}

std::string DemoReport::to_text() const {
    std::ostringstream os;
    os << "demo " << name << "\n";
    for (const auto& [label, value] : lines) os << "  " << label << ": " << value << "\n";
    os << (ok ? "OK" : "FAILED") << "\n";
    return os.str();
}

std::string DemoReport::to_json() const {
    nlohmann::json j{{"name", name}, {"ok", ok}};
    nlohmann::json items = nlohmann::json::array();
    for (const auto& [label, value] : lines)
        items.push_back(nlohmann::json{{"label", label}, {"value", value}});
    j["lines"] = items;
    return j.dump();
}

namespace {

std::string witness_text(const CauchyVerdict& v) {
    std::ostringstream os;
    os << to_string(v.status);
    if (!v.witness.empty()) {
        os << ", witness";
        for (auto [ell, h] : v.witness) os << " (" << ell << "->" << h << ")";
    }
    if (v.refutation)
        os << ", refuted at ell=" << v.refutation->ell << " j=" << v.refutation->j
           << " k=" << v.refutation->k << " P=" << v.refutation->probability;
    return os.str();
}

DemoReport demo_exam1(const Horizon& hz) {
    DemoReport r{"exam1", true, {}};
    StateSequence seq = frozen_prefix_seq(bits_zero(), FrozenTail::plain_superposition);
    r.note("element 2", seq.at(2).to_text());

    CauchyVerdict v = cauchy_check(seq, hz);
    r.note("cauchy", witness_text(v));
    r.check("certified", v.status == CauchyVerdict::Status::certified);
    bool witness_is_ell = true;
    for (auto [ell, h] : v.witness) witness_is_ell = witness_is_ell && h == ell;
    r.check("witness h(ell)=ell", witness_is_ell);

    bool exact = true;
    for (int ell = 1; ell <= hz.ell_max && exact; ++ell)
        for (int j = ell + 1; j <= ell + 4 && exact; ++j)
            for (int k = ell + 1; k <= ell + 4 && exact; ++k)
                exact = pair_prob(seq, seq, j, k, Accuracy(ell)) == 1.0;
    r.check("pair probability exactly 1 for j,k > ell", exact);

    StateSequence rep = representative(seq, hz);
    r.note("representative element 3", format_compact(rep.at(3).basis_state()));
    r.check("representative ties broken to the 0-tail term",
            eq_A(rep.at(3).basis_state(), zero_state()));
    return r;
}

DemoReport demo_bell(const Horizon& hz) {
    DemoReport r{"bell", true, {}};
    StateSequence seq = bell_pair_seq(bits_zero(), bits_zero());
    r.note("element 2", seq.at(2).to_text());
    r.check("elements are entangled two-term superpositions", seq.at(2).size() == 2);

    CauchyVerdict v = cauchy_check(seq, hz);
    r.note("cauchy", witness_text(v));
    r.check("certified", v.status == CauchyVerdict::Status::certified);

    bool exact = true;
    for (int ell = 1; ell <= hz.ell_max && exact; ++ell)
        exact = pair_prob(seq, seq, ell + 1, ell + 2, Accuracy(ell)) == 1.0;
    r.check("pair probability exactly 1 for j,k > ell", exact);
    return r;
}

DemoReport demo_gaussian(const Horizon& hz) {
    DemoReport r{"gaussian", true, {}};
    GaussianParams params;
    params.center = bits_pattern("1", /*repeat=*/false);  // centered at 1
    params.sigma = pow2_component(-7);
    params.u = 0;
    StateSequence seq = gaussian_seq(params);
    r.note("support size at n=8", std::to_string(seq.at(8).size()));
    r.note("support size at n=24", std::to_string(seq.at(24).size()));

    CauchyVerdict v = cauchy_check(seq, hz);
    r.note("cauchy", witness_text(v));
    r.check("supported at the horizon", v.status == CauchyVerdict::Status::supported);
    return r;
}

DemoReport demo_entangled_real(const Horizon& hz) {
    DemoReport r{"entangled-real", true, {}};
    // Real prefix 0.010101... (one third); every element entangles the real
    // and imaginary digits at the working exponent.
    BitSpec third = [](std::int32_t e) { return e < 0 && (-e) % 2 == 0 ? 1 : 0; };
    StateSequence seq = frozen_prefix_seq(third, FrozenTail::bell_real_imag);
    r.note("element 3", seq.at(3).to_text());

    CauchyVerdict v = cauchy_check(seq, hz);
    r.note("cauchy", witness_text(v));
    r.check("certified", v.status == CauchyVerdict::Status::certified);

    StateSequence rep = representative(seq, hz);
    bool im_zero = true;
    for (int n = 1; n <= 64 && im_zero; ++n)
        im_zero = rep.at(n).basis_state().im.is_zero();
    r.check("representative imaginary component is the zero state for n <= 64", im_zero);

    CauchyVerdict im_eq = seq_eq(seq, constant_seq(zero_state()), Mode::imaginary, hz);
    r.note("imaginary part vs constant 0", witness_text(im_eq));
    r.check("imaginary part equals 0", im_eq.passed());
    return r;
}

DemoReport demo_completeness(const Horizon& hz) {
    DemoReport r{"completeness", true, {}};
    // Rows truncate one third (0.010101...) to min(n, m) digits; the
    // diagonal is the full truncation sequence.
    BitSpec third = [](std::int32_t e) { return e < 0 && (-e) % 2 == 0 ? 1 : 0; };
    auto grid = [third](int n, int m) {
        int depth = std::min(n, m);
        DigitString d;
        d.lo = -depth;
        d.hi = 0;
        d.bits.assign(static_cast<std::size_t>(depth + 1), 0);
        for (std::int32_t e = 0; e >= -depth; --e)
            d.bits[static_cast<std::size_t>(e - d.lo)] = static_cast<std::uint8_t>(third(e));
        return Superposition::basis(real_state(Sign::plus, d));
    };
    DiagonalResult res = diagonal_limit(grid, hz);
    r.note("diagonal element 6", format_compact(res.diagonal.at(6).basis_state()));
    r.note("row convergence", witness_text(res.row_convergence));
    r.check("rows converge to the diagonal", res.row_convergence.passed());

    CauchyVerdict dc = cauchy_check(res.diagonal, hz);
    r.note("diagonal cauchy", witness_text(dc));
    r.check("diagonal is Cauchy at the horizon", dc.passed());
    return r;
}

DemoReport demo_x2_minus_1(const Horizon& hz) {
    DemoReport r{"x2-minus-1", true, {}};
    StateSequence i_seq = constant_seq(imaginary_unit_state());
    StateSequence square = lift_op(OpKind::mul, i_seq, i_seq);
    r.note("square element 1", square.at(1).to_text());

    StateSequence minus_one = constant_seq(negate(one_state(), Part::real));
    CauchyVerdict v = seq_eq(square, minus_one, Mode::complex, hz);
    r.note("square vs constant -1", witness_text(v));
    r.check("certified equal", v.status == CauchyVerdict::Status::certified);
    return r;
}

}  // namespace

DemoReport run_demo(const std::string& name, const Horizon& hz) {
    if (name == "exam1") return demo_exam1(hz);
    if (name == "bell") return demo_bell(hz);
    if (name == "gaussian") return demo_gaussian(hz);
    if (name == "entangled-real") return demo_entangled_real(hz);
    if (name == "completeness") return demo_completeness(hz);
    if (name == "x2-minus-1") return demo_x2_minus_1(hz);
    throw std::invalid_argument(
        "unknown demo \"" + name +
        "\" (known: exam1, bell, gaussian, entangled-real, completeness, x2-minus-1)");
}

}  // namespace qsr::cli
