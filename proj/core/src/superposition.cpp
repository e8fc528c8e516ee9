#include "qsr/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsr {

namespace {

constexpr double kNormTolerance = 1e-12;

bool finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

}  // namespace

Superposition::Superposition(std::vector<Term> terms, LatticeSite site) : site_(site) {
    terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!finite(t.amp)) throw std::invalid_argument("Superposition: non-finite amplitude");
        if (t.amp == Amplitude{0.0, 0.0}) continue;
        StringState canon = canonicalize(t.state);
        canon.site = site;
        terms_.push_back(Term{std::move(canon), t.amp});
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return state_less(a.state, b.state); });
    // Merge amplitudes of arithmetically identical encodings.
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().state == t.state)
            merged.back().amp += t.amp;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.amp == Amplitude{0.0, 0.0}; });
    terms_ = std::move(merged);

    double n = norm_sq();
    if (std::abs(n - 1.0) > kNormTolerance)
        throw std::invalid_argument("Superposition: squared amplitudes sum to " + std::to_string(n) +
                                    ", not 1");
}

Superposition Superposition::basis(StringState s) {
    LatticeSite site = s.site;
    return Superposition({Term{std::move(s), Amplitude{1.0, 0.0}}}, site);
}

const StringState& Superposition::basis_state() const {
    if (!is_basis()) throw std::logic_error("basis_state: superposition has multiple terms");
    return terms_.front().state;
}

Superposition Superposition::translated(LatticeSite new_site) const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.state.site = new_site;
    return Superposition(std::move(ts), new_site);
}

double Superposition::norm_sq() const {
    double n = 0.0;
    for (const Term& t : terms_) n += std::norm(t.amp);
    return n;
}

std::string Superposition::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        if (t.amp.imag() == 0.0)
            os << t.amp.real();
        else
            os << "(" << t.amp.real() << (t.amp.imag() < 0 ? "" : "+") << t.amp.imag() << "i)";
        os << "*|" << format_compact(t.state) << ">";
    }
    return os.str();
}

double Mixture::probability_sum() const {
    double s = 0.0;
    for (const Outcome& o : outcomes) s += o.probability;
    return s;
}

Superposition Mixture::as_superposition() const {
    if (outcomes.empty()) throw std::logic_error("Mixture::as_superposition: empty mixture");
    std::vector<Term> ts;
    ts.reserve(outcomes.size());
    for (const Outcome& o : outcomes)
        ts.push_back(Term{o.state, Amplitude{std::sqrt(o.probability), 0.0}});
    return Superposition(std::move(ts), outcomes.front().state.site);
}

namespace {

bool within_gap_lt(const StringState& x, const StringState& y, Accuracy acc, Part part) {
    const RealComponent gap = pow2_component(-acc.ell);
    bool ok = true;
    if (part == Part::real || part == Part::both)
        ok = ok && lt_A_real(add_A(x.re, gap), y.re);
    if (part == Part::imaginary || part == Part::both)
        ok = ok && lt_A_real(add_A(x.im, gap), y.im);
    return ok;
}

// All pair probabilities are accumulated as 1 - (failing mass) so that an
// all-qualifying pair set yields exactly 1.0.
template <typename Pred>
double complement_pair_mass(const Superposition& psi, const Superposition& phi, Pred&& qualifies) {
    double fail = 0.0;
    for (const Term& x : psi.terms()) {
        const double px = std::norm(x.amp);
        for (const Term& y : phi.terms()) {
            if (!qualifies(x.state, y.state)) fail += px * std::norm(y.amp);
        }
    }
    double p = 1.0 - fail;
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double prob_eq_A(const Superposition& psi, const Superposition& phi) {
    return complement_pair_mass(psi, phi,
                                [](const StringState& x, const StringState& y) { return eq_A(x, y); });
}

double prob_lt_gap(const Superposition& psi, const Superposition& phi, Accuracy acc, Part part) {
    return complement_pair_mass(psi, phi, [&](const StringState& x, const StringState& y) {
        return within_gap_lt(x, y, acc, part);
    });
}

std::vector<EntangledTriple> apply_op_entangled(OpKind op, const Superposition& psi,
                                                const Superposition& phi,
                                                std::optional<Accuracy> acc) {
    if (op == OpKind::div_ell && !acc)
        throw std::invalid_argument("apply_op_entangled: div_ell requires an Accuracy");
    if (op == OpKind::div_ell) {
        for (const Term& y : phi.terms())
            if (eq_A(y.state, zero_state()))
                throw std::domain_error("apply_op_entangled: zero divisor term |" +
                                        format_compact(y.state) + ">");
    }
    std::vector<EntangledTriple> out;
    out.reserve(psi.size() * phi.size());
    for (const Term& x : psi.terms()) {
        for (const Term& y : phi.terms()) {
            StringState r;
            switch (op) {
                case OpKind::add: r = add_A(x.state, y.state); break;
                case OpKind::sub: r = sub_A(x.state, y.state); break;
                case OpKind::mul: r = mul_A(x.state, y.state); break;
                case OpKind::div_ell: r = div_A(x.state, y.state, *acc); break;
            }
            out.push_back(EntangledTriple{x.amp * y.amp, x.state, y.state, r});
        }
    }
    return out;
}

Mixture trace_result(const std::vector<EntangledTriple>& entangled) {
    std::vector<Mixture::Outcome> outcomes;
    for (const EntangledTriple& t : entangled) {
        StringState canon = canonicalize(t.result);
        auto it = std::lower_bound(outcomes.begin(), outcomes.end(), canon,
                                   [](const Mixture::Outcome& o, const StringState& s) {
                                       return state_less(o.state, s);
                                   });
        double p = std::norm(t.amp);
        if (it != outcomes.end() && it->state == canon)
            it->probability += p;
        else
            outcomes.insert(it, Mixture::Outcome{std::move(canon), p});
    }
    return Mixture{std::move(outcomes)};
}

}  // namespace qsr
