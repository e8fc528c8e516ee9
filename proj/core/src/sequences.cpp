#include "qsr/sequences.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

namespace qsr {

const char* to_string(CauchyVerdict::Status s) {
    switch (s) {
        case CauchyVerdict::Status::certified: return "certified";
        case CauchyVerdict::Status::supported: return "supported";
        case CauchyVerdict::Status::refuted: return "refuted";
        case CauchyVerdict::Status::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(TrichotomyResult r) {
    switch (r) {
        case TrichotomyResult::lt: return "lt";
        case TrichotomyResult::eq: return "eq";
        case TrichotomyResult::gt: return "gt";
        case TrichotomyResult::inconclusive: return "inconclusive";
    }
    return "?";
}

BitSpec bits_zero() {
    return [](std::int32_t) { return 0; };
}

BitSpec bits_pattern(std::string pattern, bool repeat) {
    for (char c : pattern)
        if (c != '0' && c != '1')
            throw std::invalid_argument("bits_pattern: pattern must be over {0,1}");
    if (pattern.empty()) return bits_zero();
    return [pattern = std::move(pattern), repeat](std::int32_t e) {
        std::size_t i = static_cast<std::size_t>(-e);
        if (i < pattern.size()) return pattern[i] - '0';
        return repeat ? pattern[i % pattern.size()] - '0' : 0;
    };
}

StateSequence::StateSequence(Kind kind, LatticeSite site, std::string provenance,
                             std::function<Superposition(int)> generator)
    : kind_(kind),
      site_(site),
      provenance_(std::move(provenance)),
      generator_(std::move(generator)),
      cache_(std::make_shared<std::map<int, Superposition>>()) {}

Superposition StateSequence::at(int n) const {
    if (n < 1) throw std::invalid_argument("StateSequence::at: index must be >= 1");
    auto it = cache_->find(n);
    if (it != cache_->end()) return it->second;
    Superposition s = generator_(n);
    cache_->emplace(n, s);
    return s;
}

// ---- Generators -------------------------------------------------------------

namespace {

// Smallest p with 2^p >= the component magnitude.
int magnitude_log2_bound(const RealComponent& c0) {
    RealComponent c = canonicalize(c0);
    if (c.is_zero()) return 0;
    std::int32_t hs = c.digits.highest_set();
    bool single = c.digits.lowest_set() == hs;
    return single ? hs : hs + 1;
}

int magnitude_log2_bound(const StringState& s) {
    return std::max(magnitude_log2_bound(s.re), magnitude_log2_bound(s.im));
}

DigitString frozen_digits(const BitSpec& s, int n, int tail_bit) {
    // Digits of s at exponents 0..-(n-1), plus the tail digit at -n.
    DigitString d;
    d.lo = -n;
    d.hi = 0;
    d.bits.assign(static_cast<std::size_t>(n + 1), 0);
    for (std::int32_t e = 0; e >= -(n - 1); --e)
        d.bits[static_cast<std::size_t>(e - d.lo)] = static_cast<std::uint8_t>(s(e) ? 1 : 0);
    d.bits[0] = static_cast<std::uint8_t>(tail_bit);
    return d;
}

DigitString digits_of_grid_value(long long k, int grid_bits) {
    // The digit string of k * 2^-grid_bits.
    DigitString d;
    d.lo = std::min(-grid_bits, 0);
    int top = 0;
    for (long long t = k; t > 1; t >>= 1) ++top;
    d.hi = std::max(top - grid_bits, 0);
    d.bits.assign(static_cast<std::size_t>(d.hi - d.lo + 1), 0);
    for (int i = 0; k != 0; ++i, k >>= 1)
        if (k & 1) d.bits[static_cast<std::size_t>(i - grid_bits - d.lo)] = 1;
    return d.canonicalized();
}

const double kInvSqrt2 = std::sqrt(0.5);

}  // namespace

StateSequence constant_seq(const StringState& x) {
    StringState canon = canonicalize(x);
    Superposition element = Superposition::basis(canon);
    StateSequence seq(StateSequence::Kind::constant, canon.site,
                      "constant " + format_compact(canon), [element](int) { return element; });
    seq.set_constant_value(canon);
    seq.set_certificate(Certificate{[](int) { return 1; }, magnitude_log2_bound(canon)});
    return seq;
}

StateSequence frozen_prefix_seq(BitSpec s, FrozenTail tail, LatticeSite site) {
    const bool bell = tail == FrozenTail::bell_real_imag;
    auto gen = [s, bell, site](int n) {
        RealComponent re1{Sign::plus, frozen_digits(s, n, 1)};
        RealComponent re0{Sign::plus, frozen_digits(s, n, 0)};
        std::vector<Term> terms;
        if (!bell) {
            terms.push_back(Term{make_state(re1, RealComponent{}, site), {kInvSqrt2, 0.0}});
            terms.push_back(Term{make_state(re0, RealComponent{}, site), {kInvSqrt2, 0.0}});
        } else {
            RealComponent im1{Sign::plus, frozen_digits(bits_zero(), n, 1)};
            terms.push_back(Term{make_state(re1, RealComponent{}, site), {kInvSqrt2, 0.0}});
            terms.push_back(Term{make_state(re0, im1, site), {kInvSqrt2, 0.0}});
        }
        return Superposition(std::move(terms), site);
    };
    StateSequence seq(bell ? StateSequence::Kind::bell : StateSequence::Kind::frozen_prefix, site,
                      bell ? "frozen prefix, entangled real/imaginary tail"
                           : "frozen prefix, plain tail",
                      gen);
    // Any two elements j,k > ell agree to within 2^-ell in both components.
    seq.set_certificate(Certificate{[](int ell) { return ell; }, 1});
    return seq;
}

StateSequence bell_pair_seq(BitSpec s, BitSpec t, LatticeSite site) {
    auto gen = [s, t, site](int n) {
        std::vector<Term> terms;
        terms.push_back(Term{make_state(RealComponent{Sign::plus, frozen_digits(s, n, 1)},
                                        RealComponent{Sign::plus, frozen_digits(t, n, 1)}, site),
                             {kInvSqrt2, 0.0}});
        terms.push_back(Term{make_state(RealComponent{Sign::plus, frozen_digits(s, n, 0)},
                                        RealComponent{Sign::plus, frozen_digits(t, n, 0)}, site),
                             {kInvSqrt2, 0.0}});
        return Superposition(std::move(terms), site);
    };
    StateSequence seq(StateSequence::Kind::bell, site, "frozen prefix pair, correlated tail", gen);
    seq.set_certificate(Certificate{[](int ell) { return ell; }, 1});
    return seq;
}

namespace {

// e^-t rounded to the 2^-bits grid, via the truncated power series for e^t.
double exp_neg_quantized(double t, int bits) {
    assert(t >= 0.0);
    double sum = 1.0, term = 1.0;
    for (int i = 1; i < 512; ++i) {
        term *= t / i;
        sum += term;
        if (term < sum * 1e-18) break;
    }
    const double grid = std::ldexp(1.0, bits);
    return std::round((1.0 / sum) * grid) / grid;
}

}  // namespace

StateSequence gaussian_seq(GaussianParams params, LatticeSite site) {
    RealComponent sigma = canonicalize(params.sigma);
    if (sigma.is_zero() || sigma.sign == Sign::minus)
        throw std::invalid_argument("gaussian_seq: sigma must be positive");
    const double sigma_v = eigenvalue(sigma).re_double();
    BitSpec center = params.center;
    const int u = params.u;
    const int cap = params.grid_bits_cap;
    if (cap < 1) throw std::invalid_argument("gaussian_seq: grid_bits_cap must be >= 1");

    auto gen = [center, sigma_v, u, cap, site](int n) {
        const int weight_bits = std::min(n, 45);
        const int grid_bits = std::min(n, cap);
        const double step = std::ldexp(1.0, -grid_bits);

        double c = 0.0;
        for (std::int32_t e = 0; e >= -std::min(n, 60); --e)
            if (center(e)) c += std::ldexp(1.0, e);

        // Weights below the rounding grid vanish, which bounds the support.
        const double window =
            sigma_v * std::sqrt((weight_bits + 2) * std::numbers::ln2_v<double> / n);
        const double hi_limit = std::ldexp(1.0, std::min(u + n + 1, 60));
        long long k_min = static_cast<long long>(std::ceil((c - window) / step));
        long long k_max = static_cast<long long>(std::floor(std::min(c + window, hi_limit) / step));
        if (k_min < 0) k_min = 0;

        std::vector<std::pair<long long, double>> weighted;
        for (long long k = k_min; k <= k_max; ++k) {
            const double d = static_cast<double>(k) * step - c;
            const double t = n * d * d / (sigma_v * sigma_v);
            const double w = exp_neg_quantized(t, weight_bits);
            if (w > 0.0) weighted.emplace_back(k, w);
        }
        if (weighted.empty())
            throw std::domain_error("gaussian_seq: empty support at n=" + std::to_string(n));

        double m2 = 0.0;
        for (const auto& [k, w] : weighted) m2 += w * w;
        const double m = std::sqrt(m2);
        double renorm = 0.0;
        for (const auto& [k, w] : weighted) renorm += (w / m) * (w / m);
        const double fix = std::sqrt(renorm);

        std::vector<Term> terms;
        terms.reserve(weighted.size());
        for (const auto& [k, w] : weighted) {
            StringState st = real_state(Sign::plus, digits_of_grid_value(k, grid_bits), site);
            terms.push_back(Term{std::move(st), {(w / m) / fix, 0.0}});
        }
        return Superposition(std::move(terms), site);
    };
    return StateSequence(StateSequence::Kind::gaussian, site, "gaussian family", gen);
}

StateSequence translated(const StateSequence& seq, LatticeSite new_site) {
    StateSequence out(seq.kind(), new_site, seq.provenance() + " (translated)",
                      [seq, new_site](int n) { return seq.at(n).translated(new_site); });
    if (seq.certificate()) out.set_certificate(*seq.certificate());
    if (seq.constant_value()) out.set_constant_value(translate(*seq.constant_value(), new_site));
    return out;
}

// ---- Probes ------------------------------------------------------------------

namespace {

constexpr double kPassThreshold = 1.0 - 1e-9;
constexpr double kRefuteCeiling = 0.5;
constexpr double kTrendEps = 1e-6;

bool component_within(const RealComponent& a, const RealComponent& b, const RealComponent& gap) {
    return leq_A_real(abs_A(sub_A(a, b)), gap);
}

// Sorted (value, mass) view of a purely real superposition whose values are
// exactly representable as doubles; nullopt otherwise.
std::optional<std::vector<std::pair<double, double>>> real_value_profile(const Superposition& s) {
    std::vector<std::pair<double, double>> out;
    out.reserve(s.size());
    for (const Term& t : s.terms()) {
        if (!t.state.im.is_zero()) return std::nullopt;
        DyadicComplex v = eigenvalue(t.state.re);
        if (v.scale > 45 || abs(v.re_num) >= (BigInt(1) << 52)) return std::nullopt;
        out.emplace_back(v.re_double(), std::norm(t.amp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

double pair_prob_elements(const Superposition& psi, const Superposition& phi, int ell, Mode mode) {
    // Large purely-real supports: sorted sweep with prefix sums, still
    // accumulating the failing mass so an all-pass set yields exactly 1.
    if (psi.size() * phi.size() > 4096) {
        auto pa = real_value_profile(psi);
        auto pb = real_value_profile(phi);
        if (pa && pb) {
            if (mode == Mode::imaginary) return 1.0;  // both sides have zero imaginary parts
            const double gap = std::ldexp(1.0, -ell);
            std::vector<double> prefix(pb->size() + 1, 0.0);
            for (std::size_t i = 0; i < pb->size(); ++i)
                prefix[i + 1] = prefix[i] + (*pb)[i].second;
            double fail = 0.0;
            for (const auto& [x, mx] : *pa) {
                auto lo = std::lower_bound(pb->begin(), pb->end(), x - gap,
                                           [](const auto& p, double v) { return p.first < v; });
                auto hi = std::upper_bound(pb->begin(), pb->end(), x + gap,
                                           [](double v, const auto& p) { return v < p.first; });
                const double inside =
                    prefix[static_cast<std::size_t>(hi - pb->begin())] -
                    prefix[static_cast<std::size_t>(lo - pb->begin())];
                fail += mx * (prefix.back() - inside);
            }
            return std::clamp(1.0 - fail, 0.0, 1.0);
        }
    }

    const RealComponent gap = pow2_component(-ell);
    double fail = 0.0;
    for (const Term& x : psi.terms()) {
        const double mx = std::norm(x.amp);
        for (const Term& y : phi.terms()) {
            bool ok = true;
            if (mode == Mode::real || mode == Mode::complex)
                ok = component_within(x.state.re, y.state.re, gap);
            if (ok && (mode == Mode::imaginary || mode == Mode::complex))
                ok = component_within(x.state.im, y.state.im, gap);
            if (!ok) fail += mx * std::norm(y.amp);
        }
    }
    return std::clamp(1.0 - fail, 0.0, 1.0);
}

}  // namespace

double pair_prob(const StateSequence& seq1, const StateSequence& seq2, int j, int k, Accuracy acc,
                 Mode mode) {
    return pair_prob_elements(seq1.at(j), seq2.at(k), acc.ell, mode);
}

// ---- The finite-horizon verdict engine ---------------------------------------

namespace {

struct ProbeCache {
    const StateSequence& a;
    const StateSequence& b;
    Mode mode;
    std::map<std::tuple<int, int, int>, double> memo;

    double prob(int j, int k, int ell) {
        auto key = std::make_tuple(j, k, ell);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        double p = pair_prob_elements(a.at(j), b.at(k), ell, mode);
        memo.emplace(key, p);
        return p;
    }
};

CauchyVerdict probe_equal(const StateSequence& a, const StateSequence& b, Mode mode,
                          const Horizon& hz, const ProbeLog& log) {
    ProbeCache cache{a, b, mode, {}};
    CauchyVerdict verdict;
    bool all_passed = true;

    for (int ell = 1; ell <= hz.ell_max; ++ell) {
        int found_h = -1;
        double first_min = -1.0, last_min = -1.0, best_min = -1.0;
        int min_j = 0, min_k = 0;
        double min_p = 1.0;

        for (int h = 0; h <= hz.h_max; ++h) {
            double wmin = 1.0;
            int wj = 0, wk = 0;
            for (int j = h + 1; j <= h + hz.window; ++j) {
                for (int k = h + 1; k <= h + hz.window; ++k) {
                    double p = cache.prob(j, k, ell);
                    if (log) log(ell, h, j, k, p);
                    if (p < wmin) {
                        wmin = p;
                        wj = j;
                        wk = k;
                    }
                }
            }
            if (first_min < 0) first_min = wmin;
            last_min = wmin;
            best_min = std::max(best_min, wmin);
            if (wmin < min_p) {
                min_p = wmin;
                min_j = wj;
                min_k = wk;
            }
            if (wmin >= kPassThreshold) {
                found_h = h;
                break;
            }
        }

        if (found_h >= 0) {
            verdict.witness[ell] = found_h;
            continue;
        }
        all_passed = false;
        const bool flat = last_min <= first_min + kTrendEps;
        if (best_min <= kRefuteCeiling && flat) {
            verdict.status = CauchyVerdict::Status::refuted;
            verdict.refutation = CauchyVerdict::Refutation{ell, min_j, min_k, min_p};
            verdict.witness.clear();
            return verdict;
        }
    }

    verdict.status =
        all_passed ? CauchyVerdict::Status::supported : CauchyVerdict::Status::inconclusive;
    if (!all_passed) verdict.witness.clear();
    return verdict;
}

CauchyVerdict certified_verdict(const Certificate& cert, const Horizon& hz) {
    CauchyVerdict v;
    v.status = CauchyVerdict::Status::certified;
    for (int ell = 1; ell <= hz.ell_max; ++ell) v.witness[ell] = cert.witness_for(ell);
    return v;
}

// Smallest ell with 2^-ell < delta, for a positive real dyadic delta.
int separating_ell(const DyadicComplex& delta) {
    assert(delta.re_num > 0);
    const int top = static_cast<int>(boost::multiprecision::msb(delta.re_num));
    return static_cast<int>(delta.scale) - top + 1;
}

bool mode_eq(const StringState& x, const StringState& y, Mode mode) {
    bool ok = true;
    if (mode == Mode::real || mode == Mode::complex) ok = eq_A(x.re, y.re);
    if (ok && (mode == Mode::imaginary || mode == Mode::complex)) ok = eq_A(x.im, y.im);
    return ok;
}

}  // namespace

CauchyVerdict cauchy_check(const StateSequence& seq, const Horizon& hz, const ProbeLog& log) {
    if (seq.certificate()) return certified_verdict(*seq.certificate(), hz);
    return probe_equal(seq, seq, Mode::complex, hz, log);
}

CauchyVerdict seq_eq(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                     const Horizon& hz, const ProbeLog& log) {
    if (seq1.constant_value() && seq2.constant_value()) {
        const StringState& x = *seq1.constant_value();
        const StringState& y = *seq2.constant_value();
        CauchyVerdict v;
        if (mode_eq(x, y, mode)) {
            v.status = CauchyVerdict::Status::certified;
            for (int ell = 1; ell <= hz.ell_max; ++ell) v.witness[ell] = 1;
            return v;
        }
        DyadicComplex d = (eigenvalue(x) - eigenvalue(y)).abs_components();
        DyadicComplex delta =
            mode == Mode::imaginary
                ? d.imag_part()
                : (mode == Mode::real
                       ? d.real_part()
                       : (compare_real(d.real_part(), d.imag_part()) >= 0 ? d.real_part()
                                                                          : d.imag_part()));
        v.status = CauchyVerdict::Status::refuted;
        v.refutation = CauchyVerdict::Refutation{separating_ell(delta), 1, 1, 0.0};
        return v;
    }
    return probe_equal(seq1, seq2, mode, hz, log);
}

OrderVerdict seq_lt(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                    const Horizon& hz) {
    if (mode == Mode::complex)
        throw std::invalid_argument("seq_lt: mode must select one component");
    const Part part = mode == Mode::real ? Part::real : Part::imaginary;

    if (seq1.constant_value() && seq2.constant_value()) {
        DyadicComplex vx = eigenvalue(*seq1.constant_value());
        DyadicComplex vy = eigenvalue(*seq2.constant_value());
        DyadicComplex dx = mode == Mode::real ? vx.real_part() : vx.imag_part();
        DyadicComplex dy = mode == Mode::real ? vy.real_part() : vy.imag_part();
        if (compare_real(dx, dy) < 0)
            return OrderVerdict{OrderVerdict::Status::certified,
                                GapWitness{separating_ell(dy - dx), 1}};
        return OrderVerdict{OrderVerdict::Status::not_found, std::nullopt};
    }

    for (int ell = 1; ell <= hz.ell_max; ++ell) {
        const Accuracy acc(ell);
        for (int h = 0; h <= hz.h_max; ++h) {
            double wmin = 1.0;
            for (int j = h + 1; j <= h + hz.window && wmin >= kPassThreshold; ++j)
                for (int k = h + 1; k <= h + hz.window && wmin >= kPassThreshold; ++k)
                    wmin = std::min(wmin, prob_lt_gap(seq1.at(j), seq2.at(k), acc, part));
            if (wmin >= kPassThreshold)
                return OrderVerdict{OrderVerdict::Status::supported, GapWitness{ell, h}};
        }
    }
    return OrderVerdict{OrderVerdict::Status::not_found, std::nullopt};
}

TrichotomyResult trichotomy(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                            const Horizon& hz) {
    if (mode == Mode::complex) {
        TrichotomyResult r = trichotomy(seq1, seq2, Mode::real, hz);
        TrichotomyResult i = trichotomy(seq1, seq2, Mode::imaginary, hz);
        if (r == i) return r;
        return TrichotomyResult::inconclusive;  // componentwise conflict: the partial-order gap
    }

    OrderVerdict lt = seq_lt(seq1, seq2, mode, hz);
    OrderVerdict gt = seq_lt(seq2, seq1, mode, hz);
    CauchyVerdict eq = seq_eq(seq1, seq2, mode, hz);

    int candidates = (lt.found() ? 1 : 0) + (gt.found() ? 1 : 0) + (eq.passed() ? 1 : 0);
    if (candidates != 1) return TrichotomyResult::inconclusive;
    if (lt.found()) return TrichotomyResult::lt;
    if (gt.found()) return TrichotomyResult::gt;
    return TrichotomyResult::eq;
}

// ---- Lifted operations --------------------------------------------------------

namespace {

const char* op_name(OpKind op) {
    switch (op) {
        case OpKind::add: return "add";
        case OpKind::sub: return "sub";
        case OpKind::mul: return "mul";
        case OpKind::div_ell: return "div";
    }
    return "?";
}

}  // namespace

StateSequence lift_op(OpKind op, const StateSequence& seq1, const StateSequence& seq2) {
    if (op == OpKind::div_ell) return lift_div(seq1, seq2);
    auto gen = [op, seq1, seq2](int n) {
        return trace_result(apply_op_entangled(op, seq1.at(n), seq2.at(n))).as_superposition();
    };
    StateSequence out(StateSequence::Kind::lifted, seq1.site(),
                      std::string("lift ") + op_name(op) + "(" + seq1.provenance() + ", " +
                          seq2.provenance() + ")",
                      gen);

    if (seq1.constant_value() && seq2.constant_value()) {
        const StringState& x = *seq1.constant_value();
        const StringState& y = *seq2.constant_value();
        StringState r = op == OpKind::add   ? add_A(x, y)
                        : op == OpKind::sub ? sub_A(x, y)
                                            : mul_A(x, y);
        out.set_constant_value(canonicalize(r));
    }

    if (seq1.certificate() && seq2.certificate()) {
        const Certificate c1 = *seq1.certificate();
        const Certificate c2 = *seq2.certificate();
        std::optional<int> bound;
        if (c1.magnitude_bound_log2 && c2.magnitude_bound_log2)
            bound = op == OpKind::mul ? *c1.magnitude_bound_log2 + *c2.magnitude_bound_log2
                                      : std::max(*c1.magnitude_bound_log2, *c2.magnitude_bound_log2) + 1;
        if (op == OpKind::mul) {
            if (c1.magnitude_bound_log2 && c2.magnitude_bound_log2) {
                // One guard digit on top of the dominating power of two.
                const int ell_u =
                    std::max({*c1.magnitude_bound_log2, *c2.magnitude_bound_log2, 0}) + 1;
                out.set_certificate(Certificate{
                    [c1, c2, ell_u](int ell) {
                        return std::max(c1.witness_for(ell + 1 + ell_u),
                                        c2.witness_for(ell + 1 + ell_u));
                    },
                    bound});
            }
        } else {
            out.set_certificate(Certificate{
                [c1, c2](int ell) {
                    return std::max(c1.witness_for(ell + 1), c2.witness_for(ell + 1));
                },
                bound});
        }
    }
    return out;
}

StateSequence lift_div(const StateSequence& seq1, const StateSequence& seq2) {
    if (seq2.constant_value() && eq_A(*seq2.constant_value(), zero_state()))
        throw std::domain_error("lift_div: divisor is the zero sequence");
    auto gen = [seq1, seq2](int n) {
        return trace_result(apply_op_entangled(OpKind::div_ell, seq1.at(n), seq2.at(n), Accuracy(n)))
            .as_superposition();
    };
    return StateSequence(StateSequence::Kind::lifted, seq1.site(),
                         "lift div(" + seq1.provenance() + ", " + seq2.provenance() + ")", gen);
}

// ---- Representative, inverse, metric ------------------------------------------

StateSequence representative(const StateSequence& seq, const Horizon& hz) {
    CauchyVerdict check = cauchy_check(seq, hz);
    if (!check.passed())
        throw std::domain_error(std::string("representative: sequence checks ") +
                                to_string(check.status));
    if (seq.constant_value()) return seq;

    const int ell = hz.ell_max;
    auto gen = [seq, ell](int j) {
        const Superposition psi = seq.at(j);
        const RealComponent gap = pow2_component(-ell);
        double best_q = -1.0;
        std::string best_text;
        const StringState* best = nullptr;
        for (const Term& cand : psi.terms()) {
            double q = 0.0;
            for (const Term& t : psi.terms()) {
                bool ok = lt_A_real(abs_A(sub_A(t.state.re, cand.state.re)), gap) &&
                          lt_A_real(abs_A(sub_A(t.state.im, cand.state.im)), gap);
                if (ok) q += std::norm(t.amp);
            }
            std::string text = format_compact(cand.state);
            if (q > best_q + 1e-15 || (std::abs(q - best_q) <= 1e-15 && text < best_text)) {
                best_q = q;
                best_text = std::move(text);
                best = &cand.state;
            }
        }
        assert(best != nullptr);
        return Superposition::basis(*best);
    };
    return StateSequence(StateSequence::Kind::custom, seq.site(),
                         "representative(" + seq.provenance() + ")", gen);
}

StateSequence inverse_seq(const StateSequence& seq, const Horizon& hz) {
    if (seq.constant_value() && eq_A(*seq.constant_value(), zero_state()))
        throw std::domain_error("inverse_seq: zero sequence");
    if (!seq.constant_value()) {
        CauchyVerdict zero = seq_eq(seq, constant_seq(zero_state()), Mode::complex, hz);
        if (zero.passed()) throw std::domain_error("inverse_seq: zero sequence");
    }

    StateSequence rep = representative(seq, hz);
    auto gen = [rep](int ell) {
        const StringState x = rep.at(ell).basis_state();
        if (eq_A(x, zero_state())) return Superposition::basis(one_state(x.site));
        return Superposition::basis(ell_inverse_complex(x, Accuracy(ell)));
    };
    StateSequence out(StateSequence::Kind::custom, seq.site(),
                      "inverse(" + seq.provenance() + ")", gen);

    if (rep.constant_value() && !eq_A(*rep.constant_value(), zero_state())) {
        StringState inv1 = ell_inverse_complex(*rep.constant_value(), Accuracy(1));
        if (eigenvalue(mul_A(*rep.constant_value(), inv1)) == DyadicComplex::integer(1)) {
            // The accuracy-1 inverse is already exact, so every element agrees.
            out.set_constant_value(canonicalize(inv1));
            out.set_certificate(Certificate{[](int) { return 1; }, magnitude_log2_bound(inv1)});
        }
    }
    return out;
}

StateSequence metric_D(const StateSequence& seq1, const StateSequence& seq2, const Horizon& hz) {
    StateSequence r1 = representative(seq1, hz);
    StateSequence r2 = representative(seq2, hz);
    auto gen = [r1, r2](int n) {
        const StringState x = r1.at(n).basis_state();
        const StringState y = r2.at(n).basis_state();
        RealComponent dr = abs_A(sub_A(x.re, y.re));
        RealComponent di = abs_A(sub_A(x.im, y.im));
        return Superposition::basis(make_state(dr, di, x.site));
    };
    StateSequence out(StateSequence::Kind::custom, seq1.site(),
                      "distance(" + seq1.provenance() + ", " + seq2.provenance() + ")", gen);
    if (r1.constant_value() && r2.constant_value()) {
        const StringState& x = *r1.constant_value();
        const StringState& y = *r2.constant_value();
        StringState d = make_state(abs_A(sub_A(x.re, y.re)), abs_A(sub_A(x.im, y.im)), x.site);
        out.set_constant_value(d);
        out.set_certificate(Certificate{[](int) { return 1; }, magnitude_log2_bound(d)});
    }
    return out;
}

// ---- Completeness --------------------------------------------------------------

namespace {

// Does the elementwise distance between rows f and g fall under 2^-ell with
// an asymptotic gap, at this horizon?  Both component conditions are
// required with probability above the pass threshold.
bool rows_gap_below(const StateSequence& row_f, const StateSequence& row_g, int ell,
                    const Horizon& hz) {
    for (int ellg = ell + 1; ellg <= ell + hz.ell_max; ++ellg) {
        const RealComponent bound = sub_A(pow2_component(-ell), pow2_component(-ellg));
        for (int h = 0; h <= hz.h_max; ++h) {
            bool all_pass = true;
            for (int n = h + 1; n <= h + hz.window && all_pass; ++n) {
                const Superposition a = row_f.at(n);
                const Superposition b = row_g.at(n);
                double fail = 0.0;
                for (const Term& x : a.terms())
                    for (const Term& y : b.terms()) {
                        bool ok = lt_A_real(abs_A(sub_A(x.state.re, y.state.re)), bound) &&
                                  lt_A_real(abs_A(sub_A(x.state.im, y.state.im)), bound);
                        if (!ok) fail += std::norm(x.amp) * std::norm(y.amp);
                    }
                if (1.0 - fail < kPassThreshold) all_pass = false;
            }
            if (all_pass) return true;
        }
    }
    return false;
}

}  // namespace

DiagonalResult diagonal_limit(const std::function<Superposition(int, int)>& grid,
                              const Horizon& hz) {
    const int max_row = hz.h_max + hz.window;
    std::vector<StateSequence> rows;
    rows.reserve(static_cast<std::size_t>(max_row));
    for (int m = 1; m <= max_row; ++m)
        rows.emplace_back(StateSequence::Kind::custom, grid(1, m).site(),
                          "row " + std::to_string(m),
                          [grid, m](int n) { return grid(n, m); });

    for (int m = 1; m <= max_row; ++m) {
        CauchyVerdict rc = cauchy_check(rows[static_cast<std::size_t>(m - 1)], hz);
        if (!rc.passed())
            throw std::invalid_argument("diagonal_limit: row " + std::to_string(m) +
                                        " failed the Cauchy check (" + to_string(rc.status) + ")");
    }

    // The rows themselves must form a Cauchy family.
    for (int ell = 1; ell <= hz.ell_max; ++ell) {
        bool found = false;
        for (int h = 0; h <= hz.h_max && !found; ++h) {
            bool ok = true;
            for (int f = h + 1; f <= h + hz.window && ok; ++f)
                for (int g = f + 1; g <= h + hz.window && ok; ++g)
                    ok = rows_gap_below(rows[static_cast<std::size_t>(f - 1)],
                                        rows[static_cast<std::size_t>(g - 1)], ell, hz);
            found = ok;
        }
        if (!found)
            throw std::invalid_argument(
                "diagonal_limit: the row family is not Cauchy at accuracy " + std::to_string(ell));
    }

    StateSequence diagonal(StateSequence::Kind::custom, grid(1, 1).site(), "diagonal limit",
                           [grid](int n) { return grid(n, n); });

    CauchyVerdict convergence;
    bool all = true;
    for (int ell = 1; ell <= hz.ell_max; ++ell) {
        int witness_h = -1;
        for (int h = 0; h <= hz.h_max && witness_h < 0; ++h) {
            bool ok = true;
            for (int j = h + 1; j <= h + hz.window && ok; ++j)
                ok = rows_gap_below(rows[static_cast<std::size_t>(j - 1)], diagonal, ell, hz);
            if (ok) witness_h = h;
        }
        if (witness_h >= 0)
            convergence.witness[ell] = witness_h;
        else
            all = false;
    }
    convergence.status =
        all ? CauchyVerdict::Status::supported : CauchyVerdict::Status::inconclusive;
    if (!all) convergence.witness.clear();
    return DiagonalResult{std::move(diagonal), std::move(convergence)};
}

CauchyVerdict is_equiv(const StateSequence& seq1, const StateSequence& seq2, const Horizon& hz) {
    return seq_eq(seq1, seq2, Mode::complex, hz);
}

}  // namespace qsr
