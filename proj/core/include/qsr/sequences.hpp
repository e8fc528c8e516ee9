#pragma once

#include "qsr/superposition.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace qsr {

/// Finite probing horizon for the convergence checks: accuracies ell <=
/// ell_max, witness candidates h <= h_max, and for each h the window of
/// indices j,k in (h, h+window] actually probed.
struct Horizon {
    int ell_max{8};
    int h_max{32};
    int window{8};

    Horizon() = default;
    Horizon(int ell, int h, int w) : ell_max(ell), h_max(h), window(w) {
        if (ell < 1 || h < 1 || w < 2)
            throw std::invalid_argument("Horizon: need ell_max,h_max >= 1 and window >= 2");
    }
};

/// Four-valued outcome of a finite-horizon convergence check.
///
///   certified    — an analytic witness h(ell) valid for every ell, issued
///                  only for the structured families and their lifts;
///   supported    — every probed accuracy found a witness h at which all
///                  probed index pairs passed;
///   refuted      — some accuracy stayed bounded away from probability 1
///                  at every probed h with no upward trend;
///   inconclusive — the horizon was exhausted without a decision.
struct CauchyVerdict {
    enum class Status { certified, supported, refuted, inconclusive };

    Status status{Status::inconclusive};
    std::map<int, int> witness;  // ell -> h, present iff certified/supported

    struct Refutation {
        int ell, j, k;
        double probability;
    };
    std::optional<Refutation> refutation;

    bool passed() const {
        return status == Status::certified || status == Status::supported;
    }
};

const char* to_string(CauchyVerdict::Status s);

/// Analytic certificate: pair probabilities equal 1 for all j,k > witness_for(ell).
struct Certificate {
    std::function<int(int)> witness_for;
    std::optional<int> magnitude_bound_log2;  // every |component value| <= 2^p
};

/// Bit specification for an infinite fractional expansion: exponents e <= 0.
using BitSpec = std::function<int(std::int32_t)>;

BitSpec bits_zero();
/// Pattern "011..." maps character i to exponent -i; cycles when repeat is
/// set, zero-extends otherwise.
BitSpec bits_pattern(std::string pattern, bool repeat = true);

/// An index-addressable family n >= 1 -> Superposition, all elements at one
/// site.  Elements are generated on demand and memoized; the structural
/// fields record how the family was built so the relation engines can issue
/// analytic certificates where the construction supports them.
class StateSequence {
public:
    enum class Kind { constant, frozen_prefix, bell, gaussian, lifted, custom };

    StateSequence(Kind kind, LatticeSite site, std::string provenance,
                  std::function<Superposition(int)> generator);

    Superposition at(int n) const;  // n >= 1

    Kind kind() const { return kind_; }
    LatticeSite site() const { return site_; }
    const std::string& provenance() const { return provenance_; }

    const std::optional<Certificate>& certificate() const { return certificate_; }
    void set_certificate(Certificate c) { certificate_ = std::move(c); }

    /// Set when every element is the same basis state, known by construction.
    const std::optional<StringState>& constant_value() const { return constant_value_; }
    void set_constant_value(StringState s) { constant_value_ = std::move(s); }

private:
    Kind kind_;
    LatticeSite site_;
    std::string provenance_;
    std::function<Superposition(int)> generator_;
    std::optional<Certificate> certificate_;
    std::optional<StringState> constant_value_;
    std::shared_ptr<std::map<int, Superposition>> cache_;
};

// ---- Generators -----------------------------------------------------------

StateSequence constant_seq(const StringState& x);

enum class FrozenTail { plain_superposition, bell_real_imag };

/// Element n freezes the digits of s at exponents 0..-(n-1) and places a
/// two-term 1/sqrt(2) superposition at exponent -n: either a plain real
/// digit superposition, or the real/imaginary entangled pair (real digit 1
/// with imaginary 0, plus real digit 0 with imaginary digit 1 at -n).
StateSequence frozen_prefix_seq(BitSpec s, FrozenTail tail, LatticeSite site = {});

/// Frozen real prefix s and imaginary prefix t with the correlated
/// entangled tail: both digits 1 plus both digits 0 at exponent -n.
StateSequence bell_pair_seq(BitSpec s, BitSpec t, LatticeSite site = {});

struct GaussianParams {
    BitSpec center;           // fractional expansion of the center value
    RealComponent sigma;      // positive width parameter
    int u{0};                 // upper exponent offset of the support domain
    int grid_bits_cap{8};     // support grid resolution 2^-min(n, cap)
};

/// Element n is the normalized superposition over grid values weighted by
/// exp(-n*(v - c_n)^2 / sigma^2), the exponential evaluated by a truncated
/// power series and the weights rounded to the 2^-min(n,45) grid; weights
/// that round to zero leave the support.  Throws std::domain_error when the
/// support comes out empty.
StateSequence gaussian_seq(GaussianParams params, LatticeSite site = {});

StateSequence translated(const StateSequence& seq, LatticeSite new_site);

// ---- Probes and relations --------------------------------------------------

enum class Mode { real, imaginary, complex };

using ProbeLog = std::function<void(int ell, int h, int j, int k, double p)>;

/// Probability that elements j of seq1 and k of seq2 satisfy the accuracy
/// condition: both |re difference| and |im difference| within 2^-ell
/// (restricted to one component under mode real/imaginary).  Exactly 1.0
/// when every term pair qualifies.
double pair_prob(const StateSequence& seq1, const StateSequence& seq2, int j, int k,
                 Accuracy acc, Mode mode = Mode::complex);

CauchyVerdict cauchy_check(const StateSequence& seq, const Horizon& hz, const ProbeLog& log = {});

CauchyVerdict seq_eq(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                     const Horizon& hz, const ProbeLog& log = {});

struct GapWitness {
    int ell, h;
};

struct OrderVerdict {
    enum class Status { certified, supported, not_found };
    Status status{Status::not_found};
    std::optional<GapWitness> witness;
    bool found() const { return status != Status::not_found; }
};

/// Searches for an asymptotic gap witness (ell, h): all probed j,k > h have
/// the selected component of seq1's element j below seq2's element k by
/// more than 2^-ell, with probability 1.  mode must be real or imaginary.
OrderVerdict seq_lt(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                    const Horizon& hz);

enum class TrichotomyResult { lt, eq, gt, inconclusive };
const char* to_string(TrichotomyResult r);

/// Runs seq_lt both ways and seq_eq; returns the unique verdict that holds.
/// mode complex combines the componentwise results and reports
/// inconclusive on conflict (the partial-order gap).
TrichotomyResult trichotomy(const StateSequence& seq1, const StateSequence& seq2, Mode mode,
                            const Horizon& hz);

/// Elementwise lifted operation: element n is the traced mixture of the
/// operation applied over the nth elements, re-expressed with sqrt(p)
/// amplitudes.  Certified inputs yield a certified output with the derived
/// witness (add/sub: inputs at ell+1; mul: inputs at ell+1+ell_u where
/// 2^ell_u bounds all component magnitudes, one guard digit included).
StateSequence lift_op(OpKind op, const StateSequence& seq1, const StateSequence& seq2);

/// Diagonal lifted division: element n divides the nth elements at
/// accuracy n.  Throws std::domain_error when seq2 is structurally the
/// zero sequence; zero divisor terms surface on element evaluation.
StateSequence lift_div(const StateSequence& seq1, const StateSequence& seq2);

/// Basis-state sequence arithmetically equal to the input: element j keeps
/// the term of seq.at(j) carrying the greatest probability mass within
/// 2^-ell_max (ties broken by smallest canonical text).  Requires the input
/// to check certified or supported.
StateSequence representative(const StateSequence& seq, const Horizon& hz);

/// Diagonal multiplicative inverse: element ell is the accuracy-ell inverse
/// of the representative's element ell (the unit state where that element
/// is zero).  Throws std::domain_error for the zero sequence.
StateSequence inverse_seq(const StateSequence& seq, const Horizon& hz);

/// Distance sequence: element n is the componentwise absolute difference of
/// the nth representative elements.
StateSequence metric_D(const StateSequence& seq1, const StateSequence& seq2,
                       const Horizon& hz = Horizon{});

struct DiagonalResult {
    StateSequence diagonal;
    CauchyVerdict row_convergence;
};

/// Completeness diagonalization: grid(n, m) is element n of row sequence m.
/// Every probed row must check Cauchy (precondition error naming the row
/// otherwise); the returned verdict reports whether the rows converge to
/// the diagonal at the horizon.
DiagonalResult diagonal_limit(const std::function<Superposition(int, int)>& grid,
                              const Horizon& hz);

/// Same-equivalence-class test: alias of seq_eq in complex mode.  A concrete
/// sequence stands for its class throughout.
CauchyVerdict is_equiv(const StateSequence& seq1, const StateSequence& seq2, const Horizon& hz);

}  // namespace qsr
