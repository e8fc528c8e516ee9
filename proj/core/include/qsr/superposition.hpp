#pragma once

#include "qsr/arithmetic.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace qsr {

using Amplitude = std::complex<double>;

struct Term {
    StringState state;
    Amplitude amp;
};

/// A finite normalized superposition of canonical string states, all at one
/// lattice site.  Terms are canonicalized, merged when arithmetically equal,
/// kept sorted, and the squared amplitudes must sum to 1 within 1e-12.
class Superposition {
public:
    static Superposition basis(StringState s);
    Superposition(std::vector<Term> terms, LatticeSite site);

    const std::vector<Term>& terms() const { return terms_; }
    LatticeSite site() const { return site_; }
    std::size_t size() const { return terms_.size(); }
    bool is_basis() const { return terms_.size() == 1; }
    const StringState& basis_state() const;

    Superposition translated(LatticeSite new_site) const;
    double norm_sq() const;

    /// Multi-term rendering, e.g. "0.7071*|0+001> + 0.7071*|0+>".
    std::string to_text() const;

private:
    std::vector<Term> terms_;
    LatticeSite site_;
};

struct Mixture {
    struct Outcome {
        StringState state;
        double probability;
    };
    std::vector<Outcome> outcomes;  // sorted by state, probabilities sum to 1

    double probability_sum() const;
    /// Re-expression with real amplitudes sqrt(p); preserves every squared-
    /// modulus quantity downstream.
    Superposition as_superposition() const;
};

/// Probability that a joint measurement of both registers finds
/// arithmetically equal states: sum of |a|^2 |b|^2 over term pairs with
/// x =_A y.  Exactly 1.0 when every pair with nonzero mass qualifies.
double prob_eq_A(const Superposition& psi, const Superposition& phi);

/// Probability mass of term pairs whose selected components are separated
/// by more than the gap: x + 2^-ell <_A y on the chosen part (both parts
/// must clear the gap for Part::both).
double prob_lt_gap(const Superposition& psi, const Superposition& phi, Accuracy acc,
                   Part part = Part::real);

enum class OpKind { add, sub, mul, div_ell };

struct EntangledTriple {
    Amplitude amp;        // joint amplitude a*b
    StringState lhs;
    StringState rhs;
    StringState result;
};

/// Expands an arithmetic operation over a pair of superpositions into the
/// correlated triple list (input, input, result) — one triple per term
/// pair, joint amplitude a*b.  div_ell requires an Accuracy and throws
/// std::domain_error naming the offending term when phi contains a zero
/// divisor term.
std::vector<EntangledTriple> apply_op_entangled(OpKind op, const Superposition& psi,
                                                const Superposition& phi,
                                                std::optional<Accuracy> acc = std::nullopt);

/// Traces out the input registers: the probability of each distinct
/// canonical result is the summed squared modulus of the joint amplitudes
/// producing it.  Equal results add probabilities, never amplitudes.
Mixture trace_result(const std::vector<EntangledTriple>& entangled);

}  // namespace qsr
