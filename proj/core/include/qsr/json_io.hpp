#pragma once

#include "qsr/sequences.hpp"

#include <string>
#include <string_view>

namespace qsr {

/// JSON record of a string state:
///   {"re":{"sign":"+","lo":-2,"hi":3,"bits":"101001"},"im":{...},
///    "site":{"m":0,"h":0}}
/// with bits listed from hi down to lo.
std::string to_json(const StringState& s);
StringState state_from_json(std::string_view text);

/// JSON record of a superposition:
///   {"site":{"m":0,"h":0},"terms":[{"state":<state record>,"amp":[re,im]}]}
std::string to_json(const Superposition& s);
Superposition superposition_from_json(std::string_view text);

std::string to_json(const Mixture& m);

std::string to_json(const CauchyVerdict& v);
std::string to_json(const OrderVerdict& v);

/// Sequence specification files:
///   {"kind":"constant","value":"110+1"}
///   {"kind":"frozen_prefix","s":"01...","tail":"plain"|"bell"}
///   {"kind":"bell_pair","s":"0...","t":"0..."}
///   {"kind":"gaussian","center":"0...","sigma":"0+000001","u":0}
/// Bit strings map character i to exponent -i; a trailing "..." repeats the
/// pattern cyclically, otherwise it is zero-extended.
StateSequence sequence_from_spec_json(std::string_view text);

}  // namespace qsr
