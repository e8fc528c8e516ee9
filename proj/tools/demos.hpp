#pragma once

#include "qsr/sequences.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsr::cli {

struct DemoReport {
    std::string name;
    bool ok{true};
    std::vector<std::pair<std::string, std::string>> lines;  // label -> value

    void note(std::string label, std::string value) {
        lines.emplace_back(std::move(label), std::move(value));
    }
    void check(std::string label, bool passed, std::string detail = "");
    std::string to_text() const;
    std::string to_json() const;
};

/// Known names: exam1, bell, gaussian, entangled-real, completeness,
/// x2-minus-1.  Throws std::invalid_argument for anything else.
DemoReport run_demo(const std::string& name, const Horizon& hz);

}  // namespace qsr::cli
