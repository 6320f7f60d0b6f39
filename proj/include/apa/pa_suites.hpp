#pragma once

#include <string>
#include <vector>

#include "apa/palgebra.hpp"

namespace apa {

struct PARelation {
    std::string label;
    PAElement lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

// Fully instantiated relation lists over all legal index ranges at size k.
// Suite names: HR, Enyang, AffPrep, SkeinRels, NewEnyMix, AffCostCom.
std::vector<PARelation> pa_suite(const std::string& name, int k);

std::vector<std::string> pa_suite_names();

}  // namespace apa
