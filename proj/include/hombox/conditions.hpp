#pragma once

#include <optional>

#include "hombox/report.hpp"
#include "hombox/structures.hpp"

namespace hombox {

enum class ConditionSet { bicross_right, bicross_left, matched_copair, cqt, cocycle_left, cocycle_right };
const char* condition_set_name(ConditionSet s);
ConditionSet parse_condition_set(const std::string& name);

// What each set reads:
//   bicross_right   A, H, action (right, A on H), coaction_A (left, H on A)
//   bicross_left    A, H, action (left, H on A), coaction_H (right, A on H)
//   matched_copair  A, H, coaction_A (left, H on A), coaction_H (right, A on H)
//   cqt, cocycle_*  C, form
struct ConditionData {
    std::optional<HomBialgebra> A, H;
    std::optional<ActionMap> action;
    std::optional<CoactionMap> coaction_A;
    std::optional<CoactionMap> coaction_H;
    std::optional<HomBialgebra> C;
    std::optional<Tensor> form;  // [i, j] = form(e_i, e_j)
};

// One verdict per displayed condition, preceded by the module and comodule
// laws the construction assumes. Throws MissingStructure naming the absent
// ingredient.
CheckReport check_condition_set(ConditionSet set, const ConditionData& data, CheckOptions options = {});

}  // namespace hombox
