#pragma once

#include <string_view>

#include "idpl/featmodel.hpp"

namespace idpl::presets {

/// Instructional-design specification fragment: goal classification with a
/// priority choice, IPCL base, the three-way design-model choice (Merrill
/// mandates first principles) and the Play/Act/Scene/Instruction clone chain.
std::string_view design_core_model_source();
fm::FeatureModel design_core_model();

/// Adult-literacy design model over which the four shipped specifications are
/// expressed as configurations. Its feature names drive spec derivation.
std::string_view adult_literacy_model_source();
fm::FeatureModel adult_literacy_model();

}  // namespace idpl::presets
