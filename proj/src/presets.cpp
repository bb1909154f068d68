#include "idpl/presets.hpp"

namespace idpl::presets {
namespace {

constexpr std::string_view kDesignCore = R"(# Instructional design specification (adult literacy fragment)
featuremodel DesignCore
root InstructionalDesign {
  mandatory GoalClassification {
    mandatory GoalPriority {
      alternative {High, Medium, Low}
    }
  }
  mandatory IPCL
  mandatory InstructionalDesignModel {
    alternative {MerrillModel, GagneModel, GenericActivity}
    optional MerrillModel {
      mandatory FirstPrinciples
    }
  }
  mandatory Play [1..25] {
    mandatory Act [1..25] {
      mandatory Scene [1..25] {
        mandatory Instruction [1..25]
      }
    }
  }
}
)";

constexpr std::string_view kAdultLiteracy = R"(# Adult-literacy instructional design family (IPCL based)
featuremodel AdultLiteracyID
root InstructionalDesign {
  mandatory IPCL
  mandatory GoalsPattern {
    attribute priority : enum {High, Medium, Low}
    alternative {ThreeRs, Bloom, ABCD}
  }
  mandatory ProcessPattern {
    alternative {EclecticMethod, PASI, GagneModel}
    optional PASI {
      mandatory Play [1..25] {
        mandatory Act [1..25] {
          mandatory Scene [1..25] {
            mandatory Instruction [1..25] {
              attribute principle : enum {task_centered, activation, demonstration, application, integration}
            }
          }
        }
      }
      optional MerrillModel {
        mandatory FirstPrinciples
      }
    }
  }
  mandatory ContentPattern {
    alternative {PrimerPages, FCRMT, Resources}
    optional FCRMT {
      mandatory Fact {
        attribute syllable : text
        mandatory Case
      }
      optional Rule
      optional Model
      optional Theory
    }
  }
  mandatory EvaluationPattern
  optional ContextPattern
  optional EnvironmentPattern
  constraint MerrillModel requires FCRMT
}
)";

fm::FeatureModel must_parse(std::string_view src) {
  auto r = fm::parse_model(src);
  if (!r.model) {
    throw Error("PRESET_BROKEN", "built-in model failed to parse: " +
                                     (r.diagnostics.empty() ? std::string("?")
                                                            : format(r.diagnostics.front())));
  }
  return std::move(*r.model);
}

}  // namespace

std::string_view design_core_model_source() { return kDesignCore; }
fm::FeatureModel design_core_model() { return must_parse(kDesignCore); }

std::string_view adult_literacy_model_source() { return kAdultLiteracy; }
fm::FeatureModel adult_literacy_model() { return must_parse(kAdultLiteracy); }

}  // namespace idpl::presets
