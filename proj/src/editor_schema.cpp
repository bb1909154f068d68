#include <nlohmann/json.hpp>

#include "idpl/idspec.hpp"

namespace idpl::spec {
namespace {

using json = nlohmann::json;

FormField text_field(std::string id, std::string label, bool required, bool long_text = false) {
  return FormField{std::move(id), std::move(label),
                   long_text ? FieldKind::long_text : FieldKind::short_text, {}, required};
}

FormField enum_field(std::string id, std::string label, std::vector<std::string> options) {
  return FormField{std::move(id), std::move(label), FieldKind::enumeration, std::move(options), true};
}

FormField audio_field() { return FormField{"sound", "Sound", FieldKind::asset_audio, {}, false}; }
FormField image_field() { return FormField{"image", "Image", FieldKind::asset_image, {}, false}; }

FormSection frame_section(std::string id, std::string title) {
  return FormSection{std::move(id), std::move(title), {0, 1},
                     {text_field("text", "Text", false, true), audio_field(), image_field()}, {}};
}

FormSection goals_section(const IdSpecification& spec, const PedagogyCatalog& catalog) {
  FormSection s{"goals", "Goals", {1, kOpenRepeat}, {}, {}};
  switch (spec.goal_technique) {
    case GoalTechnique::ABCD:
      for (auto part : kAbcdParts) {
        std::string label(part);
        label[0] = static_cast<char>(label[0] - 'a' + 'A');
        s.fields.push_back(text_field(std::string(part), label, true));
      }
      break;
    case GoalTechnique::BloomRevised:
      s.fields.push_back(enum_field("level", "Bloom level", catalog.bloom_levels));
      s.fields.push_back(text_field("text", "Goal", true));
      break;
    case GoalTechnique::Plain3Rs:
      s.fields.push_back(text_field("text", "Goal", true));
      break;
  }
  return s;
}

FormSection process_unit(const std::string& id, const std::string& title, const Bounds& bounds) {
  return FormSection{id,
                     title,
                     bounds,
                     {text_field("title", "Title", true), text_field("text", "Text", false, true),
                      audio_field(), image_field()},
                     {}};
}

FormSection process_section(const IdSpecification& spec, const PedagogyCatalog& catalog) {
  FormSection s{"process", "Process", {1, 1}, {}, {}};
  switch (spec.process_model) {
    case ProcessModel::PASI:
    case ProcessModel::PASI_Merrill: {
      const auto& b = spec.process_bounds;
      FormSection instruction = process_unit("instruction", "Instruction", b.instruction);
      if (spec.process_model == ProcessModel::PASI_Merrill) {
        instruction.fields.push_back(
            enum_field("principle", "Merrill principle", catalog.merrill_principles));
      }
      FormSection scene = process_unit("scene", "Scene", b.scene);
      scene.subsections.push_back(std::move(instruction));
      FormSection act = process_unit("act", "Act", b.act);
      act.subsections.push_back(std::move(scene));
      FormSection play = process_unit("play", "Play", b.play);
      play.subsections.push_back(std::move(act));
      s.subsections.push_back(std::move(play));
      break;
    }
    case ProcessModel::GagneNine:
      s.subsections.push_back(FormSection{
          "event",
          "Event of instruction",
          {1, static_cast<int>(catalog.gagne_events.size())},
          {enum_field("event", "Event", catalog.gagne_events), text_field("text", "Activity", true, true)},
          {}});
      break;
    case ProcessModel::EclecticGeneric:
      s.fields.push_back(text_field("description", "Teaching method", true, true));
      break;
  }
  return s;
}

FormSection resource_section(std::string id, std::string title) {
  return FormSection{std::move(id),
                     std::move(title),
                     {0, kOpenRepeat},
                     {text_field("text", "Text", true, true), audio_field(), image_field()},
                     {}};
}

FormSection content_section(const IdSpecification& spec) {
  FormSection s{"content", "Content", {1, 1}, {}, {}};
  if (spec.content_scheme == ContentScheme::PlainResources) {
    FormSection r = resource_section("resource", "Resource");
    r.repeat = {1, kOpenRepeat};
    s.subsections.push_back(std::move(r));
    return s;
  }
  FormSection fact{"fact", "Fact", {1, kOpenRepeat}, {text_field("text", "Syllable", true), audio_field()}, {}};
  fact.subsections.push_back(FormSection{"case",
                                         "Case",
                                         {0, kOpenRepeat},
                                         {text_field("text", "Word", true), audio_field(), image_field()},
                                         {}});
  s.subsections.push_back(std::move(fact));
  if (spec.content_scheme == ContentScheme::FCRMT) {
    s.subsections.push_back(resource_section("rule", "Rule"));
    s.subsections.push_back(resource_section("model", "Model"));
    s.subsections.push_back(resource_section("theory", "Theory"));
  }
  return s;
}

json field_json(const FormField& f) {
  json j{{"id", f.id}, {"kind", std::string(to_string(f.kind))}, {"label", f.label},
         {"required", f.required}};
  if (f.kind == FieldKind::enumeration) j["options"] = f.options;
  return j;
}

json section_json(const FormSection& s) {
  json fields = json::array();
  for (const auto& f : s.fields) fields.push_back(field_json(f));
  json subs = json::array();
  for (const auto& c : s.subsections) subs.push_back(section_json(c));
  return json{{"fields", fields},
              {"id", s.id},
              {"repeat", {{"max", s.repeat.max}, {"min", s.repeat.min}}},
              {"subsections", subs},
              {"title", s.title}};
}

}  // namespace

EditorSchema generate_editor_schema(const IdSpecification& spec, const PedagogyCatalog& catalog) {
  EditorSchema schema;
  schema.spec_name = spec.name;

  FormSection lesson{"lesson", "Lesson", {1, kOpenRepeat}, {text_field("title", "Title", true)}, {}};
  FormSection frames{"instructions", "Instructions", {0, 1}, {}, {}};
  frames.subsections.push_back(frame_section("start", "Start"));
  frames.subsections.push_back(frame_section("middle", "Middle"));
  frames.subsections.push_back(frame_section("end", "End"));
  lesson.subsections.push_back(std::move(frames));
  lesson.subsections.push_back(goals_section(spec, catalog));
  lesson.subsections.push_back(process_section(spec, catalog));
  lesson.subsections.push_back(content_section(spec));
  schema.sections.push_back(std::move(lesson));

  if (spec.has_section(OptionalSection::context)) {
    schema.sections.push_back(FormSection{
        "context", "Context", {0, 1}, {text_field("description", "Learning context", true, true)}, {}});
  }
  if (spec.has_section(OptionalSection::environment)) {
    schema.sections.push_back(FormSection{"environment",
                                          "Environment",
                                          {0, 1},
                                          {text_field("description", "Learning environment", true, true)},
                                          {}});
  }
  if (spec.evaluation_required) {
    schema.sections.push_back(FormSection{
        "evaluation", "Evaluation", {1, 1}, {text_field("criteria", "Evaluation criteria", true, true)}, {}});
  }
  return schema;
}

std::string_view to_string(FieldKind k) {
  switch (k) {
    case FieldKind::short_text: return "short-text";
    case FieldKind::long_text: return "long-text";
    case FieldKind::enumeration: return "enum";
    case FieldKind::asset_audio: return "asset-audio";
    case FieldKind::asset_image: return "asset-image";
  }
  return "?";
}

std::string to_json(const EditorSchema& schema) {
  json sections = json::array();
  for (const auto& s : schema.sections) sections.push_back(section_json(s));
  json doc{{"sections", sections}, {"spec", schema.spec_name}};
  return doc.dump(2) + "\n";
}

const FormSection* find_section(const std::vector<FormSection>& sections, std::string_view id) {
  for (const auto& s : sections) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace idpl::spec
