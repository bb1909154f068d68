#include "generators.hpp"

#include <set>

#include "idpl/utf8.hpp"

namespace idpl::testing {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

class ModelBuilder {
 public:
  ModelBuilder(Rng& rng, const ModelShape& shape)
      : rng_(rng), shape_(shape), budget_(uniform(rng, 1, shape.max_features)) {}

  fm::FeatureModel build() {
    fm::FeatureModel m;
    m.name = "M" + std::to_string(uniform(rng_, 0, 9999));
    m.root = make_feature(fm::Variability::mandatory, false);
    m.root.cardinality = {};
    fill(m.root, 0);
    if (shape_.constraints && names_.size() > 2) {
      const int k = uniform(rng_, 0, 3);
      for (int i = 0; i < k; ++i) {
        const auto& a = names_[static_cast<std::size_t>(uniform(rng_, 1, static_cast<int>(names_.size()) - 1))];
        const auto& b = names_[static_cast<std::size_t>(uniform(rng_, 1, static_cast<int>(names_.size()) - 1))];
        if (a == b) continue;
        m.constraints.push_back({chance(rng_, 0.5) ? fm::ConstraintKind::requires_ : fm::ConstraintKind::excludes,
                                 a, b});
      }
    }
    return m;
  }

 private:
  std::string fresh_name() {
    static const std::vector<std::string> stems{"F", "Node", "पाठ", "Opt", "x"};
    std::string name = pick(rng_, stems) + std::to_string(names_.size());
    names_.push_back(name);
    return name;
  }

  fm::Feature make_feature(fm::Variability v, bool allow_clone) {
    --budget_;
    fm::Feature f;
    f.name = fresh_name();
    f.variability = v;
    if (allow_clone && shape_.clones && chance(rng_, 0.2)) {
      const int lo = uniform(rng_, 0, 2);
      f.cardinality = {lo, uniform(rng_, std::max(lo, 1), 4)};
      if (!f.cardinality.is_clone()) f.cardinality = {0, 2};
    }
    if (shape_.attributes && chance(rng_, 0.3)) {
      const int k = uniform(rng_, 1, 2);
      for (int i = 0; i < k; ++i) {
        fm::AttributeDecl a;
        a.name = "a" + std::to_string(i);
        a.required = chance(rng_, 0.3);
        switch (uniform(rng_, 0, 2)) {
          case 0: {
            fm::EnumDomain e;
            const int n = uniform(rng_, 1, 3);
            for (int j = 0; j < n; ++j) e.literals.push_back("L" + std::to_string(j));
            a.domain = e;
            break;
          }
          case 1: {
            const int lo = uniform(rng_, -5, 5);
            a.domain = fm::IntRangeDomain{lo, lo + uniform(rng_, 0, 10)};
            break;
          }
          default:
            a.domain = fm::TextDomain{};
        }
        f.attributes.push_back(std::move(a));
      }
    }
    return f;
  }

  void fill(fm::Feature& f, int depth) {
    if (depth > 4) return;
    bool last_and = false;
    while (budget_ > 0 && chance(rng_, depth == 0 ? 0.85 : 0.5)) {
      fm::Group g;
      if (last_and && budget_ < 2) break;
      const int roll = uniform(rng_, last_and ? 1 : 0, 2);
      if (roll == 1 && budget_ >= 2) {
        g.kind = fm::GroupKind::alternative;
      } else if (roll == 2 && budget_ >= 2) {
        g.kind = fm::GroupKind::or_;
      }
      if (g.kind == fm::GroupKind::and_) {
        const int n = uniform(rng_, 1, std::min(budget_, 3));
        for (int i = 0; i < n; ++i) {
          g.children.push_back(make_feature(
              chance(rng_, 0.5) ? fm::Variability::mandatory : fm::Variability::optional, true));
        }
      } else {
        const int n = uniform(rng_, 2, std::min(budget_, 3));
        for (int i = 0; i < n; ++i) g.children.push_back(make_feature(fm::Variability::optional, true));
      }
      last_and = g.kind == fm::GroupKind::and_;
      f.groups.push_back(std::move(g));
    }
    for (auto& g : f.groups) {
      for (auto& c : g.children) fill(c, depth + 1);
    }
  }

  Rng& rng_;
  ModelShape shape_;
  int budget_;
  std::vector<std::string> names_;
};

const std::vector<std::string> kTextAlphabet{"क", "म", "न", "र", "ा", "ि", "a", "b", "Z", "1",
                                             "&", "<", ">", "\"", "'", " "};

std::string random_text(Rng& rng) {
  std::string s;
  const int n = uniform(rng, 1, 10);
  for (int i = 0; i < n; ++i) {
    std::string c = pick(rng, kTextAlphabet);
    if (c == " " && (i == 0 || i == n - 1)) c = "x";
    s += c;
  }
  return s;
}

std::optional<inst::AssetRef> maybe_asset(Rng& rng, inst::MediaKind kind, double p = 0.5) {
  if (!chance(rng, p)) return std::nullopt;
  std::string path = chance(rng, 0.3) ? "./" : "";
  path += kind == inst::MediaKind::audio ? "sounds/s" : "images/i";
  path += std::to_string(uniform(rng, 0, 20));
  path += kind == inst::MediaKind::audio ? ".wav" : ".png";
  return inst::AssetRef(path, kind);
}

inst::InstructionFrame random_frame(Rng& rng) {
  inst::InstructionFrame f;
  do {
    if (chance(rng, 0.5)) f.text = random_text(rng);
    f.sound = maybe_asset(rng, inst::MediaKind::audio);
    f.image = maybe_asset(rng, inst::MediaKind::image);
  } while (f.empty());
  return f;
}

std::optional<inst::Frames> maybe_frames(Rng& rng, double p) {
  if (!chance(rng, p)) return std::nullopt;
  inst::Frames fr;
  do {
    if (chance(rng, 0.5)) fr.start = random_frame(rng);
    if (chance(rng, 0.5)) fr.middle = random_frame(rng);
    if (chance(rng, 0.5)) fr.end = random_frame(rng);
  } while (fr.empty());
  return fr;
}

inst::ProcessNode random_process(Rng& rng, int depth) {
  inst::ProcessNode n;
  n.title = random_text(rng);
  if (chance(rng, 0.4)) n.frame = random_frame(rng);
  if (depth == 3) {
    if (chance(rng, 0.5)) n.principle = random_text(rng);
    return n;
  }
  const int k = uniform(rng, 0, 2);
  for (int i = 0; i < k; ++i) n.children.push_back(random_process(rng, depth + 1));
  return n;
}

}  // namespace

fm::FeatureModel random_model(Rng& rng, const ModelShape& shape) {
  return ModelBuilder(rng, shape).build();
}

std::string random_word(Rng& rng, const std::vector<std::string>& alphabet, int min_len, int max_len) {
  std::string s;
  const int n = uniform(rng, min_len, max_len);
  for (int i = 0; i < n; ++i) s += pick(rng, alphabet);
  return s;
}

std::string glued_word(Rng& rng, const std::vector<std::string>& pieces,
                       const std::vector<std::string>& alphabet, int max_len) {
  std::vector<std::string> cps;
  for (int tries = 0; tries < 8; ++tries) {
    const auto piece = utf8::split_codepoints(pick(rng, pieces));
    if (static_cast<int>(cps.size() + piece.size()) > max_len) break;
    cps.insert(cps.end(), piece.begin(), piece.end());
  }
  if (cps.empty()) cps.push_back(pick(rng, alphabet));
  if (chance(rng, 0.3)) cps[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cps.size()) - 1))] = pick(rng, alphabet);
  std::string s;
  for (const auto& c : cps) s += c;
  return s;
}

inst::IdInstance random_instance(Rng& rng) {
  inst::IdInstance in;
  in.spec = pick(rng, std::vector<std::string>{"IDSpec1", "IDSpec2", "IDSpec3", "IDSpec4", "Custom"});
  in.lang = chance(rng, 0.5) ? "hi" : "en";
  if (chance(rng, 0.5)) in.title = random_text(rng);
  const int lessons = uniform(rng, 1, 3);
  for (int li = 0; li < lessons; ++li) {
    inst::Lesson l;
    l.title = random_text(rng);
    l.frames = maybe_frames(rng, 0.6);
    const int goals = uniform(rng, 0, 3);
    for (int i = 0; i < goals; ++i) {
      inst::Goal g;
      g.text = random_text(rng);
      g.sound = maybe_asset(rng, inst::MediaKind::audio, 0.3);
      if (chance(rng, 0.3)) g.level = random_text(rng);
      if (chance(rng, 0.3)) {
        g.audience = random_text(rng);
        g.behavior = random_text(rng);
        g.condition = random_text(rng);
        g.degree = random_text(rng);
      }
      l.goals.push_back(std::move(g));
    }
    const int plays = uniform(rng, 0, 2);
    for (int i = 0; i < plays; ++i) l.process.push_back(random_process(rng, 0));
    const int items = uniform(rng, 0, 4);
    for (int i = 0; i < items; ++i) {
      if (chance(rng, 0.7)) {
        inst::Fact f;
        f.text = random_text(rng);
        f.sound = maybe_asset(rng, inst::MediaKind::audio);
        f.instructions = maybe_frames(rng, 0.2);
        const int cases = uniform(rng, 0, 3);
        for (int c = 0; c < cases; ++c) {
          f.cases.push_back({random_text(rng), maybe_asset(rng, inst::MediaKind::audio),
                             maybe_asset(rng, inst::MediaKind::image)});
        }
        l.content.emplace_back(std::move(f));
      } else {
        inst::Resource r;
        r.kind = static_cast<inst::ResourceKind>(uniform(rng, 0, 2));
        r.text = random_text(rng);
        const int k = uniform(rng, 0, 3);
        for (int j = 0; j < k; ++j) {
          const auto kind = chance(rng, 0.5) ? inst::MediaKind::audio : inst::MediaKind::image;
          r.resources.push_back(*maybe_asset(rng, kind, 1.0));
        }
        l.content.emplace_back(std::move(r));
      }
    }
    in.lessons.push_back(std::move(l));
  }
  return in;
}

}  // namespace idpl::testing
