#include <algorithm>

#include "idpl/featmodel.hpp"

namespace idpl::fm {
namespace {

constexpr std::uint64_t kSaturated = kMaxSearchSpace + 1;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return std::min(a * b, kSaturated);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return std::min(a + b, kSaturated); }

struct CountRange {
  int lo;
  int hi;
};

CountRange count_range(const Cardinality& c, int cap) {
  const int lo = std::max(1, c.min);
  const int hi = std::min(c.max, std::max(cap, lo));
  return {lo, hi};
}

std::uint64_t selected_space(const Feature& f, int cap);

std::uint64_t inner_space(const Feature& f, int cap) {
  std::uint64_t total = 1;
  for (const auto& g : f.groups) {
    for (const auto& c : g.children) {
      const bool forced = g.kind == GroupKind::and_ && c.variability == Variability::mandatory;
      const std::uint64_t s = selected_space(c, cap);
      total = sat_mul(total, forced ? s : sat_add(1, s));
    }
  }
  return total;
}

std::uint64_t selected_space(const Feature& f, int cap) {
  const auto r = count_range(f.cardinality, cap);
  const auto counts = r.hi >= r.lo ? static_cast<std::uint64_t>(r.hi - r.lo + 1) : 0;
  return sat_mul(counts, inner_space(f, cap));
}

class Enumerator {
 public:
  Enumerator(const FeatureModel& model, int cap,
             const std::function<void(const Configuration&)>& visit)
      : model_(model), index_(model), cap_(cap), visit_(visit), counts_(index_.nodes().size(), 0) {
    const auto& nodes = index_.nodes();
    members_.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      members_[i].resize(nodes[i].feature->groups.size());
      if (nodes[i].parent >= 0) {
        members_[static_cast<std::size_t>(nodes[i].parent)]
                [static_cast<std::size_t>(nodes[i].group)]
                    .push_back(i);
      }
    }
    for (const auto& c : model.constraints) {
      constraints_.push_back({c.kind, static_cast<std::size_t>(*index_.find(c.lhs)),
                              static_cast<std::size_t>(*index_.find(c.rhs))});
    }
  }

  void run() { step(0); }

 private:
  struct IndexedConstraint {
    ConstraintKind kind;
    std::size_t lhs;
    std::size_t rhs;
  };

  void step(std::size_t i) {
    const auto& nodes = index_.nodes();
    if (i == nodes.size()) {
      if (accept()) emit();
      return;
    }
    const auto& n = nodes[i];
    const bool parent_selected = n.parent < 0 || counts_[static_cast<std::size_t>(n.parent)] > 0;
    if (!parent_selected) {
      counts_[i] = 0;
      step(i + 1);
      return;
    }
    if (!index_.is_mandatory(static_cast<int>(i))) {
      counts_[i] = 0;
      step(i + 1);
    }
    const auto r = count_range(n.feature->cardinality, cap_);
    for (int k = r.lo; k <= r.hi; ++k) {
      counts_[i] = k;
      step(i + 1);
    }
    counts_[i] = 0;
  }

  bool accept() const {
    const auto& nodes = index_.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (counts_[i] == 0) continue;
      const auto& groups = nodes[i].feature->groups;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].kind == GroupKind::and_) continue;
        int chosen = 0;
        for (std::size_t m : members_[i][g]) chosen += counts_[m] > 0 ? 1 : 0;
        if (groups[g].kind == GroupKind::alternative && chosen != 1) return false;
        if (groups[g].kind == GroupKind::or_ && chosen == 0) return false;
      }
    }
    for (const auto& c : constraints_) {
      const bool lhs = counts_[c.lhs] > 0;
      const bool rhs = counts_[c.rhs] > 0;
      if (c.kind == ConstraintKind::requires_ && lhs && !rhs) return false;
      if (c.kind == ConstraintKind::excludes && lhs && rhs) return false;
    }
    return true;
  }

  void emit() {
    Configuration config;
    config.model = model_.name;
    const auto& nodes = index_.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (counts_[i] > 0) config.selections.emplace(nodes[i].feature->name, counts_[i]);
    }
    visit_(config);
  }

  const FeatureModel& model_;
  ModelIndex index_;
  int cap_;
  const std::function<void(const Configuration&)>& visit_;
  std::vector<int> counts_;
  std::vector<std::vector<std::vector<std::size_t>>> members_;
  std::vector<IndexedConstraint> constraints_;
};

}  // namespace

std::uint64_t search_space(const FeatureModel& model, int clone_cap) {
  return inner_space(model.root, clone_cap);
}

void for_each_configuration(const FeatureModel& model, int clone_cap,
                            const std::function<void(const Configuration&)>& visit) {
  if (clone_cap < 1) throw Error("INVALID_ARGUMENT", "clone cap must be at least 1");
  const auto space = search_space(model, clone_cap);
  if (space > kMaxSearchSpace) {
    throw Error("SEARCH_SPACE_TOO_LARGE",
                "more than " + std::to_string(kMaxSearchSpace) + " candidate selections with clone cap " +
                    std::to_string(clone_cap));
  }
  Enumerator(model, clone_cap, visit).run();
}

std::vector<Configuration> enumerate_configurations(const FeatureModel& model, int clone_cap) {
  std::vector<Configuration> out;
  for_each_configuration(model, clone_cap, [&](const Configuration& c) { out.push_back(c); });
  return out;
}

std::uint64_t count_configurations(const FeatureModel& model, int clone_cap) {
  std::uint64_t n = 0;
  for_each_configuration(model, clone_cap, [&](const Configuration&) { ++n; });
  return n;
}

}  // namespace idpl::fm
