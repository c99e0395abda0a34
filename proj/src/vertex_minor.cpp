#include "melonrep/vertex_minor.hpp"

#include "melonrep/error.hpp"

namespace melonrep {

Reduction reduce_to_core(const MelonSpec& spec) {
  const bool with_edge = spec.has_edge_path();
  const int long_paths = spec.count_at_least(3);
  const int expected = with_edge ? 4 : 3;
  if (spec.paths() != expected || long_paths != 3)
    throw Error(ErrorCode::NotInFamily, "spec " + spec.to_string() + " has not exactly three long paths");

  Reduction out{with_edge ? CoreKind::B3 : CoreKind::M3, {}, build_melon(spec)};
  for (int i = 0; i < spec.paths(); ++i) {
    for (int j = 1; j + 3 <= spec.length(i); ++j) {
      const std::string v = melon_labels::intermediate(i + 1, j);
      out.steps.push_back({ReductionStep::Kind::LocalComplement, v});
      out.steps.push_back({ReductionStep::Kind::Delete, v});
    }
  }
  out.result = replay(out.result, out.steps);
  return out;
}

Graph replay(const Graph& g, std::span<const ReductionStep> steps) {
  Graph cur = g;
  for (const auto& step : steps)
    cur = step.kind == ReductionStep::Kind::LocalComplement ? local_complement(cur, step.vertex)
                                                            : delete_vertex(cur, step.vertex);
  return cur;
}

std::optional<MelonSpec> core_subspec(const MelonSpec& spec) {
  std::vector<int> lengths;
  if (spec.has_edge_path()) lengths.push_back(1);
  int taken = 0;
  for (int len : spec.lengths())
    if (len >= 3 && taken < 3) {
      lengths.push_back(len);
      ++taken;
    }
  if (taken < 3) return std::nullopt;
  return MelonSpec(lengths);
}

Graph core_graph(CoreKind core) {
  return build_melon(MelonSpec(core == CoreKind::M3 ? std::vector<int>{3, 3, 3} : std::vector<int>{1, 3, 3, 3}));
}

}  // namespace melonrep
