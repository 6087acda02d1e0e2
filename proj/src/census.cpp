#include "vlgraph/census.hpp"

#include <bit>
#include <stdexcept>
#include <thread>

namespace vlgraph {

std::string_view category_name(CensusCategory c) {
  switch (c) {
    case CensusCategory::EmptyGraph: return "empty";
    case CensusCategory::Disconnected: return "disconnected";
    case CensusCategory::SelfCentred: return "self-centred";
    case CensusCategory::NonSelfCentred: return "non-self-centred";
  }
  return "?";
}

CensusCategory classify_graph(const Graph& g) {
  if (g.order() == 0) return CensusCategory::EmptyGraph;
  const auto summary = eccentricity_summary(g);
  switch (summary.self_centred) {
    case SelfCentred::Yes: return CensusCategory::SelfCentred;
    case SelfCentred::No: return CensusCategory::NonSelfCentred;
    case SelfCentred::NotApplicable: break;
  }
  return CensusCategory::Disconnected;
}

void validate(const CensusBounds& bounds) {
  if (bounds.min_size < 0 || bounds.max_size > kPitchClassCount || bounds.min_size > bounds.max_size) {
    throw std::invalid_argument("census bounds must satisfy 0 <= min <= max <= 12");
  }
}

void enumerate_pitch_sets(const CensusBounds& bounds, const std::function<void(const PitchClassSet&)>& visit) {
  validate(bounds);
  for (unsigned mask = 0; mask <= PitchClassSet::kFullMask; ++mask) {
    const int size = std::popcount(mask);
    if (size >= bounds.min_size && size <= bounds.max_size) {
      visit(PitchClassSet::from_mask(static_cast<std::uint16_t>(mask)));
    }
  }
}

std::vector<PitchClassSet> enumerate_pitch_sets(const CensusBounds& bounds) {
  std::vector<PitchClassSet> out;
  enumerate_pitch_sets(bounds, [&](const PitchClassSet& s) { out.push_back(s); });
  return out;
}

CensusRecord classify_set(const PitchClassSet& scale) {
  const auto vl = build_graph(scale);
  CensusRecord r;
  r.scale = scale;
  r.vertices = vl.order();
  r.edges = vl.size();
  if (vl.order() == 0) {
    r.category = CensusCategory::EmptyGraph;
    return r;
  }
  const auto ecc = eccentricity_summary(vl.graph());
  if (ecc.connected()) {
    r.radius = ecc.radius;
    r.diameter = ecc.diameter;
    r.category = ecc.self_centred == SelfCentred::Yes ? CensusCategory::SelfCentred : CensusCategory::NonSelfCentred;
  } else {
    r.category = CensusCategory::Disconnected;
  }
  return r;
}

CensusSummary run_census(const CensusBounds& bounds, bool record_details, unsigned threads) {
  const auto sets = enumerate_pitch_sets(bounds);
  std::vector<CensusRecord> records(sets.size());

  const unsigned workers = std::max(1U, threads);
  if (workers == 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) records[i] = classify_set(sets[i]);
  } else {
    // Strided partition; every worker writes only its own slots.
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < sets.size(); i += workers) records[i] = classify_set(sets[i]);
      });
    }
  }

  CensusSummary summary;
  summary.total_sets = sets.size();
  for (const auto& r : records) {
    ++summary.counts[static_cast<std::size_t>(r.category)];
    if (r.category == CensusCategory::Disconnected) summary.disconnected.push_back(r.scale);
  }
  if (record_details) summary.records = std::move(records);
  return summary;
}

std::vector<CensusRecord> reference_mismatches(const CensusSummary& summary) {
  std::vector<CensusRecord> out;
  for (const auto& r : summary.records) {
    const auto c = static_cast<std::size_t>(r.category);
    if (summary.counts[c] != kReferenceCounts[c]) out.push_back(r);
  }
  return out;
}

void write_census_records(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << "mask,category,n_vertices,n_edges,radius,diameter\n";
  for (const auto& r : records) {
    out << r.scale.to_binary() << ',' << category_name(r.category) << ',' << r.vertices << ',' << r.edges << ',';
    if (r.radius) out << *r.radius;
    out << ',';
    if (r.diameter) out << *r.diameter;
    out << '\n';
  }
}

}  // namespace vlgraph
