// Exhaustive classification of every pitch-class set of a given size range.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "vlgraph/classical.hpp"
#include "vlgraph/graph.hpp"
#include "vlgraph/pitch.hpp"

namespace vlgraph {

enum class CensusCategory : std::uint8_t { EmptyGraph = 0, Disconnected = 1, SelfCentred = 2, NonSelfCentred = 3 };

inline constexpr std::size_t kCensusCategoryCount = 4;

/// "empty", "disconnected", "self-centred", "non-self-centred".
std::string_view category_name(CensusCategory c);

CensusCategory classify_graph(const Graph& g);

struct CensusBounds {
  int min_size = 3;
  int max_size = 12;
};

/// Throws std::invalid_argument unless 0 <= min <= max <= 12.
void validate(const CensusBounds& bounds);

/// Calls `visit` for every set whose size lies within the bounds, in
/// ascending mask order.
void enumerate_pitch_sets(const CensusBounds& bounds, const std::function<void(const PitchClassSet&)>& visit);
std::vector<PitchClassSet> enumerate_pitch_sets(const CensusBounds& bounds);

struct CensusRecord {
  PitchClassSet scale;
  CensusCategory category = CensusCategory::EmptyGraph;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  /// Only for SelfCentred / NonSelfCentred.
  std::optional<Distance> radius;
  std::optional<Distance> diameter;
};

CensusRecord classify_set(const PitchClassSet& scale);

struct CensusSummary {
  std::uint64_t total_sets = 0;
  std::array<std::uint64_t, kCensusCategoryCount> counts{};
  /// Masks of Disconnected sets (always collected; there are few).
  std::vector<PitchClassSet> disconnected;
  /// Filled when details are requested, in ascending mask order.
  std::vector<CensusRecord> records;

  std::uint64_t count(CensusCategory c) const { return counts[static_cast<std::size_t>(c)]; }
};

/// Classifies every set in range. `threads` > 1 splits the masks across
/// worker threads; the result does not depend on the thread count.
CensusSummary run_census(const CensusBounds& bounds, bool record_details, unsigned threads = 1);

/// Published counts for the default bounds (sizes 3..12).
inline constexpr std::array<std::uint64_t, kCensusCategoryCount> kReferenceCounts = {642, 2, 1857, 1516};

/// Detail records in every category whose count differs from the reference,
/// for auditing a mismatch. Needs a summary run with details.
std::vector<CensusRecord> reference_mismatches(const CensusSummary& summary);

/// CSV with header "mask,category,n_vertices,n_edges,radius,diameter"; the
/// mask is the 12-character binary string with pitch class 0 leftmost.
void write_census_records(std::ostream& out, const std::vector<CensusRecord>& records);

}  // namespace vlgraph
