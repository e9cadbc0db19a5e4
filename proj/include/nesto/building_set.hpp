#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nesto/graph.hpp"

namespace nesto {

// A collection of nonempty subsets of a ground set of labels (< 32), each
// stored as a bitmask over label values. The constructor only normalizes
// (sorts, deduplicates); use validate() to check the building-set axioms.
class BuildingSet {
 public:
  BuildingSet() = default;
  // Throws PreconditionError if a set is empty or leaves the ground set.
  BuildingSet(Mask ground, std::vector<Mask> sets);

  Mask ground() const { return ground_; }
  int ground_size() const;
  std::vector<int> ground_labels() const;
  // Ascending by mask value.
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask s) const;
  bool is_connected() const { return ground_ != 0 && contains(ground_); }

  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;

 private:
  Mask ground_ = 0;
  std::vector<Mask> sets_;
};

struct BuildingSetViolation {
  enum class Kind { MissingSingleton, MissingUnion };
  Kind kind;
  // MissingSingleton: first = the missing singleton. MissingUnion: the
  // intersecting pair whose union is absent.
  Mask first = 0;
  Mask second = 0;

  std::string describe() const;
};

// Checks both axioms exhaustively; returns the first violation found.
std::optional<BuildingSetViolation> validate(const BuildingSet& b);

inline constexpr int kMaxGraphNodes = 20;

// All node subsets inducing a connected subgraph. Throws PreconditionError
// when the graph has more than kMaxGraphNodes nodes.
BuildingSet building_set_from_graph(const Graph& g);

// B|S: the members of b contained in s. Requires s in b.
BuildingSet restriction(const BuildingSet& b, Mask s);

// B - S: the members of b with the elements of s deleted, deduplicated, the
// empty set dropped. Requires s in b and s != ground.
BuildingSet removal(const BuildingSet& b, Mask s);

// Splits a valid building set along its inclusion-maximal members, ordered
// by smallest label.
std::vector<BuildingSet> components(const BuildingSet& b);

enum class KeyMode {
  Labels,       // relabel ground to 0..k-1 preserving order
  Isomorphism,  // minimize over relabelings (ground size <= 8, else Labels)
};

inline constexpr int kMaxIsomorphismGround = 8;

// Identity of a building set up to the chosen normalization. The bytes are
// the ground size followed by the normalized masks, sorted, 4 bytes each.
struct CanonicalKey {
  std::string bytes;

  int ground_size() const { return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]); }
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const BuildingSet& b, KeyMode mode = KeyMode::Labels);

// The normalized building set a key encodes, on ground 0..k-1.
BuildingSet decode_key(const CanonicalKey& key);

// Building set relabelled onto 0..k-1 preserving label order.
BuildingSet normalize_labels(const BuildingSet& b);

}  // namespace nesto
