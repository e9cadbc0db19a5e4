#include "nesto/building_set.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "nesto/errors.hpp"

namespace nesto {

namespace {

// Packs the bits of `m` selected by `ground` into the low bits, preserving
// order.
Mask compress(Mask m, Mask ground) {
  Mask out = 0;
  int pos = 0;
  for (Mask g = ground; g != 0; g &= g - 1, ++pos)
    if (m & (g & (~g + 1))) out |= Mask{1} << pos;
  return out;
}

std::string mask_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (; m != 0; m &= m - 1) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(std::countr_zero(m));
  }
  return s + "}";
}

CanonicalKey encode(int ground_size, const std::vector<Mask>& sorted_masks) {
  CanonicalKey key;
  key.bytes.reserve(1 + 4 * sorted_masks.size());
  key.bytes.push_back(static_cast<char>(ground_size));
  for (Mask m : sorted_masks)
    for (int shift = 0; shift < 32; shift += 8) key.bytes.push_back(static_cast<char>((m >> shift) & 0xFFU));
  return key;
}

std::vector<Mask> minimize_over_relabelings(int k, const std::vector<Mask>& masks) {
  // Compare images as 256-bit membership indicators; masks are < 2^8.
  using Indicator = std::array<std::uint64_t, 4>;
  auto higher_first_less = [](const Indicator& a, const Indicator& b) {
    for (int w = 3; w >= 0; --w)
      if (a[w] != b[w]) return a[w] < b[w];
    return false;
  };
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Indicator best{};
  std::vector<int> best_perm;
  std::array<Mask, 256> image{};
  do {
    for (Mask m = 0; m < (Mask{1} << k); ++m) {
      Mask out = 0;
      for (int bit = 0; bit < k; ++bit)
        if ((m >> bit) & 1U) out |= Mask{1} << perm[static_cast<std::size_t>(bit)];
      image[m] = out;
    }
    Indicator ind{};
    for (Mask m : masks) ind[image[m] >> 6] |= std::uint64_t{1} << (image[m] & 63U);
    if (best_perm.empty() || higher_first_less(ind, best)) {
      best = ind;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Mask> out;
  for (Mask m = 0; m < 256; ++m)
    if ((best[m >> 6] >> (m & 63U)) & 1U) out.push_back(m);
  return out;
}

}  // namespace

BuildingSet::BuildingSet(Mask ground, std::vector<Mask> sets) : ground_(ground), sets_(std::move(sets)) {
  for (Mask s : sets_) {
    if (s == 0) throw PreconditionError("building set member is empty");
    if ((s & ~ground_) != 0) throw PreconditionError("building set member " + mask_string(s) + " leaves the ground set");
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

int BuildingSet::ground_size() const { return std::popcount(ground_); }

std::vector<int> BuildingSet::ground_labels() const {
  std::vector<int> out;
  for (Mask g = ground_; g != 0; g &= g - 1) out.push_back(std::countr_zero(g));
  return out;
}

bool BuildingSet::contains(Mask s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

std::string BuildingSetViolation::describe() const {
  if (kind == Kind::MissingSingleton) return "missing singleton " + mask_string(first);
  return "union of intersecting " + mask_string(first) + " and " + mask_string(second) + " is absent";
}

std::optional<BuildingSetViolation> validate(const BuildingSet& b) {
  for (Mask g = b.ground(); g != 0; g &= g - 1) {
    Mask single = g & (~g + 1);
    if (!b.contains(single)) return BuildingSetViolation{BuildingSetViolation::Kind::MissingSingleton, single, 0};
  }
  const auto& sets = b.sets();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) != 0 && !b.contains(sets[i] | sets[j]))
        return BuildingSetViolation{BuildingSetViolation::Kind::MissingUnion, sets[i], sets[j]};
  return std::nullopt;
}

BuildingSet building_set_from_graph(const Graph& g) {
  if (g.node_count() > kMaxGraphNodes)
    throw PreconditionError("building_set_from_graph: " + std::to_string(g.node_count()) + " nodes exceeds the bound of " +
                            std::to_string(kMaxGraphNodes));
  std::vector<Mask> sets;
  const Mask all = g.all_nodes();
  for (Mask s = 1; s != 0 && s <= all; ++s)
    if (g.induces_connected(s)) sets.push_back(s);
  return BuildingSet(all, std::move(sets));
}

BuildingSet restriction(const BuildingSet& b, Mask s) {
  if (!b.contains(s)) throw PreconditionError("restriction: " + mask_string(s) + " is not a member");
  std::vector<Mask> sets;
  for (Mask t : b.sets())
    if ((t & ~s) == 0) sets.push_back(t);
  return BuildingSet(s, std::move(sets));
}

BuildingSet removal(const BuildingSet& b, Mask s) {
  if (!b.contains(s)) throw PreconditionError("removal: " + mask_string(s) + " is not a member");
  if (s == b.ground()) throw PreconditionError("removal: cannot remove the whole ground set");
  std::vector<Mask> sets;
  for (Mask t : b.sets())
    if (Mask rest = t & ~s; rest != 0) sets.push_back(rest);
  return BuildingSet(b.ground() & ~s, std::move(sets));
}

std::vector<BuildingSet> components(const BuildingSet& b) {
  std::vector<Mask> by_size = b.sets();
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](Mask x, Mask y) { return std::popcount(x) > std::popcount(y); });
  // In a valid building set a member meeting a maximal member lies inside it.
  std::vector<Mask> maximal;
  Mask covered = 0;
  for (Mask s : by_size) {
    if ((s & covered) != 0) continue;
    maximal.push_back(s);
    covered |= s;
  }
  if (covered != b.ground()) throw PreconditionError("components: building set does not cover its ground set");
  std::sort(maximal.begin(), maximal.end(), [](Mask x, Mask y) { return std::countr_zero(x) < std::countr_zero(y); });
  std::vector<BuildingSet> out;
  out.reserve(maximal.size());
  for (Mask m : maximal) {
    std::vector<Mask> sets;
    for (Mask t : b.sets())
      if ((t & ~m) == 0) sets.push_back(t);
    out.emplace_back(m, std::move(sets));
  }
  return out;
}

BuildingSet normalize_labels(const BuildingSet& b) {
  std::vector<Mask> sets;
  sets.reserve(b.size());
  for (Mask s : b.sets()) sets.push_back(compress(s, b.ground()));
  const int k = b.ground_size();
  return BuildingSet(k == 0 ? 0 : (k >= 32 ? ~Mask{0} : (Mask{1} << k) - 1), std::move(sets));
}

CanonicalKey canonical_key(const BuildingSet& b, KeyMode mode) {
  BuildingSet normalized = normalize_labels(b);
  const int k = normalized.ground_size();
  if (mode == KeyMode::Isomorphism && k <= kMaxIsomorphismGround)
    return encode(k, minimize_over_relabelings(k, normalized.sets()));
  return encode(k, normalized.sets());
}

BuildingSet decode_key(const CanonicalKey& key) {
  if (key.bytes.empty() || (key.bytes.size() - 1) % 4 != 0) throw PreconditionError("decode_key: malformed key");
  const int k = key.ground_size();
  std::vector<Mask> sets;
  for (std::size_t pos = 1; pos < key.bytes.size(); pos += 4) {
    Mask m = 0;
    for (int byte = 0; byte < 4; ++byte)
      m |= static_cast<Mask>(static_cast<unsigned char>(key.bytes[pos + static_cast<std::size_t>(byte)])) << (8 * byte);
    sets.push_back(m);
  }
  return BuildingSet(k == 0 ? 0 : (k >= 32 ? ~Mask{0} : (Mask{1} << k) - 1), std::move(sets));
}

}  // namespace nesto
