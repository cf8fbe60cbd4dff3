#include "flagforge/master.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace flagforge {

int RVector::r() const {
  int total = 0;
  for (int c : counts) total += c;
  return total;
}

int pattern_index(std::uint32_t membership_mask, int k) {
  if (membership_mask == 0 || membership_mask >> k) {
    throw std::invalid_argument("membership mask must be a nonempty subset of [k]");
  }
  // Reverse the bits so element 1 is the most significant of k.
  std::uint32_t value = 0;
  for (int j = 0; j < k; ++j) {
    if (membership_mask >> j & 1) value |= std::uint32_t{1} << (k - 1 - j);
  }
  return (1 << k) - static_cast<int>(value) - 1;
}

std::uint32_t pattern_mask(int index, int k) {
  if (index < 0 || index >= (1 << k) - 1) {
    throw std::invalid_argument("pattern index out of range");
  }
  std::uint32_t value = static_cast<std::uint32_t>((1 << k) - 1 - index);
  std::uint32_t mask = 0;
  for (int j = 0; j < k; ++j) {
    if (value >> (k - 1 - j) & 1) mask |= std::uint32_t{1} << j;
  }
  return mask;
}

MasterFamily master_family(int k, int k_cap) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > k_cap) {
    throw std::invalid_argument("k exceeds the configured cap of " +
                                std::to_string(k_cap));
  }
  int n = (1 << k) - 1;
  std::vector<std::vector<int>> sets(k);
  for (int i = 0; i < n; ++i) {
    std::uint32_t member = pattern_mask(i, k);
    for (int j = 0; j < k; ++j) {
      if (member >> j & 1) sets[j].push_back(i + 1);
    }
  }
  return {k, SetFamily(sets)};
}

RVector r_vector(const SetFamily& family) {
  int k = family.k();
  if (k > 25) throw std::invalid_argument("too many sets to classify");
  RVector rv;
  rv.k = k;
  rv.counts.assign((1 << k) - 1, 0);
  for (int j = 0; j < family.r(); ++j) {
    std::uint32_t member = 0;
    for (int i = 0; i < k; ++i) {
      if (family.set_mask(i) >> j & 1) member |= std::uint32_t{1} << i;
    }
    // member != 0 because the family covers its ground set.
    ++rv.counts[pattern_index(member, k)];
  }
  return rv;
}

SetFamily family_from_rvector(const RVector& rv) {
  if (static_cast<int>(rv.counts.size()) != (1 << rv.k) - 1) {
    throw std::invalid_argument("type counts need one entry per pattern");
  }
  std::vector<std::vector<int>> sets(rv.k);
  int element = 0;
  for (std::size_t i = 0; i < rv.counts.size(); ++i) {
    if (rv.counts[i] < 0) throw std::invalid_argument("negative type count");
    std::uint32_t member = pattern_mask(static_cast<int>(i), rv.k);
    for (int copy = 0; copy < rv.counts[i]; ++copy) {
      ++element;
      for (int j = 0; j < rv.k; ++j) {
        if (member >> j & 1) sets[j].push_back(element);
      }
    }
  }
  for (const auto& s : sets) {
    if (s.empty()) {
      throw std::invalid_argument("type counts leave one set empty");
    }
  }
  return SetFamily(sets);
}

ChainData chain_data_from_family(const SetFamily& family, int ell,
                                 const EnumOptions& opts) {
  if (family.r() > 32) {
    throw std::invalid_argument("chain data supports at most 32 slots");
  }
  std::vector<MinkFace> faces = enumerate_faces(family, opts);
  std::vector<FaceChain> chains = enumerate_chains(faces, ell);
  ChainData data;
  data.slots = family.r();
  data.ell = ell;
  data.entries.reserve(chains.size());
  for (const FaceChain& c : chains) {
    ChainData::Entry e;
    e.deltadims = c.deltadims;
    e.supports.reserve(ell);
    for (int idx : c.faces) {
      e.supports.push_back(static_cast<std::uint32_t>(faces[idx].support));
    }
    data.entries.push_back(std::move(e));
  }
  return data;
}

const MasterChainData& master_chains(int k, int ell, const EnumOptions& opts,
                                     int k_cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MasterChainData>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, ell);
  auto it = memo.find(key);
  if (it == memo.end()) {
    MasterFamily mf = master_family(k, k_cap);
    auto data = std::make_unique<MasterChainData>();
    data->k = k;
    data->chains = chain_data_from_family(mf.family, ell, opts);
    it = memo.emplace(key, std::move(data)).first;
  }
  return *it->second;
}

}  // namespace flagforge
