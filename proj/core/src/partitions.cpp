#include "monoconv/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "monoconv/errors.hpp"

namespace monoconv::partitions {

SignString::SignString(std::vector<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e != 1 && e != -1) {
      throw ValidationError("sign string entries must be +1 or -1, got " + std::to_string(e));
    }
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

bool SignString::is_balanced() const {
  long suffix = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    suffix += *it;
    if (suffix < 0) return false;
  }
  return suffix == 0;
}

std::string SignString::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += entries_[i] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

PairPartition PairPartition::from_pairs(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.left < b.left; });
  const std::size_t ground = 2 * pairs.size();
  std::vector<bool> seen(ground + 1, false);
  for (const Pair& p : pairs) {
    if (p.left < 1 || p.right > ground || p.left >= p.right) {
      throw ValidationError("invalid block (" + std::to_string(p.left) + "," +
                            std::to_string(p.right) + ") for ground set of size " +
                            std::to_string(ground));
    }
    if (seen[p.left] || seen[p.right]) {
      throw ValidationError("point covered twice in pair partition");
    }
    seen[p.left] = seen[p.right] = true;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Pair& a = pairs[i];
      const Pair& b = pairs[j];
      if (a.left < b.left && b.left < a.right && a.right < b.right) {
        throw ValidationError("blocks (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                              ") and (" + std::to_string(b.left) + "," +
                              std::to_string(b.right) + ") cross");
      }
    }
  }
  return PairPartition(std::move(pairs));
}

PairPartition PairPartition::interval(std::size_t n) {
  std::vector<Pair> blocks;
  blocks.reserve(n);
  for (std::size_t h = 0; h < n; ++h) blocks.push_back({2 * h + 1, 2 * h + 2});
  return PairPartition(std::move(blocks));
}

SignString PairPartition::to_sign_string() const {
  std::vector<int> entries(ground_size(), 0);
  for (const Pair& p : blocks_) {
    entries[p.left - 1] = -1;
    entries[p.right - 1] = +1;
  }
  return SignString(std::move(entries));
}

std::string PairPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) os << ',';
    os << '(' << blocks_[i].left << ',' << blocks_[i].right << ')';
  }
  os << '}';
  return os.str();
}

bool NestingForest::is_ancestor(std::size_t outer, std::size_t inner) const {
  for (std::optional<std::size_t> b = inner; b; b = parent[*b]) {
    if (*b == outer) return true;
  }
  return false;
}

PairPartition sign_string_to_partition(const SignString& signs) {
  if (!signs.is_balanced()) {
    throw ValidationError("sign string " + signs.to_string() +
                          " has nonzero total or a negative suffix sum");
  }
  std::vector<Pair> blocks;
  std::vector<std::size_t> open;
  const auto entries = signs.entries();
  for (std::size_t pos = 1; pos <= entries.size(); ++pos) {
    if (entries[pos - 1] < 0) {
      open.push_back(blocks.size());
      blocks.push_back({pos, 0});
    } else {
      blocks[open.back()].right = pos;
      open.pop_back();
    }
  }
  return PairPartition(std::move(blocks));
}

std::vector<PairPartition> enumerate_nc2(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw SizeError("enumerate_nc2: n = " + std::to_string(n) + " exceeds enumeration bound " +
                    std::to_string(bound));
  }
  std::vector<PairPartition> out;
  std::vector<Pair> blocks;
  std::vector<std::size_t> open;
  blocks.reserve(n);

  // Emits -1 before +1 at each position, giving lexicographic order.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t pos,
                                                             std::size_t opened) {
    if (pos > 2 * n) {
      out.push_back(PairPartition(blocks));
      return;
    }
    if (opened < n) {
      open.push_back(blocks.size());
      blocks.push_back({pos, 0});
      extend(pos + 1, opened + 1);
      blocks.pop_back();
      open.pop_back();
    }
    if (!open.empty()) {
      const std::size_t closing = open.back();
      blocks[closing].right = pos;
      open.pop_back();
      extend(pos + 1, opened);
      open.push_back(closing);
      blocks[closing].right = 0;
    }
  };
  extend(1, 0);
  return out;
}

NestingForest nesting_forest(const PairPartition& partition) {
  const auto blocks = partition.blocks();
  NestingForest forest;
  forest.parent.assign(blocks.size(), std::nullopt);
  forest.children.assign(blocks.size(), {});

  // Blocks are sorted by left end; the enclosing chain is a stack.
  std::vector<std::size_t> chain;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    while (!chain.empty() && blocks[chain.back()].right < blocks[b].left) chain.pop_back();
    if (chain.empty()) {
      forest.roots.push_back(b);
    } else {
      forest.parent[b] = chain.back();
      forest.children[chain.back()].push_back(b);
    }
    chain.push_back(b);
  }
  return forest;
}

namespace {

BigInt count_by_forest(const PairPartition& partition, std::size_t m) {
  const NestingForest forest = nesting_forest(partition);
  const std::size_t n = partition.block_count();
  // at_least[b][lo] = number of labelings of the subtree at b with label(b) >= lo,
  // lo in 1..m (index m+1 is the empty sum).
  std::vector<std::vector<BigInt>> at_least(n, std::vector<BigInt>(m + 2, 0));
  // Children have larger left ends, so a reverse sweep is a post-order.
  for (std::size_t b = n; b-- > 0;) {
    for (std::size_t label = m; label >= 1; --label) {
      BigInt ways = 1;
      for (std::size_t child : forest.children[b]) ways *= at_least[child][label];
      at_least[b][label] = at_least[b][label + 1] + ways;
    }
  }
  BigInt total = 1;
  for (std::size_t root : forest.roots) total *= at_least[root][1];
  return total;
}

BigInt count_by_exhaustion(const PairPartition& partition, std::size_t m) {
  const NestingForest forest = nesting_forest(partition);
  const std::size_t n = partition.block_count();
  std::vector<std::size_t> labels(n, 1);
  BigInt total = 0;
  while (true) {
    bool monotone = true;
    for (std::size_t b = 0; b < n && monotone; ++b) {
      if (forest.parent[b] && labels[*forest.parent[b]] > labels[b]) monotone = false;
    }
    if (monotone) ++total;
    std::size_t k = 0;
    while (k < n && labels[k] == m) labels[k++] = 1;
    if (k == n) break;
    ++labels[k];
  }
  return total;
}

}  // namespace

BigInt count_weakly_monotone_labelings(const PairPartition& partition, std::size_t m,
                                       LabelCountMethod method) {
  if (m == 0) {
    throw ValidationError("count_weakly_monotone_labelings: m must be >= 1");
  }
  return method == LabelCountMethod::kExhaustive ? count_by_exhaustion(partition, m)
                                                 : count_by_forest(partition, m);
}

BigInt count_nc2wmo(std::size_t m, std::size_t n, std::size_t bound) {
  if (m == 0) {
    throw ValidationError("count_nc2wmo: m must be >= 1");
  }
  BigInt total = 0;
  for (const PairPartition& partition : enumerate_nc2(n, bound)) {
    total += count_weakly_monotone_labelings(partition, m);
  }
  return total;
}

BigInt catalan(std::size_t n) {
  BigInt central;
  mpz_bin_uiui(central.get_mpz_t(), 2 * n, n);
  return central / static_cast<unsigned long>(n + 1);
}

}  // namespace monoconv::partitions
