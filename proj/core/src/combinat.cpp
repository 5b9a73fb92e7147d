#include "commtrace/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace commtrace {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  if (k < 1) throw std::invalid_argument("permutation of an empty set");
  std::vector<bool> seen(k + 1, false);
  for (int v : images_) {
    if (v < 1 || v > k || seen[v])
      throw std::invalid_argument("one-line images do not form a bijection of {1.." +
                                  std::to_string(k) + "}");
    seen[v] = true;
  }
  std::vector<bool> visited(k + 1, false);
  for (int start = 1; start <= k; ++start) {
    if (visited[start]) continue;
    auto& cycle = cycles_.emplace_back();
    for (int p = start; !visited[p]; p = images_[p - 1]) {
      visited[p] = true;
      cycle.push_back(p);
    }
  }
  sign_ = (k - static_cast<int>(cycles_.size())) % 2 == 0 ? 1 : -1;
}

Permutation Permutation::identity(int k) {
  if (k < 1) throw std::invalid_argument("permutation of an empty set");
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const { return static_cast<int>(cycles_.size()) == size(); }

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(size());
  for (int x = 1; x <= size(); ++x) images[x - 1] = (*this)(rhs(x));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(size());
  for (int x = 1; x <= size(); ++x) images[(*this)(x) - 1] = x;
  return Permutation(std::move(images));
}

std::vector<Permutation> enumerate_permutations(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_permutations needs k >= 1");
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  int total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition with an empty block");
    std::sort(b.begin(), b.end());
    total += static_cast<int>(b.size());
  }
  if (total == 0) throw std::invalid_argument("set partition of an empty set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<bool> seen(total + 1, false);
  for (const auto& b : blocks_)
    for (int e : b) {
      if (e < 1 || e > total || seen[e])
        throw std::invalid_argument("blocks do not partition {1.." + std::to_string(total) + "}");
      seen[e] = true;
    }
  ground_size_ = total;
}

SetPartition SetPartition::from_rgs(std::span<const int> rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = 0; j < rgs.size(); ++j) {
    const int label = rgs[j];
    if (label < 0 || label > static_cast<int>(blocks.size()))
      throw std::invalid_argument("not a restricted growth string");
    if (label == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[label].push_back(static_cast<int>(j) + 1);
  }
  return SetPartition(std::move(blocks));
}

int SetPartition::block_of(int element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
      return static_cast<int>(i) + 1;
  throw std::out_of_range("element " + std::to_string(element) + " not in partition");
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (ground_size_ != coarser.ground_size_) return false;
  for (const auto& b : blocks_) {
    const int target = coarser.block_of(b.front());
    for (int e : b)
      if (coarser.block_of(e) != target) return false;
  }
  return true;
}

std::string to_string(const SetPartition& partition) {
  std::string out = "{";
  for (std::size_t i = 0; i < partition.blocks().size(); ++i) {
    if (i > 0) out += '|';
    const auto& b = partition.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(b[j]);
    }
  }
  return out + "}";
}

SetPartition parse_partition(std::string_view text) {
  auto fail = [&]() -> SetPartition {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
  };
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 3 || compact.front() != '{' || compact.back() != '}') return fail();
  std::vector<std::vector<int>> blocks(1);
  std::string number;
  auto flush = [&] {
    if (number.empty()) fail();
    blocks.back().push_back(std::stoi(number));
    number.clear();
  };
  for (std::size_t i = 1; i + 1 < compact.size(); ++i) {
    const char c = compact[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      number += c;
      if (number.size() > 6) fail();
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      blocks.emplace_back();
    } else {
      fail();
    }
  }
  flush();
  return SetPartition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Functions [m] -> [n]

FunctionWord::FunctionWord(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
  for (int v : letters_)
    if (v < 1 || v > n)
      throw std::invalid_argument("letter " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks) {
  if (m < 1 || max_blocks < 1)
    throw std::invalid_argument("enumerate_set_partitions needs m >= 1 and max_blocks >= 1");
  std::vector<SetPartition> out;
  // rgs[j] in 0..prefix_max[j]+1, capped at max_blocks-1.
  std::vector<int> rgs(m, 0);
  std::vector<int> prefix_max(m, 0);
  while (true) {
    out.push_back(SetPartition::from_rgs(rgs));
    int j = m - 1;
    for (; j >= 1; --j) {
      const int cap = std::min(prefix_max[j - 1] + 1, max_blocks - 1);
      if (rgs[j] < cap) break;
    }
    if (j < 1) break;
    ++rgs[j];
    prefix_max[j] = std::max(prefix_max[j - 1], rgs[j]);
    for (int t = j + 1; t < m; ++t) {
      rgs[t] = 0;
      prefix_max[t] = prefix_max[t - 1];
    }
  }
  return out;
}

FunctionWord canonical_function(const SetPartition& partition, int n) {
  if (partition.num_blocks() > n)
    throw std::invalid_argument("partition " + to_string(partition) + " has more than " +
                                std::to_string(n) + " blocks");
  std::vector<int> letters(partition.ground_size());
  for (int i = 0; i < partition.num_blocks(); ++i)
    for (int e : partition.blocks()[i]) letters[e - 1] = i + 1;
  return FunctionWord(std::move(letters), n);
}

SetPartition fiber_partition(const FunctionWord& f) {
  std::vector<std::vector<int>> fibers(f.alphabet_size());
  for (int j = 1; j <= f.length(); ++j) fibers[f(j) - 1].push_back(j);
  std::erase_if(fibers, [](const auto& b) { return b.empty(); });
  return SetPartition(std::move(fibers));
}

FunctionWord canonical_representative(const FunctionWord& f) {
  std::vector<int> relabel(f.alphabet_size() + 1, 0);
  int next = 1;
  std::vector<int> letters;
  letters.reserve(f.length());
  for (int v : f.letters()) {
    if (relabel[v] == 0) relabel[v] = next++;
    letters.push_back(relabel[v]);
  }
  return FunctionWord(std::move(letters), f.alphabet_size());
}

SetPartition cycle_partition(const Permutation& p) { return SetPartition(p.cycles()); }

std::vector<SetPartition> coarsenings(const SetPartition& partition) {
  const int k = partition.num_blocks();
  std::vector<SetPartition> out;
  for (const auto& merge : enumerate_set_partitions(k, k)) {
    std::vector<std::vector<int>> blocks;
    for (const auto& group : merge.blocks()) {
      auto& merged = blocks.emplace_back();
      for (int b : group)
        merged.insert(merged.end(), partition.blocks()[b - 1].begin(), partition.blocks()[b - 1].end());
    }
    out.emplace_back(std::move(blocks));
  }
  std::stable_sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
    return a.num_blocks() > b.num_blocks();
  });
  return out;
}

BigInt stirling2(int m, int k) {
  if (m < 0 || k < 0) return 0;
  if (k > m) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  // row[j] = S(i, j) for the current i.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace commtrace
