#include "gq/design.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "gq/structure.hpp"

namespace gq {

namespace {

void validate_block(int v, int k, const Block& block) {
  if (static_cast<int>(block.size()) != k)
    throw std::invalid_argument("Design: block of size " + std::to_string(block.size()) + ", expected " +
                                std::to_string(k));
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i] < 0 || block[i] >= v) throw std::invalid_argument("Design: block point out of range");
    if (i > 0 && block[i] <= block[i - 1]) throw std::invalid_argument("Design: block not strictly ascending");
  }
}

std::uint64_t mask_of(const Block& block) {
  std::uint64_t mask = 0;
  for (int p : block) mask |= std::uint64_t{1} << p;
  return mask;
}

// Visits every i-subset of 0..v-1 in lexicographic order as a bit mask.
template <typename F>
bool for_each_subset(int v, int i, F&& f) {
  std::vector<int> idx(i);
  for (int j = 0; j < i; ++j) idx[j] = j;
  while (true) {
    std::uint64_t mask = 0;
    for (int p : idx) mask |= std::uint64_t{1} << p;
    if (!f(mask, idx)) return false;
    int j = i - 1;
    while (j >= 0 && idx[j] == v - i + j) --j;
    if (j < 0) return true;
    ++idx[j];
    for (int l = j + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

Design::Design(int v, int k, const std::vector<Block>& blocks) : v_(v), k_(k) {
  if (v < 0 || v > 64 || k < 0 || k > v) throw std::invalid_argument("Design: need 0 <= k <= v <= 64");
  for (const auto& b : blocks) {
    validate_block(v, k, b);
    blocks_.emplace_back(b, 1);
  }
  canonicalize();
}

Design::Design(int v, int k, std::vector<std::pair<Block, int>> blocks_with_multiplicity)
    : v_(v), k_(k), blocks_(std::move(blocks_with_multiplicity)) {
  if (v < 0 || v > 64 || k < 0 || k > v) throw std::invalid_argument("Design: need 0 <= k <= v <= 64");
  for (const auto& [b, m] : blocks_) {
    validate_block(v, k, b);
    if (m <= 0) throw std::invalid_argument("Design: multiplicities must be positive");
  }
  canonicalize();
}

void Design::canonicalize() {
  std::sort(blocks_.begin(), blocks_.end());
  std::vector<std::pair<Block, int>> merged;
  for (auto& entry : blocks_) {
    if (!merged.empty() && merged.back().first == entry.first)
      merged.back().second += entry.second;
    else
      merged.push_back(std::move(entry));
  }
  blocks_ = std::move(merged);
}

std::int64_t Design::block_count() const {
  std::int64_t total = 0;
  for (const auto& entry : blocks_) total += entry.second;
  return total;
}

Design Design::support() const {
  std::vector<std::pair<Block, int>> once;
  once.reserve(blocks_.size());
  for (const auto& entry : blocks_) once.emplace_back(entry.first, 1);
  return Design(v_, k_, std::move(once));
}

Design design_from_partition(const PointGraph& graph, const LocalPartition& part) {
  const auto points = part.a_members();
  std::vector<Block> blocks;
  part.b.for_each([&](int r) {
    Block block;
    for (int label = 0; label < static_cast<int>(points.size()); ++label)
      if (graph.adjacent(r, points[label])) block.push_back(label);
    blocks.push_back(std::move(block));
  });
  const int k = blocks.empty() ? 0 : static_cast<int>(blocks.front().size());
  return Design(static_cast<int>(points.size()), k, blocks);
}

LambdaResult lambda_vector(const Design& design, int t) {
  if (t < 0 || t > design.k()) throw std::invalid_argument("lambda_vector: need 0 <= t <= k");
  std::vector<std::pair<std::uint64_t, int>> masks;
  for (const auto& [block, m] : design.blocks()) masks.emplace_back(mask_of(block), m);

  LambdaResult result;
  std::vector<std::int64_t> lambdas;
  for (int i = 0; i <= t; ++i) {
    std::optional<std::int64_t> level;
    const bool uniform = for_each_subset(design.v(), i, [&](std::uint64_t subset, const std::vector<int>& idx) {
      std::int64_t count = 0;
      for (auto [mask, m] : masks)
        if ((mask & subset) == subset) count += m;
      if (!level) level = count;
      if (count != *level) {
        result.witness = LambdaWitness{i, idx, count, *level};
        return false;
      }
      return true;
    });
    if (!uniform) return result;
    lambdas.push_back(level.value_or(0));
  }
  result.lambdas = std::move(lambdas);
  return result;
}

std::map<int, int> multiplicity_spectrum(const Design& design) {
  std::map<int, int> spectrum;
  for (const auto& entry : design.blocks()) ++spectrum[entry.second];
  return spectrum;
}

bool is_simple(const Design& design) {
  return std::all_of(design.blocks().begin(), design.blocks().end(), [](const auto& e) { return e.second == 1; });
}

Design derived_design(const Design& design, int x) {
  if (x < 0 || x >= design.v()) throw std::invalid_argument("derived_design: not a point of the design");
  if (design.k() == 0) throw std::invalid_argument("derived_design: blocks are empty");
  std::vector<std::pair<Block, int>> blocks;
  for (const auto& [block, m] : design.blocks()) {
    if (!std::binary_search(block.begin(), block.end(), x)) continue;
    Block rest;
    for (int p : block)
      if (p != x) rest.push_back(p < x ? p : p - 1);
    blocks.emplace_back(std::move(rest), m);
  }
  return Design(design.v() - 1, design.k() - 1, std::move(blocks));
}

DesignCheck verify_t_design(const Design& design, int t, int v, int k, std::int64_t lambda) {
  DesignCheck check;
  if (design.v() != v) {
    check.witness = "design has " + std::to_string(design.v()) + " points";
    return check;
  }
  if (design.k() != k) {
    check.witness = "blocks have size " + std::to_string(design.k());
    return check;
  }
  if (t < 0 || t > k) {
    check.witness = "t outside 0..k";
    return check;
  }
  std::vector<std::pair<std::uint64_t, int>> masks;
  for (const auto& [block, m] : design.blocks()) masks.emplace_back(mask_of(block), m);
  check.ok = for_each_subset(v, t, [&](std::uint64_t subset, const std::vector<int>& idx) {
    std::int64_t count = 0;
    for (auto [mask, m] : masks)
      if ((mask & subset) == subset) count += m;
    if (count == lambda) return true;
    std::string points;
    for (int p : idx) points += (points.empty() ? "" : " ") + std::to_string(p);
    check.witness = "{" + points + "} lies in " + std::to_string(count) + " blocks";
    return false;
  });
  return check;
}

void write_design(std::ostream& os, const Design& design) {
  os << "DESIGN v=" << design.v() << " k=" << design.k() << " b=" << design.block_count() << '\n';
  for (const auto& [block, m] : design.blocks()) {
    os << m;
    for (int p : block) os << ' ' << p;
    os << '\n';
  }
}

std::string design_to_string(const Design& design) {
  std::ostringstream os;
  write_design(os, design);
  return os.str();
}

Design read_design(std::istream& is) {
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  std::istringstream lines(text);
  std::string record;
  int line_number = 1;
  if (!std::getline(lines, record)) throw ParseError(line_number, "empty design file");
  int v = 0, k = 0;
  long long b = 0;
  {
    char tail = 0;
    if (std::sscanf(record.c_str(), "DESIGN v=%d k=%d b=%lld%c", &v, &k, &b, &tail) != 3)
      throw ParseError(line_number, "malformed design header");
  }
  std::vector<std::pair<Block, int>> blocks;
  while (std::getline(lines, record)) {
    ++line_number;
    std::istringstream fields(record);
    int m = 0;
    if (!(fields >> m) || m <= 0) throw ParseError(line_number, "bad multiplicity");
    Block block(k);
    for (int& p : block)
      if (!(fields >> p)) throw ParseError(line_number, "too few points in block");
    std::string extra;
    if (fields >> extra) throw ParseError(line_number, "too many points in block");
    blocks.emplace_back(std::move(block), m);
  }
  try {
    Design design(v, k, std::move(blocks));
    if (design.block_count() != b) throw ParseError(line_number, "block total disagrees with header");
    if (design_to_string(design) != text) throw ParseError(line_number, "design file is not in canonical form");
    return design;
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_number, e.what());
  }
}

}  // namespace gq
