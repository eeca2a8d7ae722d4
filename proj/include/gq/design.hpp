#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gq/partition.hpp"

namespace gq {

using Block = std::vector<int>;

/// Incidence structure on points 0..v-1 whose blocks all have size k, kept
/// as a canonical multiset: ascending (block, multiplicity) pairs.
class Design {
 public:
  /// Blocks may repeat; each must be a strictly ascending k-subset of 0..v-1.
  /// Throws std::invalid_argument otherwise. Requires v <= 64.
  Design(int v, int k, const std::vector<Block>& blocks);
  Design(int v, int k, std::vector<std::pair<Block, int>> blocks_with_multiplicity);

  int v() const { return v_; }
  int k() const { return k_; }
  /// Number of blocks counted with multiplicity.
  std::int64_t block_count() const;
  const std::vector<std::pair<Block, int>>& blocks() const { return blocks_; }

  /// Each distinct block once.
  Design support() const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  void canonicalize();

  int v_;
  int k_;
  std::vector<std::pair<Block, int>> blocks_;
};

/// Points: A relabelled 0..16 in ascending vertex order. Blocks: G(r) & A for r in B.
Design design_from_partition(const PointGraph& graph, const LocalPartition& part);

struct LambdaWitness {
  int level = 0;
  std::vector<int> subset;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
};

struct LambdaResult {
  std::optional<std::vector<std::int64_t>> lambdas;
  std::optional<LambdaWitness> witness;
  bool ok() const { return lambdas.has_value(); }
};

/// lambda_i for i = 0..t, each checked over every i-subset. Throws
/// std::invalid_argument if t > k.
LambdaResult lambda_vector(const Design& design, int t);

/// Multiplicity -> number of distinct blocks with that multiplicity.
std::map<int, int> multiplicity_spectrum(const Design& design);
bool is_simple(const Design& design);

/// Points other than x (relabelled to stay contiguous), blocks through x with
/// x removed, multiplicities preserved. Throws std::invalid_argument if x is
/// not a point.
Design derived_design(const Design& design, int x);

struct DesignCheck {
  bool ok = false;
  std::optional<std::string> witness;
};

/// True iff the design has v points, block size k and every t-subset in exactly lambda blocks.
DesignCheck verify_t_design(const Design& design, int t, int v, int k, std::int64_t lambda);

/// Header `DESIGN v=<v> k=<k> b=<b>`, then `<m> <p1> ... <pk>` per distinct block.
void write_design(std::ostream& os, const Design& design);
std::string design_to_string(const Design& design);
/// Throws ParseError on anything write_design would not have produced.
Design read_design(std::istream& is);

}  // namespace gq
