#include "hue/face.hpp"

#include <sstream>

#include "hue/arith.hpp"

namespace hue {

void Face::validate(Mask ground, bool allow_apexes) const {
  Mask prev = 0;
  bool first = true;
  for (Mask a : chain) {
    if (a & ~ground) throw ValidationError("chain element is not a subset of the ground set");
    if (!allow_apexes && (a == 0 || a == ground))
      throw ValidationError("chain element must be a nonempty proper subset");
    if (!first && !(mask_subset(prev, a) && prev != a))
      throw ValidationError("chain elements must strictly increase");
    if (first && a == 0 && !allow_apexes)
      throw ValidationError("chain element must be nonempty");
    prev = a;
    first = false;
  }
}

std::vector<Mask> Face::partition_blocks(Mask ground) const {
  validate(ground, false);
  std::vector<Mask> blocks;
  Mask prev = 0;
  for (Mask a : chain) {
    blocks.push_back(a & ~prev);
    prev = a;
  }
  blocks.push_back(ground & ~prev);
  return blocks;
}

Face Face::from_partition(const std::vector<Mask>& blocks, Mask ground) {
  if (blocks.size() < 2) throw ValidationError("a partition view needs at least 2 blocks");
  Mask acc = 0;
  Face f;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 0) throw ValidationError("partition blocks must be nonempty");
    if (acc & blocks[i]) throw ValidationError("partition blocks must be disjoint");
    acc |= blocks[i];
    if (i + 1 < blocks.size()) f.chain.push_back(acc);
  }
  if (acc != ground) throw ValidationError("partition blocks must cover the ground set");
  return f;
}

std::string Face::partition_string(int n) const {
  if (chain.empty()) return "|";
  std::vector<Mask> blocks = partition_blocks(full_mask(n));
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    out += subset_to_string(blocks[i], n);
  }
  return out;
}

Face Face::parse_partition(const std::string& text, int n) {
  if (text == "|") return Face{};
  std::vector<Mask> blocks;
  std::string blk;
  std::istringstream in(text);
  while (std::getline(in, blk, '|')) {
    std::vector<int> verts;
    if (n <= 9) {
      for (char c : blk) {
        if (c < '1' || c > '9') throw ValidationError("bad partition block '" + blk + "'");
        verts.push_back(c - '0');
      }
    } else {
      std::istringstream bs(blk);
      std::string tok;
      while (std::getline(bs, tok, ',')) verts.push_back(std::stoi(tok));
    }
    blocks.push_back(mask_from_vertices(verts, n));
  }
  return from_partition(blocks, full_mask(n));
}

}  // namespace hue
