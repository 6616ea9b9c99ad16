#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetcache/grouping.hpp"
#include "hetcache/model.hpp"
#include "hetcache/placement.hpp"

namespace hetcache {

// Which stage of the delivery schedule a segment belongs to.
enum class PartTag { P1, P2_1, P2_2, P2_3, P3, RND };

std::string_view to_string(PartTag tag);

// One transmitted unit. Coded segments carry the zero-padded XOR of their
// source subfiles, payloads aligned by ascending bit position and padded at
// the tail to the longest source. Random segments carry a single combination
// bit plus the F-bit coefficient row that produced it.
struct Segment {
  PartTag tag = PartTag::P1;
  std::vector<SubfileLabel> sources;  // empty for RND
  BitVec payload;
  int file = -1;        // RND only: which file the combination is over
  BitVec coefficients;  // RND only: length F
};

struct MessageLedger {
  std::vector<Segment> segments;
  std::int64_t total_bits = 0;      // sum of payload lengths
  std::int64_t file_size_bits = 0;  // F of the instance
};

// Walks the coded-delivery schedule in its canonical deterministic order
// (part order, then lexicographic loop indices) and hands each segment's
// part tag and source labels to `emit`. Labels carry original-user masks.
// Part 1 and 2 loops skip empty groups; Part 3 indexes relabeled users and
// runs regardless of group emptiness.
void for_each_coded_segment(
    const Grouping& grouping, int num_users,
    const std::function<void(PartTag, std::span<const SubfileLabel>)>& emit);

// Parts 1-3 over the actual subfile payloads. Segments whose payload would
// be empty are omitted.
MessageLedger coded_delivery(const SystemConfig& config, const Library& library,
                             const SubfilePartition& partition,
                             const Grouping& grouping);

// Per non-empty group, streams random GF(2) combinations of the requested
// file's bits until every group member's missing bits are spanned, then
// trims to the shortest prefix that still suffices. Deterministic per seed.
MessageLedger random_delivery(const SystemConfig& config, const Library& library,
                              const Placement& placement, const Grouping& grouping,
                              std::uint64_t seed);

// The ledger with fewer total bits; ties go to the coded ledger.
const MessageLedger& select_scheme(const MessageLedger& coded,
                                   const MessageLedger& random);

// total_bits / F.
Rational measure_rate(const MessageLedger& ledger);

// One record per segment: part tag, source labels, payload length; payload
// hex appended when requested.
std::string export_ledger(const MessageLedger& ledger, bool with_payload = false);

}  // namespace hetcache
