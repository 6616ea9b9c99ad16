#include "hetcache/delivery.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetcache/gf2.hpp"
#include "hetcache/rng.hpp"

namespace hetcache {

namespace {

constexpr std::uint64_t kRandomDeliveryStream = 0x4a11d;
constexpr int kRandomDeliveryBlockRows = 16;

std::uint32_t user_bit(int original_user) { return 1u << original_user; }

// Next mask with the same popcount (Gosper); wraps past the range when the
// result no longer fits below `limit`.
std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t c = v & -v;
  std::uint32_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

std::string_view to_string(PartTag tag) {
  switch (tag) {
    case PartTag::P1: return "P1";
    case PartTag::P2_1: return "P2_1";
    case PartTag::P2_2: return "P2_2";
    case PartTag::P2_3: return "P2_3";
    case PartTag::P3: return "P3";
    case PartTag::RND: return "RND";
  }
  return "?";
}

void for_each_coded_segment(
    const Grouping& grouping, int num_users,
    const std::function<void(PartTag, std::span<const SubfileLabel>)>& emit) {
  const int num_groups = static_cast<int>(grouping.groups.size());
  const int K = num_users;
  std::vector<SubfileLabel> sources;

  // Part 1: the uncached piece of each requested file.
  for (int i = 0; i < num_groups; ++i) {
    if (grouping.group_size(i) == 0) continue;
    sources.assign({SubfileLabel{i, 0}});
    emit(PartTag::P1, sources);
  }

  // Part 2, within-group chains: adjacent users of a group exchange the
  // singleton pieces of their common file.
  for (int i = 0; i < num_groups; ++i) {
    for (int k = grouping.group_begin(i); k + 1 < grouping.group_end(i); ++k) {
      sources.assign({SubfileLabel{i, user_bit(grouping.relabel[k])},
                      SubfileLabel{i, user_bit(grouping.relabel[k + 1])}});
      emit(PartTag::P2_1, sources);
    }
  }

  // Part 2, cross-group chains: for each group pair, file i chained across
  // group j's users, then file j across group i's users.
  for (int i = 0; i < num_groups - 1; ++i) {
    if (grouping.group_size(i) == 0) continue;
    for (int j = i + 1; j < num_groups; ++j) {
      if (grouping.group_size(j) == 0) continue;
      for (int k = grouping.group_begin(j); k + 1 < grouping.group_end(j); ++k) {
        sources.assign({SubfileLabel{i, user_bit(grouping.relabel[k])},
                        SubfileLabel{i, user_bit(grouping.relabel[k + 1])}});
        emit(PartTag::P2_2, sources);
      }
      for (int k = grouping.group_begin(i); k + 1 < grouping.group_end(i); ++k) {
        sources.assign({SubfileLabel{j, user_bit(grouping.relabel[k])},
                        SubfileLabel{j, user_bit(grouping.relabel[k + 1])}});
        emit(PartTag::P2_2, sources);
      }
    }
  }

  // Part 2, pair heads: ties the two cross-group chains together. The heads
  // are the smallest-capacity users of the two groups.
  for (int i = 0; i < num_groups - 1; ++i) {
    if (grouping.group_size(i) == 0) continue;
    for (int j = i + 1; j < num_groups; ++j) {
      if (grouping.group_size(j) == 0) continue;
      sources.assign(
          {SubfileLabel{i, user_bit(grouping.relabel[grouping.group_begin(j)])},
           SubfileLabel{j, user_bit(grouping.relabel[grouping.group_begin(i)])}});
      emit(PartTag::P2_3, sources);
    }
  }

  // Part 3: pieces cached by two or more users. For every relabeled user i
  // and subset V of later users with |V| >= 2, one multicast segment.
  for (int i = 0; i + 2 < K; ++i) {
    const int tail = K - 1 - i;  // users i+1..K-1
    for (int j = 2; j <= tail; ++j) {
      std::uint32_t pick = (1u << j) - 1;  // subset of the tail, j users
      const std::uint32_t limit = 1u << tail;
      while (pick < limit) {
        // pick bit t set = relabeled user i+1+t in V
        std::uint32_t v_mask_original = 0;
        for (int t = 0; t < tail; ++t)
          if ((pick >> t) & 1u) v_mask_original |= user_bit(grouping.relabel[i + 1 + t]);

        sources.clear();
        for (int t = 0; t < tail; ++t) {
          if (!((pick >> t) & 1u)) continue;
          const int v = i + 1 + t;
          const std::uint32_t set = (v_mask_original | user_bit(grouping.relabel[i])) &
                                    ~user_bit(grouping.relabel[v]);
          sources.push_back(SubfileLabel{grouping.relabeled_demand[v], set});
        }
        sources.push_back(SubfileLabel{grouping.relabeled_demand[i], v_mask_original});
        emit(PartTag::P3, sources);

        pick = next_same_popcount(pick);
        if (pick == 0) break;  // overflow guard for j == 32
      }
    }
  }
}

MessageLedger coded_delivery(const SystemConfig& config, const Library& library,
                             const SubfilePartition& partition,
                             const Grouping& grouping) {
  MessageLedger ledger;
  ledger.file_size_bits = config.file_size_bits;

  for_each_coded_segment(
      grouping, config.num_users,
      [&](PartTag tag, std::span<const SubfileLabel> sources) {
        std::size_t longest = 0;
        for (const auto& label : sources)
          longest = std::max(longest, partition.size_of(label.file, label.cached_by));
        if (longest == 0) return;  // nothing to send

        Segment segment;
        segment.tag = tag;
        segment.sources.assign(sources.begin(), sources.end());
        segment.payload = BitVec(longest);
        for (const auto& label : sources) {
          auto positions = partition.bits(label.file, label.cached_by);
          if (positions.empty()) continue;
          segment.payload.xor_with(gather(library.files[label.file], positions));
        }
        ledger.total_bits += static_cast<std::int64_t>(segment.payload.size());
        ledger.segments.push_back(std::move(segment));
      });
  return ledger;
}

MessageLedger random_delivery(const SystemConfig& config, const Library& library,
                              const Placement& placement, const Grouping& grouping,
                              std::uint64_t seed) {
  const auto F = static_cast<std::size_t>(config.file_size_bits);
  MessageLedger ledger;
  ledger.file_size_bits = config.file_size_bits;

  for (int i = 0; i < config.num_files; ++i) {
    if (grouping.group_size(i) == 0) continue;

    // Per group member, the file positions it still needs.
    struct Member {
      std::vector<std::uint32_t> missing;
      Gf2Solver solver;
      std::size_t done_at = 0;  // rows consumed when rank completed
      bool done = false;
      explicit Member(std::size_t cols) : solver(cols) {}
    };
    std::vector<Member> members;
    for (int user : grouping.groups[i]) {
      std::vector<bool> held(F, false);
      for (std::uint32_t b : placement.positions(user, i)) held[b] = true;
      std::vector<std::uint32_t> missing;
      for (std::uint32_t b = 0; b < F; ++b)
        if (!held[b]) missing.push_back(b);
      Member m(missing.size());
      m.missing = std::move(missing);
      m.done = m.missing.empty();
      members.push_back(std::move(m));
    }

    std::mt19937_64 rng(derive_seed(seed, kRandomDeliveryStream, static_cast<std::uint64_t>(i)));
    std::vector<BitVec> rows;
    std::size_t produced = 0;
    const std::size_t hard_cap = F + 1024;

    auto all_done = [&] {
      return std::all_of(members.begin(), members.end(), [](const Member& m) { return m.done; });
    };

    while (!all_done()) {
      for (int r = 0; r < kRandomDeliveryBlockRows; ++r)
        rows.push_back(BitVec::random(F, rng));
      for (; produced < rows.size(); ++produced) {
        for (auto& m : members) {
          if (m.done) continue;
          m.solver.add_row(gather(rows[produced], m.missing));
          if (m.solver.complete()) {
            m.done = true;
            m.done_at = produced + 1;
          }
        }
      }
      if (produced > hard_cap)
        throw std::runtime_error("random delivery failed to reach full rank");
    }

    std::size_t needed = 0;
    for (const auto& m : members) needed = std::max(needed, m.done_at);

    for (std::size_t r = 0; r < needed; ++r) {
      Segment segment;
      segment.tag = PartTag::RND;
      segment.file = i;
      segment.payload = BitVec(1);
      segment.payload.set(0, rows[r].and_parity(library.files[i]));
      segment.coefficients = std::move(rows[r]);
      ledger.total_bits += 1;
      ledger.segments.push_back(std::move(segment));
    }
  }
  return ledger;
}

const MessageLedger& select_scheme(const MessageLedger& coded,
                                   const MessageLedger& random) {
  return random.total_bits < coded.total_bits ? random : coded;
}

Rational measure_rate(const MessageLedger& ledger) {
  if (ledger.file_size_bits <= 0) throw std::invalid_argument("measure_rate: F must be positive");
  return make_rational(ledger.total_bits, ledger.file_size_bits);
}

std::string export_ledger(const MessageLedger& ledger, bool with_payload) {
  std::string out;
  for (const auto& segment : ledger.segments) {
    out += to_string(segment.tag);
    if (segment.tag == PartTag::RND) {
      out += " file=" + std::to_string(segment.file + 1);
    } else {
      for (const auto& label : segment.sources) out += " " + format_label(label);
    }
    out += " len=" + std::to_string(segment.payload.size());
    if (with_payload) out += " payload=" + segment.payload.to_hex();
    out += "\n";
  }
  return out;
}

}  // namespace hetcache
